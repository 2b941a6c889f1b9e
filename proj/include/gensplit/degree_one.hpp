#pragma once

// Degree-1 (Tits algebra) part of the generic splitness criterion.
//
// For maximal parabolics the rule is a transcribed table keyed by family,
// i and the parities of i and n. For other Θ it is computed: with G0
// adjoint, Ch^1(G0) = F_p^Π / (Cartan rows) and
// Ch^1(P_Θ) = F_p^Θ / (Cartan rows restricted to Θ), the map sending the
// class of ω_l to e_l (or 0 when l ∉ Θ).

#include <numeric>
#include <optional>
#include <vector>

#include "chowreg.hpp"
#include "condition.hpp"
#include "rootsys.hpp"

namespace gensplit {

/// ⟨α_k, α_j^∨⟩ read off the diagram.
inline int cartan_entry(const DynkinDiagram& d, int k, int j)
{
    if (k == j) return 2;
    for (const auto& e : d.diagram.edges) {
        if (!(e.touches(k) && e.touches(j))) continue;
        if (e.bond == 1) return -1;
        // u is the long root: ⟨α_long, α_short^∨⟩ = -bond, ⟨α_short, α_long^∨⟩ = -1.
        return k == e.u ? -e.bond : -1;
    }
    return 0;
}

namespace detail {

inline int mod_p(long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline int inverse_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    return 0;
}

/// Row-reduces `rows` over F_p in place and returns the rank.
inline int rank_mod_p(std::vector<std::vector<int>> rows, int p)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        int inv = inverse_mod(rows[rank][c], p);
        for (auto& x : rows[rank]) x = (x * inv) % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            int f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = mod_p(rows[r][k] - static_cast<long>(f) * rows[rank][k], p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace detail

struct DegreeOneImage {
    int source_dim = 0;    // dim Ch^1(G0) over F_p
    int image_dim = 0;     // dim Ch^1(P_Θ) over F_p (the map is onto)
    std::vector<int> live; // l ∈ Θ whose ω_l has nonzero image
};

/// Image of Ch^1(G0) in Ch^1(P_Θ) for the adjoint group of the type.
inline DegreeOneImage degree_one_image(const DynkinType& t, const SubsetTheta& theta, int p)
{
    auto d = standard_diagram(t);
    const int n = t.rank;
    std::vector<std::vector<int>> full, restricted;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> row, rrow;
        for (int j = 1; j <= n; ++j) row.push_back(detail::mod_p(cartan_entry(d, k, j), p));
        for (int j : theta.members) rrow.push_back(detail::mod_p(cartan_entry(d, k, j), p));
        full.push_back(std::move(row));
        restricted.push_back(std::move(rrow));
    }
    DegreeOneImage out;
    out.source_dim = n - detail::rank_mod_p(full, p);
    if (theta.members.empty()) return out;
    const int base_rank = detail::rank_mod_p(restricted, p);
    out.image_dim = static_cast<int>(theta.members.size()) - base_rank;
    for (std::size_t k = 0; k < theta.members.size(); ++k) {
        auto rows = restricted;
        std::vector<int> unit(theta.members.size(), 0);
        unit[k] = 1;
        rows.push_back(unit);
        if (detail::rank_mod_p(rows, p) > base_rank) out.live.push_back(theta.members[k]);
    }
    return out;
}

enum class Ch1Shape { Void, All, Pair };

/// Degree-1 conjuncts for one parabolic. `shape` classifies the map
/// Ch^1(G0) -> Ch^1(P): zero, injective ("all Tits algebras split"), or
/// rank one out of two (a disjunction over the two weights in `pair`).
struct Ch1Rule {
    Ch1Shape shape = Ch1Shape::Void;
    std::vector<int> pair;
    std::vector<Condition> conjuncts;
};

namespace detail {

inline std::vector<Condition> degree_one_slots(const Registry& reg, const GroupSpec& g)
{
    std::vector<Condition> out;
    for (int p : reg.torsion_primes(g))
        for (const auto& gen : reg.presentation(g, p).generators)
            if (gen.degree == 1) out.push_back(Condition::jzero(p, gen.index));
    return out;
}

/// "All Tits algebras of G are split", in the vocabulary each family's table rows use.
inline std::vector<Condition> all_tits_split(const Registry& reg, const GroupSpec& g)
{
    switch (g.type.family) {
    case Family::A:
        return {Condition::tits_split(1)};
    case Family::C:
        return {Condition::group_split()};
    default:
        return degree_one_slots(reg, g);
    }
}

inline bool has_degree_one(const Registry& reg, const GroupSpec& g) { return !degree_one_slots(reg, g).empty(); }

} // namespace detail

/// Transcribed rule for the maximal parabolic of type i of an adjoint group.
inline Ch1Rule ch1_rule_maximal(const Registry& reg, const GroupSpec& g, int i)
{
    const auto& t = g.type;
    const int r = t.rank;
    Ch1Rule rule;
    if (!detail::has_degree_one(reg, g)) return rule;
    auto all = [&] {
        rule.shape = Ch1Shape::All;
        rule.conjuncts = detail::all_tits_split(reg, g);
    };
    auto pair = [&](int l1, int l2) {
        rule.shape = Ch1Shape::Pair;
        rule.pair = {l1, l2};
        rule.conjuncts = {Condition::any_of({Condition::tits_split(l1), Condition::tits_split(l2)})};
    };
    switch (t.family) {
    case Family::A: {
        const int n = r + 1;
        rule.shape = std::gcd(n, i) > 1 ? Ch1Shape::All : Ch1Shape::Void;
        rule.conjuncts = {Condition::gcd_one(1, i)};
        break;
    }
    case Family::C:
        if (i % 2 == 0) all();
        break;
    case Family::B:
        if (i < r) all();
        break;
    case Family::D: {
        const int n = r;
        if (i < n - 1) {
            if (i % 2 == 0) {
                all();
            } else {
                pair(n - 1, n);
                // The table pairs this disjunction with j_2 = 0.
                rule.conjuncts.push_back(Condition::jzero(2, 2));
            }
        } else if (n % 2 == 0) {
            if (i == n - 1) pair(1, n);
            else pair(1, n - 1);
        }
        break;
    }
    case Family::E:
        if ((r == 6 && (i == 2 || i == 4)) || (r == 7 && (i == 1 || i == 3 || i == 4 || i == 6))) all();
        break;
    default:
        break;
    }
    return rule;
}

/// Rule from the F_p computation. A and C use their closed forms since
/// their table vocabulary (gcd with the exponent, "G is split") is not
/// per-prime.
inline Ch1Rule ch1_rule_computed(const Registry& reg, const GroupSpec& g, const SubsetTheta& theta)
{
    Ch1Rule rule;
    if (!detail::has_degree_one(reg, g)) return rule;
    const auto& t = g.type;
    auto removed = theta.removed();
    if (t.family == Family::A) {
        int gd = 0;
        for (int x : removed) gd = std::gcd(gd, x);
        if (gd == 0) {
            rule.shape = Ch1Shape::All;
            rule.conjuncts = {Condition::tits_split(1)};
            return rule;
        }
        rule.shape = std::gcd(t.rank + 1, gd) > 1 ? Ch1Shape::All : Ch1Shape::Void;
        rule.conjuncts = {Condition::gcd_one(1, gd)};
        return rule;
    }
    if (t.family == Family::C) {
        bool odd = std::any_of(removed.begin(), removed.end(), [](int x) { return x % 2 == 1; });
        if (!odd) {
            rule.shape = Ch1Shape::All;
            rule.conjuncts = {Condition::group_split()};
        }
        return rule;
    }
    for (int p : reg.torsion_primes(g)) {
        if (reg.degree_one_count(t, g.form, p) == 0) continue;
        auto img = degree_one_image(t, theta, p);
        if (img.image_dim == 0) continue;
        if (img.image_dim >= img.source_dim) {
            rule.shape = Ch1Shape::All;
            for (const auto& gen : reg.presentation(g, p).generators)
                if (gen.degree == 1) rule.conjuncts.push_back(Condition::jzero(p, gen.index));
            continue;
        }
        // Rank one out of two: PGO+_{2n}, n even. The Tits algebras live on ω_1, ω_{n-1}, ω_n.
        rule.shape = Ch1Shape::Pair;
        std::vector<Condition> alts;
        for (int l : img.live)
            if (l == 1 || l == t.rank - 1 || l == t.rank) {
                rule.pair.push_back(l);
                alts.push_back(Condition::tits_split(l));
            }
        if (alts.empty()) throw Inconsistency("degree-one image has no Tits weight for " + group_name(g));
        rule.conjuncts.push_back(Condition::any_of(std::move(alts)));
    }
    return rule;
}

/// Degree-1 conjuncts for an arbitrary Θ: void for Θ = ∅ and for groups
/// without degree-1 generators, every degree-1 slot plus "all Tits algebras split" for Θ = Π, the
/// transcribed rule for maximal parabolics, the computed one otherwise.
inline Ch1Rule ch1_rule(const Registry& reg, const GroupSpec& g, const SubsetTheta& theta)
{
    if (theta.empty() || !detail::has_degree_one(reg, g)) return {};
    if (theta.is_all()) {
        // X is a point: every generator must be rational, including the degree-1 slots.
        auto c = detail::degree_one_slots(reg, g);
        for (auto& x : detail::all_tits_split(reg, g)) c.push_back(std::move(x));
        return Ch1Rule{Ch1Shape::All, {}, std::move(c)};
    }
    if (auto i = theta.maximal_index()) return ch1_rule_maximal(reg, g, *i);
    return ch1_rule_computed(reg, g, theta);
}

} // namespace gensplit
