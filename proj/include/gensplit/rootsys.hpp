#pragma once

// Dynkin diagram combinatorics with Bourbaki numbering: standard diagrams,
// induced sub-diagrams on a subset of simple roots, and decomposition of a
// sub-diagram into simple components with an explicit relabeling.

#include <algorithm>
#include <compare>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gensplit {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline std::optional<Family> family_from_letter(char c)
{
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c < 'A' || c > 'G') return std::nullopt;
    return static_cast<Family>(c - 'A');
}

struct DynkinType {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const DynkinType&) const = default;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    /// Empty when legal, otherwise the reason.
    std::string illegal_reason() const
    {
        switch (family) {
        case Family::A:
            if (rank >= 1) return {};
            return "A_n requires n >= 1";
        case Family::B:
            if (rank >= 2) return {};
            return "B_n requires n >= 2";
        case Family::C:
            if (rank >= 2) return {};
            return "C_n requires n >= 2";
        case Family::D:
            if (rank >= 3) return {};
            return "D_n requires n >= 3";
        case Family::E:
            if (rank >= 6 && rank <= 8) return {};
            return "E_n exists only for n = 6, 7, 8";
        case Family::F:
            if (rank == 4) return {};
            return "F_n exists only for n = 4";
        case Family::G:
            if (rank == 2) return {};
            return "G_n exists only for n = 2";
        }
        return "unknown family";
    }

    bool legal() const { return illegal_reason().empty(); }

    bool exceptional() const { return family >= Family::E; }
};

inline DynkinType make_type(Family f, int rank)
{
    DynkinType t{f, rank};
    if (auto why = t.illegal_reason(); !why.empty())
        throw InvalidInput("illegal Dynkin type " + t.name() + ": " + why);
    return t;
}

/// Parses "E8", "b5", "D12".
inline DynkinType parse_type(std::string_view s)
{
    if (s.size() < 2) throw InvalidInput("cannot parse Dynkin type '" + std::string(s) + "'");
    auto fam = family_from_letter(s[0]);
    if (!fam) throw InvalidInput("unknown Dynkin family in '" + std::string(s) + "'");
    int rank = 0;
    for (char c : s.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidInput("cannot parse Dynkin type '" + std::string(s) + "'");
        rank = rank * 10 + (c - '0');
        if (rank > 100000) throw InvalidInput("rank too large in '" + std::string(s) + "'");
    }
    return make_type(*fam, rank);
}

/// A bond between two nodes. For multiple bonds `u` is the long root and
/// `v` the short one (the arrow points u -> v); simple bonds keep u < v.
struct Edge {
    int u = 0;
    int v = 0;
    int bond = 1;

    auto operator<=>(const Edge&) const = default;

    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return u == x ? v : u; }
};

inline Edge make_edge(int a, int b, int bond = 1)
{
    if (bond == 1 && a > b) std::swap(a, b);
    return Edge{a, b, bond};
}

/// Possibly disconnected labeled diagram; nodes and edges kept sorted.
struct Diagram {
    std::vector<int> nodes;
    std::vector<Edge> edges;

    bool operator==(const Diagram&) const = default;

    bool contains(int x) const { return std::binary_search(nodes.begin(), nodes.end(), x); }

    std::vector<int> neighbours(int x) const
    {
        std::vector<int> out;
        for (const auto& e : edges)
            if (e.touches(x)) out.push_back(e.other(x));
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct DynkinDiagram {
    DynkinType type;
    Diagram diagram;
};

inline DynkinDiagram standard_diagram(const DynkinType& t)
{
    if (auto why = t.illegal_reason(); !why.empty())
        throw InvalidInput("illegal Dynkin type " + t.name() + ": " + why);
    const int n = t.rank;
    Diagram d;
    for (int i = 1; i <= n; ++i) d.nodes.push_back(i);
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) d.edges.push_back(make_edge(i, i + 1));
    };
    switch (t.family) {
    case Family::A:
        chain(1, n);
        break;
    case Family::B:
        chain(1, n - 1);
        d.edges.push_back(make_edge(n - 1, n, 2));
        break;
    case Family::C:
        chain(1, n - 1);
        d.edges.push_back(make_edge(n, n - 1, 2));
        break;
    case Family::D:
        chain(1, n - 2);
        d.edges.push_back(make_edge(n - 2, n - 1));
        d.edges.push_back(make_edge(n - 2, n));
        break;
    case Family::E:
        d.edges.push_back(make_edge(1, 3));
        chain(3, n);
        d.edges.push_back(make_edge(2, 4));
        break;
    case Family::F:
        d.edges.push_back(make_edge(1, 2));
        d.edges.push_back(make_edge(2, 3, 2));
        d.edges.push_back(make_edge(3, 4));
        break;
    case Family::G:
        d.edges.push_back(make_edge(2, 1, 3));
        break;
    }
    std::sort(d.edges.begin(), d.edges.end());
    return {t, std::move(d)};
}

/// Subset of the simple roots of an ambient type.
struct SubsetTheta {
    DynkinType ambient;
    std::vector<int> members;

    static SubsetTheta of(const DynkinType& ambient, std::vector<int> members)
    {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int m : members)
            if (m < 1 || m > ambient.rank)
                throw InvalidInput("node " + std::to_string(m) + " is outside 1.." +
                                   std::to_string(ambient.rank) + " for " + ambient.name());
        return {ambient, std::move(members)};
    }

    static SubsetTheta all(const DynkinType& ambient)
    {
        std::vector<int> m;
        for (int i = 1; i <= ambient.rank; ++i) m.push_back(i);
        return {ambient, std::move(m)};
    }

    /// Θ = Π \ {α_i}: the maximal parabolic of type i.
    static SubsetTheta maximal(const DynkinType& ambient, int i)
    {
        if (i < 1 || i > ambient.rank)
            throw InvalidInput("parabolic index " + std::to_string(i) + " is outside 1.." +
                               std::to_string(ambient.rank) + " for " + ambient.name());
        std::vector<int> m;
        for (int k = 1; k <= ambient.rank; ++k)
            if (k != i) m.push_back(k);
        return {ambient, std::move(m)};
    }

    bool empty() const { return members.empty(); }
    bool is_all() const { return static_cast<int>(members.size()) == ambient.rank; }

    /// Π \ Θ in increasing order.
    std::vector<int> removed() const
    {
        std::vector<int> out;
        for (int k = 1; k <= ambient.rank; ++k)
            if (!std::binary_search(members.begin(), members.end(), k)) out.push_back(k);
        return out;
    }

    /// The i with Θ = Π \ {α_i}, if Θ is maximal.
    std::optional<int> maximal_index() const
    {
        auto r = removed();
        if (r.size() == 1) return r.front();
        return std::nullopt;
    }
};

inline Diagram sub_diagram(const DynkinDiagram& d, const SubsetTheta& theta)
{
    if (theta.ambient != d.type)
        throw InvalidInput("subset is over " + theta.ambient.name() + ", diagram is " + d.type.name());
    Diagram out;
    for (int m : theta.members) {
        if (!d.diagram.contains(m))
            throw InvalidInput("node " + std::to_string(m) + " not in " + d.type.name());
        out.nodes.push_back(m);
    }
    for (const auto& e : d.diagram.edges)
        if (out.contains(e.u) && out.contains(e.v)) out.edges.push_back(e);
    return out;
}

/// A connected piece of a sub-diagram. `nodes[k-1]` is the ambient label of
/// the component's own Bourbaki node k.
struct SimpleComponent {
    DynkinType type;
    std::vector<int> nodes;

    bool operator==(const SimpleComponent&) const = default;

    int smallest_node() const { return *std::min_element(nodes.begin(), nodes.end()); }

    /// Ambient labels in the order the standard diagram is usually drawn
    /// (E_n: the chain 1,3,4,..,n, then the branch node 2).
    std::vector<int> reading_order() const
    {
        if (type.family != Family::E) return nodes;
        std::vector<int> out{nodes[0]};
        for (int k = 3; k <= type.rank; ++k) out.push_back(nodes[k - 1]);
        out.push_back(nodes[1]);
        return out;
    }

    std::string to_string() const
    {
        std::string s = type.name() + " {";
        bool first = true;
        for (int x : reading_order()) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        return s + "}";
    }
};

namespace detail {

inline std::vector<Edge> relabel(const Diagram& standard, const std::vector<int>& order)
{
    std::vector<Edge> out;
    out.reserve(standard.edges.size());
    for (const auto& e : standard.edges)
        out.push_back(make_edge(order[e.u - 1], order[e.v - 1], e.bond));
    std::sort(out.begin(), out.end());
    return out;
}

/// Walks a path starting at endpoint `start`.
inline std::vector<int> walk_path(const Diagram& c, int start)
{
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int nb : c.neighbours(cur))
            if (nb != prev) next = nb;
        if (next < 0) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

/// Arm of a tree hanging off `branch` through `first`, listed outward.
inline std::vector<int> walk_arm(const Diagram& c, int branch, int first)
{
    std::vector<int> arm{first};
    int prev = branch, cur = first;
    while (true) {
        int next = -1;
        for (int nb : c.neighbours(cur))
            if (nb != prev) next = nb;
        if (next < 0) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    return arm;
}

/// Candidate (type, ordering) pairs for a connected component.
inline std::vector<std::pair<DynkinType, std::vector<int>>> candidates(const Diagram& c)
{
    const int k = static_cast<int>(c.nodes.size());
    std::vector<std::pair<DynkinType, std::vector<int>>> out;
    if (k == 1) {
        out.push_back({DynkinType{Family::A, 1}, c.nodes});
        return out;
    }
    int branch = -1;
    std::vector<int> ends;
    for (int x : c.nodes) {
        auto deg = c.neighbours(x).size();
        if (deg >= 3) branch = x;
        if (deg == 1) ends.push_back(x);
    }
    int max_bond = 1;
    for (const auto& e : c.edges) max_bond = std::max(max_bond, e.bond);

    if (branch < 0) {
        std::vector<DynkinType> types;
        if (max_bond == 1) {
            types.push_back({Family::A, k});
        } else if (max_bond == 2) {
            if (k == 2) types.push_back({Family::B, 2});
            else {
                types.push_back({Family::B, k});
                types.push_back({Family::C, k});
                if (k == 4) types.push_back({Family::F, 4});
            }
        } else if (max_bond == 3 && k == 2) {
            types.push_back({Family::G, 2});
        }
        for (int e : ends)
            for (const auto& t : types) out.push_back({t, walk_path(c, e)});
        return out;
    }

    auto nbs = c.neighbours(branch);
    if (nbs.size() != 3 || max_bond != 1) return out;
    std::vector<std::vector<int>> arms;
    for (int nb : nbs) arms.push_back(walk_arm(c, branch, nb));
    int perm[3] = {0, 1, 2};
    do {
        const auto& a0 = arms[perm[0]];
        const auto& a1 = arms[perm[1]];
        const auto& a2 = arms[perm[2]];
        // D_k: long arm a0 read inward, then branch, then the leaves a1, a2.
        if (k >= 4) {
            std::vector<int> ord(a0.rbegin(), a0.rend());
            ord.push_back(branch);
            ord.insert(ord.end(), a1.begin(), a1.end());
            ord.insert(ord.end(), a2.begin(), a2.end());
            out.push_back({DynkinType{Family::D, k}, ord});
        }
        // E_k: a0 = {3,1}, a1 = {2}, a2 = {5,6,...}.
        if (k >= 6 && k <= 8 && a0.size() == 2 && a1.size() == 1) {
            std::vector<int> ord(static_cast<std::size_t>(k));
            ord[0] = a0[1];
            ord[1] = a1[0];
            ord[2] = a0[0];
            ord[3] = branch;
            for (std::size_t j = 0; j < a2.size() && 4 + j < ord.size(); ++j) ord[4 + j] = a2[j];
            if (a2.size() + 4 == static_cast<std::size_t>(k)) out.push_back({DynkinType{Family::E, k}, ord});
        }
    } while (std::next_permutation(perm, perm + 3));
    return out;
}

} // namespace detail

/// Classifies one connected component. Among valid relabelings the
/// lexicographically smallest node list wins.
inline SimpleComponent classify_component(const Diagram& c)
{
    std::optional<SimpleComponent> best;
    for (auto& [type, order] : detail::candidates(c)) {
        if (static_cast<int>(order.size()) != type.rank || !type.legal()) continue;
        if (detail::relabel(standard_diagram(type).diagram, order) != c.edges) continue;
        SimpleComponent sc{type, order};
        if (!best || std::tie(sc.type, sc.nodes) < std::tie(best->type, best->nodes)) best = sc;
    }
    if (!best) {
        std::string nodes;
        for (int x : c.nodes) nodes += " " + std::to_string(x);
        throw Inconsistency("component on nodes{" + nodes + " } matches no standard Dynkin diagram");
    }
    return *best;
}

/// Connected components of `sub`, each classified, sorted by
/// (family, rank, smallest ambient node).
inline std::vector<SimpleComponent> decompose(const Diagram& sub)
{
    std::vector<SimpleComponent> out;
    std::set<int> seen;
    for (int start : sub.nodes) {
        if (seen.count(start)) continue;
        Diagram comp;
        std::vector<int> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.nodes.push_back(x);
            for (int nb : sub.neighbours(x))
                if (seen.insert(nb).second) stack.push_back(nb);
        }
        std::sort(comp.nodes.begin(), comp.nodes.end());
        for (const auto& e : sub.edges)
            if (comp.contains(e.u)) comp.edges.push_back(e);
        std::sort(comp.edges.begin(), comp.edges.end());
        out.push_back(classify_component(comp));
    }
    std::sort(out.begin(), out.end(), [](const SimpleComponent& a, const SimpleComponent& b) {
        return std::make_tuple(a.type.family, a.type.rank, a.smallest_node()) <
               std::make_tuple(b.type.family, b.type.rank, b.smallest_node());
    });
    return out;
}

} // namespace gensplit
