#pragma once

// Registry of mod-p Chow ring presentation data
//   Ch*(G) = F_p[x_1..x_r] / (x_i^{p^{k_i}}),  deg x_i = d_i,  d_1 <= ... <= d_r
// per (Dynkin type, isogeny form, prime). Only the degree list (and, when
// known, the heights k_i) is stored; there is no ring arithmetic.
//
// Built-in layout rules:
//   - degrees > 1 are those of the simply connected form, identical across forms;
//   - other forms prepend only degree-1 generators;
//   - classical families follow closed-form laws, exceptional ones are tabulated.
// Any entry can be replaced through an override table (see load_overrides).

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "rootsys.hpp"

namespace gensplit {

enum class IsogenyForm { SimplyConnected, Adjoint, HalfSpin, Special };

inline std::string form_tag(IsogenyForm f)
{
    switch (f) {
    case IsogenyForm::SimplyConnected:
        return "sc";
    case IsogenyForm::Adjoint:
        return "adj";
    case IsogenyForm::HalfSpin:
        return "halfspin";
    case IsogenyForm::Special:
        return "special";
    }
    return "?";
}

inline std::optional<IsogenyForm> parse_form_tag(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "sc") return IsogenyForm::SimplyConnected;
    if (s == "adj" || s == "pgo+" || s == "pgl" || s == "pgsp") return IsogenyForm::Adjoint;
    if (s == "special" || s == "o+" || s == "so") return IsogenyForm::Special;
    if (s == "halfspin" || s == "hspin") return IsogenyForm::HalfSpin;
    return std::nullopt;
}

/// A simple group: Dynkin type plus isogeny form.
struct GroupSpec {
    DynkinType type;
    IsogenyForm form = IsogenyForm::Adjoint;

    auto operator<=>(const GroupSpec&) const = default;
};

/// Form used as the registry key. Raises Unsupported for combinations
/// outside the registry (half-spin, and "special" for anything but B/D).
inline IsogenyForm canonical_form(const DynkinType& t, IsogenyForm f)
{
    if (f == IsogenyForm::HalfSpin)
        throw Unsupported("half-spin groups are outside the registry (" + t.name() + ")");
    switch (t.family) {
    case Family::B:
        // SO_{2n+1} is both the special orthogonal and the adjoint group.
        return f == IsogenyForm::SimplyConnected ? f : IsogenyForm::Special;
    case Family::D:
        return f;
    case Family::E:
        if (t.rank == 8) return IsogenyForm::Adjoint;
        [[fallthrough]];
    case Family::A:
    case Family::C:
        if (f == IsogenyForm::Special)
            throw Unsupported("no 'special' isogeny form is registered for " + t.name());
        return f;
    case Family::F:
    case Family::G:
        return IsogenyForm::Adjoint;
    }
    return f;
}

/// Display name for a group, in the table's vocabulary where one exists.
inline std::string group_name(const GroupSpec& g)
{
    const auto& t = g.type;
    IsogenyForm f = canonical_form(t, g.form);
    if (f == IsogenyForm::SimplyConnected) return t.name() + "sc";
    switch (t.family) {
    case Family::A:
        return "PGL_" + std::to_string(t.rank + 1);
    case Family::B:
        return "O+_" + std::to_string(2 * t.rank + 1);
    case Family::C:
        return "PGSp_" + std::to_string(2 * t.rank);
    case Family::D:
        return f == IsogenyForm::Special ? "O+_" + std::to_string(2 * t.rank) : "PGO+_" + std::to_string(2 * t.rank);
    default:
        return t.name() + (t.family == Family::E && t.rank < 8 ? "adj" : "");
    }
}

struct Generator {
    int index = 0;
    int degree = 0;
    std::optional<int> height; // k_i, unknown unless supplied

    bool operator==(const Generator&) const = default;
};

struct ChowPresentation {
    DynkinType type;
    IsogenyForm form = IsogenyForm::Adjoint;
    int prime = 2;
    std::vector<Generator> generators;

    int rank() const { return static_cast<int>(generators.size()); }

    std::vector<int> degrees() const
    {
        std::vector<int> d;
        for (const auto& g : generators) d.push_back(g.degree);
        return d;
    }
};

inline bool is_prime(int p)
{
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

struct RegistryKey {
    Family family;
    int rank;
    IsogenyForm form;
    int prime;

    auto operator<=>(const RegistryKey&) const = default;

    std::string to_string() const
    {
        return std::string(1, family_letter(family)) + std::to_string(rank) + " " + form_tag(form) + " p=" +
               std::to_string(prime);
    }
};

class Registry {
public:
    /// The embedded data set.
    static Registry builtin() { return Registry{}; }

    ChowPresentation presentation(const DynkinType& t, IsogenyForm form, int p) const
    {
        check_type(t);
        check_prime(p);
        IsogenyForm f = canonical_form(t, form);
        ChowPresentation out{t, f, p, {}};
        if (auto it = overrides_.find(RegistryKey{t.family, t.rank, f, p}); it != overrides_.end()) {
            out.generators = it->second;
            return out;
        }
        std::vector<int> degrees(static_cast<std::size_t>(builtin_degree_one(t, f, p)), 1);
        for (int d : sc_degrees(t, p)) degrees.push_back(d);
        for (std::size_t k = 0; k < degrees.size(); ++k)
            out.generators.push_back({static_cast<int>(k) + 1, degrees[k], std::nullopt});
        return out;
    }

    ChowPresentation presentation(const GroupSpec& g, int p) const { return presentation(g.type, g.form, p); }

    /// Degrees > 1 of the simply connected form of `t` at p.
    std::vector<int> sc_degrees(const DynkinType& t, int p) const
    {
        check_type(t);
        check_prime(p);
        if (auto it = overrides_.find(RegistryKey{t.family, t.rank, sc_key_form(t), p}); it != overrides_.end()) {
            std::vector<int> out;
            for (const auto& g : it->second)
                if (g.degree > 1) out.push_back(g.degree);
            return out;
        }
        return builtin_sc_degrees(t, p);
    }

    /// Number of degree-1 generators.
    int degree_one_count(const DynkinType& t, IsogenyForm form, int p) const
    {
        auto pres = presentation(t, form, p);
        return static_cast<int>(std::count_if(pres.generators.begin(), pres.generators.end(),
                                              [](const Generator& g) { return g.degree == 1; }));
    }

    /// Primes with a nonempty presentation, ascending.
    std::vector<int> torsion_primes(const DynkinType& t, IsogenyForm form) const
    {
        std::vector<int> out;
        for (int p : candidate_primes(t, canonical_form(t, form)))
            if (presentation(t, form, p).rank() > 0) out.push_back(p);
        return out;
    }

    std::vector<int> torsion_primes(const GroupSpec& g) const { return torsion_primes(g.type, g.form); }

    /// Replaces one entry. Degrees must be positive and weakly increasing.
    void set_entry(const DynkinType& t, IsogenyForm form, int p, std::vector<Generator> gens)
    {
        check_type(t);
        check_prime(p);
        validate_generators(gens, t.name() + " p=" + std::to_string(p));
        overrides_[RegistryKey{t.family, t.rank, canonical_form(t, form), p}] = std::move(gens);
    }

    void set_degrees(const DynkinType& t, IsogenyForm form, int p, const std::vector<int>& degrees)
    {
        std::vector<Generator> gens;
        for (std::size_t k = 0; k < degrees.size(); ++k)
            gens.push_back({static_cast<int>(k) + 1, degrees[k], std::nullopt});
        set_entry(t, form, p, std::move(gens));
    }

    const std::map<RegistryKey, std::vector<Generator>>& overrides() const { return overrides_; }

    /// Reads override records, one per line:
    ///   family rank form prime [degree[:height] ...]
    /// e.g. "E 8 adj 2 3 5 9 15" or "F 4 adj 3 4:1". `#` starts a comment;
    /// a record with no degrees declares the entry torsion-free.
    void load_overrides(std::istream& in, const std::string& source = "<overrides>")
    {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            std::string fam, rank_s, form_s, prime_s;
            if (!(ss >> fam)) continue;
            if (!(ss >> rank_s >> form_s >> prime_s))
                throw ParseError(source, lineno, "expected 'family rank form prime degrees...'");
            if (fam.size() != 1 || !family_from_letter(fam[0]))
                throw ParseError(source, lineno, "bad family '" + fam + "'");
            int rank = parse_int(rank_s, source, lineno, "rank");
            DynkinType t{*family_from_letter(fam[0]), rank};
            if (!t.legal()) throw ParseError(source, lineno, "illegal type " + t.name() + ": " + t.illegal_reason());
            auto form = parse_form_tag(form_s);
            if (!form) throw ParseError(source, lineno, "bad isogeny form '" + form_s + "'");
            int p = parse_int(prime_s, source, lineno, "prime");
            if (!is_prime(p)) throw ParseError(source, lineno, prime_s + " is not a prime");
            std::vector<Generator> gens;
            std::string tok;
            while (ss >> tok) {
                Generator g{static_cast<int>(gens.size()) + 1, 0, std::nullopt};
                auto colon = tok.find(':');
                g.degree = parse_int(tok.substr(0, colon), source, lineno, "degree");
                if (colon != std::string::npos) g.height = parse_int(tok.substr(colon + 1), source, lineno, "height");
                gens.push_back(g);
            }
            try {
                set_entry(t, *form, p, std::move(gens));
            } catch (const Error& e) {
                throw ParseError(source, lineno, e.what());
            }
        }
    }

    /// Every key the registry answers for exceptional types and classical
    /// ranks up to `max_classical_rank` (plus overridden keys).
    std::vector<RegistryKey> domain(int max_classical_rank = 16) const
    {
        std::set<RegistryKey> keys;
        auto add = [&](const DynkinType& t) {
            for (auto f : forms_for(t))
                for (int p : candidate_primes(t, f))
                    if (presentation(t, f, p).rank() > 0) keys.insert({t.family, t.rank, f, p});
        };
        for (auto t : exceptional_types()) add(t);
        for (int n = 1; n <= max_classical_rank; ++n)
            for (auto fam : {Family::A, Family::B, Family::C, Family::D})
                if (DynkinType t{fam, n}; t.legal()) add(t);
        for (const auto& [k, v] : overrides_)
            if (!v.empty()) keys.insert(k);
        return {keys.begin(), keys.end()};
    }

    /// Distinct registry forms of a type.
    static std::vector<IsogenyForm> forms_for(const DynkinType& t)
    {
        switch (t.family) {
        case Family::B:
            return {IsogenyForm::SimplyConnected, IsogenyForm::Special};
        case Family::D:
            return {IsogenyForm::SimplyConnected, IsogenyForm::Special, IsogenyForm::Adjoint};
        case Family::F:
        case Family::G:
            return {IsogenyForm::Adjoint};
        case Family::E:
            if (t.rank == 8) return {IsogenyForm::Adjoint};
            [[fallthrough]];
        default:
            return {IsogenyForm::SimplyConnected, IsogenyForm::Adjoint};
        }
    }

    static std::vector<DynkinType> exceptional_types()
    {
        return {{Family::G, 2}, {Family::F, 4}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};
    }

private:
    std::map<RegistryKey, std::vector<Generator>> overrides_;

    static IsogenyForm sc_key_form(const DynkinType& t) { return canonical_form(t, IsogenyForm::SimplyConnected); }

    static void check_type(const DynkinType& t)
    {
        if (auto why = t.illegal_reason(); !why.empty())
            throw InvalidInput("illegal Dynkin type " + t.name() + ": " + why);
    }

    static void check_prime(int p)
    {
        if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not a prime");
    }

    static int parse_int(const std::string& s, const std::string& source, int line, const char* what)
    {
        if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError(source, line, std::string("bad ") + what + " '" + s + "'");
        return std::stoi(s);
    }

    static void validate_generators(const std::vector<Generator>& gens, const std::string& where)
    {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].degree < 1) throw InvalidInput(where + ": generator degrees must be positive");
            if (gens[k].height && *gens[k].height < 1) throw InvalidInput(where + ": heights must be positive");
            if (k > 0 && gens[k].degree < gens[k - 1].degree)
                throw InvalidInput(where + ": degrees must be weakly increasing");
        }
    }

    static std::vector<int> odd_degrees_from_3(int count)
    {
        std::vector<int> out;
        for (int k = 1; k <= count; ++k) out.push_back(2 * k + 1);
        return out;
    }

    static std::vector<int> builtin_sc_degrees(const DynkinType& t, int p)
    {
        const int n = t.rank;
        switch (t.family) {
        case Family::A:
        case Family::C:
            return {};
        case Family::B:
            // Spin_{2n+1}: 3, 5, ..., floor((n-1)/2) of them.
            return p == 2 ? odd_degrees_from_3((n - 1) / 2) : std::vector<int>{};
        case Family::D:
            // Spin_{2n}: 3, 5, ..., floor(n/2) - 1 of them.
            return p == 2 ? odd_degrees_from_3(n / 2 - 1) : std::vector<int>{};
        case Family::G:
            if (p == 2) return {3};
            return {};
        case Family::F:
            if (p == 2) return {3};
            if (p == 3) return {4};
            return {};
        case Family::E:
            if (p == 2) {
                if (n == 6) return {3};
                if (n == 7) return {3, 5, 9};
                return {3, 5, 9, 15};
            }
            if (p == 3) {
                if (n == 8) return {4, 10};
                return {4};
            }
            if (p == 5 && n == 8) return {6};
            return {};
        }
        return {};
    }

    static int builtin_degree_one(const DynkinType& t, IsogenyForm f, int p)
    {
        if (f == IsogenyForm::SimplyConnected) return 0;
        switch (t.family) {
        case Family::A:
            return (t.rank + 1) % p == 0 ? 1 : 0;
        case Family::B:
        case Family::C:
            return p == 2 ? 1 : 0;
        case Family::D:
            // PGO+_{2n} carries two degree-1 slots for either parity of n.
            if (p != 2) return 0;
            return f == IsogenyForm::Adjoint ? 2 : 1;
        case Family::E:
            if (t.rank == 6 && p == 3) return 1;
            if (t.rank == 7 && p == 2) return 1;
            return 0;
        default:
            return 0;
        }
    }

    std::vector<int> candidate_primes(const DynkinType& t, IsogenyForm f) const
    {
        std::set<int> ps{2, 3, 5};
        if (t.family == Family::A) {
            int m = t.rank + 1;
            for (int q = 2; q <= m; ++q)
                if (m % q == 0 && is_prime(q)) ps.insert(q);
        }
        for (const auto& [k, v] : overrides_)
            if (k.family == t.family && k.rank == t.rank && (k.form == f || k.form == sc_key_form(t))) ps.insert(k.prime);
        return {ps.begin(), ps.end()};
    }
};

} // namespace gensplit
