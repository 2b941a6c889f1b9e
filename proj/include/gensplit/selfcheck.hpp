#pragma once

// Sweeps run by `gensplit selftest` and the acceptance suite.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "chowreg.hpp"
#include "levi_sigma.hpp"
#include "oracle.hpp"
#include "rootsys.hpp"
#include "splitcrit.hpp"

namespace gensplit {

struct SweepResult {
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void fail(std::string s) { failures.push_back(std::move(s)); }
};

/// Legal classical types of rank up to `max_rank` and the exceptional ones.
inline std::vector<DynkinType> sweep_types(int max_classical_rank)
{
    std::vector<DynkinType> out;
    for (auto fam : {Family::A, Family::B, Family::C, Family::D})
        for (int n = 1; n <= max_classical_rank; ++n)
            if (DynkinType t{fam, n}; t.legal()) out.push_back(t);
    for (const auto& t : Registry::exceptional_types()) out.push_back(t);
    return out;
}

/// σ over every form, maximal parabolic and torsion prime: no missing or
/// ambiguous ambient degree, and degrees preserved entrywise.
inline SweepResult sigma_sweep(const Registry& reg, int max_classical_rank = 16)
{
    SweepResult res{"sigma well-definedness", 0, {}};
    for (const auto& t : sweep_types(max_classical_rank)) {
        for (auto form : Registry::forms_for(t)) {
            GroupSpec g{t, form};
            for (int i = 1; i <= t.rank; ++i) {
                auto levi = levi_derived(g, SubsetTheta::maximal(t, i));
                for (int p : reg.torsion_primes(g)) {
                    ++res.checked;
                    try {
                        auto s = sigma_map(reg, levi, p);
                        auto pres = reg.presentation(g, p);
                        for (const auto& e : s.entries)
                            if (pres.generators.at(static_cast<std::size_t>(e.g_index - 1)).degree != e.h_degree)
                                res.fail(group_name(g) + " i=" + std::to_string(i) + " p=" + std::to_string(p) +
                                         ": degree not preserved at m=" + std::to_string(e.h_index));
                    } catch (const Error& e) {
                        res.fail(group_name(g) + " i=" + std::to_string(i) + ": " + e.what());
                    }
                }
            }
        }
    }
    return res;
}

/// decompose() against the brute-force oracle: every single-node deletion
/// for rank <= max_rank, then `random_subsets` seeded random Θ.
inline SweepResult levi_oracle_sweep(int max_rank = 12, int random_subsets = 1000, unsigned seed = 20240611u)
{
    SweepResult res{"Levi oracle equivalence", 0, {}};
    auto compare = [&](const DynkinType& t, const std::vector<int>& members) {
        ++res.checked;
        auto theta = SubsetTheta::of(t, members);
        std::string where = t.name() + " Θ={";
        for (std::size_t k = 0; k < members.size(); ++k) where += (k ? "," : "") + std::to_string(members[k]);
        where += "}";
        auto o = oracle::decompose_bruteforce(t, members);
        if (o.ambiguous || o.unmatched) {
            res.fail(where + ": oracle could not classify a component");
            return;
        }
        try {
            auto comps = decompose(sub_diagram(standard_diagram(t), theta));
            if (oracle::signature(comps) != oracle::signature(o)) res.fail(where + ": decompose disagrees with oracle");
        } catch (const Error& e) {
            res.fail(where + ": " + e.what());
        }
    };
    std::vector<DynkinType> types = sweep_types(max_rank);
    for (const auto& t : types) {
        for (int i = 1; i <= t.rank; ++i) {
            std::vector<int> members;
            for (int k = 1; k <= t.rank; ++k)
                if (k != i) members.push_back(k);
            compare(t, members);
        }
    }
    std::mt19937 rng(seed);
    for (int k = 0; k < random_subsets; ++k) {
        const auto& t = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
        std::vector<int> members;
        std::bernoulli_distribution keep(0.6);
        for (int x = 1; x <= t.rank; ++x)
            if (keep(rng)) members.push_back(x);
        compare(t, members);
    }
    return res;
}

/// Structural registry checks: positive, weakly increasing degrees;
/// r = (degree-1 count) + (sc degrees > 1); every form of a type shares the
/// simply connected degrees above 1.
inline SweepResult registry_sweep(const Registry& reg, int max_classical_rank = 16)
{
    SweepResult res{"registry consistency", 0, {}};
    for (const auto& t : sweep_types(max_classical_rank)) {
        for (auto form : Registry::forms_for(t)) {
            for (int p : reg.torsion_primes(t, form)) {
                ++res.checked;
                auto pres = reg.presentation(t, form, p);
                std::string where = group_name({t, form}) + " p=" + std::to_string(p);
                int prev = 1, ones = 0;
                std::vector<int> higher;
                for (const auto& gen : pres.generators) {
                    if (gen.degree < prev) res.fail(where + ": degrees not increasing");
                    prev = gen.degree;
                    if (gen.degree == 1) ++ones;
                    else higher.push_back(gen.degree);
                }
                if (higher != reg.sc_degrees(t, p))
                    res.fail(where + ": degrees above 1 differ from the simply connected form");
                if (ones != reg.degree_one_count(t, form, p)) res.fail(where + ": degree-one count mismatch");
            }
        }
    }
    return res;
}

/// Registry keys consulted while regenerating the table: each row group at
/// each of its primes, and the simply connected entry of every Levi
/// component σ reads.
inline std::set<RegistryKey> keys_exercised_by_diff(const Registry& reg, const DiffFilter& f = {})
{
    std::set<RegistryKey> keys;
    for (const auto& g : table_groups(f)) {
        for (int p : reg.torsion_primes(g)) keys.insert({g.type.family, g.type.rank, canonical_form(g.type, g.form), p});
        for (int i = 1; i <= g.type.rank; ++i) {
            auto levi = levi_derived(g, SubsetTheta::maximal(g.type, i));
            for (const auto& c : levi.components)
                for (int p : reg.torsion_primes(c.type, IsogenyForm::SimplyConnected))
                    keys.insert({c.type.family, c.type.rank, canonical_form(c.type, IsogenyForm::SimplyConnected), p});
        }
    }
    return keys;
}

/// Registry keys in the domain that no table row exercises.
inline std::vector<RegistryKey> unvalidated_entries(const Registry& reg, int max_classical_rank = 16)
{
    auto used = keys_exercised_by_diff(reg);
    std::vector<RegistryKey> out;
    for (const auto& k : reg.domain(max_classical_rank))
        if (!used.count(k)) out.push_back(k);
    return out;
}

struct SelftestReport {
    DiffReport diff;
    std::vector<SweepResult> sweeps;
    ScenarioReport scenario;
    std::vector<RegistryKey> unvalidated;

    bool passed() const
    {
        if (diff.mismatches() != 0 || !scenario.confirmed) return false;
        return std::all_of(sweeps.begin(), sweeps.end(), [](const SweepResult& s) { return s.passed(); });
    }
};

inline SelftestReport run_selftest(const Registry& reg)
{
    SelftestReport rep;
    rep.diff = diff_table(reg);
    rep.sweeps.push_back(sigma_sweep(reg));
    rep.sweeps.push_back(levi_oracle_sweep());
    rep.sweeps.push_back(registry_sweep(reg));
    try {
        rep.scenario = rost_scenario(reg);
    } catch (const Error& e) {
        rep.scenario.lines.push_back(std::string("scenario failed: ") + e.what());
    }
    rep.unvalidated = unvalidated_entries(reg);
    return rep;
}

} // namespace gensplit
