#pragma once

// Derived Levi subgroup H0 = [L, L] of a standard parabolic P_Θ, and the
// index map σ sending each generator y_m of Ch*(H0) with deg y_m > 1 to the
// unique generator x_i of Ch*(G0) of the same degree.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chowreg.hpp"
#include "errors.hpp"
#include "rootsys.hpp"

namespace gensplit {

struct LeviDerived {
    GroupSpec ambient;
    SubsetTheta theta;
    std::vector<SimpleComponent> components;

    std::string to_string() const
    {
        if (components.empty()) return "trivial";
        std::string s;
        for (std::size_t k = 0; k < components.size(); ++k) {
            if (k) s += "; ";
            s += components[k].to_string();
        }
        return s;
    }
};

inline LeviDerived levi_derived(const GroupSpec& ambient, const SubsetTheta& theta)
{
    if (theta.ambient != ambient.type)
        throw InvalidInput("subset is over " + theta.ambient.name() + ", group is " + ambient.type.name());
    return {ambient, theta, decompose(sub_diagram(standard_diagram(ambient.type), theta))};
}

struct SigmaEntry {
    int h_index = 0;   // m, position among H0's generators of degree > 1
    int h_degree = 0;  // e_m
    int component = 0; // position in LeviDerived::components
    int within = 0;    // position among that component's degree > 1 generators
    int g_index = 0;   // σ(m), index into the ambient presentation

    bool operator==(const SigmaEntry&) const = default;
};

struct SigmaAssignment {
    int prime = 2;
    std::vector<SigmaEntry> entries;

    /// Distinct ambient indices hit by σ (σ need not be injective).
    std::vector<int> image() const
    {
        std::set<int> s;
        for (const auto& e : entries) s.insert(e.g_index);
        return {s.begin(), s.end()};
    }
};

inline SigmaAssignment sigma_map(const Registry& reg, const LeviDerived& levi, int p)
{
    auto ambient = reg.presentation(levi.ambient, p);
    std::map<int, std::vector<int>> by_degree;
    for (const auto& g : ambient.generators) by_degree[g.degree].push_back(g.index);

    SigmaAssignment out{p, {}};
    for (std::size_t c = 0; c < levi.components.size(); ++c) {
        auto degrees = reg.sc_degrees(levi.components[c].type, p);
        for (std::size_t w = 0; w < degrees.size(); ++w)
            out.entries.push_back({0, degrees[w], static_cast<int>(c), static_cast<int>(w), 0});
    }
    std::stable_sort(out.entries.begin(), out.entries.end(), [](const SigmaEntry& a, const SigmaEntry& b) {
        return std::tie(a.h_degree, a.component, a.within) < std::tie(b.h_degree, b.component, b.within);
    });

    auto where = [&](const SigmaEntry& e) {
        return group_name(levi.ambient) + " p=" + std::to_string(p) + ", Levi component " +
               levi.components[static_cast<std::size_t>(e.component)].to_string() + ", degree " +
               std::to_string(e.h_degree);
    };
    for (std::size_t k = 0; k < out.entries.size(); ++k) {
        auto& e = out.entries[k];
        e.h_index = static_cast<int>(k) + 1;
        auto it = by_degree.find(e.h_degree);
        if (it == by_degree.end())
            throw NoAmbientMatch("no ambient generator of equal degree: " + where(e));
        if (it->second.size() != 1)
            throw AmbiguousMatch(std::to_string(it->second.size()) + " ambient generators share the degree: " + where(e));
        e.g_index = it->second.front();
        if (ambient.generators[static_cast<std::size_t>(e.g_index - 1)].degree != e.h_degree)
            throw Inconsistency("degree not preserved: " + where(e));
    }
    return out;
}

} // namespace gensplit
