#pragma once

// Brute-force reference for sub-diagram decomposition. Shares nothing with
// decompose() beyond the standard diagram tables: components come from a
// breadth-first search over an adjacency matrix and types from an exhaustive
// backtracking isomorphism search against every standard diagram of the
// component's size.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "rootsys.hpp"

namespace gensplit::oracle {

struct OracleComponent {
    DynkinType type;
    std::vector<int> nodes; // sorted ambient labels
};

namespace detail {

// Labeled adjacency: 0 = no bond; otherwise bond * 2 + (1 if row is the long end of a multiple bond).
using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const std::vector<int>& nodes, const std::vector<Edge>& edges)
{
    std::map<int, int> idx;
    for (std::size_t k = 0; k < nodes.size(); ++k) idx[nodes[k]] = static_cast<int>(k);
    Matrix m(nodes.size(), std::vector<int>(nodes.size(), 0));
    for (const auto& e : edges) {
        auto iu = idx.find(e.u), iv = idx.find(e.v);
        if (iu == idx.end() || iv == idx.end()) continue;
        if (e.bond == 1) {
            m[iu->second][iv->second] = 2;
            m[iv->second][iu->second] = 2;
        } else {
            m[iu->second][iv->second] = e.bond * 2 + 1;
            m[iv->second][iu->second] = e.bond * 2;
        }
    }
    return m;
}

inline bool extend(const Matrix& std_m, const Matrix& comp_m, std::vector<int>& map, std::vector<bool>& used,
                   std::size_t pos)
{
    const std::size_t n = std_m.size();
    if (pos == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < pos && ok; ++prev)
            ok = std_m[pos][prev] == comp_m[cand][static_cast<std::size_t>(map[prev])];
        if (!ok) continue;
        map[pos] = static_cast<int>(cand);
        used[cand] = true;
        if (extend(std_m, comp_m, map, used, pos + 1)) return true;
        used[cand] = false;
    }
    return false;
}

inline bool isomorphic(const DynkinType& t, const std::vector<int>& nodes, const std::vector<Edge>& edges)
{
    auto sd = standard_diagram(t);
    if (sd.diagram.nodes.size() != nodes.size()) return false;
    if (sd.diagram.edges.size() != edges.size()) return false;
    auto std_m = adjacency(sd.diagram.nodes, sd.diagram.edges);
    auto comp_m = adjacency(nodes, edges);
    std::vector<int> map(nodes.size(), -1);
    std::vector<bool> used(nodes.size(), false);
    return extend(std_m, comp_m, map, used, 0);
}

inline std::vector<DynkinType> types_of_rank(int k)
{
    // Canonical names only: D_3 is A_3 and C_2 is B_2.
    std::vector<DynkinType> out{{Family::A, k}};
    if (k >= 2) out.push_back({Family::B, k});
    if (k >= 3) out.push_back({Family::C, k});
    if (k >= 4) out.push_back({Family::D, k});
    if (k >= 6 && k <= 8) out.push_back({Family::E, k});
    if (k == 4) out.push_back({Family::F, 4});
    if (k == 2) out.push_back({Family::G, 2});
    return out;
}

} // namespace detail

/// Components of the sub-diagram of `ambient` induced on `members`, with
/// every type whose standard diagram is isomorphic listed. A genuine
/// sub-diagram yields exactly one type per component.
struct OracleResult {
    std::vector<OracleComponent> components;
    bool ambiguous = false;
    bool unmatched = false;
};

inline OracleResult decompose_bruteforce(const DynkinType& ambient, const std::vector<int>& members)
{
    auto full = standard_diagram(ambient);
    std::vector<int> nodes(members);
    std::sort(nodes.begin(), nodes.end());
    auto m = detail::adjacency(nodes, full.diagram.edges);

    OracleResult res;
    std::vector<bool> seen(nodes.size(), false);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<std::size_t> q{s};
        seen[s] = true;
        while (!q.empty()) {
            auto x = q.front();
            q.pop_front();
            comp.push_back(nodes[x]);
            for (std::size_t y = 0; y < nodes.size(); ++y)
                if (m[x][y] != 0 && !seen[y]) {
                    seen[y] = true;
                    q.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        std::vector<Edge> edges;
        for (const auto& e : full.diagram.edges)
            if (std::binary_search(comp.begin(), comp.end(), e.u) && std::binary_search(comp.begin(), comp.end(), e.v))
                edges.push_back(e);
        std::vector<DynkinType> matches;
        for (const auto& t : detail::types_of_rank(static_cast<int>(comp.size())))
            if (detail::isomorphic(t, comp, edges)) matches.push_back(t);
        if (matches.empty()) res.unmatched = true;
        if (matches.size() > 1) res.ambiguous = true;
        res.components.push_back({matches.empty() ? DynkinType{} : matches.front(), comp});
    }
    return res;
}

/// Sorted multiset of (type, node set) pairs, for comparison with decompose().
inline std::vector<std::pair<DynkinType, std::vector<int>>> signature(const OracleResult& r)
{
    std::vector<std::pair<DynkinType, std::vector<int>>> out;
    for (const auto& c : r.components) out.push_back({c.type, c.nodes});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<DynkinType, std::vector<int>>> signature(const std::vector<SimpleComponent>& comps)
{
    std::vector<std::pair<DynkinType, std::vector<int>>> out;
    for (const auto& c : comps) {
        auto nodes = c.nodes;
        std::sort(nodes.begin(), nodes.end());
        out.push_back({c.type, nodes});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gensplit::oracle
