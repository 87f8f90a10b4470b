#pragma once

// Reference implementations rebuilt from the definitions, for cross-checking
// the library. Exponential everywhere; use only on tiny graphs.

#include <set>
#include <vector>

#include "trc/coloring.hpp"
#include "trc/graph.hpp"

namespace naive {

inline bool pair_connected(const trc::Graph& g, const trc::TotalColoring& c, int u, int v) {
    std::vector<int> path{u};
    std::vector<bool> used(g.vertex_count(), false);
    used[u] = true;
    auto rainbow = [&]() {
        std::multiset<int> seen;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            seen.insert(c.edge_colors[g.edge_index(path[i], path[i + 1])]);
        for (size_t i = 1; i + 1 < path.size(); ++i) seen.insert(c.vertex_colors[path[i]]);
        return std::set<int>(seen.begin(), seen.end()).size() == seen.size();
    };
    auto dfs = [&](auto&& self, int x) -> bool {
        if (x == v) return rainbow();
        for (int w : g.neighbors(x)) {
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            used[w] = false;
        }
        return false;
    };
    return dfs(dfs, u);
}

inline bool valid(const trc::Graph& g, const trc::TotalColoring& c) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!pair_connected(g, c, u, v)) return false;
    return true;
}

// Least k admitting a valid assignment, by odometer enumeration of all
// k^(n+m) colorings. -1 if nothing works up to k_cap.
inline int trc_value(const trc::Graph& g, int k_cap = 8) {
    int n = g.vertex_count(), m = g.edge_count();
    for (int k = 1; k <= k_cap; ++k) {
        std::vector<int> a(n + m, 0);
        while (true) {
            trc::TotalColoring c;
            c.vertex_colors.assign(a.begin(), a.begin() + n);
            c.edge_colors.assign(a.begin() + n, a.end());
            if (valid(g, c)) return k;
            int i = 0;
            while (i < n + m && a[i] == k - 1) a[i++] = 0;
            if (i == n + m) break;
            ++a[i];
        }
    }
    return -1;
}

}  // namespace naive
