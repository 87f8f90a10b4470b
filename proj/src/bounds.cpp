#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "internal.hpp"
#include "trc/constructions.hpp"
#include "trc/families.hpp"
#include "trc/solver.hpp"

namespace trc {

namespace {

// Relabel a coloring of `canon` onto g, where canon vertex i corresponds to g
// vertex perm[i].
TotalColoring map_through(const Graph& canon, const TotalColoring& cc, const Graph& g,
                          const std::vector<int>& perm) {
    TotalColoring out;
    out.vertex_colors.assign(g.vertex_count(), 0);
    out.edge_colors.assign(g.edge_count(), 0);
    for (int i = 0; i < canon.vertex_count(); ++i) out.vertex_colors[perm[i]] = cc.vertex_colors[i];
    for (int e = 0; e < canon.edge_count(); ++e) {
        auto [a, b] = canon.edge_at(e);
        out.edge_colors[g.edge_index(perm[a], perm[b])] = cc.edge_colors[e];
    }
    return out;
}

// Distinct colors on every spanning-tree edge and every tree-internal vertex
// make each tree path rainbow, so this works for any connected graph.
UpperBoundReport spanning_tree_route(const Graph& g) {
    int n = g.vertex_count();
    UpperBoundReport r;
    r.source = "spanning-tree";
    r.certificate.vertex_colors.assign(n, 0);
    r.certificate.edge_colors.assign(g.edge_count(), 0);
    if (n == 1) {
        r.value = 1;
        return r;
    }
    auto tree = detail::bfs_tree(g, 0);
    int color = 0;
    for (auto [u, v] : tree.edges) r.certificate.edge_colors[g.edge_index(u, v)] = color++;
    std::vector<int> tree_degree(n, 0);
    for (auto [u, v] : tree.edges) {
        ++tree_degree[u];
        ++tree_degree[v];
    }
    for (int v : tree.order)
        if (tree_degree[v] >= 2) r.certificate.vertex_colors[v] = color++;
    r.value = r.certificate.palette();
    return r;
}

std::optional<UpperBoundReport> unicyclic_route(const Graph& g) {
    auto dec = unicyclic_decompose(g);
    if (!dec) return std::nullopt;
    int n = g.vertex_count(), ell = dec->ell();
    UpperBoundReport r;
    r.source = "unicyclic";

    if (ell == n) {  // plain cycle in some labeling
        Graph canon = generate("cycle:" + std::to_string(n));
        r.certificate = map_through(canon, color_cycle(n), g, dec->cycle);
        r.value = r.certificate.palette();
        return r;
    }
    if (dec->nontrivial_count() == 1) {
        int idx = -1;
        for (int i = 0; i < ell; ++i)
            if (dec->nontrivial[i]) idx = i;
        if (auto walk = detail::tail_walk(g, *dec, idx)) {
            std::vector<int> perm(n);
            for (int j = 0; j < ell; ++j) perm[j] = dec->cycle[(idx + j) % ell];
            for (size_t j = 1; j < walk->size(); ++j) perm[ell + j - 1] = (*walk)[j];
            Graph canon = generate("bell:" + std::to_string(ell) + "," +
                                   std::to_string(n - ell));
            r.certificate = map_through(canon, color_bell(ell, n), g, perm);
            r.value = r.certificate.palette();
            return r;
        }
    }
    r.certificate = color_unicyclic(g);
    r.value = r.certificate.palette();
    return r;
}

std::optional<UpperBoundReport> diam2_route(const Graph& g, const StructuralProfile& p) {
    if (!p.two_connected || p.diameter != 2) return std::nullopt;
    auto c = two_connected_diam2_recipe(g);
    if (!c) return std::nullopt;
    return UpperBoundReport{c->palette(), *c, "bridgeless-diam2"};
}

std::optional<UpperBoundReport> layer_route(const Graph& g) {
    Graph gb = g.complement();
    if (!gb.connected()) return std::nullopt;
    auto pb = structural_profile(gb);
    if (pb.diameter <= 3) return std::nullopt;
    auto c = color_via_distance_layers(gb);
    return UpperBoundReport{c.palette(), c, "construction"};
}

std::optional<std::vector<int>> path_order_of(const Graph& h) {
    int n = h.vertex_count();
    if (n < 2 || h.edge_count() != n - 1 || !h.connected()) return std::nullopt;
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (h.degree(v) > 2) return std::nullopt;
        if (h.degree(v) == 1 && start < 0) start = v;
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int y : h.neighbors(cur))
            if (y != prev) next = y;
        if (next < 0) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<UpperBoundReport> co_path_route(const Graph& g) {
    int n = g.vertex_count();
    if (n < 5) return std::nullopt;
    auto order = path_order_of(g.complement());
    if (!order) return std::nullopt;
    Graph canon = generate("path:" + std::to_string(n)).complement();
    auto c = map_through(canon, color_complement_of_path(n), g, *order);
    return UpperBoundReport{c.palette(), c, "construction"};
}

std::optional<UpperBoundReport> co_spider_route(const Graph& g) {
    int n = g.vertex_count();
    if (n < 6) return std::nullopt;
    Graph h = g.complement();
    if (h.edge_count() != n - 1 || !h.connected()) return std::nullopt;
    int center = -1;
    for (int v = 0; v < n; ++v) {
        if (h.degree(v) > 3) return std::nullopt;
        if (h.degree(v) == 3) {
            if (center >= 0) return std::nullopt;
            center = v;
        }
    }
    if (center < 0) return std::nullopt;
    std::vector<std::vector<int>> legs;
    for (int y : h.neighbors(center)) {
        std::vector<int> leg{y};
        int prev = center, cur = y;
        for (;;) {
            int next = -1;
            for (int z : h.neighbors(cur))
                if (z != prev) next = z;
            if (next < 0) break;
            leg.push_back(next);
            prev = cur;
            cur = next;
        }
        legs.push_back(std::move(leg));
    }
    std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    int k = static_cast<int>(legs[0].size());
    int l = static_cast<int>(legs[1].size());
    int m = static_cast<int>(legs[2].size());
    if (k < 2) return std::nullopt;
    std::vector<int> perm(n);
    perm[0] = center;
    int at = 1;
    for (const auto& leg : legs)
        for (int v : leg) perm[at++] = v;
    Graph canon = generate("spider:" + std::to_string(k) + "," + std::to_string(l) + "," +
                           std::to_string(m))
                      .complement();
    auto c = map_through(canon, color_complement_of_spider(k, l, m), g, perm);
    return UpperBoundReport{c.palette(), c, "construction"};
}

}  // namespace

UpperBoundReport trc_upper_bound(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("upper bound requires a connected graph");
    auto p = structural_profile(g);

    UpperBoundReport best;
    if (p.complete) {
        best.value = 1;
        best.source = "construction";
        best.certificate.vertex_colors.assign(p.n, 0);
        best.certificate.edge_colors.assign(p.m, 0);
    } else {
        best = spanning_tree_route(g);
    }
    auto consider = [&](std::optional<UpperBoundReport> r) {
        if (r && (r->value < best.value)) best = std::move(*r);
    };
    if (!p.complete) {
        consider(unicyclic_route(g));
        consider(diam2_route(g, p));
        consider(layer_route(g));
        consider(co_path_route(g));
        consider(co_spider_route(g));
    }
    if (!verify_trc(g, best.certificate).valid)
        throw std::logic_error("upper bound certificate failed verification");
    return best;
}

namespace detail {

std::optional<std::vector<int>> tail_walk(const Graph& g, const UnicyclicDecomposition& dec,
                                          int idx) {
    int root = dec.cycle[idx];
    std::vector<int> walk{root};
    int prev = -1, cur = root;
    std::uint64_t on_cycle = 0;
    for (int v : dec.cycle) on_cycle |= std::uint64_t{1} << v;
    for (;;) {
        int next = -1;
        for (int y : g.neighbors(cur)) {
            if (y == prev || (on_cycle >> y & 1)) continue;
            if (next != -1) return std::nullopt;  // branching, not a path
            next = y;
        }
        if (next == -1) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(walk.size()) != static_cast<int>(dec.trees[idx].size()))
        return std::nullopt;
    return walk;
}

}  // namespace detail

}  // namespace trc
