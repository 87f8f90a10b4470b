#include "trc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "trc/families.hpp"

namespace trc {

namespace {

void req(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_valid(const Graph& g, const TotalColoring& c, const char* what) {
    if (!verify_trc(g, c).valid)
        throw std::logic_error(std::string(what) + ": constructed coloring failed verification");
}

std::set<int> used_colors(const TotalColoring& c) {
    std::set<int> s(c.vertex_colors.begin(), c.vertex_colors.end());
    s.insert(c.edge_colors.begin(), c.edge_colors.end());
    return s;
}

const std::map<int, int>& cycle_table() {
    static const std::map<int, int> t = {{3, 1},  {4, 3},  {5, 3},  {6, 5},   {7, 6},
                                         {8, 7},  {9, 8},  {10, 9}, {11, 11}, {12, 11}};
    return t;
}

// Rotational pattern: edge (i, i+1) gets color i, vertex i gets i + floor(n/2)
// mod n. The two color windows seen along any shortest arc are disjoint, which
// is what makes this work for every n >= 11.
TotalColoring cycle_pattern(const Graph& g, int n) {
    TotalColoring c;
    c.vertex_colors.assign(n, 0);
    c.edge_colors.assign(n, 0);
    int half = n / 2;
    for (int i = 0; i < n; ++i) {
        c.edge_colors[g.edge_index(i, (i + 1) % n)] = i;
        c.vertex_colors[i] = (i + half) % n;
    }
    return c;
}

}  // namespace

int cycle_palette_size(int n) {
    req(n >= 3, "cycle coloring needs n >= 3");
    return n >= 13 ? n : cycle_table().at(n);
}

TotalColoring color_cycle(int n) {
    req(n >= 3 && n <= kMaxVertices, "cycle coloring needs 3 <= n <= 64");
    static std::mutex mu;
    static std::map<int, TotalColoring> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    Graph g = generate("cycle:" + std::to_string(n));
    TotalColoring c;
    if (n >= 13 || n == 11) {
        c = cycle_pattern(g, n);
        if (!verify_trc(g, c).valid) {
            auto found = find_coloring_with_palette(g, cycle_palette_size(n));
            if (!found) throw std::logic_error("cycle pattern invalid and search found no repair");
            c = *found;
        }
    } else if (n == 12) {
        // An 11-palette forces six of the twelve half arcs to be fully rainbow,
        // so blind search rarely terminates here; this instance was solved once
        // from that window structure and is re-verified like every other branch.
        static const int vtx[12] = {9, 10, 2, 4, 9, 10, 8, 1, 9, 10, 5, 7};
        static const int edg[12] = {0, 1, 3, 5, 6, 7, 0, 2, 3, 4, 6, 8};
        c.vertex_colors.assign(vtx, vtx + 12);
        c.edge_colors.assign(12, 0);
        for (int i = 0; i < 12; ++i) c.edge_colors[g.edge_index(i, (i + 1) % 12)] = edg[i];
        if (!verify_trc(g, c).valid)
            throw std::logic_error("pinned 12-cycle coloring failed verification");
    } else {
        auto found = find_coloring_with_palette(g, cycle_table().at(n));
        if (!found) throw std::logic_error("no cycle coloring at the tabulated palette size");
        c = *found;
    }
    if (c.palette() != cycle_palette_size(n))
        throw std::logic_error("cycle coloring missed the expected palette size");
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(n, c);
    return c;
}

int bell_palette_size(int ell, int n) {
    req(ell >= 3 && ell < n, "bell graph needs 3 <= ell < n");
    int t = n - ell;
    bool tight = ell == 3 || ell == 5 || ell == 7 || ell == 9 || (ell >= 11 && ell % 2 == 1 && t >= 2);
    return tight ? 2 * n - ell - 2 : 2 * n - ell - 1;
}

TotalColoring color_bell(int ell, int n) {
    req(ell >= 3 && ell < n && n <= kMaxVertices, "bell graph needs 3 <= ell < n <= 64");
    int t = n - ell;
    Graph g = generate("bell:" + std::to_string(ell) + "," + std::to_string(t));
    TotalColoring c;
    c.vertex_colors.assign(n, -1);
    c.edge_colors.assign(g.edge_count(), -1);
    auto ec = [&](int a, int b) -> int& { return c.edge_colors[g.edge_index(a, b)]; };
    // cycle vertex i below is 1-based around the ring, pendant path hangs off
    // vertex 1; canonical labels put ring vertex i at id i-1 and the path at
    // ids ell..n-1
    auto cyc = [&](int i) { return (i - 1) % ell; };
    int next_fresh = 0;
    bool tail_pending = true;

    if (ell == 7 || ell == 9) {
        // three ring vertices pinned to color 0 and three to 1 at thirds
        // spacing, everything else on the ring cycling through 2..ell-2 twice
        int a = ell / 3, b = 2 * ell / 3;
        std::set<int> pinned;
        for (int i : {2, a + 2, b + 2}) {
            c.vertex_colors[cyc(i)] = 0;
            pinned.insert(cyc(i));
        }
        for (int i : {3, a + 3, b + 3}) {
            c.vertex_colors[cyc(i)] = 1;
            pinned.insert(cyc(i));
        }
        std::vector<std::pair<bool, int>> items;  // (is_vertex, id or edge slot)
        items.push_back({false, g.edge_index(cyc(2), cyc(3))});
        items.push_back({false, g.edge_index(cyc(3), cyc(4))});
        for (int i = 4; i <= ell; ++i) {
            items.push_back({true, cyc(i)});
            items.push_back({false, g.edge_index(cyc(i), cyc(i + 1))});
        }
        items.push_back({true, cyc(1)});
        items.push_back({false, g.edge_index(cyc(1), cyc(2))});
        int col = 2;
        for (auto [isv, id] : items) {
            if (isv && pinned.count(id)) continue;
            if (isv)
                c.vertex_colors[id] = col;
            else
                c.edge_colors[id] = col;
            col = (col == ell - 2) ? 2 : col + 1;
        }
        next_fresh = ell - 1;
    } else if ((ell % 2 == 0 && ell >= 14) || (ell % 2 == 1 && ell >= 11 && t == 1)) {
        for (int i = 0; i < ell; ++i) {
            ec(i, (i + 1) % ell) = i;
            c.vertex_colors[i] = (i + ell / 2) % ell;
        }
        next_fresh = ell;
    } else if (ell % 2 == 1 && ell >= 11) {  // t >= 2
        // walk first tail vertex, its edge, then the whole ring alternating
        // vertex/edge, cycling colors 0..ell; exactly two laps
        int mod = ell + 1, col = 0;
        auto put_v = [&](int id) {
            c.vertex_colors[id] = col;
            col = (col + 1) % mod;
        };
        auto put_e = [&](int a, int b) {
            ec(a, b) = col;
            col = (col + 1) % mod;
        };
        put_v(ell);
        put_e(ell, 0);
        put_v(0);
        for (int i = 1; i < ell; ++i) {
            put_e(i - 1, i);
            put_v(i);
        }
        put_e(ell - 1, 0);
        next_fresh = mod;
    } else {
        // small rings: optimal ring coloring plus two fresh colors per pendant
        // vertex (new edge fresh, attachment vertex recolored fresh)
        TotalColoring base = color_cycle(ell);
        Graph ring = generate("cycle:" + std::to_string(ell));
        for (int i = 0; i < ell; ++i) c.vertex_colors[i] = base.vertex_colors[i];
        for (int e = 0; e < ring.edge_count(); ++e) {
            auto [a, b] = ring.edge_at(e);
            ec(a, b) = base.edge_colors[e];
        }
        int fresh = cycle_palette_size(ell);
        int prev = 0;
        for (int j = ell; j < n; ++j) {
            ec(prev, j) = fresh++;
            c.vertex_colors[prev] = fresh++;
            c.vertex_colors[j] = 0;
            prev = j;
        }
        next_fresh = fresh;
        tail_pending = false;
    }

    if (tail_pending) {
        // fresh colors down the tail, leaf reuses color 0
        int prev = 0;
        for (int j = ell; j < n; ++j) {
            if (ec(prev, j) < 0) ec(prev, j) = next_fresh++;
            if (c.vertex_colors[j] < 0) c.vertex_colors[j] = (j == n - 1) ? 0 : next_fresh++;
            prev = j;
        }
    }

    if (c.palette() != bell_palette_size(ell, n))
        throw std::logic_error("bell coloring missed the expected palette size");
    check_valid(g, c, "bell coloring");
    return c;
}

TotalColoring color_unicyclic(const Graph& g) {
    auto dec = unicyclic_decompose(g);
    req(dec.has_value(), "graph is not connected unicyclic");
    int n = g.vertex_count();
    int ell = dec->ell();

    // placement order: ring first, then tree vertices by BFS from the ring
    std::vector<int> order = dec->cycle;
    std::vector<int> parent(n, -1);
    std::vector<char> placed(n, 0);
    for (int v : order) placed[v] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
        int x = order[h];
        for (int y : g.neighbors(x)) {
            if (placed[y]) continue;
            placed[y] = 1;
            parent[y] = x;
            order.push_back(y);
        }
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<int> vcol(n, -1), ecol(g.edge_count(), -1);
    TotalColoring base = color_cycle(ell);
    Graph ring = generate("cycle:" + std::to_string(ell));
    for (int i = 0; i < ell; ++i) vcol[order[i]] = base.vertex_colors[i];
    for (int e = 0; e < ring.edge_count(); ++e) {
        auto [a, b] = ring.edge_at(e);
        ecol[g.edge_index(order[a], order[b])] = base.edge_colors[e];
    }
    std::set<int> used = used_colors(base);

    auto prefix_valid = [&](int k) {
        Graph h(k);
        for (int i = 0; i < k; ++i)
            for (int j : g.neighbors(order[i]))
                if (pos[j] < k && pos[j] > i) h.add_edge(i, pos[j]);
        TotalColoring lc;
        lc.vertex_colors.resize(k);
        for (int i = 0; i < k; ++i) lc.vertex_colors[i] = vcol[order[i]];
        lc.edge_colors.resize(h.edge_count());
        for (int e = 0; e < h.edge_count(); ++e) {
            auto [a, b] = h.edge_at(e);
            lc.edge_colors[e] = ecol[g.edge_index(order[a], order[b])];
        }
        return verify_trc(h, lc).valid;
    };

    for (int k = ell + 1; k <= n; ++k) {
        int x = order[k - 1];
        int p = parent[x];
        int slot = g.edge_index(p, x);
        int leaf = *used.begin();
        int f1 = *used.rbegin() + 1, f2 = f1 + 1;
        int old_p = vcol[p];
        vcol[x] = leaf;

        // reuse an existing color outright, then one fresh color on the edge,
        // then one fresh on the attachment vertex, then the always-valid pair
        // of fresh colors
        bool done = false;
        std::vector<std::pair<int, int>> cands;  // (edge color, attachment color)
        for (int ce : used) cands.emplace_back(ce, old_p);
        cands.emplace_back(f1, old_p);
        for (int ce : used) cands.emplace_back(ce, f1);
        cands.emplace_back(f1, f2);
        for (auto [e_color, p_color] : cands) {
            ecol[slot] = e_color;
            vcol[p] = p_color;
            if (prefix_valid(k)) {
                used.insert(e_color);
                used.insert(p_color);
                done = true;
                break;
            }
        }
        if (!done) throw std::logic_error("unicyclic coloring: pendant attachment failed");
    }

    TotalColoring c;
    c.vertex_colors = std::move(vcol);
    c.edge_colors = std::move(ecol);
    check_valid(g, c, "unicyclic coloring");
    return c;
}

TotalColoring color_complement_of_path(int n) {
    req(n >= 5 && n <= kMaxVertices, "path complement coloring needs 5 <= n <= 64");
    Graph gb = generate("path:" + std::to_string(n)).complement();
    TotalColoring c;
    c.vertex_colors.assign(n, 2);
    c.edge_colors.assign(gb.edge_count(), 0);
    auto set1 = [&](int i, int j) { c.edge_colors[gb.edge_index(i - 1, j - 1)] = 1; };
    set1(1, 3);
    set1(1, 5);
    set1(3, 5);
    set1(2, 4);
    for (int i = 6; i <= n; ++i) c.edge_colors[gb.edge_index(0, i - 1)] = i % 2;
    check_valid(gb, c, "path complement coloring");
    return c;
}

TotalColoring color_complement_of_spider(int k, int l, int m) {
    int n = k + l + m + 1;
    req(k >= l && l >= m && m >= 1 && k >= 2 && n >= 6 && n <= kMaxVertices,
        "spider complement coloring needs legs k >= l >= m >= 1, k >= 2, 6 <= n <= 64");
    Graph gb = generate("spider:" + std::to_string(k) + "," + std::to_string(l) + "," +
                        std::to_string(m))
                   .complement();
    // canonical spider ids: center 0, first leg 1..k, second k+1..k+l, third
    // k+l+1..k+l+m
    auto U = [&](int i) { return i; };
    auto V = [&](int i) { return k + i; };
    auto W = [&](int i) { return k + l + i; };
    int center = 0;
    TotalColoring c;
    c.vertex_colors.assign(n, 2);
    c.edge_colors.assign(gb.edge_count(), 0);
    auto set = [&](int a, int b, int col) { c.edge_colors[gb.edge_index(a, b)] = col; };
    set(V(1), U(1), 0);
    set(center, U(2), 0);
    if (l >= 2) set(U(1), V(2), 0);
    if (k >= 3) set(U(1), U(3), 0);
    if (l >= 2) set(center, V(2), 1);
    if (k >= 3) set(center, U(3), 1);
    for (int i = 1; i <= l; ++i) set(U(2), V(i), i % 2);
    for (int i = 1; i <= m; ++i) set(U(2), W(i), i % 2);
    for (int i = 3; i <= k; ++i) set(V(1), U(i), (i + 1) % 2);
    check_valid(gb, c, "spider complement coloring");
    return c;
}

TotalColoring color_via_distance_layers(const Graph& gbar) {
    req(gbar.connected(), "distance-layer coloring needs a connected complement");
    auto p = structural_profile(gbar);
    req(p.diameter > 3, "distance-layer coloring needs complement diameter > 3");
    int n = gbar.vertex_count();
    int v = -1;
    for (int u = 0; u < n; ++u)
        if (p.eccentricities[u] == p.diameter) {
            v = u;
            break;
        }
    auto dist = gbar.distances_from(v);
    auto layer = [&](int u) { return std::min(dist[u], 4); };

    Graph g = gbar.complement();
    TotalColoring c;
    c.vertex_colors.assign(n, 0);
    c.edge_colors.assign(g.edge_count(), 0);
    for (int u = 0; u < n; ++u) {
        int L = layer(u);
        if (L == 0)
            c.vertex_colors[u] = 3;
        else if (L == 1 || L == 3)
            c.vertex_colors[u] = 5;
        else
            c.vertex_colors[u] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_at(e);
        int la = std::min(layer(a), layer(b)), lb = std::max(layer(a), layer(b));
        int col = 0;
        if (la == 0 && lb == 2)
            col = 0;
        else if (la == 1 && lb == 4)
            col = 0;
        else if (la == 0 && lb == 4)
            col = 2;
        else if (la == 0 && lb == 3)
            col = 4;
        else if ((la == 1 && lb == 3) || (la == 2 && lb == 4))
            col = 6;
        c.edge_colors[e] = col;
    }
    check_valid(g, c, "distance-layer coloring");
    return c;
}

namespace {

// Base-q digit vectors for the large side of a strong bipartite coloring. The
// first m vectors are the "unit" vectors (single 1 digit); these guarantee
// that every pair of small-side positions is distinguished somewhere.
struct DigitPlan {
    int q = 0;
    std::vector<std::vector<int>> vecs;  // one per large-side vertex
};

DigitPlan digit_plan(int m, int big) {
    DigitPlan plan;
    int q = 2;
    for (;;) {
        long long cap = 1;
        for (int i = 0; i < m && cap < big; ++i) cap *= q;
        if (cap >= big) break;
        ++q;
    }
    plan.q = q;
    std::set<std::vector<int>> used;
    for (int r = 0; r < m && static_cast<int>(plan.vecs.size()) < big; ++r) {
        std::vector<int> unit(m, 0);
        unit[r] = 1;
        if (used.insert(unit).second) plan.vecs.push_back(unit);
    }
    std::vector<int> odo(m, 0);
    while (static_cast<int>(plan.vecs.size()) < big) {
        if (used.insert(odo).second) plan.vecs.push_back(odo);
        if (static_cast<int>(plan.vecs.size()) == big) break;
        int i = m - 1;
        while (i >= 0 && odo[i] == q - 1) odo[i--] = 0;
        if (i < 0) throw std::logic_error("digit odometer overran its base");
        ++odo[i];
    }
    return plan;
}

}  // namespace

TotalColoring color_complete_bipartite_strong(int m, int n) {
    req(m >= 2 && m <= n && m + n <= kMaxVertices,
        "strong bipartite coloring needs 2 <= m <= n, m + n <= 64");
    auto plan = digit_plan(m, n);
    if (plan.q > 6)
        throw std::runtime_error("strong bipartite coloring: digit base exceeds the supported range");
    Graph g = generate("kbip:" + std::to_string(m) + "," + std::to_string(n));
    TotalColoring c;
    c.vertex_colors.assign(m + n, plan.q + 1);
    for (int j = 0; j < m; ++j) c.vertex_colors[j] = plan.q;
    c.edge_colors.assign(g.edge_count(), 0);
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < m; ++j) c.edge_colors[g.edge_index(j, m + u)] = plan.vecs[u][j];
    check_valid(g, c, "strong bipartite coloring");
    return c;
}

namespace {

std::optional<TotalColoring> diam2_recipe_at(const Graph& g, int v) {
    int n = g.vertex_count();
    auto dist = g.distances_from(v);
    std::uint64_t far = 0;
    for (int u = 0; u < n; ++u)
        if (dist[u] == 2) far |= std::uint64_t{1} << u;
    for (int u = 0; u < n; ++u)
        if ((far >> u & 1) && (g.adjacency_mask(u) & far)) return std::nullopt;  // not independent

    // auxiliary adjacency on N(v): direct edges plus length-2 connections
    // through the far set
    std::vector<int> nbrs = g.neighbors(v);
    std::vector<std::uint64_t> aux(n, 0);
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            int x = nbrs[i], y = nbrs[j];
            bool joined = g.has_edge(x, y) ||
                          (g.adjacency_mask(x) & g.adjacency_mask(y) & far) != 0;
            if (joined) {
                aux[x] |= std::uint64_t{1} << y;
                aux[y] |= std::uint64_t{1} << x;
            }
        }
    // BFS tree over the auxiliary graph gives the bipartition
    std::vector<int> depth(n, -1);
    std::vector<int> queue{nbrs.front()};
    depth[nbrs.front()] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (int y : nbrs)
            if (depth[y] == -1 && (aux[x] >> y & 1)) {
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
    }
    if (queue.size() != nbrs.size()) return std::nullopt;  // auxiliary graph disconnected

    std::uint64_t X = 0, Y = 0;
    for (int x : nbrs) (depth[x] % 2 == 0 ? X : Y) |= std::uint64_t{1} << x;
    std::uint64_t A = 0, D1 = 0, D2 = 0;
    for (int u = 0; u < n; ++u) {
        if (!(far >> u & 1)) continue;
        bool tox = g.adjacency_mask(u) & X, toy = g.adjacency_mask(u) & Y;
        if (tox && toy)
            A |= std::uint64_t{1} << u;
        else if (tox)
            D1 |= std::uint64_t{1} << u;
        else
            D2 |= std::uint64_t{1} << u;
    }
    if (D1 == 0 && D2 != 0) {
        std::swap(X, Y);
        std::swap(D1, D2);
    }
    if (D2 != 0) return std::nullopt;

    // greedy cover of D1 by X vertices, largest new coverage first
    std::vector<int> chosen;
    std::vector<std::uint64_t> fresh_cover;
    std::uint64_t uncovered = D1;
    while (uncovered) {
        int best = -1, best_count = 0;
        for (int x : nbrs) {
            if (!(X >> x & 1)) continue;
            int cnt = std::popcount(g.adjacency_mask(x) & uncovered);
            if (cnt > best_count) {
                best = x;
                best_count = cnt;
            }
        }
        if (best < 0) return std::nullopt;
        chosen.push_back(best);
        fresh_cover.push_back(g.adjacency_mask(best) & uncovered);
        uncovered &= ~g.adjacency_mask(best);
    }
    int t = static_cast<int>(chosen.size());

    TotalColoring c;
    c.vertex_colors.assign(n, 0);
    c.edge_colors.assign(g.edge_count(), 0);
    auto in = [](std::uint64_t mask, int u) { return (mask >> u & 1) != 0; };
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_at(e);
        int col;
        if (a == v || b == v) {
            int o = (a == v) ? b : a;
            col = in(X, o) ? 0 : 1;
        } else if ((in(X, a) && in(Y, b)) || (in(Y, a) && in(X, b)) || (in(Y, a) && in(A, b)) ||
                   (in(A, a) && in(Y, b))) {
            col = 2;
        } else if ((in(D1, a) && in(X, b)) || (in(X, a) && in(D1, b))) {
            int x = in(X, a) ? a : b, d = (x == a) ? b : a;
            col = 3;
            for (int i = 0; i < t; ++i)
                if (chosen[i] == x && in(fresh_cover[i], d)) {
                    col = 4;
                    break;
                }
        } else {
            col = 3;  // X-A edges and everything else
        }
        c.edge_colors[e] = col;
    }
    c.vertex_colors[v] = 5;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (in(Y, u))
            c.vertex_colors[u] = 6;
        else if (in(A, u) || in(D1, u))
            c.vertex_colors[u] = 7;
    }
    int rest_color = t == 0 ? 7 : (std::popcount(fresh_cover.back()) == 1 ? t + 7 : t + 8);
    for (int u = 0; u < n; ++u)
        if (in(X, u)) c.vertex_colors[u] = rest_color;
    for (int i = 0; i < t; ++i) c.vertex_colors[chosen[i]] = 8 + i;

    if (!verify_trc(g, c).valid) return std::nullopt;
    return c;
}

}  // namespace

std::optional<TotalColoring> two_connected_diam2_recipe(const Graph& g) {
    auto p = structural_profile(g);
    req(p.two_connected && p.diameter == 2, "recipe needs a 2-connected graph of diameter 2");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto c = diam2_recipe_at(g, v)) return c;
    return std::nullopt;
}

TotalColoring color_two_connected_diam2(const Graph& g, const SolveBudget& budget) {
    int n = g.vertex_count();
    auto rec = two_connected_diam2_recipe(g);  // also validates the preconditions
    if (rec && rec->palette() <= n - 1) return *rec;
    auto res = solve_trc(g, budget);
    if (!res.exact())
        throw std::runtime_error("diameter-2 coloring: search budget exhausted, value in [" +
                                 std::to_string(res.lo) + "," + std::to_string(res.hi) + "]");
    if (res.hi > n - 1 || !res.certificate)
        throw std::logic_error("diameter-2 coloring: exact value above n - 1");
    return *res.certificate;
}

namespace {

std::optional<TotalColoring> diam3_pendant_recipe(const Graph& gb, int v, int z, int u, int w,
                                                  const std::vector<int>& dist) {
    int n = gb.vertex_count();
    TotalColoring c;
    c.vertex_colors.assign(n, 0);
    c.edge_colors.assign(gb.edge_count(), 0);
    if (!gb.has_edge(z, v) || !gb.has_edge(v, u) || !gb.has_edge(z, w)) return std::nullopt;
    c.vertex_colors[z] = 1;
    c.edge_colors[gb.edge_index(z, v)] = 2;
    c.vertex_colors[v] = 3;
    c.edge_colors[gb.edge_index(v, u)] = 4;
    c.vertex_colors[u] = 5;
    for (int x = 0; x < n; ++x) {
        if (dist[x] == 1 && x != w && gb.has_edge(u, x)) c.edge_colors[gb.edge_index(u, x)] = 6;
        if (dist[x] == 2 && x != u && gb.has_edge(v, x)) c.edge_colors[gb.edge_index(v, x)] = 6;
    }
    c.edge_colors[gb.edge_index(z, w)] = 6;
    if (!verify_trc(gb, c).valid) return std::nullopt;
    return c;
}

std::optional<TotalColoring> diam3_largez_recipe(const Graph& gb, int v,
                                                 const std::vector<int>& X,
                                                 const std::vector<int>& Y,
                                                 const std::vector<int>& Z) {
    int n = gb.vertex_count();
    const std::vector<int>& S = (X.size() <= Z.size()) ? X : Z;
    const std::vector<int>& L = (X.size() <= Z.size()) ? Z : X;
    if (S.size() < 2) return std::nullopt;
    auto plan = digit_plan(static_cast<int>(S.size()), static_cast<int>(L.size()));
    if (plan.q > 5) return std::nullopt;  // digit block must stay within colors 0..6

    TotalColoring c;
    c.vertex_colors.assign(n, 0);
    c.edge_colors.assign(gb.edge_count(), 0);
    for (size_t j = 0; j < S.size(); ++j)
        for (size_t i = 0; i < L.size(); ++i) {
            if (!gb.has_edge(S[j], L[i])) return std::nullopt;  // expected complete
            c.edge_colors[gb.edge_index(S[j], L[i])] = plan.vecs[i][j];
        }
    for (int s : S) c.vertex_colors[s] = plan.q;
    for (int l : L) c.vertex_colors[l] = plan.q + 1;

    std::vector<int> Y1, Y2, Y3;
    for (int y : Y) {
        bool to_x = false, to_z = false;
        for (int x : X) to_x = to_x || gb.has_edge(y, x);
        for (int z : Z) to_z = to_z || gb.has_edge(y, z);
        if (to_x)
            Y1.push_back(y);
        else if (to_z)
            Y2.push_back(y);
        else
            Y3.push_back(y);
    }
    for (int y : Y1)
        for (int x : X)
            if (gb.has_edge(y, x)) c.edge_colors[gb.edge_index(y, x)] = 7;
    for (int y : Y2)
        for (int z : Z)
            if (gb.has_edge(y, z)) c.edge_colors[gb.edge_index(y, z)] = 7;
    for (int z : Z) {
        if (!gb.has_edge(v, z)) return std::nullopt;
        c.edge_colors[gb.edge_index(v, z)] = 8;
    }
    c.vertex_colors[v] = 9;
    for (int y : Y) {
        if (!gb.has_edge(v, y)) return std::nullopt;
        c.edge_colors[gb.edge_index(v, y)] = 10;
    }
    for (int y : Y1) {
        int x = -1;
        for (int cand : X)
            if (gb.has_edge(y, cand)) {
                x = cand;
                break;
            }
        int z = Z.front();
        std::set<int> forb = {c.vertex_colors[x], c.edge_colors[gb.edge_index(x, z)],
                              c.vertex_colors[z]};
        int pick = 0;
        while (forb.count(pick)) ++pick;
        if (pick > 6) return std::nullopt;
        c.vertex_colors[y] = pick;
        forb.insert(pick);
        for (int y3 : Y3) {
            if (!gb.has_edge(y, y3)) continue;
            int ecol = 0;
            while (forb.count(ecol)) ++ecol;
            if (ecol > 6) return std::nullopt;
            c.edge_colors[gb.edge_index(y, y3)] = ecol;
        }
    }
    if (!verify_trc(gb, c).valid) return std::nullopt;
    return c;
}

}  // namespace

TotalColoring color_complement_of_diam3(const Graph& g, Diam3Subcase subcase) {
    auto p = structural_profile(g);
    req(p.connected && p.two_connected && p.diameter == 3,
        "complement-of-diameter-3 coloring needs a 2-connected graph of diameter 3");
    Graph gb = g.complement();
    auto pb = structural_profile(gb);
    req(pb.connected && pb.diameter == 2, "complement must be connected with diameter 2");
    int n = g.vertex_count();

    for (int v = 0; v < n; ++v) {
        if (p.eccentricities[v] != 3) continue;
        auto dist = g.distances_from(v);
        std::vector<int> X, Y, Z;
        for (int u = 0; u < n; ++u) {
            if (dist[u] == 1) X.push_back(u);
            if (dist[u] == 2) Y.push_back(u);
            if (dist[u] == 3) Z.push_back(u);
        }
        if (subcase == Diam3Subcase::PendantBridge) {
            if (Z.size() != 1) continue;
            int z = Z.front();
            for (int u : g.neighbors(z)) {
                if (g.degree(u) != 2) continue;
                int w = -1;
                for (int nb : g.neighbors(u))
                    if (nb != z) w = nb;
                if (w < 0 || dist[w] != 1) continue;
                if (auto c = diam3_pendant_recipe(gb, v, z, u, w, dist)) return *c;
            }
        } else {
            if (Z.size() < 2) continue;
            if (auto c = diam3_largez_recipe(gb, v, X, Y, Z)) return *c;
        }
    }
    throw std::invalid_argument(
        "no eccentricity-3 vertex admits the requested layer configuration");
}

namespace {

// Local recoloring of the touched elements is not always enough (subdividing
// an optimally colored cycle needs both fresh colors spread globally), so the
// last resort is a full search capped at the old palette plus two, relabeled
// back into the caller's color ids.
TotalColoring recolor_with_budget(const Graph& g2, const std::set<int>& existing, int f1, int f2) {
    int cap = static_cast<int>(existing.size()) + 2;
    auto found = find_coloring_with_palette(g2, cap);
    if (!found) throw std::runtime_error("extension: no coloring within two fresh colors");
    found->normalize();
    std::vector<int> ids(existing.begin(), existing.end());
    ids.push_back(f1);
    ids.push_back(f2);
    for (int& x : found->vertex_colors) x = ids[x];
    for (int& x : found->edge_colors) x = ids[x];
    return *found;
}

}  // namespace

std::pair<Graph, TotalColoring> extend_coloring(const Graph& g, const TotalColoring& c,
                                                const GraphOp& op) {
    int n = g.vertex_count();
    req(n + 1 <= kMaxVertices, "extension would exceed 64 vertices");
    if (!verify_trc(g, c).valid) throw std::invalid_argument("input coloring is not valid");
    std::set<int> existing = used_colors(c);
    int f1 = *existing.rbegin() + 1;
    int f2 = f1 + 1;

    auto copy_onto = [&](const Graph& g2) {
        TotalColoring c2;
        c2.vertex_colors = c.vertex_colors;
        c2.vertex_colors.resize(n + 1, *existing.begin());
        c2.edge_colors.assign(g2.edge_count(), *existing.begin());
        for (const auto& [a, b] : g.edges())
            if (g2.has_edge(a, b))
                c2.edge_colors[g2.edge_index(a, b)] = c.edge_colors[g.edge_index(a, b)];
        return c2;
    };

    if (op.kind == GraphOp::Kind::AddPendant) {
        req(op.u >= 0 && op.u < n, "pendant attachment vertex out of range");
        Graph g2(n + 1);
        for (const auto& [a, b] : g.edges()) g2.add_edge(a, b);
        g2.add_edge(op.u, n);
        TotalColoring c2 = copy_onto(g2);
        int slot = g2.edge_index(op.u, n);
        int old_u = c.vertex_colors[op.u];

        auto profile = structural_profile(g);
        bool at_cut = std::find(profile.cut_vertices.begin(), profile.cut_vertices.end(), op.u) !=
                      profile.cut_vertices.end();
        std::vector<std::pair<int, int>> cands;  // (edge color, attachment vertex color)
        if (at_cut) {
            cands.emplace_back(f1, old_u);
            for (int ce : existing) cands.emplace_back(ce, f1);
        }
        cands.emplace_back(f1, f2);
        for (auto [e_color, u_color] : cands) {
            c2.edge_colors[slot] = e_color;
            c2.vertex_colors[op.u] = u_color;
            if (verify_trc(g2, c2).valid) return {g2, c2};
        }
        throw std::logic_error("pendant extension failed despite two fresh colors");
    }

    if (op.kind == GraphOp::Kind::Subdivide) {
        req(op.u >= 0 && op.u < n && op.v >= 0 && op.v < n && g.has_edge(op.u, op.v),
            "subdivision needs an existing edge");
        Graph g2(n + 1);
        for (const auto& [a, b] : g.edges())
            if (!((a == op.u && b == op.v) || (a == op.v && b == op.u))) g2.add_edge(a, b);
        g2.add_edge(op.u, n);
        g2.add_edge(n, op.v);
        TotalColoring c2 = copy_onto(g2);
        int su = g2.edge_index(op.u, n), sv = g2.edge_index(n, op.v);
        int old = c.edge_colors[g.edge_index(op.u, op.v)];

        auto try_one = [&](int eu, int ev, int w) -> bool {
            c2.edge_colors[su] = eu;
            c2.edge_colors[sv] = ev;
            c2.vertex_colors[n] = w;
            return verify_trc(g2, c2).valid;
        };
        if (try_one(old, f1, f2)) return {g2, c2};
        if (try_one(f1, old, f2)) return {g2, c2};
        // bounded local search over the three touched elements
        std::vector<int> wcands{f2, f1}, ecands{old, f1, f2};
        for (int ce : existing) wcands.push_back(ce);
        for (int ce : existing)
            if (ce != old) ecands.push_back(ce);
        int attempts = 0;
        for (int w : wcands)
            for (int eu : ecands)
                for (int ev : ecands) {
                    if (++attempts > 20000) goto subdivide_fallback;
                    if (try_one(eu, ev, w)) return {g2, c2};
                }
    subdivide_fallback:
        return {g2, recolor_with_budget(g2, existing, f1, f2)};
    }

    // SplitCutVertex
    req(op.u >= 0 && op.u < n, "split vertex out of range");
    req(op.move_mask != 0, "split needs a nonempty moved set");
    req((op.move_mask >> op.u & 1) == 0, "moved set cannot contain the split vertex");
    req(n >= 1 && (op.move_mask >> n) == 0, "moved set references vertices out of range");
    // moved set must be a union of whole components of g - u, and at least one
    // component must stay behind
    {
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (s == op.u || comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : g.neighbors(x)) {
                    if (y == op.u || comp[y] != -1) continue;
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
            }
            ++ncomp;
        }
        std::vector<char> moved(ncomp, 0), stayed(ncomp, 0);
        for (int x = 0; x < n; ++x) {
            if (x == op.u) continue;
            (op.move_mask >> x & 1 ? moved : stayed)[comp[x]] = 1;
        }
        bool any_stay = false;
        for (int i = 0; i < ncomp; ++i) {
            req(!(moved[i] && stayed[i]), "split must move whole components");
            any_stay = any_stay || stayed[i];
        }
        req(any_stay, "split must leave at least one component behind");
    }
    Graph g2(n + 1);
    for (const auto& [a, b] : g.edges()) {
        int aa = a, bb = b;
        if (aa == op.u && (op.move_mask >> bb & 1)) aa = n;
        if (bb == op.u && (op.move_mask >> aa & 1)) bb = n;
        g2.add_edge(aa, bb);
    }
    g2.add_edge(op.u, n);
    TotalColoring c2;
    c2.vertex_colors = c.vertex_colors;
    c2.vertex_colors.resize(n + 1, *existing.begin());
    c2.edge_colors.assign(g2.edge_count(), *existing.begin());
    for (const auto& [a, b] : g.edges()) {
        int aa = a, bb = b;
        if (aa == op.u && (op.move_mask >> bb & 1)) aa = n;
        if (bb == op.u && (op.move_mask >> aa & 1)) bb = n;
        c2.edge_colors[g2.edge_index(aa, bb)] = c.edge_colors[g.edge_index(a, b)];
    }
    int bridge = g2.edge_index(op.u, n);
    int old_u = c.vertex_colors[op.u];
    auto try_one = [&](int cu, int cw, int ce) -> bool {
        c2.vertex_colors[op.u] = cu;
        c2.vertex_colors[n] = cw;
        c2.edge_colors[bridge] = ce;
        return verify_trc(g2, c2).valid;
    };
    if (try_one(old_u, f2, f1)) return {g2, c2};
    if (try_one(f2, old_u, f1)) return {g2, c2};
    std::vector<int> ucands{old_u, f1, f2}, wcands{f2, f1}, ecands{f1, f2};
    for (int ce : existing) {
        if (ce != old_u) ucands.push_back(ce);
        wcands.push_back(ce);
        ecands.push_back(ce);
    }
    int attempts = 0;
    for (int cu : ucands)
        for (int cw : wcands)
            for (int ce : ecands) {
                if (++attempts > 20000) goto split_fallback;
                if (try_one(cu, cw, ce)) return {g2, c2};
            }
split_fallback:
    return {g2, recolor_with_budget(g2, existing, f1, f2)};
}

}  // namespace trc
