#include "trc/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trc {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1," +
                                    std::to_string(kMaxVertices) + "], got " + std::to_string(n));
    adj_.assign(n, 0);
    edge_rank_.assign(static_cast<size_t>(n) * n, -1);
}

void Graph::check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    if ((adj_[u] >> v) & 1u) return;
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    rebuild_edges();
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("no edge to remove");
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
    rebuild_edges();
}

void Graph::rebuild_edges() {
    edges_.clear();
    std::fill(edge_rank_.begin(), edge_rank_.end(), std::int16_t{-1});
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[u] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            edge_rank_[static_cast<size_t>(u) * n_ + v] = static_cast<std::int16_t>(edges_.size());
            edge_rank_[static_cast<size_t>(v) * n_ + u] = static_cast<std::int16_t>(edges_.size());
            edges_.emplace_back(u, v);
        }
    }
}

int Graph::degree(int u) const {
    check_vertex(u);
    return std::popcount(adj_[u]);
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    std::uint64_t rest = adj_[u];
    while (rest) {
        out.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    return out;
}

int Graph::edge_index(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge_index of a non-edge");
    return edge_rank_[static_cast<size_t>(u) * n_ + v];
}

Graph Graph::complement() const {
    Graph c(n_);
    std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (int u = 0; u < n_; ++u)
        c.adj_[u] = all & ~adj_[u] & ~(std::uint64_t{1} << u);
    c.rebuild_edges();
    return c;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t rest = frontier;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            next |= adj_[u];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return std::popcount(seen) == n_;
}

std::vector<int> Graph::distances_from(int s) const {
    check_vertex(s);
    std::vector<int> dist(n_, kUnreachable);
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
        std::uint64_t rest = frontier;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            dist[u] = d;
        }
        std::uint64_t next = 0;
        rest = frontier;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            next |= adj_[u];
        }
        frontier = next & ~seen;
        seen |= frontier;
        ++d;
    }
    return dist;
}

// ---------------------------------------------------------------- graph6

namespace {

int g6_value(char c) {
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range");
    return v;
}

}  // namespace

Graph Graph::from_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    size_t pos = 0;
    long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw std::invalid_argument("graph6: order beyond 258047 unsupported");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = (long(g6_value(line[1])) << 12) | (long(g6_value(line[2])) << 6) | g6_value(line[3]);
        pos = 4;
    } else {
        n = g6_value(line[0]);
        pos = 1;
    }
    if (n < 1) throw std::invalid_argument("graph6: order must be positive");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds supported cap " +
                                    std::to_string(kMaxVertices));

    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (static_cast<long>(line.size() - pos) != need)
        throw std::invalid_argument("graph6: expected " + std::to_string(need) + " data bytes, got " +
                                    std::to_string(line.size() - pos));
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int word = g6_value(line[pos + bit / 6]);
            if ((word >> (5 - bit % 6)) & 1) {
                g.adj_[u] |= std::uint64_t{1} << v;
                g.adj_[v] |= std::uint64_t{1} << u;
            }
        }
    }
    // padding bits must be zero
    for (; bit < need * 6; ++bit) {
        int word = g6_value(line[pos + bit / 6]);
        if ((word >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    g.rebuild_edges();
    return g;
}

std::string Graph::to_graph6() const {
    std::string out;
    if (n_ <= 62) {
        out.push_back(static_cast<char>(n_ + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n_ & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n_; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (((adj_[u] >> v) & 1u) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

// ---------------------------------------------------------------- edge list

Graph Graph::from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("edge list: bad vertex count");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated at edge " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
        if (g.adj_[u] >> v & 1) throw std::invalid_argument("edge list: duplicate edge");
        g.adj_[u] |= std::uint64_t{1} << v;
        g.adj_[v] |= std::uint64_t{1} << u;
    }
    long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing data");
    g.rebuild_edges();
    return g;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------- profile

namespace {

struct CutSearch {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<bool> is_cut;
    std::vector<std::pair<int, int>> bridges;
    int timer = 0;

    explicit CutSearch(const Graph& gg)
        : g(gg), disc(gg.vertex_count(), -1), low(gg.vertex_count(), 0), is_cut(gg.vertex_count(), false) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (v == parent) {
                parent = -2;  // skip the tree edge once; parallel edges cannot occur
                continue;
            }
            if (disc[v] == -1) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridges.emplace_back(std::min(u, v), std::max(u, v));
                if (parent != -1 && low[v] >= disc[u]) is_cut[u] = true;
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) is_cut[u] = true;
    }
};

// Longest-cycle backtracking. Each cycle is explored from its minimum vertex
// only; prunes on the count of still-usable vertices.
struct CycleSearch {
    const Graph& g;
    std::uint64_t budget;
    int best = 0;
    bool exact = true;

    CycleSearch(const Graph& gg, std::uint64_t cap) : g(gg), budget(cap) {}

    void run() {
        int n = g.vertex_count();
        for (int s = 0; s < n && exact; ++s) {
            if (best == n) break;
            std::uint64_t allowed = ~std::uint64_t{0} << s;
            dfs(s, s, std::uint64_t{1} << s, 1, allowed);
        }
    }

    void dfs(int s, int u, std::uint64_t visited, int len, std::uint64_t allowed) {
        if (!exact) return;
        if (budget == 0) {
            exact = false;
            return;
        }
        --budget;
        std::uint64_t cand = g.adjacency_mask(u) & allowed & ~visited;
        if (len >= 3 && (g.adjacency_mask(u) >> s & 1)) best = std::max(best, len);
        // crude but effective: cannot beat best with the vertices still open
        if (len + std::popcount(allowed & ~visited) <= best) return;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            dfs(s, v, visited | (std::uint64_t{1} << v), len + 1, allowed);
            if (!exact) return;
        }
    }
};

}  // namespace

StructuralProfile structural_profile(const Graph& g, std::uint64_t cycle_node_cap) {
    StructuralProfile p;
    p.n = g.vertex_count();
    p.m = g.edge_count();
    p.degrees.resize(p.n);
    for (int u = 0; u < p.n; ++u) p.degrees[u] = g.degree(u);
    p.leaves = static_cast<int>(std::count(p.degrees.begin(), p.degrees.end(), 1));
    p.inner = static_cast<int>(std::count_if(p.degrees.begin(), p.degrees.end(), [](int d) { return d >= 2; }));
    p.connected = g.connected();
    p.complete = p.m == p.n * (p.n - 1) / 2;
    p.tree = p.connected && p.m == p.n - 1;
    p.unicyclic = p.connected && p.m == p.n;

    p.eccentricities.assign(p.n, kUnreachable);
    p.diameter = 0;
    p.radius = kUnreachable;
    for (int u = 0; u < p.n; ++u) {
        auto dist = g.distances_from(u);
        int ecc = *std::max_element(dist.begin(), dist.end());
        p.eccentricities[u] = ecc;
        p.diameter = std::max(p.diameter, ecc);
        p.radius = std::min(p.radius, ecc);
    }

    // bipartite check via BFS 2-coloring over every component
    {
        std::vector<int> side(p.n, -1);
        p.bipartite = true;
        for (int s = 0; s < p.n && p.bipartite; ++s) {
            if (side[s] != -1) continue;
            side[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty() && p.bipartite) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.neighbors(u)) {
                    if (side[v] == -1) {
                        side[v] = side[u] ^ 1;
                        stack.push_back(v);
                    } else if (side[v] == side[u]) {
                        p.bipartite = false;
                        break;
                    }
                }
            }
        }
    }

    CutSearch cs(g);
    for (int u = 0; u < p.n; ++u)
        if (cs.disc[u] == -1) cs.dfs(u, -1);
    for (int u = 0; u < p.n; ++u)
        if (cs.is_cut[u]) p.cut_vertices.push_back(u);
    std::sort(cs.bridges.begin(), cs.bridges.end());
    p.bridges = cs.bridges;
    p.t = (p.n <= 2) ? 0 : static_cast<int>(p.cut_vertices.size() + p.bridges.size());
    p.two_connected = p.connected && p.n >= 3 && p.cut_vertices.empty();
    p.bridgeless = p.bridges.empty();

    CycleSearch search(g, cycle_node_cap);
    search.run();
    p.circumference = search.best;
    p.circumference_exact = search.exact;
    return p;
}

// ---------------------------------------------------------------- unicyclic

int UnicyclicDecomposition::nontrivial_count() const {
    return static_cast<int>(std::count(nontrivial.begin(), nontrivial.end(), true));
}

int UnicyclicDecomposition::total_leaves() const {
    return std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0);
}

std::optional<UnicyclicDecomposition> unicyclic_decompose(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() != n || !g.connected()) return std::nullopt;

    // peel leaves; what survives is the unique cycle
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = g.degree(u);
    std::vector<int> queue;
    for (int u = 0; u < n; ++u)
        if (deg[u] == 1) queue.push_back(u);
    std::vector<bool> removed(n, false);
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        removed[u] = true;
        for (int v : g.neighbors(u))
            if (!removed[v] && --deg[v] == 1) queue.push_back(v);
    }

    UnicyclicDecomposition d;
    int start = -1;
    for (int u = 0; u < n; ++u)
        if (!removed[u]) {
            start = u;
            break;
        }
    std::vector<int> cyc_neighbors;
    for (int v : g.neighbors(start))
        if (!removed[v]) cyc_neighbors.push_back(v);
    d.cycle.push_back(start);
    int prev = start, cur = cyc_neighbors.front();  // neighbors() is ascending
    while (cur != start) {
        d.cycle.push_back(cur);
        int next = -1;
        for (int v : g.neighbors(cur))
            if (!removed[v] && v != prev) {
                next = v;
                break;
            }
        prev = cur;
        cur = next;
    }

    int ell = static_cast<int>(d.cycle.size());
    std::vector<int> owner(n, -1);
    for (int i = 0; i < ell; ++i) owner[d.cycle[i]] = i;
    // hang each removed vertex off its cycle anchor
    std::vector<int> order(d.cycle.begin(), d.cycle.end());
    for (size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        for (int v : g.neighbors(u))
            if (owner[v] == -1) {
                owner[v] = owner[u];
                order.push_back(v);
            }
    }
    d.trees.assign(ell, {});
    d.leaf_counts.assign(ell, 0);
    for (int u = 0; u < n; ++u) {
        d.trees[owner[u]].push_back(u);
        if (g.degree(u) == 1) ++d.leaf_counts[owner[u]];
    }
    d.nontrivial.resize(ell);
    for (int i = 0; i < ell; ++i) d.nontrivial[i] = d.trees[i].size() > 1;
    return d;
}

std::uint64_t k_step_neighborhood(const Graph& g, std::uint64_t sources, int k) {
    if (sources == 0) throw std::invalid_argument("k_step_neighborhood: empty source set");
    if (k < 0) throw std::invalid_argument("k_step_neighborhood: negative k");
    std::uint64_t seen = sources, shell = sources;
    for (int step = 0; step < k; ++step) {
        std::uint64_t next = 0, rest = shell;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            next |= g.adjacency_mask(u);
        }
        shell = next & ~seen;
        seen |= shell;
        if (!shell) break;
    }
    return shell;
}

bool has_spanning_double_star(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (auto [a, b] : g.edges()) {
        std::uint64_t covered = g.adjacency_mask(a) | g.adjacency_mask(b) |
                                (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        if ((covered & all) == all) return true;
    }
    return false;
}

bool is_double_star(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4 || g.edge_count() != n - 1 || !g.connected()) return false;
    std::vector<int> centers;
    for (int u = 0; u < n; ++u)
        if (g.degree(u) >= 2) centers.push_back(u);
    return centers.size() == 2 && g.has_edge(centers[0], centers[1]);
}

bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(n), db(n);
    for (int u = 0; u < n; ++u) {
        da[u] = a.degree(u);
        db[u] = b.degree(u);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    // map vertex u of a to some vertex of b with equal degree, backtracking
    auto place = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || db[w] != da[u]) continue;
            bool ok = true;
            for (int prior = 0; prior < u && ok; ++prior)
                if (a.has_edge(prior, u) != b.has_edge(map[prior], w)) ok = false;
            if (!ok) continue;
            map[u] = w;
            used[w] = true;
            if (self(self, u + 1)) return true;
            used[w] = false;
            map[u] = -1;
        }
        return false;
    };
    return place(place, 0);
}

}  // namespace trc
