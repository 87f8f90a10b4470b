#include "trc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "internal.hpp"

namespace trc {

namespace detail {

BfsTree bfs_tree(const Graph& g, int root) {
    int n = g.vertex_count();
    BfsTree t;
    t.parent.assign(n, -1);
    t.layer.assign(n, -1);
    t.layer[root] = 0;
    t.order.push_back(root);
    for (size_t h = 0; h < t.order.size(); ++h) {
        int u = t.order[h];
        for (int v : g.neighbors(u)) {
            if (t.layer[v] != -1) continue;
            t.layer[v] = t.layer[u] + 1;
            t.parent[v] = u;
            t.order.push_back(v);
            t.edges.emplace_back(u, v);
        }
    }
    if (static_cast<int>(t.order.size()) != n)
        throw std::invalid_argument("bfs_tree requires a connected graph");
    return t;
}

}  // namespace detail

LowerBoundReport trc_lower_bound(const Graph&, const StructuralProfile& p) {
    if (!p.connected) throw std::invalid_argument("lower bound requires a connected graph");
    LowerBoundReport r;
    r.value = 1;
    r.reasons.push_back("trivial(1)");
    if (!p.complete && 3 > r.value) {
        r.value = 3;
        r.reasons.push_back("noncomplete(3)");
    }
    if (p.diameter >= 1) {
        int d = 2 * p.diameter - 1;
        if (d > r.value) {
            r.value = d;
            r.reasons.push_back("diameter(2*" + std::to_string(p.diameter) + "-1=" + std::to_string(d) + ")");
        }
    }
    if (p.t > r.value) {
        r.value = p.t;
        r.reasons.push_back("cut-elements(t=" + std::to_string(p.t) + ")");
    }
    return r;
}

LowerBoundReport trc_lower_bound(const Graph& g) {
    return trc_lower_bound(g, structural_profile(g));
}

BoundReport trc_bounds(const Graph& g) {
    return {trc_lower_bound(g), trc_upper_bound(g)};
}

// ------------------------------------------------------------------ search

namespace {

struct BudgetOut {};

class Searcher {
public:
    Searcher(const Graph& g, int k, int stride)
        : g_(g), k_(k), stride_(stride), n_(g.vertex_count()) {
        auto tree = detail::bfs_tree(g_, 0);
        // assignment order: tree edges, then chords, then internal vertices by
        // BFS layer; degree-1 vertices are never internal to a path and are
        // colored after the fact
        std::vector<bool> in_tree(g_.edge_count(), false);
        for (auto [u, v] : tree.edges) {
            elems_.push_back(~g_.edge_index(u, v));
            in_tree[g_.edge_index(u, v)] = true;
        }
        for (int e = 0; e < g_.edge_count(); ++e)
            if (!in_tree[e]) elems_.push_back(~e);
        std::vector<int> internal;
        for (int v : tree.order)
            if (g_.degree(v) >= 2) internal.push_back(v);
        for (int v : internal) elems_.push_back(v);

        pos_of_edge_.assign(g_.edge_count(), -1);
        pos_of_vertex_.assign(n_, -1);
        for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
            int e = elems_[i];
            if (e < 0)
                pos_of_edge_[~e] = i;
            else
                pos_of_vertex_[e] = i;
        }
        color_.assign(elems_.size(), -1);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!g_.has_edge(u, v)) pairs_.emplace_back(u, v);
    }

    // prefix: force the first prefix.size() choices (used by the parallel fan-out)
    bool run(std::uint64_t node_cap, std::chrono::steady_clock::time_point deadline,
             std::atomic<std::uint64_t>* shared_nodes, std::atomic<bool>* stop,
             const std::vector<int>& prefix) {
        node_cap_ = node_cap;
        deadline_ = deadline;
        shared_nodes_ = shared_nodes;
        stop_ = stop;
        int max_used = -1;
        for (size_t i = 0; i < prefix.size(); ++i) {
            color_[i] = prefix[i];
            max_used = std::max(max_used, prefix[i]);
        }
        if (!prefix.empty() && !feasible(static_cast<int>(prefix.size()))) return false;
        return dfs(static_cast<int>(prefix.size()), max_used);
    }

    TotalColoring extract() const {
        TotalColoring c;
        c.vertex_colors.assign(n_, 0);
        c.edge_colors.assign(g_.edge_count(), 0);
        for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
            int e = elems_[i];
            if (e < 0)
                c.edge_colors[~e] = color_[i];
            else
                c.vertex_colors[e] = color_[i];
        }
        return c;
    }

    // RGS-consistent prefixes of the given depth, in search order
    std::vector<std::vector<int>> prefixes(int depth) const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int max_used) -> void {
            if (static_cast<int>(cur.size()) == depth) {
                out.push_back(cur);
                return;
            }
            int limit = std::min(max_used + 1, k_ - 1);
            for (int c = 0; c <= limit; ++c) {
                cur.push_back(c);
                self(self, std::max(max_used, c));
                cur.pop_back();
            }
        };
        if (depth > static_cast<int>(elems_.size())) depth = static_cast<int>(elems_.size());
        rec(rec, -1);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }
    int element_count() const { return static_cast<int>(elems_.size()); }

private:
    bool dfs(int pos, int max_used) {
        if (pos == static_cast<int>(elems_.size())) return feasible(pos);
        int limit = std::min(max_used + 1, k_ - 1);
        for (int c = 0; c <= limit; ++c) {
            color_[pos] = c;
            bump();
            int next = pos + 1;
            if ((next % stride_ == 0 || next == static_cast<int>(elems_.size())) && !feasible(next))
                continue;
            if (dfs(next, std::max(max_used, c))) return true;
        }
        color_[pos] = -1;
        return false;
    }

    void bump() {
        ++nodes_;
        if ((nodes_ & 0xfff) == 0) {
            if (stop_ && stop_->load(std::memory_order_relaxed)) throw BudgetOut{};
            std::uint64_t total = nodes_;
            if (shared_nodes_) total = shared_nodes_->fetch_add(0x1000, std::memory_order_relaxed) + 0x1000;
            if (total >= node_cap_ || std::chrono::steady_clock::now() >= deadline_) throw BudgetOut{};
        }
    }

    // Is there, for every required pair, a candidate path whose already-colored
    // elements are pairwise distinct? Unassigned elements act as wildcards.
    bool feasible(int assigned) {
        assigned_ = assigned;
        for (auto [u, v] : pairs_)
            if (!pair_ok(u, v)) return false;
        return true;
    }

    bool pair_ok(int u, int v) {
        target_ = v;
        return probe(u, std::uint64_t{1} << u, 0, 0);
    }

    bool probe(int cur, std::uint64_t visited, std::uint64_t used, int edges) {
        if (2 * (edges + 1) - 1 > k_) return false;
        std::uint64_t rest = g_.adjacency_mask(cur) & ~visited;
        if (rest >> target_ & 1) {
            int p = pos_of_edge_[g_.edge_index(cur, target_)];
            int ec = (p < assigned_) ? color_[p] : -1;
            if (ec < 0 || !(used >> ec & 1)) return true;
        }
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (w == target_) continue;
            int p = pos_of_edge_[g_.edge_index(cur, w)];
            int ec = (p < assigned_) ? color_[p] : -1;
            std::uint64_t next_used = used;
            if (ec >= 0) {
                if (used >> ec & 1) continue;
                next_used |= std::uint64_t{1} << ec;
            }
            int vp = pos_of_vertex_[w];
            int vc = (vp >= 0 && vp < assigned_) ? color_[vp] : -1;
            if (vc >= 0) {
                if (next_used >> vc & 1) continue;
                next_used |= std::uint64_t{1} << vc;
            }
            if (probe(w, visited | (std::uint64_t{1} << w), next_used, edges + 1)) return true;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int stride_;
    int n_;
    std::vector<int> elems_;  // ~edge_index for edges, vertex id for vertices
    std::vector<int> pos_of_edge_, pos_of_vertex_;
    std::vector<int> color_;
    std::vector<std::pair<int, int>> pairs_;
    int assigned_ = 0;
    int target_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t node_cap_ = ~std::uint64_t{0};
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t>* shared_nodes_ = nullptr;
    std::atomic<bool>* stop_ = nullptr;
};

// outcome of one palette size
enum class KStatus { Found, Exhausted, BudgetOut };

struct KOutcome {
    KStatus status;
    TotalColoring coloring;
};

KOutcome try_palette(const Graph& g, int k, const SolveBudget& budget, SolveStats& stats,
                     std::chrono::steady_clock::time_point deadline) {
    int stride = budget.feasibility_stride;
    if (stride <= 0) stride = (g.vertex_count() + g.edge_count() <= 16) ? 1 : 4;
    if (stats.nodes >= budget.node_cap) return {KStatus::BudgetOut, {}};
    std::uint64_t cap = budget.node_cap - stats.nodes;  // node budget spans all palette sizes

    if (budget.threads <= 1) {
        Searcher s(g, k, stride);
        try {
            bool found = s.run(cap, deadline, nullptr, nullptr, {});
            stats.nodes += s.nodes();
            if (!found) return {KStatus::Exhausted, {}};
            auto coloring = s.extract();
            // color the skipped degree-1 vertices with the first color
            return {KStatus::Found, coloring};
        } catch (const BudgetOut&) {
            stats.nodes += s.nodes();
            return {KStatus::BudgetOut, {}};
        }
    }

    // parallel fan-out over the first few restricted-growth choices
    Searcher probe(g, k, stride);
    int depth = 0;
    size_t want = static_cast<size_t>(budget.threads) * 4;
    while (depth < probe.element_count() && probe.prefixes(depth).size() < want) ++depth;
    auto prefixes = probe.prefixes(depth);

    std::atomic<std::uint64_t> shared_nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<size_t> next{0};
    std::atomic<bool> budget_out{false};
    std::vector<std::optional<TotalColoring>> results(prefixes.size());
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= prefixes.size() || stop.load()) return;
            Searcher s(g, k, stride);
            try {
                if (s.run(cap, deadline, &shared_nodes, &stop, prefixes[i])) {
                    results[i] = s.extract();
                    stop.store(true);
                }
            } catch (const BudgetOut&) {
                if (!stop.load()) budget_out.store(true);
                stop.store(true);
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < budget.threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    stats.nodes += shared_nodes.load();
    for (auto& r : results)
        if (r) return {KStatus::Found, *r};
    if (budget_out.load()) return {KStatus::BudgetOut, {}};
    return {KStatus::Exhausted, {}};
}

}  // namespace

std::optional<TotalColoring> find_coloring_with_palette(const Graph& g, int k,
                                                        const SolveBudget& budget) {
    if (k < 1 || k > 64) throw std::invalid_argument("palette size out of range");
    if (!g.connected()) throw std::invalid_argument("palette search requires a connected graph");
    if (g.vertex_count() == 1) return TotalColoring{{0}, {}};
    auto deadline = std::chrono::steady_clock::now() + budget.time_cap;
    SolveStats stats;
    auto out = try_palette(g, k, budget, stats, deadline);
    if (out.status == KStatus::Found) {
        if (!verify_trc(g, out.coloring).valid)
            throw std::logic_error("search produced an invalid certificate");
        return out.coloring;
    }
    if (out.status == KStatus::BudgetOut) throw std::runtime_error("palette search budget exhausted");
    return std::nullopt;
}

TrcResult solve_trc(const Graph& g, const SolveBudget& budget, const SolveHints& hints) {
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + budget.time_cap;
    auto profile = structural_profile(g);
    if (!profile.connected) throw std::invalid_argument("solve_trc requires a connected graph");

    TrcResult res;
    if (g.vertex_count() == 1) {
        res.lo = res.hi = 1;
        res.certificate = TotalColoring{{0}, {}};
        res.method = "search";
        return res;
    }

    auto lower = trc_lower_bound(g, profile);
    auto upper = trc_upper_bound(g);
    int lb = std::max(lower.value, hints.lo);
    int ub = upper.value;
    if (lb > ub)
        throw std::logic_error("inconsistent bounds: lower " + std::to_string(lb) + " above upper " +
                               std::to_string(ub));
    if (ub > 64) throw std::invalid_argument("palette beyond 64 colors unsupported by the search");

    for (int k = lb; k < ub; ++k) {
        auto out = try_palette(g, k, budget, res.stats, deadline);
        if (out.status == KStatus::Found) {
            if (!verify_trc(g, out.coloring).valid)
                throw std::logic_error("search produced an invalid certificate");
            res.lo = res.hi = k;
            res.certificate = std::move(out.coloring);
            res.method = "search";
            res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
        if (out.status == KStatus::BudgetOut) {
            res.lo = k;
            res.hi = ub;
            res.certificate = upper.certificate;
            res.method = "search";
            res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
    }
    res.lo = res.hi = ub;
    res.certificate = upper.certificate;
    res.method = "construction";
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace trc
