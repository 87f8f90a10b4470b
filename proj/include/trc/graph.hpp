#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trc {

// Hard cap so an adjacency row fits in one machine word.
inline constexpr int kMaxVertices = 64;

// Distance sentinel for unreachable pairs.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // graph6 per the nauty formats spec. Accepts an optional ">>graph6<<" prefix.
    static Graph from_graph6(std::string_view line);
    std::string to_graph6() const;

    // Plain text: first line "n m", then one "u v" line per edge, 0-indexed.
    static Graph from_edge_list(std::string_view text);
    std::string to_edge_list() const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t adjacency_mask(int u) const { return adj_[u]; }
    int degree(int u) const;
    std::vector<int> neighbors(int u) const;

    // Lexicographic rank of edge {u,v} among all edges; the inverse of edge_at.
    int edge_index(int u, int v) const;
    std::pair<int, int> edge_at(int idx) const { return edges_[idx]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    Graph complement() const;
    bool connected() const;

    // Single-source distances; kUnreachable where there is no path.
    std::vector<int> distances_from(int s) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int u) const;
    void rebuild_edges();

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::int16_t> edge_rank_;  // n*n lookup, -1 for non-edges
};

struct StructuralProfile {
    int n = 0;
    int m = 0;
    std::vector<int> degrees;
    std::vector<int> eccentricities;
    int diameter = 0;
    int radius = 0;
    bool connected = false;
    bool complete = false;
    bool tree = false;
    bool unicyclic = false;  // connected with m == n
    bool bipartite = false;
    int leaves = 0;  // degree-1 vertices
    int inner = 0;   // degree >= 2 vertices (n' in the bound formulas)
    std::vector<int> cut_vertices;
    std::vector<std::pair<int, int>> bridges;
    int t = 0;  // |cut vertices| + |bridges|, forced 0 for n <= 2
    bool two_connected = false;
    bool bridgeless = false;
    int circumference = 0;  // 0 for forests
    // When false the search ran out of budget and circumference is only a
    // proven lower bound ("unknown >= circumference").
    bool circumference_exact = true;
};

inline constexpr std::uint64_t kDefaultCycleNodeCap = 20'000'000;

StructuralProfile structural_profile(const Graph& g,
                                     std::uint64_t cycle_node_cap = kDefaultCycleNodeCap);

struct UnicyclicDecomposition {
    // Cycle in canonical orientation: starts at the lowest-id cycle vertex and
    // proceeds toward its lower-id cycle neighbor.
    std::vector<int> cycle;
    // trees[i] = vertices of the tree hanging off cycle[i], including cycle[i].
    std::vector<std::vector<int>> trees;
    std::vector<bool> nontrivial;
    std::vector<int> leaf_counts;  // pendant vertices of the graph inside each tree

    int ell() const { return static_cast<int>(cycle.size()); }
    int nontrivial_count() const;
    int total_leaves() const;
};

// Empty unless g is connected with exactly one cycle (m == n).
std::optional<UnicyclicDecomposition> unicyclic_decompose(const Graph& g);

// Vertices at BFS distance exactly k from the source set.
std::uint64_t k_step_neighborhood(const Graph& g, std::uint64_t sources, int k);

// True when some edge {a,b} dominates every other vertex, i.e. the graph has a
// spanning double star.
bool has_spanning_double_star(const Graph& g);

// Tree with exactly two adjacent non-leaf vertices.
bool is_double_star(const Graph& g);

// Brute-force isomorphism; intended for small graphs (degree-prefiltered
// permutation search).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace trc
