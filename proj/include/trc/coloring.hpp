#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trc/graph.hpp"

namespace trc {

// A coloring of every vertex and every edge. Edge colors follow the graph's
// edge_index order. Color ids are arbitrary ints until normalize().
struct TotalColoring {
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;

    int palette() const;  // number of distinct ids

    // Remap ids to 0..palette-1 in order of first appearance (vertices first).
    void normalize();
};

// True when the edges and the internal vertices of `path` carry pairwise
// distinct colors. Endpoint vertex colors never matter. Throws if `path` is
// not a simple path of the graph.
bool is_total_rainbow_path(const Graph& g, const TotalColoring& c, const std::vector<int>& path);

// First such path in DFS order with ascending neighbor exploration, so the
// result is deterministic. Colors repeating on a prefix prune the branch.
std::optional<std::vector<int>> find_total_rainbow_path(const Graph& g, const TotalColoring& c,
                                                        int u, int v);

struct VerifyReport {
    bool valid = false;
    // lexicographically least pair with no total-rainbow path, if any
    std::optional<std::pair<int, int>> witness_pair;
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> witness_paths;
};

VerifyReport verify_trc(const Graph& g, const TotalColoring& c, bool want_paths = false);

// Text format: line 1 "n m k", line 2 the n vertex colors, line 3 the m edge
// colors in edge_index order.
std::string coloring_to_text(const Graph& g, const TotalColoring& c);
TotalColoring coloring_from_text(const Graph& g, std::string_view text);

std::string to_dot(const Graph& g, const TotalColoring* c = nullptr);

}  // namespace trc
