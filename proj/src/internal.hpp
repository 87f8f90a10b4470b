#pragma once

// Shared helpers for the implementation files; not part of the public headers.

#include <optional>
#include <vector>

#include "trc/graph.hpp"

namespace trc::detail {

struct BfsTree {
    std::vector<int> parent;                  // -1 at the root
    std::vector<int> layer;
    std::vector<int> order;                   // discovery order, root first
    std::vector<std::pair<int, int>> edges;   // (parent, child) in discovery order
};

// BFS from `root` with ascending neighbor exploration; requires connectivity.
BfsTree bfs_tree(const Graph& g, int root = 0);

// Walk of the pendant path hanging off cycle position idx (root first), or
// nullopt if that tree is not a bare path.
std::optional<std::vector<int>> tail_walk(const Graph& g, const UnicyclicDecomposition& dec,
                                          int idx);

}  // namespace trc::detail
