#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trc/coloring.hpp"
#include "trc/graph.hpp"

namespace trc {

struct SolveBudget {
    std::uint64_t node_cap = 50'000'000;
    std::chrono::milliseconds time_cap{120'000};
    // Re-check pair feasibility every this many assignments; 0 picks 1 for
    // n+m <= 16 and 4 otherwise.
    int feasibility_stride = 0;
    int threads = 1;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct LowerBoundReport {
    int value = 1;
    std::vector<std::string> reasons;
};

struct UpperBoundReport {
    int value = 0;
    TotalColoring certificate;  // verifier-checked before being returned
    std::string source;         // spanning-tree | unicyclic | bridgeless-diam2 | construction
};

struct BoundReport {
    LowerBoundReport lower;
    UpperBoundReport upper;
};

LowerBoundReport trc_lower_bound(const Graph& g, const StructuralProfile& p);
LowerBoundReport trc_lower_bound(const Graph& g);

UpperBoundReport trc_upper_bound(const Graph& g);

BoundReport trc_bounds(const Graph& g);

struct TrcResult {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
    // present whenever hi was realized by a concrete coloring; certificates
    // never make a claim below hi on interval results
    std::optional<TotalColoring> certificate;
    std::string method;  // theory | construction | search
    SolveStats stats;
};

struct SolveHints {
    int lo = -1;  // externally proven lower bound, used to skip hopeless palettes
};

// Exact search: iterate the palette size upward from the lower bound, with a
// restricted-growth backtracking search per size. On budget exhaustion the
// result is the interval [first undecided size, upper bound].
TrcResult solve_trc(const Graph& g, const SolveBudget& budget = {}, const SolveHints& hints = {});

// Single-palette satisfiability: a verifier-valid total coloring of g with at
// most k colors, or nullopt when the search space is exhausted without one.
// Throws std::runtime_error if the budget runs out first.
std::optional<TotalColoring> find_coloring_with_palette(const Graph& g, int k,
                                                        const SolveBudget& budget = {});

}  // namespace trc
