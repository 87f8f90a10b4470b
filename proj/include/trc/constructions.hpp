#pragma once

#include <optional>
#include <utility>

#include "trc/coloring.hpp"
#include "trc/graph.hpp"
#include "trc/solver.hpp"

namespace trc {

// Optimal total-rainbow coloring of the cycle C_n (canonical labeling: vertex i
// adjacent to (i+1) mod n).  Palette size follows the closed form for cycles:
// small n from a table established by search, n >= 13 from a rotational pattern.
// Results are memoized per process.
TotalColoring color_cycle(int n);

// Palette size color_cycle(n) produces, without constructing anything.
int cycle_palette_size(int n);

// Optimal coloring of the bell graph B_ell on n vertices (cycle of length ell
// plus a pendant path of n - ell vertices attached at cycle vertex 0; labeling
// matches generate("bell:ell,tail")).  Requires 3 <= ell < n.
TotalColoring color_bell(int ell, int n);

// Palette size color_bell produces: 2n - ell - 2 when ell is in {3,5,7,9} or
// (ell odd >= 11 and the tail has at least 2 vertices), else 2n - ell - 1.
int bell_palette_size(int ell, int n);

// Incremental coloring of an arbitrary connected unicyclic graph: colors the
// cycle first, then attaches pendant vertices one at a time, reusing existing
// colors when the verifier allows it and spending at most two fresh colors per
// vertex otherwise.  Always verifier-valid.
TotalColoring color_unicyclic(const Graph& g);

// 3-coloring of the complement of the path P_n, n >= 5, in the canonical
// labeling of generate("path:n") (so the returned coloring applies to
// generate("path:n").complement()).
TotalColoring color_complement_of_path(int n);

// 3-coloring of the complement of the spider S(k,l,m) (three legs of k >= l >=
// m >= 1 path vertices hanging off a center; k >= 2 and k+l+m+1 >= 6).  Applies
// to generate("spider:k,l,m").complement().
TotalColoring color_complement_of_spider(int k, int l, int m);

// 7-coloring of the complement of gbar when diam(gbar) > 3, built from the
// distance layers of a max-eccentricity vertex of gbar.  The returned coloring
// applies to gbar.complement().
TotalColoring color_via_distance_layers(const Graph& gbar);

// Strong total-rainbow coloring of K_{m,n}, 2 <= m <= n, in the canonical
// labeling of generate("kbip:m,n"): small-side vertices share one color, big
// side another, edges carry base-q digit colors where q is the least integer
// with q^m >= n.  Palette q + 2.  Throws for q > 6 (outside the supported
// range; never reached at desk scale).
TotalColoring color_complete_bipartite_strong(int m, int n);

// The explicit coloring recipe for 2-connected diameter-2 graphs in which some
// vertex v sees an independent non-neighborhood (no edges among vertices at
// distance 2 from v).  Tries every eligible v and returns the first coloring
// that verifies, or nullopt if no vertex qualifies.  Palette may exceed n - 1
// on small graphs; callers that need the n - 1 guarantee use
// color_two_connected_diam2.
std::optional<TotalColoring> two_connected_diam2_recipe(const Graph& g);

// Coloring of a 2-connected diameter-2 graph with at most n - 1 colors: the
// explicit recipe when it applies and stays under n - 1, otherwise an exact
// search capped at n - 1.  Throws if the search exhausts its budget.
TotalColoring color_two_connected_diam2(const Graph& g, const SolveBudget& budget = {});

enum class Diam3Subcase {
    PendantBridge,  // |Z| = 1 and the single far vertex hangs off a degree-2 neighbor
    LargeZ,         // |Z| >= 2
};

// Coloring of the complement of a 2-connected graph g with diam(g) = 3 and
// diam(complement) = 2, from the distance layers X, Y, Z of an eccentricity-3
// vertex.  PendantBridge uses a 7-coloring, LargeZ an 11-coloring built around
// a strong bipartite coloring of complement[X, Z].  The returned coloring
// applies to g.complement().
TotalColoring color_complement_of_diam3(const Graph& g, Diam3Subcase subcase);

// Single-step graph operations that extend a colored graph while spending at
// most two fresh colors.
struct GraphOp {
    enum class Kind {
        AddPendant,      // new leaf attached at vertex u
        Subdivide,       // edge (u, v) replaced by u - w - v through new vertex w
        SplitCutVertex,  // cut vertex u split in two; components in move_mask
                         // reattach to the clone, which joins u by a new edge
    };
    Kind kind;
    int u = -1;
    int v = -1;
    std::uint64_t move_mask = 0;
};

// Applies op to (g, c) and returns the extended graph with a verifier-valid
// coloring using at most two colors outside c's palette.  The new vertex is
// labeled g.n().  Throws std::invalid_argument on malformed ops and
// std::runtime_error if no valid extension within the fresh-color budget
// exists (not expected to occur).
std::pair<Graph, TotalColoring> extend_coloring(const Graph& g, const TotalColoring& c,
                                                const GraphOp& op);

}  // namespace trc
