#pragma once

#include <string>

#include "trc/graph.hpp"
#include "trc/solver.hpp"

namespace trc {

// Structural family of a connected graph, following the taxonomy the
// characterization results are stated in. One cycle: the cycle-with-trees
// patterns keyed by cycle length, which trees are nontrivial, leaf count and
// root adjacency. More cycles: keyed by circumference and how close the
// diameter sits to n.
struct CoarseClass {
    enum class Tag {
        Complete,
        Path,
        Tree,         // j >= 3 leaves
        Cycle,
        Bell,         // unicyclic, single nontrivial tree and it is a hung path
        Unicyclic,    // unicyclic non-cycle non-bell
        SpecialH,     // one of the four fixed 6-vertex graphs (special 1..4),
                      // or the chorded-C4 diameter family (special 6)
        Multicyclic,  // at least two cycles
        Other,
    };
    Tag tag = Tag::Other;
    int ell = 0;         // cycle length / circumference where meaningful
    int leaves = 0;      // pendant vertex count j where meaningful
    int nontrivial = 0;  // nontrivial trees in the cycle decomposition
    // root-adjacency pattern of the distinguishing tree pair:
    // "", "adjacent", "nonadjacent", "trivial-adjacent", "trivial-nonadjacent"
    std::string pattern;
    int special = 0;      // 1..4 fixed graphs, 6 for the chorded-C4 family
    int diam_offset = 0;  // nonzero when diam(G) == n - diam_offset is the classifying relation

    std::string label() const;  // e.g. "unicyclic(l=4,nt=2,nonadjacent,j=2)"
};

struct TheoryValue {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
};

struct ClassReport {
    CoarseClass coarse;
    // True when the only remaining discriminator between neighboring trc
    // values is a subclass this library does not decide structurally.
    bool primed_ambiguity = false;
    TheoryValue trc_theory;
    std::string theorem_tag;  // which rule produced the value or interval
};

// Structural recognition plus formula evaluation. Requires a connected graph.
ClassReport classify(const Graph& g);

// Shorthand for classify(g).trc_theory.
TheoryValue trc_by_theory(const Graph& g);

// Pipeline: exact theory value if available, otherwise the intersection of
// the theory interval with a search run seeded by the theory bounds. The
// method tag records the path taken ("theory", "theory+search", "search").
TrcResult compute_trc(const Graph& g, const SolveBudget& budget = {});

// One line: "class=...; trc=... (method); bounds=[lo,hi]"
std::string report_line(const ClassReport& rep, const TrcResult& res);

}  // namespace trc
