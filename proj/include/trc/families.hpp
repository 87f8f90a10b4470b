#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trc/graph.hpp"

namespace trc {

// Families used by the generators and the colorers. The text form is
// "name:p1,p2,..." e.g. "path:7", "bell:11,3", "spider:2,2,1", "h4".
struct FamilySpec {
    enum class Kind {
        Path,          // path:n
        Cycle,         // cycle:n
        Complete,      // complete:n
        Bipartite,     // kbip:m,n  (sides m and n)
        Star,          // star:n    (n vertices total)
        DoubleStar,    // doublestar:a,b  (a and b pendant vertices)
        Spider,        // spider:k,l,m  (three leg lengths)
        Bell,          // bell:ell,tail  (cycle length, tail length)
        H1, H2, H3, H4 // the four fixed 6-vertex graphs
    };
    Kind kind;
    std::vector<int> params;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

// Vertex labelings are fixed: paths/cycles in order, bipartite small side
// first, star center 0, double-star centers 0 and 1, spider center 0 with legs
// in sequence, bell cycle 0..ell-1 with the tail hanging off vertex 0.
Graph generate(const FamilySpec& spec);

inline Graph generate(std::string_view text) { return generate(FamilySpec::parse(text)); }

}  // namespace trc
