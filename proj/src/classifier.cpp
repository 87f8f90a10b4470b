#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "internal.hpp"
#include "trc/classifier.hpp"
#include "trc/constructions.hpp"
#include "trc/families.hpp"

namespace trc {

std::string CoarseClass::label() const {
    switch (tag) {
        case Tag::Complete:
            return "complete(n=" + std::to_string(ell) + ")";
        case Tag::Path:
            return "path(n=" + std::to_string(ell) + ")";
        case Tag::Tree:
            return "tree(j=" + std::to_string(leaves) + ")";
        case Tag::Cycle:
            return "cycle(n=" + std::to_string(ell) + ")";
        case Tag::Bell:
            return "bell(l=" + std::to_string(ell) + ")";
        case Tag::Unicyclic: {
            std::string s = "unicyclic(l=" + std::to_string(ell) +
                            ",nt=" + std::to_string(nontrivial);
            if (!pattern.empty()) s += "," + pattern;
            return s + ",j=" + std::to_string(leaves) + ")";
        }
        case Tag::SpecialH:
            return special == 6 ? "H6-family" : "H" + std::to_string(special);
        case Tag::Multicyclic: {
            std::string s = "multicyclic(l=" + std::to_string(ell);
            if (diam_offset != 0) s += ",diam=n-" + std::to_string(diam_offset);
            if (!pattern.empty()) s += "," + pattern;
            return s + ")";
        }
        case Tag::Other:
            break;
    }
    return "other";
}

namespace {

CoarseClass make_class(CoarseClass::Tag tag, int ell = 0, int leaves = 0, int nontrivial = 0) {
    CoarseClass cc;
    cc.tag = tag;
    cc.ell = ell;
    cc.leaves = leaves;
    cc.nontrivial = nontrivial;
    return cc;
}

// Least q >= 1 with q^a >= b; overflow-safe early exit.
int ceil_root(int b, int a) {
    for (int q = 1;; ++q) {
        long long pw = 1;
        bool enough = false;
        for (int i = 0; i < a && !enough; ++i) {
            pw *= q;
            if (pw >= b) enough = true;
        }
        if (enough || b <= 1) return q;
    }
}

// Side sizes (small, large) when g is complete bipartite with both sides >= 2.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g,
                                                            const StructuralProfile& p) {
    if (!p.bipartite || p.complete) return std::nullopt;
    int n = p.n;
    std::vector<int> side(n, -1);
    std::vector<int> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (side[v] < 0) {
                side[v] = side[u] ^ 1;
                stack.push_back(v);
            }
    }
    int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
    int b = n - a;
    if (p.m != a * b || std::min(a, b) < 2) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

struct Builder {
    const Graph& g;
    const StructuralProfile& p;
    int lb;
    ClassReport rep;

    void exact(CoarseClass cc, int v, const char* tag) {
        if (v < lb) throw std::logic_error("formula value below the proven lower bound");
        rep.coarse = std::move(cc);
        rep.trc_theory = {v, v};
        rep.theorem_tag = tag;
        rep.primed_ambiguity = false;
    }

    // Clamped against the universal bounds; collapses to exact when the ends
    // meet, widens to bounds-only when the rule says nothing at this order.
    void interval(CoarseClass cc, int lo, int hi, const char* tag, bool primed) {
        int cap = trc_upper_bound(g).value;
        lo = std::max(lo, lb);
        hi = std::min(hi, cap);
        if (hi < lo) {
            lo = lb;
            hi = cap;
            tag = "bounds-only";
            primed = false;
        }
        if (hi < lo) throw std::logic_error("bounds crossed");
        rep.coarse = std::move(cc);
        rep.trc_theory = {lo, hi};
        rep.theorem_tag = tag;
        rep.primed_ambiguity = primed && lo < hi;
    }
};

bool ring_adjacent(int a, int b, int ell) {
    return (a + 1) % ell == b || (b + 1) % ell == a;
}

void classify_unicyclic(Builder& bld, const Graph& g, const StructuralProfile& p) {
    auto dec = unicyclic_decompose(g);
    if (!dec) throw std::logic_error("unicyclic profile without a decomposition");
    const int n = p.n;
    const int ell = dec->ell();
    const int nt = dec->nontrivial_count();
    const int j = dec->total_leaves();

    if (nt == 0) {
        CoarseClass cc = make_class(CoarseClass::Tag::Cycle, ell);
        bld.exact(std::move(cc), cycle_palette_size(n), "cycle-table");
        return;
    }

    if (nt == 1) {
        int idx = 0;
        for (int i = 0; i < ell; ++i)
            if (dec->nontrivial[i]) idx = i;
        if (detail::tail_walk(g, *dec, idx)) {
            CoarseClass cc = make_class(CoarseClass::Tag::Bell, ell, 1, 1);
            bld.exact(std::move(cc), bell_palette_size(ell, n), "hung-path-formula");
            return;
        }
    }

    std::vector<int> ntpos, tvpos;
    for (int i = 0; i < ell; ++i) (dec->nontrivial[i] ? ntpos : tvpos).push_back(i);

    CoarseClass cc = make_class(CoarseClass::Tag::Unicyclic, ell);
    cc.leaves = j;
    cc.nontrivial = nt;
    if (ell >= 4 && nt == 2)
        cc.pattern = ring_adjacent(ntpos[0], ntpos[1], ell) ? "adjacent" : "nonadjacent";
    if (ell == 5 && nt == 3)
        cc.pattern =
            ring_adjacent(tvpos[0], tvpos[1], ell) ? "trivial-adjacent" : "trivial-nonadjacent";

    // The cycle-with-trees patterns, keyed by cycle length, number of
    // nontrivial trees, leaf count, and the adjacency recorded above.
    if (ell == 3) {
        const char* tag = "l3-pattern";
        if (nt == 1) {
            if (j == 2) return bld.exact(std::move(cc), 2 * n - 6, tag);
            if (j == 3) return bld.interval(std::move(cc), 2 * n - 8, 2 * n - 7, tag, true);
            return bld.interval(std::move(cc), 2 * n - j - 5,
                                std::min(2 * n - j - 4, 2 * n - 9), tag, false);
        }
        if (nt == 2) {
            if (j == 2) return bld.exact(std::move(cc), 2 * n - 5, tag);
            if (j == 3) return bld.exact(std::move(cc), 2 * n - 6, tag);
            if (j == 4) return bld.interval(std::move(cc), 2 * n - 8, 2 * n - 7, tag, true);
            if (j == 5) return bld.interval(std::move(cc), bld.lb, 2 * n - 8, tag, true);
            return bld.interval(std::move(cc), bld.lb, 2 * n - j - 3, tag, false);
        }
        // nt == 3: the tree-count cap is attained for every leaf count.
        return bld.exact(std::move(cc), 2 * n - j - 3, tag);
    }

    if (ell == 4) {
        const char* tag = "l4-pattern";
        int cap4 = std::min(2 * n - 9, 2 * n - j - 3);
        if (nt == 1) {
            if (j == 2) return bld.interval(std::move(cc), 2 * n - 8, 2 * n - 7, tag, true);
            if (j == 3) return bld.interval(std::move(cc), bld.lb, 2 * n - 8, tag, true);
            return bld.interval(std::move(cc), bld.lb, cap4, tag, false);
        }
        if (nt == 2 && cc.pattern == "adjacent") {
            if (j == 2) return bld.exact(std::move(cc), 2 * n - 7, tag);
            if (j == 3) return bld.exact(std::move(cc), 2 * n - 8, tag);
            return bld.interval(std::move(cc), bld.lb, cap4, tag, false);
        }
        if (nt == 2) {  // nonadjacent
            if (j == 2) return bld.exact(std::move(cc), 2 * n - 5, tag);
            if (j == 3) return bld.interval(std::move(cc), 2 * n - 8, 2 * n - 7, tag, true);
            if (j == 4) return bld.interval(std::move(cc), bld.lb, 2 * n - 8, tag, true);
            return bld.interval(std::move(cc), bld.lb, cap4, tag, false);
        }
        if (nt == 3) {
            if (j == 3) return bld.exact(std::move(cc), 2 * n - 7, tag);
            if (j == 4) {
                // With one trivial tree and four leaves, exactly one tree has
                // two of them; the value is pinned only when that tree sits
                // next to the trivial root.
                int two = -1;
                for (int i = 0; i < 4; ++i)
                    if (dec->leaf_counts[i] == 2) two = i;
                if (two >= 0 && ring_adjacent(two, tvpos[0], 4))
                    return bld.exact(std::move(cc), 2 * n - 8, tag);
                return bld.interval(std::move(cc), bld.lb, cap4, tag, false);
            }
            return bld.interval(std::move(cc), bld.lb, cap4, tag, false);
        }
        // nt == 4
        if (j == 4) return bld.exact(std::move(cc), 2 * n - 7, tag);
        return bld.interval(std::move(cc), bld.lb, cap4, tag, false);
    }

    if (ell == 5) {
        const char* tag = "l5-pattern";
        if (nt == 1 && j == 2) return bld.exact(std::move(cc), 2 * n - 8, tag);
        if (nt == 2 && cc.pattern == "nonadjacent") {
            if (j == 2) return bld.exact(std::move(cc), 2 * n - 7, tag);
            if (j == 3) return bld.exact(std::move(cc), 2 * n - 8, tag);
        }
        if (nt == 2 && cc.pattern == "adjacent" && j == 2)
            return bld.exact(std::move(cc), 2 * n - 8, tag);
        if (nt == 3 && cc.pattern == "trivial-adjacent" && j == 3)
            return bld.exact(std::move(cc), 2 * n - 8, tag);
        return bld.interval(std::move(cc), bld.lb, 2 * n - 9, tag, false);
    }

    if (ell == 6 && nt == 2 && p.diameter == n - 3) {
        cc.diam_offset = 3;
        return bld.exact(std::move(cc), 2 * n - 7, "l6-pattern");
    }
    return bld.interval(std::move(cc), bld.lb, 2 * n - 9, "long-cycle-cap", false);
}

void classify_multicyclic(Builder& bld, const Graph& g, const StructuralProfile& p) {
    const int n = p.n;

    if (n == 6) {
        for (int i = 1; i <= 4; ++i) {
            Graph h = generate("h" + std::to_string(i));
            if (p.m == h.edge_count() && isomorphic(g, h)) {
                CoarseClass cc = make_class(CoarseClass::Tag::SpecialH);
                cc.special = i;
                cc.ell = p.circumference;
                return bld.exact(std::move(cc), 4, "fixed-six-vertex");
            }
        }
    }

    if (auto sides = complete_bipartite_sides(g, p)) {
        auto [a, b] = *sides;
        CoarseClass cc = make_class(CoarseClass::Tag::Multicyclic, p.circumference);
        cc.pattern = "complete-bipartite";
        return bld.exact(std::move(cc), std::min(ceil_root(b, a) + 1, 7), "bipartite-formula");
    }

    if (!p.circumference_exact) {
        CoarseClass cc = make_class(CoarseClass::Tag::Multicyclic, p.circumference);
        cc.pattern = "circumference-lower-bound";
        return bld.interval(std::move(cc), bld.lb, 2 * n, "bounds-only", false);
    }

    const int ell = p.circumference;
    if (ell == 4 && p.diameter == n - 2) {
        CoarseClass cc = make_class(CoarseClass::Tag::SpecialH, 4);
        cc.special = 6;
        cc.diam_offset = 2;
        return bld.exact(std::move(cc), 2 * n - 5, "chorded-c4-diameter");
    }
    if (ell >= 3 && ell <= 6 && p.diameter == n - 3) {
        CoarseClass cc = make_class(CoarseClass::Tag::Multicyclic, ell);
        cc.diam_offset = 3;
        return bld.exact(std::move(cc), 2 * n - 7, "diameter-extremal");
    }

    CoarseClass cc = make_class(CoarseClass::Tag::Multicyclic, ell);
    if (ell <= 5)
        return bld.interval(std::move(cc), bld.lb, 2 * n - 8, "short-cycle-residual", true);
    return bld.interval(std::move(cc), bld.lb, 2 * n - 9, "long-cycle-residual", false);
}

}  // namespace

ClassReport classify(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("classify requires a connected graph");
    auto p = structural_profile(g);
    const int n = p.n;

    Builder bld{g, p, trc_lower_bound(g, p).value, {}};

    if (p.complete) {
        CoarseClass cc = make_class(CoarseClass::Tag::Complete, n);
        bld.exact(std::move(cc), 1, "complete-graph");
    } else if (p.tree) {
        int j = p.leaves;
        int value = n + p.inner - 1;  // = 2n - j - 1
        if (j <= 2) {
            CoarseClass cc = make_class(CoarseClass::Tag::Path, n);
            bld.exact(std::move(cc), value, "path-extremal");
        } else {
            CoarseClass cc = make_class(CoarseClass::Tag::Tree);
            cc.leaves = j;
            bld.exact(std::move(cc), value, "tree-leaf-count");
        }
    } else if (p.unicyclic) {
        classify_unicyclic(bld, g, p);
    } else {
        classify_multicyclic(bld, g, p);
    }
    return bld.rep;
}

TheoryValue trc_by_theory(const Graph& g) { return classify(g).trc_theory; }

TrcResult compute_trc(const Graph& g, const SolveBudget& budget) {
    auto rep = classify(g);
    if (rep.trc_theory.exact()) {
        TrcResult r;
        r.lo = r.hi = rep.trc_theory.lo;
        r.method = "theory";
        return r;
    }
    SolveHints hints;
    hints.lo = rep.trc_theory.lo;
    TrcResult res = solve_trc(g, budget, hints);
    TrcResult out = res;
    out.lo = std::max(res.lo, rep.trc_theory.lo);
    out.hi = std::min(res.hi, rep.trc_theory.hi);
    if (out.hi < out.lo) throw std::logic_error("theory and search bounds crossed");
    if (out.hi < res.hi) out.certificate.reset();  // certificate no longer matches hi
    out.method = "theory+search";
    return out;
}

std::string report_line(const ClassReport& rep, const TrcResult& res) {
    std::string s = "class=" + rep.coarse.label() + "; trc=";
    if (res.exact())
        s += std::to_string(res.lo);
    else
        s += "[" + std::to_string(res.lo) + "," + std::to_string(res.hi) + "]";
    s += " (" + res.method + "); bounds=[" + std::to_string(rep.trc_theory.lo) + "," +
         std::to_string(rep.trc_theory.hi) + "]";
    return s;
}

}  // namespace trc
