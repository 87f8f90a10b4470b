#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "trc/classifier.hpp"
#include "trc/constructions.hpp"
#include "trc/families.hpp"
#include "trc/graph.hpp"
#include "trc/solver.hpp"

using namespace trc;

namespace {

std::vector<Graph> fixture_graphs(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing fixture ", path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(Graph::from_graph6(line));
    return graphs;
}

int solver_exact(const Graph& g) {
    auto res = solve_trc(g);
    REQUIRE(res.exact());
    return res.lo;
}

// copy into a graph with room for extra vertices; add_edge never grows
Graph grown(const Graph& g, int extra) {
    Graph h(g.vertex_count() + extra);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

Graph relabel(const Graph& g, std::mt19937& rng) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

using Tag = CoarseClass::Tag;

bool uni_is(const CoarseClass& c, int ell, int nt, int j, const char* pattern = nullptr) {
    return c.tag == Tag::Unicyclic && c.ell == ell && c.nontrivial == nt && c.leaves == j &&
           (pattern == nullptr || c.pattern == pattern);
}

// Membership tests for the four largest-value buckets of the characterization,
// phrased against the labels the classifier emits.
bool bucket_2n3(const CoarseClass& c) { return c.tag == Tag::Path; }

bool bucket_2n4(const CoarseClass& c) { return c.tag == Tag::Tree && c.leaves == 3; }

bool bucket_2n5(const CoarseClass& c) {
    if (c.tag == Tag::Tree && c.leaves == 4) return true;
    if (c.tag == Tag::Cycle && (c.ell == 3 || c.ell == 4)) return true;
    if (c.tag == Tag::Bell && (c.ell == 3 || c.ell == 4)) return true;
    if (uni_is(c, 3, 2, 2)) return true;
    if (uni_is(c, 4, 2, 2, "nonadjacent")) return true;
    if (c.tag == Tag::SpecialH && c.special == 6) return true;
    return false;
}

bool bucket_2n6(const CoarseClass& c) {
    if (c.tag == Tag::Tree && c.leaves == 5) return true;
    return uni_is(c, 3, 1, 2) || uni_is(c, 3, 2, 3) || uni_is(c, 3, 3, 3);
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("named families get exact formula values") {
    for (int n = 1; n <= 8; ++n) {
        auto rep = classify(generate("complete:" + std::to_string(n)));
        CHECK(rep.coarse.tag == Tag::Complete);
        CHECK(rep.trc_theory.lo == 1);
        CHECK(rep.trc_theory.exact());
    }
    for (int n = 3; n <= 10; ++n) {
        auto rep = classify(generate("path:" + std::to_string(n)));
        CHECK(rep.coarse.tag == Tag::Path);
        CHECK(rep.trc_theory.lo == 2 * n - 3);
        CHECK(rep.theorem_tag == "path-extremal");
    }
    // the triangle is complete and reports as such; the value agrees either way
    for (int n = 4; n <= 14; ++n) {
        auto rep = classify(generate("cycle:" + std::to_string(n)));
        CHECK(rep.coarse.tag == Tag::Cycle);
        CHECK(rep.trc_theory.exact());
        CHECK(rep.trc_theory.lo == cycle_palette_size(n));
    }
    CHECK(classify(generate("cycle:3")).trc_theory.lo == cycle_palette_size(3));
    struct BellCase {
        int ell, n;
    };
    for (auto [ell, n] : {BellCase{3, 5}, {3, 8}, {4, 6}, {5, 8}, {7, 9}, {9, 12}}) {
        auto rep = classify(generate("bell:" + std::to_string(ell) + "," + std::to_string(n - ell)));
        INFO("bell ", ell, " order ", n);
        CHECK(rep.coarse.tag == Tag::Bell);
        CHECK(rep.trc_theory.exact());
        CHECK(rep.trc_theory.lo == bell_palette_size(ell, n));
    }
    for (int i = 1; i <= 4; ++i) {
        auto rep = classify(generate("h" + std::to_string(i)));
        CHECK(rep.coarse.tag == Tag::SpecialH);
        CHECK(rep.coarse.special == i);
        CHECK(rep.trc_theory.lo == 4);
        CHECK(rep.trc_theory.exact());
    }
}

TEST_CASE("tree values follow the leaf count") {
    for (int n = 4; n <= 8; ++n) {
        for (auto& g : fixture_graphs("data/trees_n" + std::to_string(n) + ".g6")) {
            auto p = structural_profile(g);
            auto rep = classify(g);
            REQUIRE(rep.trc_theory.exact());
            CHECK(rep.trc_theory.lo == 2 * n - p.leaves - 1);
            if (p.leaves <= 2)
                CHECK(rep.coarse.tag == Tag::Path);
            else {
                CHECK(rep.coarse.tag == Tag::Tree);
                CHECK(rep.coarse.leaves == p.leaves);
            }
        }
    }
}

TEST_CASE("complete bipartite graphs use the root formula") {
    struct Case {
        int a, b, want;
    };
    for (auto [a, b, want] : {Case{2, 3, 3}, {2, 4, 3}, {3, 3, 3}, {2, 9, 4}, {4, 5, 3}, {2, 40, 8}}) {
        auto rep = classify(generate("kbip:" + std::to_string(a) + "," + std::to_string(b)));
        INFO("bipartite ", a, " by ", b);
        CHECK(rep.coarse.tag == Tag::Multicyclic);
        CHECK(rep.coarse.pattern == "complete-bipartite");
        CHECK(rep.trc_theory.exact());
        // the palette is capped at 7 once the large side overwhelms the small one
        CHECK(rep.trc_theory.lo == std::min(want, 7));
    }
}

TEST_CASE("solver confirms the formula values on small members") {
    std::vector<Graph> members = {
        generate("complete:4"),  generate("path:5"),   generate("star:5"),
        generate("cycle:6"),     generate("bell:3,2"), generate("bell:4,2"),
        generate("kbip:2,3"),    generate("h1"),       generate("h2"),
        generate("h3"),          generate("h4"),       generate("spider:2,2,1"),
    };
    for (const Graph& g : members) {
        auto rep = classify(g);
        REQUIRE(rep.trc_theory.exact());
        INFO("graph ", g.to_graph6(), " label ", rep.coarse.label());
        CHECK(solver_exact(g) == rep.trc_theory.lo);
    }
}

TEST_CASE("theory brackets the search value on every small connected graph") {
    for (int n = 4; n <= 6; ++n) {
        for (auto& g : fixture_graphs("data/connected_n" + std::to_string(n) + ".g6")) {
            auto rep = classify(g);
            auto res = compute_trc(g);
            INFO("graph ", g.to_graph6(), " label ", rep.coarse.label());
            REQUIRE(res.exact());
            CHECK(rep.trc_theory.lo <= res.lo);
            CHECK(res.lo <= rep.trc_theory.hi);
            if (rep.trc_theory.exact()) {
                CHECK(res.lo == rep.trc_theory.lo);
                CHECK(res.method == "theory");
            } else {
                CHECK(res.method == "theory+search");
            }
        }
    }
}

TEST_CASE("extremal buckets match the characterization exactly") {
    for (int n = 4; n <= 6; ++n) {
        for (auto& g : fixture_graphs("data/connected_n" + std::to_string(n) + ".g6")) {
            auto rep = classify(g);
            auto res = compute_trc(g);
            REQUIRE(res.exact());
            int v = res.lo;
            INFO("graph ", g.to_graph6(), " label ", rep.coarse.label(), " trc ", v);
            CHECK((v == 2 * n - 3) == bucket_2n3(rep.coarse));
            CHECK((v == 2 * n - 4) == bucket_2n4(rep.coarse));
            CHECK((v == 2 * n - 5) == bucket_2n5(rep.coarse));
            CHECK((v == 2 * n - 6) == bucket_2n6(rep.coarse));
        }
    }
}

TEST_CASE("seven-vertex trees and unicyclic graphs stay consistent") {
    int seen_trees = 0, seen_unicyclic = 0;
    for (auto& g : fixture_graphs("data/connected_n7.g6")) {
        auto p = structural_profile(g);
        if (!p.tree && !p.unicyclic) continue;
        p.tree ? ++seen_trees : ++seen_unicyclic;
        auto rep = classify(g);
        auto res = compute_trc(g);
        INFO("graph ", g.to_graph6(), " label ", rep.coarse.label());
        REQUIRE(res.exact());
        CHECK(rep.trc_theory.lo <= res.lo);
        CHECK(res.lo <= rep.trc_theory.hi);
        if (rep.trc_theory.exact()) CHECK(res.lo == rep.trc_theory.lo);
        CHECK((res.lo == 11) == bucket_2n3(rep.coarse));
        CHECK((res.lo == 10) == bucket_2n4(rep.coarse));
    }
    CHECK(seen_trees == 11);
    CHECK(seen_unicyclic > 20);
}

TEST_CASE("chorded square diameter family") {
    // members come from adding the long chord to a square, a square with a
    // tail, and a square with two opposite pendants
    Graph diamond = generate("cycle:4");
    diamond.add_edge(1, 3);
    Graph tailed = generate("bell:4,1");
    tailed.add_edge(1, 3);
    Graph twop = grown(generate("cycle:4"), 2);
    twop.add_edge(1, 3);
    twop.add_edge(0, 4);
    twop.add_edge(2, 5);
    for (const Graph& g : {diamond, tailed, twop}) {
        auto rep = classify(g);
        int n = g.vertex_count();
        INFO("graph ", g.to_graph6());
        CHECK(rep.coarse.tag == Tag::SpecialH);
        CHECK(rep.coarse.special == 6);
        CHECK(rep.trc_theory.exact());
        CHECK(rep.trc_theory.lo == 2 * n - 5);
        CHECK(solver_exact(g) == 2 * n - 5);
    }
}

TEST_CASE("diameter-extremal multicyclic classes") {
    Graph house = generate("cycle:5");
    house.add_edge(0, 2);
    Graph theta = generate("cycle:6");
    theta.add_edge(1, 4);
    for (const Graph& g : {house, theta}) {
        auto rep = classify(g);
        int n = g.vertex_count();
        INFO("graph ", g.to_graph6());
        CHECK(rep.coarse.tag == Tag::Multicyclic);
        CHECK(rep.coarse.diam_offset == 3);
        CHECK(rep.trc_theory.exact());
        CHECK(rep.trc_theory.lo == 2 * n - 7);
        CHECK(solver_exact(g) == 2 * n - 7);
    }
}

TEST_CASE("residual caps can pin the value when they meet the lower bound") {
    // prism: circumference six, diameter two, so the residual cap 2n-9 = 3
    // meets the noncomplete lower bound
    Graph prism(6);
    for (auto [u, v] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                        {0, 3}, {1, 4}, {2, 5}})
        prism.add_edge(u, v);
    auto rep = classify(prism);
    CHECK(rep.coarse.tag == Tag::Multicyclic);
    CHECK(rep.trc_theory.exact());
    CHECK(rep.trc_theory.lo == 3);
    auto res = compute_trc(prism);
    CHECK(res.method == "theory");
    CHECK(solver_exact(prism) == 3);
}

TEST_CASE("structurally undecided subclasses are marked and settled by search") {
    // triangle with three pendants on one corner: the rules leave two candidate
    // values apart, and only search separates them
    Graph g1 = grown(generate("cycle:3"), 3);
    g1.add_edge(0, 3);
    g1.add_edge(0, 4);
    g1.add_edge(0, 5);
    auto rep1 = classify(g1);
    CHECK(rep1.primed_ambiguity);
    CHECK(rep1.trc_theory.lo == 4);
    CHECK(rep1.trc_theory.hi == 5);
    auto res1 = compute_trc(g1);
    REQUIRE(res1.exact());
    CHECK(res1.method == "theory+search");
    CHECK(res1.lo >= 4);
    CHECK(res1.hi <= 5);
    CHECK(res1.lo == solver_exact(g1));

    // triangle with a depth-two star tree: again a two-value window
    Graph g2 = grown(generate("cycle:3"), 4);
    g2.add_edge(0, 3);
    g2.add_edge(3, 4);
    g2.add_edge(3, 5);
    g2.add_edge(3, 6);
    auto rep2 = classify(g2);
    CHECK(rep2.primed_ambiguity);
    CHECK(rep2.coarse.tag == Tag::Unicyclic);
    CHECK(rep2.trc_theory.lo == 6);
    CHECK(rep2.trc_theory.hi == 7);
    auto res2 = compute_trc(g2);
    REQUIRE(res2.exact());
    CHECK(rep2.trc_theory.lo <= res2.lo);
    CHECK(res2.lo <= rep2.trc_theory.hi);
}

TEST_CASE("labels and values are invariant under relabeling") {
    std::mt19937 rng(417);
    std::vector<Graph> pool = {generate("bell:4,3"), generate("spider:2,2,1"), generate("h3"),
                               generate("cycle:7"), generate("kbip:2,4")};
    Graph house = generate("cycle:5");
    house.add_edge(0, 2);
    pool.push_back(house);
    for (const Graph& g : pool) {
        auto base = classify(g);
        for (int trial = 0; trial < 3; ++trial) {
            Graph h = relabel(g, rng);
            auto rep = classify(h);
            INFO("graph ", g.to_graph6(), " relabeled ", h.to_graph6());
            CHECK(rep.coarse.label() == base.coarse.label());
            CHECK(rep.trc_theory.lo == base.trc_theory.lo);
            CHECK(rep.trc_theory.hi == base.trc_theory.hi);
            CHECK(rep.theorem_tag == base.theorem_tag);
        }
    }
}

TEST_CASE("report lines carry label, value, method, and bounds") {
    Graph p5 = generate("path:5");
    CHECK(report_line(classify(p5), compute_trc(p5)) ==
          "class=path(n=5); trc=7 (theory); bounds=[7,7]");
    Graph g = grown(generate("cycle:3"), 3);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(0, 5);
    std::string line = report_line(classify(g), compute_trc(g));
    CHECK(line.find("class=unicyclic(l=3,nt=1,j=3)") == 0);
    CHECK(line.find("(theory+search)") != std::string::npos);
    CHECK(line.find("bounds=[4,5]") != std::string::npos);
}

TEST_CASE("disconnected input is rejected") {
    CHECK_THROWS_AS(classify(Graph(2)), std::invalid_argument);
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    CHECK_THROWS_AS(compute_trc(two_edges), std::invalid_argument);
}

}  // TEST_SUITE
