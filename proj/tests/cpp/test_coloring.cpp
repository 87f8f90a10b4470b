#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "naive.hpp"
#include "trc/coloring.hpp"
#include "trc/constructions.hpp"
#include "trc/families.hpp"
#include "trc/graph.hpp"

using namespace trc;

namespace {

TotalColoring constant_coloring(const Graph& g, int color) {
    TotalColoring c;
    c.vertex_colors.assign(g.vertex_count(), color);
    c.edge_colors.assign(g.edge_count(), color);
    return c;
}

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("rainbow path check on a hand-built example") {
    Graph p4 = generate("path:4");
    TotalColoring c;
    c.vertex_colors = {9, 1, 2, 9};
    c.edge_colors = {3, 4, 5};
    CHECK(is_total_rainbow_path(p4, c, {0, 1, 2, 3}));

    c.edge_colors = {3, 4, 3};  // repeated edge color on the path
    CHECK_FALSE(is_total_rainbow_path(p4, c, {0, 1, 2, 3}));

    c.edge_colors = {3, 1, 5};  // edge repeats an internal vertex color
    CHECK_FALSE(is_total_rainbow_path(p4, c, {0, 1, 2, 3}));

    SUBCASE("endpoint colors never matter") {
        c.edge_colors = {3, 4, 5};
        c.vertex_colors = {3, 1, 2, 4};  // endpoints collide with edge colors
        CHECK(is_total_rainbow_path(p4, c, {0, 1, 2, 3}));
    }
    SUBCASE("direction symmetric") {
        c.edge_colors = {3, 4, 5};
        CHECK(is_total_rainbow_path(p4, c, {3, 2, 1, 0}));
    }
    SUBCASE("non-paths are rejected") {
        CHECK_THROWS(is_total_rainbow_path(p4, c, {0, 2}));     // not an edge
        CHECK_THROWS(is_total_rainbow_path(p4, c, {0, 1, 0}));  // repeated vertex
        CHECK_THROWS(is_total_rainbow_path(p4, c, {}));
    }
}

TEST_CASE("single-color validity depends on path lengths") {
    CHECK(verify_trc(generate("complete:5"), constant_coloring(generate("complete:5"), 0)).valid);
    // any leaf-to-leaf path uses two edges plus the center, so one color fails
    CHECK_FALSE(verify_trc(generate("star:6"), constant_coloring(generate("star:6"), 0)).valid);
    auto rep = verify_trc(generate("path:4"), constant_coloring(generate("path:4"), 0));
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.witness_pair.has_value());
    CHECK(*rep.witness_pair == std::pair<int, int>{0, 2});
}

TEST_CASE("find_total_rainbow_path is deterministic and correct") {
    Graph c5 = generate("cycle:5");
    TotalColoring c = color_cycle(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            auto p1 = find_total_rainbow_path(c5, c, u, v);
            REQUIRE(p1.has_value());
            CHECK(is_total_rainbow_path(c5, c, *p1));
            CHECK(p1->front() == u);
            CHECK(p1->back() == v);
            CHECK(p1 == find_total_rainbow_path(c5, c, u, v));
        }
    TotalColoring flat = constant_coloring(c5, 0);
    CHECK_FALSE(find_total_rainbow_path(c5, flat, 0, 2).has_value());
}

TEST_CASE("verifier agrees with the naive definition") {
    std::mt19937 rng(23);
    for (const char* spec : {"path:5", "cycle:5", "cycle:6", "kbip:2,3", "bell:3,2"}) {
        Graph g = generate(spec);
        for (int trial = 0; trial < 40; ++trial) {
            int k = 1 + static_cast<int>(rng() % 5);
            TotalColoring c;
            for (int v = 0; v < g.vertex_count(); ++v)
                c.vertex_colors.push_back(static_cast<int>(rng() % k));
            for (int e = 0; e < g.edge_count(); ++e)
                c.edge_colors.push_back(static_cast<int>(rng() % k));
            INFO(spec, " trial ", trial, " palette ", k);
            CHECK(verify_trc(g, c).valid == naive::valid(g, c));
        }
    }
}

TEST_CASE("witness paths cover every pair when requested") {
    Graph g = generate("bell:4,2");
    TotalColoring c = color_bell(4, 6);
    auto rep = verify_trc(g, c, true);
    REQUIRE(rep.valid);
    int n = g.vertex_count();
    CHECK(static_cast<int>(rep.witness_paths.size()) == n * (n - 1) / 2);
    for (auto& [pair, path] : rep.witness_paths) {
        CHECK(path.front() == pair.first);
        CHECK(path.back() == pair.second);
        CHECK(is_total_rainbow_path(g, c, path));
    }
}

TEST_CASE("refining a valid coloring keeps it valid") {
    Graph g = generate("cycle:6");
    TotalColoring c = color_cycle(6);
    REQUIRE(verify_trc(g, c).valid);
    TotalColoring fine;
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) fine.vertex_colors.push_back(next++);
    for (int e = 0; e < g.edge_count(); ++e) fine.edge_colors.push_back(next++);
    CHECK(verify_trc(g, fine).valid);
}

TEST_CASE("leaf vertex colors are irrelevant on a star") {
    Graph g = generate("star:6");
    std::mt19937 rng(5);
    TotalColoring c;
    c.vertex_colors.assign(6, 5);  // center color 5, distinct from every edge
    c.edge_colors = {0, 1, 2, 3, 4};
    REQUIRE(verify_trc(g, c).valid);
    for (int trial = 0; trial < 10; ++trial) {
        for (int v = 1; v < 6; ++v) c.vertex_colors[v] = static_cast<int>(rng() % 3);
        CHECK(verify_trc(g, c).valid);
    }
}

TEST_CASE("palette and normalize") {
    TotalColoring c;
    c.vertex_colors = {7, 7, 9};
    c.edge_colors = {9, 12};
    CHECK(c.palette() == 3);
    c.normalize();
    CHECK(c.vertex_colors == std::vector<int>{0, 0, 1});
    CHECK(c.edge_colors == std::vector<int>{1, 2});
    CHECK(c.palette() == 3);
}

TEST_CASE("text round trip and malformed input") {
    Graph g = generate("bell:3,3");
    TotalColoring c = color_bell(3, 6);
    std::string text = coloring_to_text(g, c);
    TotalColoring back = coloring_from_text(g, text);
    CHECK(back.vertex_colors == c.vertex_colors);
    CHECK(back.edge_colors == c.edge_colors);

    CHECK_THROWS(coloring_from_text(g, ""));
    CHECK_THROWS(coloring_from_text(g, "2 1 1\n0 0\n0\n"));        // wrong sizes
    CHECK_THROWS(coloring_from_text(generate("path:3"), text));    // wrong graph
}

TEST_CASE("dot output carries structure and colors") {
    Graph g = generate("path:3");
    std::string plain = to_dot(g);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(plain.find("0 -- 1") != std::string::npos);
    TotalColoring c;
    c.vertex_colors = {0, 1, 0};
    c.edge_colors = {2, 3};
    std::string colored = to_dot(g, &c);
    CHECK(colored.find("label") != std::string::npos);
    CHECK(colored.size() > plain.size());
}

}  // TEST_SUITE
