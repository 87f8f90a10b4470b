#include "trc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trc {

namespace {

void check_sizes(const Graph& g, const TotalColoring& c) {
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count() ||
        static_cast<int>(c.edge_colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring does not match graph dimensions");
}

}  // namespace

int TotalColoring::palette() const {
    std::vector<int> all(vertex_colors);
    all.insert(all.end(), edge_colors.begin(), edge_colors.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<int>(all.size());
}

void TotalColoring::normalize() {
    std::map<int, int> remap;
    for (auto* vec : {&vertex_colors, &edge_colors})
        for (int& c : *vec) {
            auto [it, fresh] = remap.try_emplace(c, static_cast<int>(remap.size()));
            c = it->second;
            (void)fresh;
        }
}

bool is_total_rainbow_path(const Graph& g, const TotalColoring& c, const std::vector<int>& path) {
    check_sizes(g, c);
    if (path.empty()) throw std::invalid_argument("empty path");
    std::vector<bool> seen(g.vertex_count(), false);
    for (int u : path) {
        if (u < 0 || u >= g.vertex_count() || seen[u])
            throw std::invalid_argument("not a simple path");
        seen[u] = true;
    }
    std::vector<int> used;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1])) throw std::invalid_argument("not a path of the graph");
        used.push_back(c.edge_colors[g.edge_index(path[i], path[i + 1])]);
    }
    for (size_t i = 1; i + 1 < path.size(); ++i) used.push_back(c.vertex_colors[path[i]]);
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

namespace {

struct PathSearch {
    const Graph& g;
    int target;
    std::vector<int> path;
    std::vector<bool> on_path;
    std::vector<char> used;  // indexed by normalized color
    const std::vector<int>& vcol;
    const std::vector<int>& ecol;

    bool dfs(int u) {
        if (u == target) return true;
        std::uint64_t rest = g.adjacency_mask(u);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (on_path[v]) continue;
            int ec = ecol[g.edge_index(u, v)];
            if (used[ec]) continue;
            int vc = vcol[v];
            bool count_vertex = (v != target);
            if (count_vertex && used[vc]) continue;
            used[ec] = 1;
            if (count_vertex) {
                if (vc == ec) {  // same color on edge and its far endpoint
                    used[ec] = 0;
                    continue;
                }
                used[vc] = 1;
            }
            on_path[v] = true;
            path.push_back(v);
            if (dfs(v)) return true;
            path.pop_back();
            on_path[v] = false;
            used[ec] = 0;
            if (count_vertex) used[vc] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_total_rainbow_path(const Graph& g, const TotalColoring& c,
                                                        int u, int v) {
    check_sizes(g, c);
    if (u == v) throw std::invalid_argument("endpoints must differ");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("endpoint out of range");

    // normalize a working copy so colors index a flat array
    TotalColoring w = c;
    w.normalize();
    PathSearch s{g, v, {u}, std::vector<bool>(g.vertex_count(), false),
                 std::vector<char>(w.palette(), 0), w.vertex_colors, w.edge_colors};
    s.on_path[u] = true;
    if (s.dfs(u)) return s.path;
    return std::nullopt;
}

VerifyReport verify_trc(const Graph& g, const TotalColoring& c, bool want_paths) {
    check_sizes(g, c);
    if (!g.connected()) throw std::invalid_argument("verify_trc requires a connected graph");
    VerifyReport r;
    r.valid = true;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) {
                if (want_paths) r.witness_paths.push_back({{u, v}, {u, v}});
                continue;  // a single edge is always total-rainbow
            }
            auto path = find_total_rainbow_path(g, c, u, v);
            if (!path) {
                r.valid = false;
                r.witness_pair = {u, v};
                return r;
            }
            if (want_paths) r.witness_paths.push_back({{u, v}, *path});
        }
    }
    return r;
}

std::string coloring_to_text(const Graph& g, const TotalColoring& c) {
    check_sizes(g, c);
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << c.palette() << '\n';
    for (size_t i = 0; i < c.vertex_colors.size(); ++i)
        out << (i ? " " : "") << c.vertex_colors[i];
    out << '\n';
    for (size_t i = 0; i < c.edge_colors.size(); ++i)
        out << (i ? " " : "") << c.edge_colors[i];
    out << '\n';
    return out.str();
}

TotalColoring coloring_from_text(const Graph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    int n, m, k;
    if (!(in >> n >> m >> k)) throw std::invalid_argument("coloring: missing 'n m k' header");
    if (n != g.vertex_count() || m != g.edge_count())
        throw std::invalid_argument("coloring: dimensions do not match the graph");
    TotalColoring c;
    c.vertex_colors.resize(n);
    c.edge_colors.resize(m);
    for (int i = 0; i < n; ++i)
        if (!(in >> c.vertex_colors[i])) throw std::invalid_argument("coloring: truncated vertex colors");
    for (int i = 0; i < m; ++i)
        if (!(in >> c.edge_colors[i])) throw std::invalid_argument("coloring: truncated edge colors");
    if (c.palette() != k) throw std::invalid_argument("coloring: declared palette does not match");
    return c;
}

std::string to_dot(const Graph& g, const TotalColoring* c) {
    static const char* kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                     "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080",
                                     "#9a6324", "#800000", "#808000", "#000075", "#ffd8b1",
                                     "#aaffc3", "#e6beff", "#fffac8", "#808080", "#000000"};
    constexpr int kPaletteSize = 20;
    std::ostringstream out;
    out << "graph g {\n  node [style=filled];\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        out << "  " << u;
        if (c) {
            int col = c->vertex_colors[u];
            out << " [label=\"" << u << ":" << col << "\", fillcolor=\""
                << kPalette[((col % kPaletteSize) + kPaletteSize) % kPaletteSize] << "\"]";
        }
        out << ";\n";
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge_at(i);
        out << "  " << u << " -- " << v;
        if (c) {
            int col = c->edge_colors[i];
            out << " [label=\"" << col << "\", color=\""
                << kPalette[((col % kPaletteSize) + kPaletteSize) % kPaletteSize] << "\", penwidth=2]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace trc
