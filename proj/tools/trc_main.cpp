#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trc/classifier.hpp"
#include "trc/coloring.hpp"
#include "trc/constructions.hpp"
#include "trc/families.hpp"
#include "trc/graph.hpp"
#include "trc/ng.hpp"
#include "trc/solver.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::istringstream ss(slurp(path));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

trc::Graph parse_graph_text(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::runtime_error("empty graph input");
    // graph6 bytes all sit at '?' (63) or above; an edge list starts with a
    // digit. The optional ">>graph6<<" header starts below '?'.
    bool g6 = text.compare(i, 10, ">>graph6<<") == 0 || text[i] >= '?';
    if (!g6) return trc::Graph::from_edge_list(text);
    size_t end = text.find_first_of("\r\n", i);
    std::string line = text.substr(i, end == std::string::npos ? end : end - i);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
    return trc::Graph::from_graph6(line);
}

// Accepts a file path, a graph6 literal, or an inline edge list.
trc::Graph load_graph(const std::string& arg) {
    if (std::ifstream probe(arg); probe.good()) return parse_graph_text(slurp(arg));
    return parse_graph_text(arg);
}

struct BudgetOpts {
    std::uint64_t nodes = trc::SolveBudget{}.node_cap;
    long long ms = trc::SolveBudget{}.time_cap.count();
    int threads = 1;

    trc::SolveBudget to_budget() const {
        trc::SolveBudget b;
        b.node_cap = nodes;
        b.time_cap = std::chrono::milliseconds(ms);
        b.threads = threads;
        return b;
    }
};

void add_budget_opts(CLI::App* cmd, BudgetOpts& b) {
    cmd->add_option("--budget-nodes", b.nodes, "search node budget");
    cmd->add_option("--budget-ms", b.ms, "search time budget in milliseconds");
    cmd->add_option("--threads", b.threads, "worker threads for one search");
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int emit_coloring(const trc::Graph& g, const trc::TotalColoring& c, const std::string& out_path,
                  const std::string& dot_path) {
    auto rep = trc::verify_trc(g, c);
    if (!rep.valid) throw std::logic_error("recipe produced an invalid coloring");
    std::cout << "graph6 " << g.to_graph6() << "\n";
    std::cout << "palette " << c.palette() << "\n";
    write_or_print(out_path, trc::coloring_to_text(g, c));
    if (!dot_path.empty()) write_or_print(dot_path, trc::to_dot(g, &c));
    return 0;
}

int run_color(const std::string& recipe, const std::string& arg, const std::string& out_path,
              const std::string& dot_path) {
    using trc::generate;
    if (recipe == "cycle") {
        auto spec = trc::FamilySpec::parse(arg);
        if (spec.kind != trc::FamilySpec::Kind::Cycle) throw std::runtime_error("expected cycle:n");
        return emit_coloring(generate(spec), trc::color_cycle(spec.params[0]), out_path, dot_path);
    }
    if (recipe == "bell") {
        auto spec = trc::FamilySpec::parse(arg);
        if (spec.kind != trc::FamilySpec::Kind::Bell)
            throw std::runtime_error("expected bell:ell,tail");
        int ell = spec.params[0], n = spec.params[0] + spec.params[1];
        return emit_coloring(generate(spec), trc::color_bell(ell, n), out_path, dot_path);
    }
    if (recipe == "co-path") {
        auto spec = trc::FamilySpec::parse(arg);
        if (spec.kind != trc::FamilySpec::Kind::Path) throw std::runtime_error("expected path:n");
        return emit_coloring(generate(spec).complement(),
                             trc::color_complement_of_path(spec.params[0]), out_path, dot_path);
    }
    if (recipe == "co-spider") {
        auto spec = trc::FamilySpec::parse(arg);
        if (spec.kind != trc::FamilySpec::Kind::Spider)
            throw std::runtime_error("expected spider:k,l,m");
        return emit_coloring(
            generate(spec).complement(),
            trc::color_complement_of_spider(spec.params[0], spec.params[1], spec.params[2]),
            out_path, dot_path);
    }
    if (recipe == "kbip") {
        auto spec = trc::FamilySpec::parse(arg);
        if (spec.kind != trc::FamilySpec::Kind::Bipartite)
            throw std::runtime_error("expected kbip:m,n");
        return emit_coloring(generate(spec),
                             trc::color_complete_bipartite_strong(spec.params[0], spec.params[1]),
                             out_path, dot_path);
    }
    if (recipe == "layers") {
        trc::Graph deep = load_graph(arg);  // diameter > 3 side
        return emit_coloring(deep.complement(), trc::color_via_distance_layers(deep), out_path,
                             dot_path);
    }
    if (recipe == "diam2") {
        trc::Graph g = load_graph(arg);
        return emit_coloring(g, trc::color_two_connected_diam2(g), out_path, dot_path);
    }
    if (recipe == "co-diam3") {
        trc::Graph g = load_graph(arg);  // 2-connected diameter-3 side
        trc::TotalColoring c;
        try {
            c = trc::color_complement_of_diam3(g, trc::Diam3Subcase::PendantBridge);
        } catch (const std::invalid_argument&) {
            c = trc::color_complement_of_diam3(g, trc::Diam3Subcase::LargeZ);
        }
        return emit_coloring(g.complement(), c, out_path, dot_path);
    }
    throw std::runtime_error("unknown recipe: " + recipe);
}

int run_ng_scan(const std::optional<int>& n, const std::string& in_path,
                const std::string& data_dir, const std::string& out_kind, int jobs,
                const std::string& cache_path, const BudgetOpts& budget) {
    std::vector<std::string> lines;
    if (!in_path.empty())
        lines = read_lines(in_path);
    else if (n)
        lines = read_lines(data_dir + "/connected_n" + std::to_string(*n) + ".g6");
    else
        throw std::runtime_error("ng-scan needs --in FILE or --n N");

    std::optional<trc::TrcCache> cache;
    if (!cache_path.empty()) cache.emplace(cache_path);

    trc::ScanOptions opts;
    opts.budget = budget.to_budget();
    opts.jobs = jobs;
    opts.cache = cache ? &*cache : nullptr;
    bool csv = out_kind == "csv";
    if (csv) std::cout << trc::csv_header() << "\n";
    opts.on_record = [&](const trc::NGRecord& r) {
        std::cout << (csv ? trc::to_csv(r) : trc::to_record_line(r)) << "\n";
    };

    auto result = trc::ng_scan(lines, opts);
    for (auto& [line_no, msg] : result.errors)
        std::cerr << "line " << line_no << ": " << msg << "\n";
    auto& s = result.summary;
    std::cerr << "n=" << s.n << " scanned=" << s.scanned << " co-connected=" << s.co_connected
              << " malformed=" << s.malformed << " max-sum=" << s.max_sum
              << " violations=" << s.violations << " unknowns=" << s.unknowns
              << " seconds=" << s.seconds << "\n";
    if (!s.argmax.empty()) {
        std::cerr << "argmax:";
        for (auto& g6 : s.argmax) std::cerr << " " << g6;
        std::cerr << "\n";
    }
    if (s.violations > 0) return 3;
    if (s.unknowns > 0) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total-rainbow connection toolkit"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "exact trc of a graph by search");
    std::string solve_graph, solve_cert, solve_dot;
    BudgetOpts solve_budget;
    solve->add_option("graph", solve_graph, "graph6, edge list, or file")->required();
    solve->add_option("--cert", solve_cert, "write the optimal coloring here");
    solve->add_option("--dot", solve_dot, "write the colored graph as DOT here");
    add_budget_opts(solve, solve_budget);

    auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
    std::string verify_graph, verify_coloring;
    verify->add_option("graph", verify_graph, "graph6, edge list, or file")->required();
    verify->add_option("coloring", verify_coloring, "coloring file (n m k header)")->required();

    auto* color = app.add_subcommand("color", "run a constructive coloring recipe");
    std::string color_recipe, color_arg, color_out, color_dot;
    color
        ->add_option("recipe", color_recipe,
                     "bell | cycle | co-path | co-spider | layers | diam2 | kbip | co-diam3")
        ->required();
    color->add_option("spec", color_arg, "family spec (bell/cycle/co-path/co-spider/kbip) or graph")
        ->required();
    color->add_option("--out", color_out, "write the coloring here instead of stdout");
    color->add_option("--dot", color_dot, "write the colored graph as DOT here");

    auto* classify_cmd = app.add_subcommand("classify", "structural class and trc pipeline");
    std::string classify_graph;
    BudgetOpts classify_budget;
    classify_cmd->add_option("graph", classify_graph, "graph6, edge list, or file")->required();
    add_budget_opts(classify_cmd, classify_budget);

    auto* complement = app.add_subcommand("complement", "print the complement as graph6");
    std::string complement_graph;
    complement->add_option("graph", complement_graph, "graph6, edge list, or file")->required();

    auto* gen = app.add_subcommand("gen", "print a family member as graph6");
    std::string gen_spec;
    gen->add_option("spec", gen_spec, "family spec, e.g. path:7, bell:5,2, kbip:3,3")->required();

    auto* scan = app.add_subcommand("ng-scan", "complement-sum bound scan over graph6 input");
    std::optional<int> scan_n;
    std::string scan_in, scan_out = "csv", scan_cache, scan_data = "data";
    int scan_jobs = 1;
    BudgetOpts scan_budget;
    scan->add_option("--n", scan_n, "order; reads <data-dir>/connected_nN.g6");
    scan->add_option("--in", scan_in, "graph6 input file, - for stdin");
    scan->add_option("--out", scan_out, "csv | records")
        ->check(CLI::IsMember({"csv", "records"}));
    scan->add_option("--jobs", scan_jobs, "parallel workers");
    scan->add_option("--cache", scan_cache, "append-only result cache file");
    scan->add_option("--data-dir", scan_data, "fixture directory for --n");
    add_budget_opts(scan, scan_budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(solve)) {
            trc::Graph g = load_graph(solve_graph);
            auto res = trc::solve_trc(g, solve_budget.to_budget());
            if (res.exact())
                std::cout << "trc=" << res.lo;
            else
                std::cout << "trc in [" << res.lo << "," << res.hi << "]";
            std::cout << " method=" << res.method << " nodes=" << res.stats.nodes
                      << " seconds=" << res.stats.seconds << "\n";
            if (res.certificate) {
                if (!solve_cert.empty())
                    write_or_print(solve_cert, trc::coloring_to_text(g, *res.certificate));
                if (!solve_dot.empty())
                    write_or_print(solve_dot, trc::to_dot(g, &*res.certificate));
            }
            return res.exact() ? 0 : 2;
        }
        if (app.got_subcommand(verify)) {
            trc::Graph g = load_graph(verify_graph);
            auto c = trc::coloring_from_text(g, slurp(verify_coloring));
            auto rep = trc::verify_trc(g, c, true);
            if (rep.valid) {
                std::cout << "valid palette=" << c.palette() << "\n";
            } else {
                std::cout << "invalid pair=(" << rep.witness_pair->first << ","
                          << rep.witness_pair->second << ")\n";
            }
            return 0;
        }
        if (app.got_subcommand(color)) return run_color(color_recipe, color_arg, color_out, color_dot);
        if (app.got_subcommand(classify_cmd)) {
            trc::Graph g = load_graph(classify_graph);
            auto rep = trc::classify(g);
            auto res = trc::compute_trc(g, classify_budget.to_budget());
            std::cout << trc::report_line(rep, res) << "\n";
            return res.exact() ? 0 : 2;
        }
        if (app.got_subcommand(complement)) {
            std::cout << load_graph(complement_graph).complement().to_graph6() << "\n";
            return 0;
        }
        if (app.got_subcommand(gen)) {
            std::cout << trc::generate(gen_spec).to_graph6() << "\n";
            return 0;
        }
        if (app.got_subcommand(scan))
            return run_ng_scan(scan_n, scan_in, scan_data, scan_out, scan_jobs, scan_cache,
                               scan_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
