#include "trc/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trc {

namespace {

const std::map<std::string, FamilySpec::Kind, std::less<>>& kind_names() {
    static const std::map<std::string, FamilySpec::Kind, std::less<>> names = {
        {"path", FamilySpec::Kind::Path},       {"cycle", FamilySpec::Kind::Cycle},
        {"complete", FamilySpec::Kind::Complete}, {"kbip", FamilySpec::Kind::Bipartite},
        {"star", FamilySpec::Kind::Star},       {"doublestar", FamilySpec::Kind::DoubleStar},
        {"spider", FamilySpec::Kind::Spider},   {"bell", FamilySpec::Kind::Bell},
        {"h1", FamilySpec::Kind::H1},           {"h2", FamilySpec::Kind::H2},
        {"h3", FamilySpec::Kind::H3},           {"h4", FamilySpec::Kind::H4},
    };
    return names;
}

int expected_params(FamilySpec::Kind k) {
    switch (k) {
        case FamilySpec::Kind::Path:
        case FamilySpec::Kind::Cycle:
        case FamilySpec::Kind::Complete:
        case FamilySpec::Kind::Star:
            return 1;
        case FamilySpec::Kind::Bipartite:
        case FamilySpec::Kind::DoubleStar:
        case FamilySpec::Kind::Bell:
            return 2;
        case FamilySpec::Kind::Spider:
            return 3;
        default:
            return 0;
    }
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    std::string name;
    std::vector<int> params;
    auto colon = text.find(':');
    name = std::string(text.substr(0, colon));
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (colon != std::string_view::npos) {
        std::istringstream in{std::string(text.substr(colon + 1))};
        std::string tok;
        while (std::getline(in, tok, ',')) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("family spec: bad parameter '" + tok + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("family spec: bad parameter '" + tok + "'");
            params.push_back(v);
        }
    }
    auto it = kind_names().find(name);
    if (it == kind_names().end()) throw std::invalid_argument("family spec: unknown family '" + name + "'");
    FamilySpec s{it->second, params};
    if (static_cast<int>(params.size()) != expected_params(s.kind))
        throw std::invalid_argument("family spec: '" + name + "' expects " +
                                    std::to_string(expected_params(s.kind)) + " parameter(s)");
    return s;
}

std::string FamilySpec::to_string() const {
    for (auto& [name, k] : kind_names())
        if (k == kind) {
            std::string out = name;
            for (size_t i = 0; i < params.size(); ++i)
                out += (i ? "," : ":") + std::to_string(params[i]);
            return out;
        }
    return "?";
}

Graph generate(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("family spec: ") + what);
    };
    const auto& p = spec.params;
    switch (spec.kind) {
        case K::Path: {
            need(p[0] >= 1, "path needs n >= 1");
            Graph g(p[0]);
            for (int i = 0; i + 1 < p[0]; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case K::Cycle: {
            need(p[0] >= 3, "cycle needs n >= 3");
            Graph g(p[0]);
            for (int i = 0; i < p[0]; ++i) g.add_edge(i, (i + 1) % p[0]);
            return g;
        }
        case K::Complete: {
            need(p[0] >= 1, "complete needs n >= 1");
            Graph g(p[0]);
            for (int i = 0; i < p[0]; ++i)
                for (int j = i + 1; j < p[0]; ++j) g.add_edge(i, j);
            return g;
        }
        case K::Bipartite: {
            need(p[0] >= 1 && p[1] >= 1, "kbip needs both sides nonempty");
            need(p[0] + p[1] <= kMaxVertices, "kbip too large");
            Graph g(p[0] + p[1]);
            for (int i = 0; i < p[0]; ++i)
                for (int j = 0; j < p[1]; ++j) g.add_edge(i, p[0] + j);
            return g;
        }
        case K::Star: {
            need(p[0] >= 2, "star needs n >= 2");
            Graph g(p[0]);
            for (int i = 1; i < p[0]; ++i) g.add_edge(0, i);
            return g;
        }
        case K::DoubleStar: {
            need(p[0] >= 1 && p[1] >= 1, "doublestar needs a,b >= 1");
            Graph g(p[0] + p[1] + 2);
            g.add_edge(0, 1);
            for (int i = 0; i < p[0]; ++i) g.add_edge(0, 2 + i);
            for (int i = 0; i < p[1]; ++i) g.add_edge(1, 2 + p[0] + i);
            return g;
        }
        case K::Spider: {
            need(p[0] >= 1 && p[1] >= 1 && p[2] >= 1, "spider needs three legs");
            Graph g(p[0] + p[1] + p[2] + 1);
            int next = 1;
            for (int leg = 0; leg < 3; ++leg) {
                int prev = 0;
                for (int i = 0; i < p[leg]; ++i, ++next) {
                    g.add_edge(prev, next);
                    prev = next;
                }
            }
            return g;
        }
        case K::Bell: {
            need(p[0] >= 3, "bell needs cycle length >= 3");
            need(p[1] >= 1, "bell needs tail length >= 1");
            Graph g(p[0] + p[1]);
            for (int i = 0; i < p[0]; ++i) g.add_edge(i, (i + 1) % p[0]);
            int prev = 0;
            for (int i = 0; i < p[1]; ++i) {
                g.add_edge(prev, p[0] + i);
                prev = p[0] + i;
            }
            return g;
        }
        case K::H1:
        case K::H2: {
            Graph g(6);
            for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
            g.add_edge(5, 0);
            g.add_edge(5, 2);
            if (spec.kind == K::H2) g.add_edge(0, 2);
            return g;
        }
        case K::H3: {
            Graph g(6);
            for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
            g.add_edge(0, 2);
            g.add_edge(0, 3);
            g.add_edge(0, 5);
            return g;
        }
        case K::H4: {
            Graph g(6);
            for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
            for (int i = 2; i <= 4; ++i) g.add_edge(1, i);
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace trc
