#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "trc/ng.hpp"

namespace trc {

int ng_bound(int n) {
    if (n < 4) throw std::invalid_argument("complement-sum bound starts at n = 4");
    if (n == 4) return 2 * n + 2;
    if (n == 5) return 2 * n + 1;
    return 2 * n;
}

// ------------------------------------------------------------------- cache

namespace {

// Exact entries are final; intervals yield to exact or to narrower intervals.
bool upgrades(const TheoryValue& have, const TheoryValue& incoming) {
    if (have.exact()) return false;
    if (incoming.exact()) return true;
    return incoming.hi - incoming.lo < have.hi - have.lo;
}

bool sane_row(const std::string& key, long lo, long hi) {
    if (key.empty() || lo < 1 || hi < lo || hi > 3 * kMaxVertices) return false;
    for (char ch : key)
        if (std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

TrcCache::TrcCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::map<std::string, TheoryValue> rows;
    std::string line;
    bool corrupt = false;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string key;
        long lo = 0, hi = 0;
        if (!(ss >> key >> lo >> hi) || !sane_row(key, lo, hi)) {
            corrupt = true;
            break;
        }
        std::string rest;
        if (ss >> rest) {
            corrupt = true;
            break;
        }
        TheoryValue v{static_cast<int>(lo), static_cast<int>(hi)};
        auto it = rows.find(key);
        if (it == rows.end())
            rows.emplace(key, v);
        else if (upgrades(it->second, v))
            it->second = v;
    }
    if (corrupt) {
        // Never trust partial rows: drop everything and start a fresh file.
        std::ofstream(path_, std::ios::trunc);
        return;
    }
    rows_ = std::move(rows);
}

std::optional<TheoryValue> TrcCache::get(const std::string& key) const {
    auto it = rows_.find(key);
    if (it == rows_.end()) return std::nullopt;
    return it->second;
}

void TrcCache::put(const std::string& key, TheoryValue value) {
    if (!sane_row(key, value.lo, value.hi))
        throw std::invalid_argument("cache row rejected: " + key);
    auto it = rows_.find(key);
    if (it != rows_.end()) {
        if (!upgrades(it->second, value)) return;
        it->second = value;
    } else {
        rows_.emplace(key, value);
    }
    std::ofstream out(path_, std::ios::app);
    out << key << ' ' << value.lo << ' ' << value.hi << '\n';
}

// -------------------------------------------------------------------- scan

namespace {

std::string trimmed(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::pair<TheoryValue, std::string> one_side(const Graph& h, const std::string& key,
                                             const SolveBudget& budget, const TrcCache* cache) {
    if (cache) {
        auto hit = cache->get(key);
        if (hit && hit->exact()) return {*hit, "cache"};
    }
    TrcResult res = compute_trc(h, budget);
    return {{res.lo, res.hi}, res.method};
}

NGRecord evaluate(const Graph& g, const std::string& line, const SolveBudget& budget,
                  const TrcCache* cache) {
    NGRecord r;
    r.graph6 = line;
    r.n = g.vertex_count();
    r.bound = ng_bound(r.n);
    Graph gb = g.complement();
    std::tie(r.trc_g, r.method_g) = one_side(g, line, budget, cache);
    std::tie(r.trc_gbar, r.method_gbar) = one_side(gb, gb.to_graph6(), budget, cache);
    if (r.exact())
        r.verdict = r.sum_lo() <= r.bound ? "holds" : "violated";
    else
        r.verdict = r.sum_hi() <= r.bound ? "holds" : "unknown";
    return r;
}

}  // namespace

ScanResult ng_scan(const std::vector<std::string>& lines, const ScanOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ScanResult out;

    struct Item {
        int line_no;
        std::string text;
        Graph g;
    };
    std::vector<Item> work;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string text = trimmed(lines[i]);
        if (text.empty()) continue;
        try {
            Graph g = Graph::from_graph6(text);
            ++out.summary.scanned;
            if (g.vertex_count() < 4) continue;
            if (!g.connected() || !g.complement().connected()) continue;
            work.push_back({static_cast<int>(i) + 1, std::move(text), std::move(g)});
        } catch (const std::exception& e) {
            ++out.summary.malformed;
            out.errors.emplace_back(static_cast<int>(i) + 1, e.what());
        }
    }

    // Records are independent; compute in parallel, commit strictly in input
    // order from this thread afterwards (single cache writer, stable output).
    std::vector<NGRecord> recs(work.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        for (size_t k; (k = next.fetch_add(1)) < work.size();) {
            try {
                recs[k] = evaluate(work[k].g, work[k].text, opts.budget, opts.cache);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || work.size() <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(run);
        run();
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::set<int> orders;
    for (size_t k = 0; k < work.size(); ++k) {
        NGRecord& r = recs[k];
        ++out.summary.co_connected;
        orders.insert(r.n);
        if (r.verdict == "unknown") ++out.summary.unknowns;
        if (r.verdict == "violated") ++out.summary.violations;
        if (r.exact()) {
            int s = r.sum_lo();
            if (s > out.summary.max_sum) {
                out.summary.max_sum = s;
                out.summary.argmax.assign(1, r.graph6);
            } else if (s == out.summary.max_sum) {
                out.summary.argmax.push_back(r.graph6);
            }
        }
        if (opts.cache) {
            opts.cache->put(r.graph6, r.trc_g);
            opts.cache->put(work[k].g.complement().to_graph6(), r.trc_gbar);
        }
        out.records.push_back(r);
        if (opts.on_record) opts.on_record(out.records.back());
    }
    out.summary.n = orders.size() == 1 ? *orders.begin() : 0;
    out.summary.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// ------------------------------------------------------------------ output

namespace {

std::string fmt(const TheoryValue& v) {
    if (v.exact()) return std::to_string(v.lo);
    return std::to_string(v.lo) + ".." + std::to_string(v.hi);
}

std::string fmt_sum(const NGRecord& r) {
    if (r.exact()) return std::to_string(r.sum_lo());
    return std::to_string(r.sum_lo()) + ".." + std::to_string(r.sum_hi());
}

}  // namespace

std::string csv_header() { return "graph6,n,trc,cotrc,sum,bound,verdict,method"; }

std::string to_csv(const NGRecord& r) {
    return r.graph6 + "," + std::to_string(r.n) + "," + fmt(r.trc_g) + "," + fmt(r.trc_gbar) +
           "," + fmt_sum(r) + "," + std::to_string(r.bound) + "," + r.verdict + "," + r.method_g +
           "/" + r.method_gbar;
}

std::string to_record_line(const NGRecord& r) {
    return "graph6=" + r.graph6 + "; n=" + std::to_string(r.n) + "; trc=" + fmt(r.trc_g) +
           "; cotrc=" + fmt(r.trc_gbar) + "; sum=" + fmt_sum(r) +
           "; bound=" + std::to_string(r.bound) + "; verdict=" + r.verdict + "; method=" +
           r.method_g + "/" + r.method_gbar;
}

}  // namespace trc
