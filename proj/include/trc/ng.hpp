#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trc/classifier.hpp"
#include "trc/solver.hpp"

namespace trc {

// Right-hand side of the complement-sum bound: 2n+2 at n = 4 (attained), 2n+1
// at n = 5, 2n from n = 6 on. Throws below n = 4; no co-connected pair of
// interest exists there.
int ng_bound(int n);

// One scanned graph together with both sides of the bound.
struct NGRecord {
    std::string graph6;
    int n = 0;
    TheoryValue trc_g;     // lo == hi when exact
    TheoryValue trc_gbar;
    int bound = 0;
    std::string method_g;
    std::string method_gbar;
    std::string verdict;   // holds | violated | unknown

    bool exact() const { return trc_g.exact() && trc_gbar.exact(); }
    int sum_lo() const { return trc_g.lo + trc_gbar.lo; }
    int sum_hi() const { return trc_g.hi + trc_gbar.hi; }
};

struct ScanSummary {
    int n = 0;  // common order of the evaluated records, 0 when mixed
    int scanned = 0;        // parsed graph6 lines
    int co_connected = 0;   // records evaluated (both sides connected)
    int malformed = 0;
    int unknowns = 0;
    int violations = 0;
    int max_sum = 0;                  // over records with exact sums
    std::vector<std::string> argmax;  // graph6 lines attaining max_sum
    double seconds = 0.0;
};

// Append-only result cache keyed by the exact graph6 line (no canonicalization
// promise). Exact values are never downgraded; a corrupt file is discarded and
// rebuilt from scratch.
class TrcCache {
public:
    explicit TrcCache(std::string path);

    std::optional<TheoryValue> get(const std::string& key) const;
    void put(const std::string& key, TheoryValue value);

    const std::string& path() const { return path_; }
    int size() const { return static_cast<int>(rows_.size()); }

private:
    std::string path_;
    std::map<std::string, TheoryValue> rows_;
};

struct ScanOptions {
    SolveBudget budget{};
    int jobs = 1;
    TrcCache* cache = nullptr;  // optional; reads during the scan, writes after
    // Called in input order as records are committed (always from one thread).
    std::function<void(const NGRecord&)> on_record;
};

struct ScanResult {
    std::vector<NGRecord> records;  // input order
    ScanSummary summary;
    std::vector<std::pair<int, std::string>> errors;  // (1-based line, message)
};

// Evaluates every co-connected graph in the stream against ng_bound. Lines
// that fail to parse are reported with their line numbers and skipped; order
// of records always matches input order regardless of worker count.
ScanResult ng_scan(const std::vector<std::string>& lines, const ScanOptions& opts = {});

// CSV surface: header "graph6,n,trc,cotrc,sum,bound,verdict,method"; intervals
// render as lo..hi.
std::string csv_header();
std::string to_csv(const NGRecord& r);
// Structured one-liner: "graph6=...; n=...; trc=...; cotrc=...; ...".
std::string to_record_line(const NGRecord& r);

}  // namespace trc
