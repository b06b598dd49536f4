#pragma once

#include "polycurv/skeleton.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polycurv {

enum class ScanPredicate { forman_positive, resistance_positive, both };

struct ScanRecord {
    long long index = 0;
    int n = 0, m = 0, f = 0;
    long long forman_min = 0;
    bool forman_positive = false;
    // Filled only when the predicate asks for resistance; a dense
    // factorization per graph is not free.
    std::optional<double> resist_min;
    std::optional<bool> resist_positive;
    int diameter = 0;
    std::vector<std::string> violations;  // dim-3 screen findings
    // Nonempty when this graph failed to evaluate; the scan continues.
    std::string error;

    bool matches(ScanPredicate pred) const;
};

struct ScanSummary {
    long long scanned = 0;
    long long failed = 0;
    long long positive = 0;  // records matching the predicate
    std::map<int, long long> scanned_by_n;
    std::map<int, long long> positive_by_n;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

// Single-graph evaluation path; scan records are reproducible by re-running
// this on the same rotation system.
ScanRecord evaluate_graph(const RotationSystem& rot, long long index, ScanPredicate pred);

// Parses sequentially, evaluates in parallel over batches with jobs workers
// (jobs <= 0 picks the hardware default), and writes each result into its
// index slot, so output is deterministic regardless of scheduling.
ScanResult scan_corpus(std::istream& in, ScanPredicate pred, int jobs);

enum class ReportFormat { csv, json };

// CSV columns, exactly:
// index,n,m,f,forman_min,forman_positive,resist_min,resist_positive,diameter,violations
// Floats carry 12 significant digits.  Violations are joined with ';'; a
// failed record stores "error:<message>" there.  JSON is the same records as
// an array of objects (plus an explicit error field).
void write_report(const std::vector<ScanRecord>& records, ReportFormat fmt, std::ostream& out);

// Round-trip companion for the JSON report format.
std::vector<ScanRecord> read_report_json(std::istream& in);

}  // namespace polycurv
