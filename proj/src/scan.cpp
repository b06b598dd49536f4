#include "polycurv/scan.hpp"

#include "polycurv/common.hpp"
#include "polycurv/forman.hpp"
#include "polycurv/io.hpp"
#include "polycurv/resistance.hpp"

#include <json.hpp>
#include <omp.h>

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace polycurv {

using nlohmann::json;

bool ScanRecord::matches(ScanPredicate pred) const {
    if (!error.empty()) return false;
    switch (pred) {
        case ScanPredicate::forman_positive:
            return forman_positive;
        case ScanPredicate::resistance_positive:
            return resist_positive.value_or(false);
        case ScanPredicate::both:
            return forman_positive && resist_positive.value_or(false);
    }
    return false;
}

ScanRecord evaluate_graph(const RotationSystem& rot, long long index, ScanPredicate pred) {
    ScanRecord rec;
    rec.index = index;
    rec.n = rot.n;
    try {
        TwoSkeleton sk = faces_from_rotation(rot);
        rec.m = sk.graph.m();
        rec.f = sk.f();
        // Serial kernels here: the corpus scan parallelizes across graphs,
        // and each graph is small.
        FormanProfile forman = forman_profile_serial(sk);
        rec.forman_min = forman.min;
        rec.forman_positive = forman.positive;
        if (pred != ScanPredicate::forman_positive) {
            ResistanceProfile resist = resistance_profile_serial(sk.graph);
            rec.resist_min = resist.min;
            rec.resist_positive = resist.positive;
        }
        rec.diameter = graph_diameter(sk.graph);
        rec.violations = screen_low_dimension(sk, 3);
    } catch (const Error& e) {
        rec.error = e.what();
    }
    return rec;
}

ScanResult scan_corpus(std::istream& in, ScanPredicate pred, int jobs) {
    if (jobs <= 0) jobs = omp_get_max_threads();
    PlanarCodeReader reader(in);
    ScanResult result;

    // Parse a batch sequentially, evaluate it in parallel, write each record
    // into its index slot.  The merge order never depends on scheduling.
    constexpr int kBatch = 1024;
    std::vector<RotationSystem> batch;
    batch.reserve(kBatch);
    bool more = true;
    while (more) {
        batch.clear();
        while (static_cast<int>(batch.size()) < kBatch) {
            auto rot = reader.next();
            if (!rot) {
                more = false;
                break;
            }
            batch.push_back(std::move(*rot));
        }
        if (batch.empty()) break;
        long long base = static_cast<long long>(result.records.size());
        result.records.resize(result.records.size() + batch.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (int i = 0; i < static_cast<int>(batch.size()); ++i)
            result.records[base + i] = evaluate_graph(batch[i], base + i, pred);
    }

    ScanSummary& s = result.summary;
    for (const ScanRecord& rec : result.records) {
        ++s.scanned;
        ++s.scanned_by_n[rec.n];
        if (!rec.error.empty()) ++s.failed;
        if (rec.matches(pred)) {
            ++s.positive;
            ++s.positive_by_n[rec.n];
        }
    }
    return result;
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// RFC 4180 quoting, applied only when the field needs it so plain rows stay
// plain.
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string violations_field(const ScanRecord& rec) {
    if (!rec.error.empty()) return "error:" + rec.error;
    std::string joined;
    for (size_t i = 0; i < rec.violations.size(); ++i) {
        if (i) joined += ';';
        joined += rec.violations[i];
    }
    return joined;
}

}  // namespace

void write_report(const std::vector<ScanRecord>& records, ReportFormat fmt, std::ostream& out) {
    if (fmt == ReportFormat::csv) {
        out << "index,n,m,f,forman_min,forman_positive,resist_min,resist_positive,diameter,violations\n";
        for (const ScanRecord& rec : records) {
            out << rec.index << ',' << rec.n << ',' << rec.m << ',' << rec.f << ',' << rec.forman_min << ','
                << (rec.forman_positive ? "true" : "false") << ','
                << (rec.resist_min ? format_double(*rec.resist_min) : "") << ','
                << (rec.resist_positive ? (*rec.resist_positive ? "true" : "false") : "") << ',' << rec.diameter
                << ',' << csv_escape(violations_field(rec)) << '\n';
        }
        return;
    }

    json doc = json::array();
    for (const ScanRecord& rec : records) {
        json row;
        row["index"] = rec.index;
        row["n"] = rec.n;
        row["m"] = rec.m;
        row["f"] = rec.f;
        row["forman_min"] = rec.forman_min;
        row["forman_positive"] = rec.forman_positive;
        row["resist_min"] = rec.resist_min ? json(*rec.resist_min) : json(nullptr);
        row["resist_positive"] = rec.resist_positive ? json(*rec.resist_positive) : json(nullptr);
        row["diameter"] = rec.diameter;
        row["violations"] = rec.violations;
        row["error"] = rec.error;
        doc.push_back(std::move(row));
    }
    out << doc.dump(1) << '\n';
}

std::vector<ScanRecord> read_report_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail("read_report_json", e.what());
    }
    if (!doc.is_array()) fail("read_report_json", "top-level value is not an array");
    std::vector<ScanRecord> records;
    for (const auto& row : doc) {
        if (!row.is_object()) fail("read_report_json", "record entries must be objects");
        ScanRecord rec;
        try {
            rec.index = row.at("index").get<long long>();
            rec.n = row.at("n").get<int>();
            rec.m = row.at("m").get<int>();
            rec.f = row.at("f").get<int>();
            rec.forman_min = row.at("forman_min").get<long long>();
            rec.forman_positive = row.at("forman_positive").get<bool>();
            if (!row.at("resist_min").is_null()) rec.resist_min = row.at("resist_min").get<double>();
            if (!row.at("resist_positive").is_null()) rec.resist_positive = row.at("resist_positive").get<bool>();
            rec.diameter = row.at("diameter").get<int>();
            rec.violations = row.at("violations").get<std::vector<std::string>>();
            rec.error = row.at("error").get<std::string>();
        } catch (const json::exception& e) {
            fail("read_report_json", std::string("record ") + std::to_string(records.size()) + ": " + e.what());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace polycurv
