#include "polycurv/cli.hpp"

#include "polycurv/common.hpp"
#include "polycurv/families.hpp"
#include "polycurv/forman.hpp"
#include "polycurv/io.hpp"
#include "polycurv/resistance.hpp"
#include "polycurv/scan.hpp"
#include "polycurv/tube.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polycurv {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail("cli", "cannot open input file " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cli", "cannot open output file " + path);
    out << text;
    if (!out) fail("cli", "failed while writing " + path);
}

bool looks_like_json(const std::string& data) {
    for (char c : data) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// One skeleton's worth of curv output; fields stay empty when the matching
// flag was off or the quantity is undefined for the input.
struct CurvResult {
    int n = 0, m = 0;
    std::optional<int> f;
    std::optional<int> diameter;
    std::optional<FormanProfile> forman;
    std::optional<ResistanceProfile> resistance;
};

CurvResult curv_evaluate(const Graph& g, const TwoSkeleton* sk, bool want_forman, bool want_resistance) {
    CurvResult res;
    res.n = g.n;
    res.m = g.m();
    if (sk) res.f = sk->f();
    if (g.connected && g.n > 0) res.diameter = graph_diameter(g);
    if (want_forman) {
        if (!sk) fail("curv", "forman profile needs faces; the input has none");
        res.forman = forman_profile(*sk);
    }
    if (want_resistance) res.resistance = resistance_profile(g);
    return res;
}

json curv_to_json(const CurvResult& res) {
    json doc;
    doc["n"] = res.n;
    doc["m"] = res.m;
    if (res.f) doc["f"] = *res.f;
    if (res.diameter) doc["diameter"] = *res.diameter;
    if (res.forman) {
        json block;
        block["per_edge"] = res.forman->per_edge;
        block["min"] = res.forman->min;
        block["average"] = res.forman->average.convert_to<double>();
        block["average_exact"] = res.forman->average.str();
        block["positive"] = res.forman->positive;
        doc["forman"] = std::move(block);
    }
    if (res.resistance) {
        json block;
        block["per_vertex"] = res.resistance->per_vertex;
        block["per_edge"] = res.resistance->per_edge;
        block["min"] = res.resistance->min;
        block["positive"] = res.resistance->positive;
        block["boundary_vertices"] = res.resistance->boundary_vertices;
        doc["resistance"] = std::move(block);
    }
    return doc;
}

// Same column layout as the scan reports so downstream tooling sees one
// schema; quantities curv did not compute stay empty.
std::string curv_to_csv(const std::vector<CurvResult>& results) {
    std::ostringstream out;
    out << "index,n,m,f,forman_min,forman_positive,resist_min,resist_positive,diameter,violations\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const CurvResult& res = results[i];
        out << i << ',' << res.n << ',' << res.m << ',';
        if (res.f) out << *res.f;
        out << ',';
        if (res.forman) out << res.forman->min;
        out << ',';
        if (res.forman) out << (res.forman->positive ? "true" : "false");
        out << ',';
        if (res.resistance) out << format_double(res.resistance->min);
        out << ',';
        if (res.resistance) out << (res.resistance->positive ? "true" : "false");
        out << ',';
        if (res.diameter) out << *res.diameter;
        out << ",\n";
    }
    return out.str();
}

int cmd_curv(const std::string& input, bool want_forman, bool want_resistance, const std::string& format,
             const std::string& out_path) {
    if (!want_forman && !want_resistance) {
        want_forman = true;
        want_resistance = true;
    }
    std::string data = read_input(input);
    std::vector<CurvResult> results;
    bool single = looks_like_json(data);
    if (single) {
        std::istringstream in(data);
        SkeletonDocument doc = read_skeleton_json(in);
        std::optional<TwoSkeleton> sk;
        if (doc.has_faces()) sk = doc.skeleton();
        results.push_back(curv_evaluate(doc.graph, sk ? &*sk : nullptr, want_forman, want_resistance));
    } else {
        std::istringstream in(data);
        PlanarCodeReader reader(in);
        while (auto rot = reader.next()) {
            TwoSkeleton sk = faces_from_rotation(*rot);
            results.push_back(curv_evaluate(sk.graph, &sk, want_forman, want_resistance));
        }
    }

    std::string text;
    if (format == "csv") {
        text = curv_to_csv(results);
    } else if (single) {
        text = curv_to_json(results.front()).dump(1) + "\n";
    } else {
        json arr = json::array();
        for (const CurvResult& res : results) arr.push_back(curv_to_json(res));
        text = arr.dump(1) + "\n";
    }
    write_output(out_path, text);
    return 0;
}

int cmd_scan(const std::string& input, const std::string& predicate, int jobs, const std::string& out_path,
             const std::string& format) {
    ScanPredicate pred = ScanPredicate::forman_positive;
    if (predicate == "resistance-positive") pred = ScanPredicate::resistance_positive;
    if (predicate == "both") pred = ScanPredicate::both;

    std::string data = read_input(input);
    std::istringstream in(data);
    ScanResult result = scan_corpus(in, pred, jobs);

    const ScanSummary& s = result.summary;
    std::cout << "scanned: " << s.scanned << "\n";
    std::cout << "failed: " << s.failed << "\n";
    std::cout << "positive: " << s.positive << "\n";
    std::cout << "scanned_by_n:";
    for (auto [n, c] : s.scanned_by_n) std::cout << ' ' << n << '=' << c;
    std::cout << "\n";
    std::cout << "positive_by_n:";
    for (auto [n, c] : s.positive_by_n) std::cout << ' ' << n << '=' << c;
    std::cout << "\n";

    if (!out_path.empty()) {
        std::ostringstream report;
        write_report(result.records, format == "json" ? ReportFormat::json : ReportFormat::csv, report);
        write_output(out_path, report.str());
    }
    return 0;
}

int cmd_skeleton_out(const TwoSkeleton& sk, const std::string& out_path) {
    std::ostringstream out;
    write_skeleton_json(sk, out);
    write_output(out_path, out.str());
    return 0;
}

TwoSkeleton read_skeleton_input(const std::string& input, const char* op) {
    std::string data = read_input(input);
    std::istringstream in(data);
    if (looks_like_json(data)) {
        SkeletonDocument doc = read_skeleton_json(in);
        if (doc.has_faces()) return doc.skeleton();
        return attach_faces(doc.graph, {});
    }
    PlanarCodeReader reader(in);
    auto rot = reader.next();
    if (!rot) fail(op, "planar_code input holds no graphs");
    TwoSkeleton sk = faces_from_rotation(*rot);
    if (reader.next()) fail(op, "input holds more than one graph; this command takes exactly one skeleton");
    return sk;
}

int cmd_tube_verify(int k_max, double tol) {
    if (k_max < 1) fail("tube-verify", "need --k-max >= 1, got " + std::to_string(k_max));
    double worst_dr = 0.0, worst_dk = 0.0, worst_recon = 0.0;
    std::printf("%4s %12s %12s %12s %12s %12s\n", "k", "dr", "dk", "recon", "boundary_gap", "min_kappa");
    for (int k = 1; k <= k_max; ++k) {
        TwoSkeleton sk = tube_skeleton(k);
        TubeLayout layout{k};
        LaplacianSystem sys(sk.graph);
        Eigen::MatrixXd R = all_pairs_resistance(sys);
        ResistanceProfile prof = resistance_profile(sk.graph);

        double dr = 0.0;
        double r_cap = closed_form_resistance(k, TubeResistanceKind::cap);
        for (int c = 0; c < 3; ++c) {
            dr = std::max(dr, std::abs(R(layout.x(), layout.vertex(c, 0)) - r_cap));
            dr = std::max(dr, std::abs(R(layout.y(), layout.vertex(c, k - 1)) - r_cap));
        }
        for (int j = 0; j < k; ++j) {
            double r_cyc = closed_form_resistance(k, TubeResistanceKind::cycle, j);
            for (int c = 0; c < 3; ++c)
                dr = std::max(dr, std::abs(R(layout.vertex(c, j), layout.vertex((c + 1) % 3, j)) - r_cyc));
        }
        for (int j = 0; j + 1 < k; ++j) {
            double r_path = closed_form_resistance(k, TubeResistanceKind::path, j);
            for (int c = 0; c < 3; ++c)
                dr = std::max(dr, std::abs(R(layout.vertex(c, j), layout.vertex(c, j + 1)) - r_path));
        }

        double dk = 0.0;
        double kappa_cap = closed_form_curvature(k, TubeVertexRole::cap);
        double min_kappa = kappa_cap;
        dk = std::max(dk, std::abs(prof.per_vertex[layout.x()] - kappa_cap));
        dk = std::max(dk, std::abs(prof.per_vertex[layout.y()] - kappa_cap));
        for (int j = 0; j < k; ++j) {
            double kappa = closed_form_curvature(k, TubeVertexRole::level, j);
            min_kappa = std::min(min_kappa, kappa);
            for (int c = 0; c < 3; ++c)
                dk = std::max(dk, std::abs(prof.per_vertex[layout.vertex(c, j)] - kappa));
        }

        TubeBlocks blocks = tube_blocks(k);
        int n = layout.n();
        Eigen::MatrixXd middle = Eigen::MatrixXd::Zero(n, n);
        middle.topLeftCorner(k + 2, k + 2) = blocks.delta0;
        middle.block(k + 2, k + 2, k, k) = blocks.delta3;
        middle.bottomRightCorner(k, k) = blocks.delta3;
        double recon = (blocks.U * middle * blocks.U.transpose() - sys.laplacian()).cwiseAbs().maxCoeff();

        double gap = std::abs(interior_formula_curvature(k, 0) - closed_form_curvature(k, TubeVertexRole::level, 0));
        if (k >= 2)
            gap = std::max(gap, std::abs(interior_formula_curvature(k, k - 1) -
                                         closed_form_curvature(k, TubeVertexRole::level, k - 1)));

        std::printf("%4d %12.3e %12.3e %12.3e %12.3e %12.6f\n", k, dr, dk, recon, gap, min_kappa);
        worst_dr = std::max(worst_dr, dr);
        worst_dk = std::max(worst_dk, dk);
        worst_recon = std::max(worst_recon, recon);
    }
    bool ok = worst_dr <= tol && worst_dk <= tol && worst_recon <= tol;
    std::printf("tube-verify: k=1..%d max_dr=%.3e max_dk=%.3e max_recon=%.3e -> %s\n", k_max, worst_dr, worst_dk,
                worst_recon, ok ? "PASS" : "FAIL");
    if (!ok) fail("tube-verify", "closed forms disagree with the numeric profile beyond --tol");
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"curvature toolkit for convex polytope skeletons"};
    app.require_subcommand(1);

    // curv
    auto* curv = app.add_subcommand("curv", "compute curvature profiles for one skeleton file");
    std::string curv_input = "-", curv_format = "json", curv_out = "-";
    bool curv_forman = false, curv_resistance = false;
    curv->add_option("--input", curv_input, "skeleton JSON or planar_code file, - for stdin");
    curv->add_flag("--forman", curv_forman, "edge Forman curvature profile");
    curv->add_flag("--resistance", curv_resistance, "vertex resistance curvature profile");
    curv->add_option("--format", curv_format, "output format")->check(CLI::IsMember({"csv", "json"}));
    curv->add_option("--out", curv_out, "output path, - for stdout");
    curv->callback([&] { cmd_curv(curv_input, curv_forman, curv_resistance, curv_format, curv_out); });

    // scan
    auto* scan = app.add_subcommand("scan", "scan a planar_code corpus for curvature-positive skeletons");
    std::string scan_input = "-", scan_pred = "forman-positive", scan_out, scan_format = "csv";
    int scan_jobs = 0;
    scan->add_option("--input", scan_input, "planar_code corpus, - for stdin");
    scan->add_option("--predicate", scan_pred, "positivity predicate")
        ->check(CLI::IsMember({"forman-positive", "resistance-positive", "both"}));
    scan->add_option("--jobs", scan_jobs, "worker count, 0 = hardware default");
    scan->add_option("--out", scan_out, "write the full per-graph report here");
    scan->add_option("--format", scan_format, "report format")->check(CLI::IsMember({"csv", "json"}));
    scan->callback([&] { cmd_scan(scan_input, scan_pred, scan_jobs, scan_out, scan_format); });

    // gen
    auto* gen = app.add_subcommand("gen", "emit a family member as skeleton JSON");
    gen->require_subcommand(1);
    std::string gen_out = "-";
    gen->add_option("--out", gen_out, "output path, - for stdout");

    int gen_dim = 3, gen_n = 3, gen_k = 1, gen_vertex = 0;
    std::string gen_input = "-";
    auto* g_simplex = gen->add_subcommand("simplex", "d-simplex skeleton");
    g_simplex->add_option("--dim", gen_dim, "dimension")->required();
    g_simplex->callback([&] { cmd_skeleton_out(simplex_skeleton(gen_dim), gen_out); });
    auto* g_cube = gen->add_subcommand("hypercube", "d-cube skeleton");
    g_cube->add_option("--dim", gen_dim, "dimension")->required();
    g_cube->callback([&] { cmd_skeleton_out(hypercube_skeleton(gen_dim), gen_out); });
    auto* g_prism = gen->add_subcommand("prism", "n-gonal prism");
    g_prism->add_option("--n", gen_n, "gon count")->required();
    g_prism->callback([&] { cmd_skeleton_out(prism_skeleton(gen_n), gen_out); });
    auto* g_pyramid = gen->add_subcommand("pyramid", "n-gonal pyramid");
    g_pyramid->add_option("--n", gen_n, "gon count")->required();
    g_pyramid->callback([&] { cmd_skeleton_out(pyramid_skeleton(gen_n), gen_out); });
    auto* g_cupola = gen->add_subcommand("cupola", "square cupola");
    g_cupola->callback([&] { cmd_skeleton_out(square_cupola_skeleton(), gen_out); });
    auto* g_tube = gen->add_subcommand("tube", "k-pointed tube");
    g_tube->add_option("--k", gen_k, "level count")->required();
    g_tube->callback([&] { cmd_skeleton_out(tube_skeleton(gen_k), gen_out); });
    auto* g_delta = gen->add_subcommand("delta-expand", "vertex expansion of an input skeleton");
    g_delta->add_option("--input", gen_input, "skeleton JSON with faces, - for stdin");
    g_delta->add_option("--vertex", gen_vertex, "degree-3 vertex to expand")->required();
    g_delta->callback([&] {
        TwoSkeleton sk = read_skeleton_input(gen_input, "delta-expand");
        cmd_skeleton_out(delta_expansion(sk, gen_vertex), gen_out);
    });

    // dual
    auto* dual = app.add_subcommand("dual", "planar dual of a polyhedral skeleton");
    std::string dual_input = "-", dual_out = "-";
    dual->add_option("--input", dual_input, "skeleton JSON or planar_code file, - for stdin");
    dual->add_option("--out", dual_out, "output path, - for stdout");
    dual->callback([&] {
        TwoSkeleton sk = read_skeleton_input(dual_input, "dual");
        cmd_skeleton_out(planar_dual(sk).skeleton, dual_out);
    });

    // tube-verify
    auto* tube = app.add_subcommand("tube-verify", "check tube closed forms against the numeric module");
    int tube_kmax = 50;
    double tube_tol = 1e-9;
    tube->add_option("--k-max", tube_kmax, "verify k = 1..k-max");
    tube->add_option("--tol", tube_tol, "mismatch tolerance");
    tube->callback([&] { cmd_tube_verify(tube_kmax, tube_tol); });

    // dot
    auto* dot = app.add_subcommand("dot", "export a skeleton as DOT");
    std::string dot_input = "-", dot_label = "none", dot_out = "-";
    dot->add_option("--input", dot_input, "skeleton JSON or planar_code file, - for stdin");
    dot->add_option("--label", dot_label, "label mode")->check(CLI::IsMember({"none", "forman", "resistance"}));
    dot->add_option("--out", dot_out, "output path, - for stdout");
    dot->callback([&] {
        TwoSkeleton sk = read_skeleton_input(dot_input, "dot");
        DotLabels labels = DotLabels::none;
        if (dot_label == "forman") labels = DotLabels::forman;
        if (dot_label == "resistance") labels = DotLabels::resistance;
        write_output(dot_out, export_dot(sk, labels));
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace polycurv
