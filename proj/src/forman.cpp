#include "polycurv/forman.hpp"

#include "polycurv/families.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace polycurv {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

std::string edge_str(const Graph& g, int e) {
    return "(" + std::to_string(g.edges[e].first) + "," + std::to_string(g.edges[e].second) + ")";
}

bool sorted_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        a[i] < b[j] ? ++i : ++j;
    }
    return true;
}

}  // namespace

std::vector<int> parallel_neighbors(const TwoSkeleton& sk, int e) {
    const Graph& g = sk.graph;
    if (e < 0 || e >= g.m()) fail("parallel_neighbors", "invalid edge index " + std::to_string(e));
    auto [u, v] = g.edges[e];

    // Sorted face lists make the disjointness tests linear.
    std::vector<int> fe = sk.edge_faces[e];
    std::sort(fe.begin(), fe.end());

    // Candidates: edges meeting e at a vertex, plus edges of the faces at e.
    // Anything else shares neither a vertex nor a face and cannot qualify.
    std::set<int> candidates;
    for (int w : g.adj[u]) candidates.insert(g.edge_id(u, w));
    for (int w : g.adj[v]) candidates.insert(g.edge_id(v, w));
    for (int fid : fe) {
        const auto& vs = sk.faces[fid].vertices;
        int k = static_cast<int>(vs.size());
        for (int i = 0; i < k; ++i) candidates.insert(g.edge_id(vs[i], vs[(i + 1) % k]));
    }
    candidates.erase(e);

    std::vector<int> out;
    for (int e2 : candidates) {
        auto [a, b] = g.edges[e2];
        bool share_vertex = (a == u || a == v || b == u || b == v);
        std::vector<int> fe2 = sk.edge_faces[e2];
        std::sort(fe2.begin(), fe2.end());
        bool share_face = !sorted_disjoint(fe, fe2);
        if ((share_vertex && !share_face) || (share_face && !share_vertex)) out.push_back(e2);
    }
    return out;
}

long long forman_curvature(const TwoSkeleton& sk, int e) {
    if (e < 0 || e >= sk.graph.m()) fail("forman_curvature", "invalid edge index " + std::to_string(e));
    return static_cast<long long>(sk.edge_faces[e].size()) + 2 -
           static_cast<long long>(parallel_neighbors(sk, e).size());
}

namespace {

FormanProfile assemble_profile(std::vector<long long> per_edge) {
    FormanProfile p;
    p.per_edge = std::move(per_edge);
    p.min = *std::min_element(p.per_edge.begin(), p.per_edge.end());
    BigInt sum = 0;
    for (long long c : p.per_edge) sum += c;
    p.average = Rational(sum, BigInt(p.per_edge.size()));
    p.positive = p.min >= 1;
    return p;
}

}  // namespace

FormanProfile forman_profile(const TwoSkeleton& sk) {
    int m = sk.graph.m();
    if (m == 0) fail("forman_profile", "graph has no edges");
    std::vector<long long> per_edge(m);
#pragma omp parallel for schedule(dynamic, 16)
    for (int e = 0; e < m; ++e) per_edge[e] = forman_curvature(sk, e);
    return assemble_profile(std::move(per_edge));
}

FormanProfile forman_profile_serial(const TwoSkeleton& sk) {
    int m = sk.graph.m();
    if (m == 0) fail("forman_profile_serial", "graph has no edges");
    std::vector<long long> per_edge(m);
    for (int e = 0; e < m; ++e) per_edge[e] = forman_curvature(sk, e);
    return assemble_profile(std::move(per_edge));
}

Rational average_via_flags(const FlagCounts& fc) {
    if (fc.f1 <= 0) fail("average_via_flags", "f1 must be positive");
    BigInt num = 6 * BigInt(fc.f02) + 4 * BigInt(fc.f1);
    for (auto [k, cnt] : fc.d_hist) num -= BigInt(k) * k * cnt;
    for (auto [k, cnt] : fc.p_hist) num -= BigInt(k) * k * cnt;
    return Rational(num, BigInt(fc.f1));
}

Rational simplicial_average_bound(long long f0, long long f1, long long f2, bool simplicial_5_polytope) {
    if (f0 <= 0) fail("simplicial_average_bound", "f0 must be positive");
    if (f1 <= 0) fail("simplicial_average_bound", "f1 must be positive");
    if (simplicial_5_polytope) f2 = 4 * f1 - 10 * f0 + 20;
    // (9 f2 + 4 f1 - 4 f1^2 / f0) / f1, kept exact.
    Rational num = Rational(9) * f2 + Rational(4) * f1 - Rational(4 * BigInt(f1) * f1, BigInt(f0));
    return num / f1;
}

long long forman_diameter_bound(const TwoSkeleton& sk, const Rational& c) {
    if (c <= 0) fail("forman_diameter_bound", "c must be positive");
    int m = sk.graph.m();
    if (m == 0) fail("forman_diameter_bound", "graph has no edges");
    size_t max_faces = 0;
    for (int e = 0; e < m; ++e) {
        Rational curv(forman_curvature(sk, e));
        if (curv < c)
            fail("forman_diameter_bound", "edge " + edge_str(sk.graph, e) + " has curvature " + curv.str() +
                                              " below c = " + c.str());
        max_faces = std::max(max_faces, sk.edge_faces[e].size());
    }
    Rational bound = Rational(2) / c * Rational(1 + BigInt(max_faces));
    BigInt fl = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
    return fl.convert_to<long long>();
}

BigInt moore_bound(int max_degree, int diameter) {
    if (max_degree <= 2)
        fail("moore_bound", "max degree " + std::to_string(max_degree) + " is outside the bound's hypothesis (need >= 3)");
    if (diameter < 1) fail("moore_bound", "diameter must be >= 1, got " + std::to_string(diameter));
    BigInt d(max_degree);
    BigInt pw = boost::multiprecision::pow(BigInt(max_degree - 1), static_cast<unsigned>(diameter));
    return (d * pw - 2) / (d - 2);
}

VertexCountBound vertex_count_bound(const Rational& rho) {
    if (rho < 3) fail("vertex_count_bound", "rho must be >= 3, got " + rho.str());
    VertexCountBound out;

    Rational three_rho = rho * 3;
    bool integral = boost::multiprecision::denominator(three_rho) == 1;
    if (integral) {
        // Exact evaluation: with 3r integral all exponents are integers and
        // the whole expression is a rational number.
        unsigned e = boost::multiprecision::numerator(three_rho).convert_to<unsigned>();
        Rational a = Rational(boost::multiprecision::pow(BigInt(2), e + 1)) * rho;
        Rational den = a / 2 - 1;
        Rational b = a - 1;
        Rational bp = 1;
        unsigned expo = boost::multiprecision::numerator(Rational(6) * rho + 4).convert_to<unsigned>();
        for (unsigned i = 0; i < expo; ++i) bp *= b;
        Rational value = (a * bp - 2) / den;
        out.has_exact = true;
        out.exact_floor = boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
        Float50 v = Float50(boost::multiprecision::numerator(value)) / Float50(boost::multiprecision::denominator(value));
        out.log10_bound = log10(v).convert_to<double>();
    } else {
        Float50 r(boost::multiprecision::numerator(rho));
        r /= Float50(boost::multiprecision::denominator(rho));
        Float50 a = pow(Float50(2), 3 * r + 1) * r;
        Float50 value = (a * pow(a - 1, 4 + 6 * r) - 2) / (a / 2 - 1);
        out.log10_bound = log10(value).convert_to<double>();
    }
    return out;
}

std::vector<std::string> screen_low_dimension(const TwoSkeleton& sk, int dim) {
    std::vector<std::string> violations;
    const Graph& g = sk.graph;
    if (dim == 3) {
        if (!sk.polyhedral) fail("screen_low_dimension", "dim-3 screen needs a polyhedral skeleton");
        int max_deg = g.max_degree();
        int max_face = 0;
        for (const auto& face : sk.faces) max_face = std::max(max_face, face.size());
        if (max_deg <= 5 && max_face <= 5) return violations;
        static const TwoSkeleton hex_pyramid = pyramid_skeleton(6);
        if (isomorphic(g, hex_pyramid.graph)) return violations;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) >= 6)
                violations.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
        for (int fid = 0; fid < sk.f(); ++fid)
            if (sk.faces[fid].size() >= 6)
                violations.push_back("face " + std::to_string(fid) + " has " + std::to_string(sk.faces[fid].size()) +
                                     " edges");
        return violations;
    }
    if (dim == 4) {
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) > 12)
                violations.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
        return violations;
    }
    fail("screen_low_dimension", "dim must be 3 or 4, got " + std::to_string(dim));
}

}  // namespace polycurv
