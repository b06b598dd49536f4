#include "polycurv/resistance.hpp"

#include "polycurv/common.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

namespace polycurv {

namespace {

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int v = 0; v < g.n; ++v) lap(v, v) = g.degree(v);
    for (auto [u, v] : g.edges) {
        lap(u, v) = -1.0;
        lap(v, u) = -1.0;
    }
    return lap;
}

}  // namespace

LaplacianSystem::LaplacianSystem(const Graph& g) : n_(g.n), lap_(laplacian_matrix(g)) {
    if (!g.connected) fail("laplacian_system", "graph is disconnected; resistances are undefined");
    if (g.n == 0) fail("laplacian_system", "empty graph");
    Eigen::MatrixXd completed = lap_;
    completed.array() += 1.0 / n_;
    llt_.compute(completed);
    if (llt_.info() != Eigen::Success) fail("laplacian_system", "factorization failed");
}

Eigen::VectorXd LaplacianSystem::solve(const Eigen::VectorXd& b) const {
    return llt_.solve(b);
}

LaplacianSystem laplacian_system(const Graph& g) {
    return LaplacianSystem(g);
}

double effective_resistance(const LaplacianSystem& sys, int u, int v) {
    if (u < 0 || u >= sys.n() || v < 0 || v >= sys.n())
        fail("effective_resistance", "invalid vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) return 0.0;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(sys.n());
    b(u) = 1.0;
    b(v) = -1.0;
    Eigen::VectorXd x = sys.solve(b);
    return x(u) - x(v);
}

namespace {

// R from the completed inverse M: since the quadratic form of J/n vanishes on
// 1_u - 1_v, r_uv = M_uu + M_vv - 2 M_uv directly.
Eigen::MatrixXd resistance_from_inverse(const Eigen::MatrixXd& M) {
    int n = static_cast<int>(M.rows());
    Eigen::MatrixXd R(n, n);
    for (int u = 0; u < n; ++u) {
        R(u, u) = 0.0;
        for (int v = u + 1; v < n; ++v) {
            double r = M(u, u) + M(v, v) - 2.0 * M(u, v);
            R(u, v) = r;
            R(v, u) = r;
        }
    }
    return R;
}

Eigen::MatrixXd completed_inverse(const LaplacianSystem& sys, bool parallel) {
    int n = sys.n();
    Eigen::MatrixXd M(n, n);
    // Column solves are independent and the factorization is read-only, so
    // the parallel path distributes columns; both paths run the identical
    // per-column arithmetic and agree bit for bit.
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd b = Eigen::VectorXd::Unit(n, j);
            M.col(j) = sys.solve(b);
        }
    } else {
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd b = Eigen::VectorXd::Unit(n, j);
            M.col(j) = sys.solve(b);
        }
    }
    return M;
}

}  // namespace

Eigen::MatrixXd all_pairs_resistance(const LaplacianSystem& sys) {
    return resistance_from_inverse(completed_inverse(sys, true));
}

Eigen::MatrixXd all_pairs_resistance_serial(const LaplacianSystem& sys) {
    return resistance_from_inverse(completed_inverse(sys, false));
}

double resistance_curvature(const LaplacianSystem& sys, const Graph& g, int v) {
    if (v < 0 || v >= g.n) fail("resistance_curvature", "invalid vertex " + std::to_string(v));
    double sum = 0.0;
    for (int u : g.adj[v]) sum += effective_resistance(sys, v, u);
    return 1.0 - 0.5 * sum;
}

namespace {

ResistanceProfile profile_impl(const Graph& g, bool parallel) {
    if (g.n == 0) fail("resistance_profile", "empty graph");
    LaplacianSystem sys(g);
    Eigen::MatrixXd M = completed_inverse(sys, parallel);

    ResistanceProfile p;
    p.per_edge.resize(g.m());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        p.per_edge[e] = M(u, u) + M(v, v) - 2.0 * M(u, v);
    }
    p.per_vertex.assign(g.n, 1.0);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        p.per_vertex[u] -= 0.5 * p.per_edge[e];
        p.per_vertex[v] -= 0.5 * p.per_edge[e];
    }
    p.min = *std::min_element(p.per_vertex.begin(), p.per_vertex.end());
    p.positive = p.min > kPositivityStrictness;
    for (int v = 0; v < g.n; ++v)
        if (std::abs(p.per_vertex[v]) <= kPositivityStrictness) p.boundary_vertices.push_back(v);
    return p;
}

}  // namespace

ResistanceProfile resistance_profile(const Graph& g) {
    return profile_impl(g, true);
}

ResistanceProfile resistance_profile_serial(const Graph& g) {
    return profile_impl(g, false);
}

double transitive_curvature(long long n) {
    if (n < 1) fail("transitive_curvature", "need n >= 1, got " + std::to_string(n));
    return 1.0 / static_cast<double>(n);
}

double path_upper_bound(const std::vector<int>& lengths) {
    if (lengths.empty()) fail("path_upper_bound", "empty path family");
    double s = 0.0;
    for (int len : lengths) {
        if (len < 1) fail("path_upper_bound", "nonpositive path length " + std::to_string(len));
        s += 1.0 / len;
    }
    return 1.0 / s;
}

namespace {

Rational simple3_sum(const std::vector<int>& lengths, const char* op) {
    if (lengths.size() != 3)
        fail(op, "need exactly 3 face lengths, got " + std::to_string(lengths.size()));
    for (int len : lengths)
        if (len < 3) fail(op, "face length " + std::to_string(len) + " below 3");
    Rational s = 0;
    for (int len : lengths) s += Rational(1, len - 1);
    Rational sum = 0;
    for (int len : lengths) {
        Rational l1 = len - 1;
        sum += l1 / (l1 * (s + 1) - 1);
    }
    return sum;
}

}  // namespace

double simple3_lower_bound(const std::vector<int>& lengths) {
    Rational bound = 1 - simple3_sum(lengths, "simple3_lower_bound") / 2;
    return bound.convert_to<double>();
}

bool face_vector_is_positive(const std::vector<int>& lengths) {
    return simple3_sum(lengths, "face_vector_is_positive") < 2;
}

double submatrix_lower_bound(const Graph& g, const std::vector<int>& subset, int u, int v) {
    std::set<int> A(subset.begin(), subset.end());
    for (int a : A)
        if (a < 0 || a >= g.n) fail("submatrix_lower_bound", "subset vertex " + std::to_string(a) + " out of range");
    if (!A.count(u) || !A.count(v))
        fail("submatrix_lower_bound",
             "endpoints (" + std::to_string(u) + "," + std::to_string(v) + ") must lie in the subset");
    if (u == v) fail("submatrix_lower_bound", "endpoints coincide");

    // L_A is block diagonal over the components of the induced subgraph.  A
    // block is singular exactly when its component keeps all its neighbors
    // inside A (then it is a whole Laplacian block); those get the same J/|S|
    // completion trick, everything else is positive definite as is.
    std::vector<char> in_A(g.n, 0);
    for (int a : A) in_A[a] = 1;
    std::vector<char> seen(g.n, 0);
    double qf = 0.0;
    for (int start : A) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            comp.push_back(a);
            for (int b : g.adj[a])
                if (in_A[b] && !seen[b]) {
                    seen[b] = 1;
                    q.push(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        int s = static_cast<int>(comp.size());
        Eigen::VectorXd b = Eigen::VectorXd::Zero(s);
        for (int i = 0; i < s; ++i) {
            if (comp[i] == u) b(i) = 1.0;
            if (comp[i] == v) b(i) = -1.0;
        }
        if (b.isZero(0.0)) continue;

        bool closed = true;
        for (int a : comp)
            for (int w : g.adj[a])
                if (!in_A[w]) closed = false;
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(s, s);
        for (int i = 0; i < s; ++i) {
            block(i, i) = g.degree(comp[i]);
            for (int j = i + 1; j < s; ++j)
                if (g.has_edge(comp[i], comp[j])) {
                    block(i, j) = -1.0;
                    block(j, i) = -1.0;
                }
        }
        if (closed) {
            block.array() += 1.0 / s;
            Eigen::VectorXd x = block.llt().solve(b);
            double shift = b.sum();
            qf += b.dot(x) - shift * shift / s;
        } else {
            Eigen::VectorXd x = block.llt().solve(b);
            qf += b.dot(x);
        }
    }
    return qf;
}

double degree_lower_bound(int du, int dv) {
    if (du < 1 || dv < 1)
        fail("degree_lower_bound", "degrees must be >= 1, got (" + std::to_string(du) + "," + std::to_string(dv) + ")");
    if (du == 1 && dv == 1)
        fail("degree_lower_bound", "both degrees equal to 1 are outside the bound's hypothesis");
    double first = static_cast<double>(du + dv - 2) / (static_cast<double>(du) * dv - 1);
    double second = 4.0 / (du + dv + 2);
    return std::max(first, second);
}

bool negative_curvature_criterion(const Graph& g, int v) {
    if (v < 0 || v >= g.n) fail("negative_curvature_criterion", "invalid vertex " + std::to_string(v));
    int dv = g.degree(v);
    if (dv < 2) return false;
    for (int u : g.adj[v])
        if (g.degree(u) > dv - 2) return false;
    return true;
}

long long resistance_diameter_bound(const Graph& g) {
    ResistanceProfile p = resistance_profile(g);
    int worst = static_cast<int>(std::min_element(p.per_vertex.begin(), p.per_vertex.end()) - p.per_vertex.begin());
    if (p.min <= 0.0)
        fail("resistance_diameter_bound",
             "curvature is not positive everywhere: kappa(" + std::to_string(worst) + ") = " + std::to_string(p.min));
    LaplacianSystem sys(g);
    Eigen::MatrixXd R = all_pairs_resistance(sys);
    Eigen::Map<const Eigen::VectorXd> kappa(p.per_vertex.data(), g.n);
    double quad = kappa.dot(R * kappa);
    double bound = std::sqrt(g.max_degree() * quad / p.min) * std::log(static_cast<double>(g.n));
    return static_cast<long long>(std::ceil(bound));
}

std::vector<int> greedy_edge_disjoint_paths(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
        fail("greedy_edge_disjoint_paths", "invalid endpoints (" + std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<char> alive(g.m(), 1);
    std::vector<int> lengths;
    while (true) {
        // Shortest path over the surviving edges; ascending neighbor order
        // keeps extraction deterministic.
        std::vector<int> parent(g.n, -2);
        std::queue<int> q;
        q.push(u);
        parent[u] = -1;
        while (!q.empty() && parent[v] == -2) {
            int a = q.front();
            q.pop();
            for (int b : g.adj[a]) {
                if (parent[b] != -2 || !alive[g.edge_id(a, b)]) continue;
                parent[b] = a;
                q.push(b);
            }
        }
        if (parent[v] == -2) break;
        int len = 0;
        for (int b = v; parent[b] != -1; b = parent[b]) {
            alive[g.edge_id(b, parent[b])] = 0;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

}  // namespace polycurv
