#include "support/testsupport.hpp"

#include "polycurv/common.hpp"
#include "polycurv/families.hpp"
#include "polycurv/io.hpp"

#include <Eigen/Dense>

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace polycurv::testsupport {

std::string synthetic_corpus(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::ostringstream out;
    write_planar_code_header(out);
    for (int i = 0; i < count; ++i) {
        TwoSkeleton sk = (rng() & 1u) ? hypercube_skeleton(3) : simplex_skeleton(3);
        int steps = static_cast<int>(rng() % 7u);
        for (int t = 0; t < steps; ++t) {
            int v = std::uniform_int_distribution<int>(0, sk.graph.n - 1)(rng);
            sk = delta_expansion(sk, v);
        }
        encode_planar_code(rotation_from_skeleton(sk), out);
    }
    return out.str();
}

Graph random_connected_graph(int n, double extra_prob, std::mt19937& rng) {
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    std::shuffle(label.begin(), label.end(), rng);

    std::set<std::pair<int, int>> have;
    std::vector<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        auto e = std::minmax(u, v);
        if (have.insert(e).second) edges.push_back(e);
    };
    for (int i = 1; i < n; ++i) add(label[i], label[std::uniform_int_distribution<int>(0, i - 1)(rng)]);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!have.count({u, v}) && unif(rng) < extra_prob) add(u, v);
    return build_graph(n, edges);
}

TwoSkeleton octahedron_skeleton() {
    // K_{2,2,2} with antipodal pairs (0,1), (2,3), (4,5).
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    std::vector<std::vector<int>> faces = {{0, 2, 4}, {0, 4, 3}, {0, 3, 5}, {0, 5, 2},
                                           {1, 4, 2}, {1, 3, 4}, {1, 5, 3}, {1, 2, 5}};
    return attach_faces(build_graph(6, edges), faces);
}

TwoSkeleton icosahedron_skeleton() {
    // Gyroelongated pentagonal bipyramid: top ring t_i = i, bottom ring
    // b_i = 5+i, apexes 10 (top) and 11 (bottom).
    auto t = [](int i) { return i % 5; };
    auto b = [](int i) { return 5 + (i % 5); };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(t(i), t(i + 1));
        edges.emplace_back(b(i), b(i + 1));
        edges.emplace_back(t(i), b(i));
        edges.emplace_back(b(i), t(i + 1));
        edges.emplace_back(10, t(i));
        edges.emplace_back(11, b(i));
        faces.push_back({t(i), t(i + 1), 10});
        faces.push_back({b(i), b(i + 1), 11});
        faces.push_back({t(i), b(i), t(i + 1)});
        faces.push_back({b(i), t(i + 1), b(i + 1)});
    }
    return attach_faces(build_graph(12, edges), faces);
}

TwoSkeleton dodecahedron_skeleton() {
    return planar_dual(icosahedron_skeleton()).skeleton;
}

long long forman_curvature_bruteforce(const TwoSkeleton& sk, int e) {
    const Graph& g = sk.graph;
    auto [u, v] = g.edges[e];
    std::set<int> faces_e(sk.edge_faces[e].begin(), sk.edge_faces[e].end());
    long long parallels = 0;
    for (int o = 0; o < g.m(); ++o) {
        if (o == e) continue;
        auto [a, b] = g.edges[o];
        bool share_vertex = a == u || a == v || b == u || b == v;
        bool share_face = false;
        for (int f : sk.edge_faces[o])
            if (faces_e.count(f)) share_face = true;
        if (share_vertex != share_face) ++parallels;
    }
    return static_cast<long long>(sk.edge_faces[e].size()) + 2 - parallels;
}

double grounded_resistance(const Graph& g, int u, int v) {
    int n = g.n;
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (int w = 0; w < n; ++w) lap(w, w) = g.degree(w);
    for (auto [a, b] : g.edges) {
        lap(a, b) = -1.0;
        lap(b, a) = -1.0;
    }
    std::vector<int> keep;
    for (int w = 0; w < n; ++w)
        if (w != v) keep.push_back(w);
    Eigen::MatrixXd reduced(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) reduced(i, j) = lap(keep[i], keep[j]);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n - 1);
    int iu = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), u) - keep.begin());
    rhs(iu) = 1.0;
    Eigen::VectorXd x = reduced.partialPivLu().solve(rhs);
    return x(iu);
}

double flow_energy(const Graph& g, int u, int v) {
    int n = g.n;
    int m = g.m();
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), order;
    std::vector<char> tree_edge(m, 0), seen(n, 0);
    order.push_back(u);
    seen[u] = 1;
    for (size_t head = 0; head < order.size(); ++head) {
        int a = order[head];
        for (int b : g.adj[a]) {
            if (seen[b]) continue;
            seen[b] = 1;
            parent[b] = a;
            parent_edge[b] = g.edge_id(a, b);
            tree_edge[parent_edge[b]] = 1;
            depth[b] = depth[a] + 1;
            order.push_back(b);
        }
    }

    // Sign of a unit step from x toward its tree parent, relative to the
    // canonical (smaller, larger) edge orientation.
    auto step_sign = [&](int x) { return g.edges[parent_edge[x]].first == x ? 1.0 : -1.0; };

    Eigen::VectorXd base = Eigen::VectorXd::Zero(m);
    for (int x = v; x != u; x = parent[x]) base(parent_edge[x]) -= step_sign(x);

    std::vector<int> nontree;
    for (int e = 0; e < m; ++e)
        if (!tree_edge[e]) nontree.push_back(e);
    if (nontree.empty()) return base.squaredNorm();

    // One circulation per non-tree edge (a, b): the edge itself a->b, then
    // the tree path b -> lca -> a.
    Eigen::MatrixXd cycles = Eigen::MatrixXd::Zero(m, nontree.size());
    for (size_t col = 0; col < nontree.size(); ++col) {
        auto [a, b] = g.edges[nontree[col]];
        cycles(nontree[col], col) = 1.0;
        int x = a, y = b;
        while (depth[x] > depth[y]) {
            cycles(parent_edge[x], col) -= step_sign(x);
            x = parent[x];
        }
        while (depth[y] > depth[x]) {
            cycles(parent_edge[y], col) += step_sign(y);
            y = parent[y];
        }
        while (x != y) {
            cycles(parent_edge[x], col) -= step_sign(x);
            cycles(parent_edge[y], col) += step_sign(y);
            x = parent[x];
            y = parent[y];
        }
    }
    Eigen::VectorXd coeff = (cycles.transpose() * cycles).llt().solve(-cycles.transpose() * base);
    return (base + cycles * coeff).squaredNorm();
}

std::string fixture_path(const std::string& name) {
    return std::string(POLYCURV_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("testsupport", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TwoSkeleton load_fixture_skeleton(const std::string& name) {
    std::istringstream in(read_file(fixture_path(name)));
    PlanarCodeReader reader(in);
    auto rot = reader.next();
    if (!rot) fail("testsupport", "fixture " + name + " holds no graphs");
    return faces_from_rotation(*rot);
}

}  // namespace polycurv::testsupport
