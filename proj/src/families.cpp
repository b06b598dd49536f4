#include "polycurv/families.hpp"

#include "polycurv/common.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace polycurv {

TwoSkeleton simplex_skeleton(int d) {
    if (d < 2) fail("simplex_skeleton", "need d >= 2, got " + std::to_string(d));
    int n = d + 1;
    std::vector<std::vector<int>> faces;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) faces.push_back({a, b, c});
    return attach_faces(complete_graph(n), faces);
}

TwoSkeleton hypercube_skeleton(int d) {
    if (d < 2) fail("hypercube_skeleton", "need d >= 2, got " + std::to_string(d));
    int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            if (!(v & (1 << i))) edges.emplace_back(v, v | (1 << i));
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            int bi = 1 << i, bj = 1 << j;
            for (int v = 0; v < n; ++v)
                if (!(v & bi) && !(v & bj)) faces.push_back({v, v | bi, v | bi | bj, v | bj});
        }
    return attach_faces(build_graph(n, edges), faces);
}

TwoSkeleton polygon_skeleton(int n) {
    if (n < 3) fail("polygon_skeleton", "need n >= 3, got " + std::to_string(n));
    std::vector<int> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = i;
    return attach_faces(cycle_graph(n), {ring});
}

TwoSkeleton prism_skeleton(int n) {
    if (n < 3) fail("prism_skeleton", "need n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        edges.emplace_back(i, j);          // bottom ring
        edges.emplace_back(n + i, n + j);  // top ring
        edges.emplace_back(i, n + i);      // vertical
    }
    std::vector<std::vector<int>> faces;
    std::vector<int> bottom(n), top(n);
    for (int i = 0; i < n; ++i) {
        bottom[i] = i;
        top[i] = n + i;
    }
    faces.push_back(bottom);
    faces.push_back(top);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
    }
    return attach_faces(build_graph(2 * n, edges), faces);
}

TwoSkeleton pyramid_skeleton(int n) {
    if (n < 3) fail("pyramid_skeleton", "need n >= 3, got " + std::to_string(n));
    int apex = n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> base(n);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        base[i] = i;
        edges.emplace_back(i, j);
        edges.emplace_back(i, apex);
        faces.push_back({i, j, apex});
    }
    faces.push_back(base);
    return attach_faces(build_graph(n + 1, edges), faces);
}

TwoSkeleton square_cupola_skeleton() {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> faces;
    std::vector<int> octagon(8), square{8, 9, 10, 11};
    for (int i = 0; i < 8; ++i) {
        octagon[i] = i;
        edges.emplace_back(i, (i + 1) % 8);
    }
    for (int t = 0; t < 4; ++t) {
        edges.emplace_back(8 + t, 8 + (t + 1) % 4);
        edges.emplace_back(8 + t, 2 * t);
        edges.emplace_back(8 + t, 2 * t + 1);
        faces.push_back({2 * t, 2 * t + 1, 8 + t});                          // triangle
        faces.push_back({2 * t + 1, (2 * t + 2) % 8, 8 + (t + 1) % 4, 8 + t});  // slant quad
    }
    faces.push_back(octagon);
    faces.push_back(square);
    return attach_faces(build_graph(12, edges), faces);
}

TwoSkeleton tube_skeleton(int k) {
    if (k < 1) fail("tube_skeleton", "need k >= 1, got " + std::to_string(k));
    TubeLayout t{k};
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> faces;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < 3; ++i) {
            edges.emplace_back(t.vertex(i, j), t.vertex((i + 1) % 3, j));
            if (j + 1 < k) edges.emplace_back(t.vertex(i, j), t.vertex(i, j + 1));
        }
    for (int i = 0; i < 3; ++i) {
        int i2 = (i + 1) % 3;
        edges.emplace_back(t.x(), t.vertex(i, 0));
        edges.emplace_back(t.y(), t.vertex(i, k - 1));
        faces.push_back({t.x(), t.vertex(i, 0), t.vertex(i2, 0)});
        faces.push_back({t.y(), t.vertex(i, k - 1), t.vertex(i2, k - 1)});
        for (int j = 0; j + 1 < k; ++j)
            faces.push_back({t.vertex(i, j), t.vertex(i2, j), t.vertex(i2, j + 1), t.vertex(i, j + 1)});
    }
    return attach_faces(build_graph(t.n(), edges), faces);
}

TwoSkeleton delta_expansion(const TwoSkeleton& sk, int v) {
    if (!sk.polyhedral) fail("delta_expansion", "skeleton is not polyhedral");
    const Graph& g = sk.graph;
    if (v < 0 || v >= g.n) fail("delta_expansion", "invalid vertex " + std::to_string(v));
    if (g.degree(v) != 3)
        fail("delta_expansion", "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", need 3");

    // Former neighbors in ascending order; u[0] reuses v's index, u[1] and
    // u[2] are fresh, and u[i] keeps the edge to nb[i].
    std::array<int, 3> nb{g.adj[v][0], g.adj[v][1], g.adj[v][2]};
    std::array<int, 3> u{v, g.n, g.n + 1};
    auto u_of = [&](int neighbor) {
        for (int i = 0; i < 3; ++i)
            if (nb[i] == neighbor) return u[i];
        fail("delta_expansion", "internal: neighbor matching failed");
    };

    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges)
        if (a != v && b != v) edges.emplace_back(a, b);
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(u[i], nb[i]);
        edges.emplace_back(u[i], u[(i + 1) % 3]);
    }

    std::vector<std::vector<int>> faces;
    for (const auto& face : sk.faces) {
        const auto& vs = face.vertices;
        int kf = static_cast<int>(vs.size());
        auto pos = std::find(vs.begin(), vs.end(), v);
        if (pos == vs.end()) {
            faces.push_back(vs);
            continue;
        }
        // Face passes (a, v, b); v becomes the two matching corner vertices,
        // the one adjacent to a first.
        int i = static_cast<int>(pos - vs.begin());
        int a = vs[(i + kf - 1) % kf], b = vs[(i + 1) % kf];
        std::vector<int> grown;
        grown.reserve(kf + 1);
        for (int s = 0; s < kf; ++s) {
            int w = vs[(i + s) % kf];
            if (w == v) {
                grown.push_back(u_of(a));
                grown.push_back(u_of(b));
            } else {
                grown.push_back(w);
            }
        }
        faces.push_back(std::move(grown));
    }
    faces.push_back({u[0], u[1], u[2]});
    return attach_faces(build_graph(g.n + 2, edges), faces);
}

bool DeltaHypotheses::all() const {
    return std::all_of(condition.begin(), condition.end(), [](bool c) { return c; });
}

DeltaHypotheses delta_hypotheses(const TwoSkeleton& sk, int v) {
    if (!sk.polyhedral) fail("delta_hypotheses", "skeleton is not polyhedral");
    const Graph& g = sk.graph;
    for (int w = 0; w < g.n; ++w)
        if (g.degree(w) != 3)
            fail("delta_hypotheses", "skeleton is not simple: vertex " + std::to_string(w) + " has degree " +
                                         std::to_string(g.degree(w)));
    if (v < 0 || v >= g.n) fail("delta_hypotheses", "invalid vertex " + std::to_string(v));

    DeltaHypotheses out;
    auto& c = out.condition;
    c.fill(true);

    std::vector<std::vector<int>> fv(g.n);
    for (int w = 0; w < g.n; ++w) fv[w] = face_vector(sk, w);

    for (int w = 0; w < g.n; ++w) {
        for (int len : fv[w])
            if (len < 3 || len > 5) c[0] = false;
        if (fv[w] == std::vector<int>{5, 5, 5}) c[1] = false;
    }
    c[2] = std::count(fv[v].begin(), fv[v].end(), 5) <= 1;

    for (int nb : g.adj[v]) {
        // The one face at nb not containing the edge {v, nb}.
        const auto& edge_fs = sk.edge_faces[g.edge_id(v, nb)];
        for (int fid : sk.vertex_faces[nb]) {
            bool on_edge = std::find(edge_fs.begin(), edge_fs.end(), fid) != edge_fs.end();
            if (!on_edge && sk.faces[fid].size() > 4) c[3] = false;
        }
    }

    std::set<int> on_faces_at_v;
    for (int fid : sk.vertex_faces[v])
        for (int w : sk.faces[fid].vertices) on_faces_at_v.insert(w);
    for (int w : on_faces_at_v)
        if (fv[w] == std::vector<int>{5, 5, 4}) c[4] = false;

    return out;
}

TwoSkeleton generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::simplex: return simplex_skeleton(spec.param);
        case Kind::hypercube: return hypercube_skeleton(spec.param);
        case Kind::polygon: return polygon_skeleton(spec.param);
        case Kind::prism: return prism_skeleton(spec.param);
        case Kind::pyramid: return pyramid_skeleton(spec.param);
        case Kind::square_cupola: return square_cupola_skeleton();
        case Kind::tube: return tube_skeleton(spec.param);
        case Kind::delta_expansion:
            if (!spec.base) fail("generate", "delta_expansion needs a base skeleton");
            return delta_expansion(*spec.base, spec.vertex);
    }
    fail("generate", "unknown family");
}

}  // namespace polycurv
