#include "polycurv/skeleton.hpp"

#include "polycurv/common.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace polycurv {

namespace {

std::string face_str(const std::vector<int>& cycle) {
    std::string s = "[";
    for (size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cycle[i]);
    }
    return s + "]";
}

}  // namespace

Face canonical_face(const std::vector<int>& cycle) {
    if (cycle.size() < 3) fail("canonical_face", "face " + face_str(cycle) + " has fewer than 3 vertices");
    int k = static_cast<int>(cycle.size());
    int p = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<int> fwd(k), bwd(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = cycle[(p + i) % k];
        bwd[i] = cycle[(p - i + k) % k];
    }
    return Face{fwd[1] <= bwd[1] ? std::move(fwd) : std::move(bwd)};
}

TwoSkeleton attach_faces(const Graph& g, const std::vector<std::vector<int>>& cycles) {
    TwoSkeleton sk;
    sk.graph = g;
    sk.edge_faces.assign(g.m(), {});
    sk.vertex_faces.assign(g.n, {});

    std::set<Face> seen;
    for (const auto& cycle : cycles) {
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size())
            fail("attach_faces", "repeated vertex in face " + face_str(cycle));
        Face face = canonical_face(cycle);
        int k = face.size();
        for (int i = 0; i < k; ++i) {
            int u = face.vertices[i];
            int v = face.vertices[(i + 1) % k];
            if (u < 0 || u >= g.n)
                fail("attach_faces", "face " + face_str(cycle) + " has out-of-range vertex " + std::to_string(u));
            if (!g.has_edge(u, v))
                fail("attach_faces", "face " + face_str(cycle) + " uses non-edge (" + std::to_string(u) + "," +
                                         std::to_string(v) + ")");
        }
        if (!seen.insert(face).second)
            fail("attach_faces", "duplicate face " + face_str(face.vertices));
        int id = sk.f();
        for (int i = 0; i < k; ++i) {
            int u = face.vertices[i];
            int v = face.vertices[(i + 1) % k];
            sk.edge_faces[g.edge_id(u, v)].push_back(id);
            sk.vertex_faces[u].push_back(id);
        }
        sk.faces.push_back(std::move(face));
    }

    bool two_per_edge = g.m() > 0;
    for (const auto& fs : sk.edge_faces)
        if (fs.size() != 2) two_per_edge = false;
    sk.polyhedral = g.connected && two_per_edge && (g.n - g.m() + sk.f() == 2);
    return sk;
}

FlagCounts flag_counts(const TwoSkeleton& sk) {
    FlagCounts fc;
    fc.f0 = sk.graph.n;
    fc.f1 = sk.graph.m();
    fc.f2 = sk.f();
    for (int v = 0; v < sk.graph.n; ++v) ++fc.d_hist[sk.graph.degree(v)];
    for (const auto& face : sk.faces) {
        ++fc.p_hist[face.size()];
        fc.f02 += face.size();
    }
    // Each edge of a face contributes one edge-in-face incidence, and a face
    // has as many edges as vertices, so f12 equals f02.
    fc.f12 = fc.f02;
    return fc;
}

std::vector<int> face_vector(const TwoSkeleton& sk, int v) {
    if (v < 0 || v >= sk.graph.n) fail("face_vector", "invalid vertex " + std::to_string(v));
    std::vector<int> lengths;
    lengths.reserve(sk.vertex_faces[v].size());
    for (int f : sk.vertex_faces[v]) lengths.push_back(sk.faces[f].size());
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

TwoSkeleton faces_from_rotation(const RotationSystem& rot) {
    int n = rot.n;
    if (static_cast<int>(rot.order.size()) != n)
        fail("faces_from_rotation", "rotation lists do not match vertex count");
    std::vector<std::set<int>> nb(n);
    for (int v = 0; v < n; ++v) {
        for (int w : rot.order[v]) {
            if (w < 0 || w >= n || w == v)
                fail("faces_from_rotation", "vertex " + std::to_string(v) + " lists invalid neighbor " + std::to_string(w));
            if (!nb[v].insert(w).second)
                fail("faces_from_rotation", "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(w) + " twice");
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : nb[v]) {
            if (!nb[w].count(v))
                fail("faces_from_rotation",
                     "rotation not symmetric: " + std::to_string(v) + " lists " + std::to_string(w) + " but not vice versa");
            if (v < w) edges.emplace_back(v, w);
        }
    Graph g = build_graph(n, edges);

    // Face tracing over directed edges.  The successor map is a permutation,
    // so every orbit closes; orbits are collected as faces.
    auto succ_pos = [&](int v, int u) {
        const auto& order = rot.order[v];
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] == u) return (i + 1) % order.size();
        fail("faces_from_rotation", "internal: neighbor lookup failed");
    };
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(rot.order[v].size(), 0);
    auto dir_index = [&](int u, int v) {
        const auto& order = rot.order[u];
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] == v) return i;
        fail("faces_from_rotation", "internal: directed edge lookup failed");
    };

    std::vector<std::vector<int>> traced;
    for (int u0 = 0; u0 < n; ++u0) {
        for (size_t i0 = 0; i0 < rot.order[u0].size(); ++i0) {
            if (used[u0][i0]) continue;
            std::vector<int> walk;
            int u = u0;
            int v = rot.order[u0][i0];
            while (true) {
                size_t di = dir_index(u, v);
                if (used[u][di]) break;
                used[u][di] = 1;
                walk.push_back(u);
                int w = rot.order[v][succ_pos(v, u)];
                u = v;
                v = w;
            }
            traced.push_back(std::move(walk));
        }
    }

    int f = static_cast<int>(traced.size());
    if (n - g.m() + f != 2)
        fail("faces_from_rotation", "Euler test failed: n=" + std::to_string(n) + " m=" + std::to_string(g.m()) +
                                        " f=" + std::to_string(f) + " (n - m + f != 2; embedding is not spherical)");
    return attach_faces(g, traced);
}

RotationSystem rotation_from_skeleton(const TwoSkeleton& sk) {
    if (!sk.polyhedral) fail("rotation_from_skeleton", "skeleton is not polyhedral");
    const Graph& g = sk.graph;
    int nf = sk.f();

    // Orient faces consistently: neighbors across a shared edge must traverse
    // it in opposite directions.  Breadth-first over the face adjacency.
    std::vector<std::vector<int>> oriented(nf);
    std::vector<int> state(nf, 0);  // 0 unseen, 1 as stored, 2 reversed
    auto uses_directed = [&](int fid, int a, int b) {
        const auto& vs = oriented[fid];
        int k = static_cast<int>(vs.size());
        for (int i = 0; i < k; ++i)
            if (vs[i] == a && vs[(i + 1) % k] == b) return true;
        return false;
    };
    for (int start = 0; start < nf; ++start) {
        if (state[start]) continue;
        state[start] = 1;
        oriented[start] = sk.faces[start].vertices;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int fid = q.front();
            q.pop();
            const auto& vs = oriented[fid];
            int k = static_cast<int>(vs.size());
            for (int i = 0; i < k; ++i) {
                int a = vs[i], b = vs[(i + 1) % k];
                for (int other : sk.edge_faces[g.edge_id(a, b)]) {
                    if (other == fid) continue;
                    if (!state[other]) {
                        state[other] = 1;
                        oriented[other] = sk.faces[other].vertices;
                        if (uses_directed(other, a, b)) {
                            std::reverse(oriented[other].begin(), oriented[other].end());
                            state[other] = 2;
                        }
                        q.push(other);
                    } else if (uses_directed(other, a, b)) {
                        fail("rotation_from_skeleton", "faces are not consistently orientable");
                    }
                }
            }
        }
    }

    // Each oriented corner (a, v, b) contributes the local successor a -> b
    // at v; chaining successors yields the cyclic neighbor order.
    std::vector<std::map<int, int>> succ(g.n);
    for (int fid = 0; fid < nf; ++fid) {
        const auto& vs = oriented[fid];
        int k = static_cast<int>(vs.size());
        for (int i = 0; i < k; ++i) {
            int a = vs[i], v = vs[(i + 1) % k], b = vs[(i + 2) % k];
            if (!succ[v].emplace(a, b).second)
                fail("rotation_from_skeleton", "conflicting corners at vertex " + std::to_string(v));
        }
    }
    RotationSystem rot;
    rot.n = g.n;
    rot.order.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        int deg = g.degree(v);
        if (deg == 0) continue;
        int start = g.adj[v][0];
        int cur = start;
        for (int step = 0; step < deg; ++step) {
            rot.order[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end())
                fail("rotation_from_skeleton", "vertex " + std::to_string(v) + " has an incomplete corner cycle");
            cur = it->second;
        }
        if (cur != start)
            fail("rotation_from_skeleton", "vertex " + std::to_string(v) + " link is not a single cycle");
    }
    return rot;
}

DualResult planar_dual(const TwoSkeleton& sk) {
    if (!sk.polyhedral) fail("planar_dual", "skeleton is not polyhedral");
    const Graph& g = sk.graph;

    std::vector<std::pair<int, int>> dual_edges;
    dual_edges.reserve(g.m());
    for (int e = 0; e < g.m(); ++e) {
        const auto& fs = sk.edge_faces[e];
        dual_edges.emplace_back(fs[0], fs[1]);
    }
    Graph dual_graph = build_graph(sk.f(), dual_edges);
    if (dual_graph.duplicate_count > 0)
        fail("planar_dual", "two faces share more than one edge; the dual is not a simple graph");

    // Dual face around vertex v: walk the face/edge fan at v.  Each face at v
    // holds exactly two of v's edges, and each edge holds two faces, so the
    // walk alternates and must close up through all of them.
    std::vector<std::vector<int>> dual_faces;
    dual_faces.reserve(g.n);
    for (int v = 0; v < g.n; ++v) {
        int deg = g.degree(v);
        auto edges_of_face_at = [&](int fid) {
            const auto& vs = sk.faces[fid].vertices;
            int k = static_cast<int>(vs.size());
            std::pair<int, int> out{-1, -1};
            for (int i = 0; i < k; ++i) {
                if (vs[i] != v) continue;
                out.first = g.edge_id(v, vs[(i + k - 1) % k]);
                out.second = g.edge_id(v, vs[(i + 1) % k]);
            }
            return out;
        };
        int e0 = g.edge_id(v, g.adj[v][0]);
        int f0 = sk.edge_faces[e0][0];
        std::vector<int> cycle;
        int e = e0, fcur = f0;
        while (true) {
            cycle.push_back(fcur);
            auto [ea, eb] = edges_of_face_at(fcur);
            int enext = (ea == e) ? eb : ea;
            const auto& fs = sk.edge_faces[enext];
            int fnext = (fs[0] == fcur) ? fs[1] : fs[0];
            e = enext;
            fcur = fnext;
            if (e == e0 && fcur == f0) break;
            if (static_cast<int>(cycle.size()) > deg)
                fail("planar_dual", "face fan at vertex " + std::to_string(v) + " does not close");
        }
        if (static_cast<int>(cycle.size()) != deg)
            fail("planar_dual", "face fan at vertex " + std::to_string(v) + " is not a single cycle");
        dual_faces.push_back(std::move(cycle));
    }

    DualResult out;
    out.skeleton = attach_faces(dual_graph, dual_faces);
    out.edge_map.resize(g.m());
    for (int e = 0; e < g.m(); ++e)
        out.edge_map[e] = dual_graph.edge_id(dual_edges[e].first, dual_edges[e].second);
    return out;
}

bool isomorphic(const TwoSkeleton& a, const TwoSkeleton& b) {
    if (a.f() != b.f()) return false;
    std::multiset<int> la, lb;
    for (const auto& face : a.faces) la.insert(face.size());
    for (const auto& face : b.faces) lb.insert(face.size());
    if (la != lb) return false;
    std::set<Face> faces_b(b.faces.begin(), b.faces.end());
    return detail::find_isomorphism(a.graph, b.graph, [&](const std::vector<int>& map_ab) {
        for (const auto& face : a.faces) {
            std::vector<int> image(face.vertices.size());
            for (size_t i = 0; i < image.size(); ++i) image[i] = map_ab[face.vertices[i]];
            if (!faces_b.count(canonical_face(image))) return false;
        }
        return true;
    });
}

}  // namespace polycurv
