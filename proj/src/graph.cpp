#include "polycurv/graph.hpp"

#include "polycurv/common.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace polycurv {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

bool bfs_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == g.n;
}

}  // namespace

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) fail("build_graph", "negative vertex count " + std::to_string(n));
    Graph g;
    g.n = n;
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("build_graph", "edge " + pair_str(u, v) + " out of range for n=" + std::to_string(n));
        if (u == v) fail("build_graph", "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    auto last = std::unique(canon.begin(), canon.end());
    g.duplicate_count = static_cast<int>(canon.end() - last);
    canon.erase(last, canon.end());
    g.edges = std::move(canon);

    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

    g.connected = bfs_connected(g);
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.m()) * h.n + static_cast<size_t>(g.n) * h.m());
    for (auto [u, v] : g.edges)
        for (int w = 0; w < h.n; ++w) edges.emplace_back(u * h.n + w, v * h.n + w);
    for (int u = 0; u < g.n; ++u)
        for (auto [w, x] : h.edges) edges.emplace_back(u * h.n + w, u * h.n + x);
    return build_graph(g.n * h.n, edges);
}

int graph_diameter(const Graph& g) {
    if (!g.connected) fail("graph_diameter", "graph is disconnected");
    if (g.n == 0) fail("graph_diameter", "empty graph");
    int diam = 0;
    std::vector<int> dist(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            diam = std::max(diam, dist[v]);
            for (int w : g.adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
    }
    return diam;
}

namespace {

// Backtracking search for a vertex bijection preserving adjacency both ways.
// Vertices of a are assigned in breadth-first order so each new vertex is
// constrained by an already-mapped neighbor as early as possible.
struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> order;      // assignment order over a's vertices
    std::vector<int> map_ab;     // a -> b, -1 unassigned
    std::vector<char> used_b;

    IsoSearch(const Graph& a_, const Graph& b_) : a(a_), b(b_) {
        map_ab.assign(a.n, -1);
        used_b.assign(b.n, 0);
        std::vector<char> seen(a.n, 0);
        for (int s = 0; s < a.n; ++s) {
            if (seen[s]) continue;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                order.push_back(v);
                for (int w : a.adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
            }
        }
    }

    bool feasible(int va, int vb) const {
        if (a.degree(va) != b.degree(vb)) return false;
        for (int wa = 0; wa < a.n; ++wa) {
            int wb = map_ab[wa];
            if (wb < 0) continue;
            if (a.has_edge(va, wa) != b.has_edge(vb, wb)) return false;
        }
        return true;
    }

    template <typename Accept>
    bool search(size_t depth, const Accept& accept) {
        if (depth == order.size()) return accept(map_ab);
        int va = order[depth];
        for (int vb = 0; vb < b.n; ++vb) {
            if (used_b[vb] || !feasible(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = 1;
            if (search(depth + 1, accept)) return true;
            map_ab[va] = -1;
            used_b[vb] = 0;
        }
        return false;
    }
};

std::vector<long long> degree_signature(const Graph& g) {
    // Degree plus sorted neighbor degrees, flattened; a cheap refinement that
    // rejects most non-isomorphic pairs before the search starts.
    std::vector<long long> sig;
    std::vector<std::vector<int>> per_vertex(g.n);
    for (int v = 0; v < g.n; ++v) {
        per_vertex[v].push_back(g.degree(v));
        for (int w : g.adj[v]) per_vertex[v].push_back(g.degree(w));
        std::sort(per_vertex[v].begin() + 1, per_vertex[v].end());
    }
    std::sort(per_vertex.begin(), per_vertex.end());
    for (const auto& row : per_vertex)
        for (int x : row) sig.push_back(x);
    return sig;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    if (degree_signature(a) != degree_signature(b)) return false;
    IsoSearch search(a, b);
    return search.search(0, [](const std::vector<int>&) { return true; });
}

namespace detail {

bool find_isomorphism(const Graph& a, const Graph& b,
                      const std::function<bool(const std::vector<int>&)>& accept) {
    if (a.n != b.n || a.m() != b.m()) return false;
    if (degree_signature(a) != degree_signature(b)) return false;
    IsoSearch search(a, b);
    return search.search(0, accept);
}

}  // namespace detail

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) fail("cycle_graph", "need n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

}  // namespace polycurv
