#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace polycurv {

// Undirected graph on dense vertex indices 0..n-1.  Neighbor lists are kept
// sorted, the edge list is lexicographic with u < v, and edge ids are
// positions in that list.  Instances are immutable once built and may be
// shared freely across threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;
    bool connected = false;
    int duplicate_count = 0;  // input pairs dropped as duplicates

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    // Position of {u,v} in the canonical edge list, or -1 when absent.
    int edge_id(int u, int v) const;
};

// Duplicate input pairs are collapsed with a warning count rather than
// rejected; external corpus files are occasionally dirty.  Self-loops and
// out-of-range endpoints are hard errors.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Cartesian product; vertex (a, b) of g x h is encoded row-major as
// a * h.n + b, which keeps edge canonicalization trivial.
Graph cartesian_product(const Graph& g, const Graph& h);

// Exact diameter by breadth-first search from every vertex.
int graph_diameter(const Graph& g);

// Backtracking isomorphism test with degree pruning.  Intended for the small
// graphs (n <= 16 or so) that appear in screens and classification; no
// general canonical-labeling machinery.
bool isomorphic(const Graph& a, const Graph& b);

// Small constructors used by tests and oracles.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

namespace detail {

// Isomorphism search with an extra acceptance predicate over the completed
// vertex map; the skeleton module uses it to insist that faces map to faces.
bool find_isomorphism(const Graph& a, const Graph& b,
                      const std::function<bool(const std::vector<int>&)>& accept);

}  // namespace detail

}  // namespace polycurv
