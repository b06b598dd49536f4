#pragma once

#include "polycurv/graph.hpp"

#include <map>
#include <vector>

namespace polycurv {

// A 2-face stored as a cyclic vertex sequence in canonical form: rotated so
// the smallest vertex comes first, direction chosen so the second entry is
// the smaller of the first vertex's two neighbors.  Canonical form makes
// duplicate detection and face-set comparison deterministic.
struct Face {
    std::vector<int> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Face&) const = default;
    auto operator<=>(const Face& o) const { return vertices <=> o.vertices; }
};

Face canonical_face(const std::vector<int>& cycle);

// Graph plus 2-faces with incidence tables.  The polyhedral flag is set iff
// the graph is connected, every edge lies in exactly two faces, and
// n - m + f = 2: the combinatorial signature of the boundary of a 3-polytope.
struct TwoSkeleton {
    Graph graph;
    std::vector<Face> faces;
    std::vector<std::vector<int>> edge_faces;    // face ids per canonical edge id
    std::vector<std::vector<int>> vertex_faces;  // face ids per vertex
    bool polyhedral = false;

    int f() const { return static_cast<int>(faces.size()); }
};

TwoSkeleton attach_faces(const Graph& g, const std::vector<std::vector<int>>& cycles);

// Exact incidence statistics.  Invariants: f02 = f12 = sum k*p_k and
// sum k*d_k = 2*f1.
struct FlagCounts {
    long long f0 = 0, f1 = 0, f2 = 0;
    long long f02 = 0, f12 = 0;
    std::map<int, long long> d_hist;  // degree -> number of vertices
    std::map<int, long long> p_hist;  // gon count -> number of faces
};

FlagCounts flag_counts(const TwoSkeleton& sk);

// Lengths of the faces incident to v, sorted descending.
std::vector<int> face_vector(const TwoSkeleton& sk, int v);

// Cyclic neighbor order at each vertex, as read from a planar embedding.
struct RotationSystem {
    int n = 0;
    std::vector<std::vector<int>> order;
};

// Recover the faces of an embedded graph by face tracing: the successor of
// the directed edge (u,v) is (v,w) where w immediately follows u in v's
// stored cyclic order.  Every directed edge is used exactly once.  Errors if
// the traced complex fails the Euler test n - m + f = 2, which signals a
// non-planar or corrupted embedding.  One tracing convention suffices since a
// mirrored embedding yields the same face multiset.
TwoSkeleton faces_from_rotation(const RotationSystem& rot);

// Inverse direction: orient the faces of a polyhedral skeleton consistently
// and read off a rotation system that faces_from_rotation maps back to the
// same face set.
RotationSystem rotation_from_skeleton(const TwoSkeleton& sk);

struct DualResult {
    TwoSkeleton skeleton;
    // edge_map[e] is the dual edge id corresponding to input edge e; its two
    // endpoints are the two faces incident to e.
    std::vector<int> edge_map;
};

// Planar dual of a polyhedral skeleton: vertices become faces and vice versa.
// The dual faces are the cycles of faces around each input vertex.
DualResult planar_dual(const TwoSkeleton& sk);

// Skeleton isomorphism: a graph isomorphism that also maps the face set onto
// the face set.  Same brute-force scope as the graph version.
bool isomorphic(const TwoSkeleton& a, const TwoSkeleton& b);

}  // namespace polycurv
