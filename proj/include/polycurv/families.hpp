#pragma once

#include "polycurv/skeleton.hpp"

#include <array>

namespace polycurv {

// Complete graph on d+1 vertices with all C(d+1,3) triangles as 2-faces.
TwoSkeleton simplex_skeleton(int d);

// Vertices {0,1}^d encoded as bitmasks, edges at Hamming distance 1, faces
// the C(d,2)*2^(d-2) two-dimensional subcubes.
TwoSkeleton hypercube_skeleton(int d);

// Single n-cycle with one n-gon face (not polyhedral; degenerate base case).
TwoSkeleton polygon_skeleton(int n);

// Bottom ring 0..n-1, top ring n..2n-1; two n-gons plus n squares.
TwoSkeleton prism_skeleton(int n);

// Base ring 0..n-1, apex n; one n-gon plus n triangles.
TwoSkeleton pyramid_skeleton(int n);
inline int pyramid_apex(int n) { return n; }

// Octagon 0..7 below a square 8..11; vertex 8+i sits above the octagon edge
// {2i, 2i+1}.  Faces: the octagon, the square, 4 triangles, 4 slant quads.
TwoSkeleton square_cupola_skeleton();

// C3 x P_k plus two cone apexes x and y over the first and last triangle.
// Vertex order: x = 0, y = 1, then levels j = 0..k-1 as three consecutive
// corners.  Faces: 3 triangles at each cap and 3(k-1) quads between levels,
// so n = 3k+2, m = 6k+3, f = 3k+3.
TwoSkeleton tube_skeleton(int k);

// Index helpers for the tube's fixed vertex layout.
struct TubeLayout {
    int k = 0;
    int x() const { return 0; }
    int y() const { return 1; }
    int vertex(int corner, int level) const { return 2 + 3 * level + corner; }
    int n() const { return 3 * k + 2; }
};

// Replace the degree-3 vertex v by a triangle u1 u2 u3.  The former neighbors
// v_1 < v_2 < v_3 get matched to u_1, u_2, u_3 in order; u_1 reuses v's index
// and u_2, u_3 take the next two fresh indices, so vertex labels stay dense.
// Each face through v keeps its cyclic order but passes through the two
// matching u's instead of v, and the triangle u1 u2 u3 becomes a new face.
// Face counts grow by exactly (2, 3, 1).
TwoSkeleton delta_expansion(const TwoSkeleton& sk, int v);

// Sufficient conditions under which expanding a simple polyhedral skeleton at
// v yields a resistance-positive skeleton.  Evaluated per condition:
//   (1) every vertex has all three incident face lengths in {3,4,5};
//   (2) no vertex has face vector (5,5,5);
//   (3) the face vector at v contains at most one 5;
//   (4) for each neighbor u of v, the face at u not containing the edge uv
//       has at most 4 edges;
//   (5) no vertex lying on the three faces at v has face vector (5,5,4).
struct DeltaHypotheses {
    std::array<bool, 5> condition{};
    bool all() const;
};

DeltaHypotheses delta_hypotheses(const TwoSkeleton& sk, int v);

// Uniform generator dispatch used by the CLI.
struct FamilySpec {
    enum class Kind { simplex, hypercube, polygon, prism, pyramid, square_cupola, tube, delta_expansion };
    Kind kind = Kind::simplex;
    int param = 0;                      // d, n, or k depending on the family
    const TwoSkeleton* base = nullptr;  // delta_expansion only
    int vertex = -1;                    // delta_expansion only
};

TwoSkeleton generate(const FamilySpec& spec);

}  // namespace polycurv
