#pragma once

#include "polycurv/graph.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace polycurv {

// Dense Laplacian with a reusable Cholesky factorization of L + J/n.  For a
// connected graph L + J/n is positive definite and its inverse equals
// pinv(L) + J/n, so resistance quadratic forms (whose argument sums to zero)
// can be read off directly; no eigendecomposition is ever needed.
class LaplacianSystem {
  public:
    explicit LaplacianSystem(const Graph& g);

    int n() const { return n_; }
    const Eigen::MatrixXd& laplacian() const { return lap_; }
    // Solves (L + J/n) x = b; read-only and safe to call concurrently.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

  private:
    int n_ = 0;
    Eigen::MatrixXd lap_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

LaplacianSystem laplacian_system(const Graph& g);

// (1_u - 1_v)^T (L + J/n)^{-1} (1_u - 1_v); zero when u = v.
double effective_resistance(const LaplacianSystem& sys, int u, int v);

// Full resistance matrix via n solves against the factorization.  The solves
// are independent per column, so the default runs them in parallel; the
// serial variant performs the identical per-column arithmetic for testing.
Eigen::MatrixXd all_pairs_resistance(const LaplacianSystem& sys);
Eigen::MatrixXd all_pairs_resistance_serial(const LaplacianSystem& sys);

// kappa(v) = 1 - (1/2) sum of resistances over edges at v.
double resistance_curvature(const LaplacianSystem& sys, const Graph& g, int v);

// Values within this band around zero are reported as boundary cases rather
// than positive; positivity classification should not hinge on the last few
// floating-point bits.
inline constexpr double kPositivityStrictness = 1e-12;

struct ResistanceProfile {
    std::vector<double> per_vertex;  // curvature kappa(v)
    std::vector<double> per_edge;    // resistance, canonical edge order
    double min = 0.0;
    bool positive = false;               // min > kPositivityStrictness
    std::vector<int> boundary_vertices;  // |kappa| <= kPositivityStrictness
};

ResistanceProfile resistance_profile(const Graph& g);
ResistanceProfile resistance_profile_serial(const Graph& g);

// The curvature any vertex-transitive graph on n vertices must have: 1/n.
double transitive_curvature(long long n);

// Harmonic upper bound 1 / sum(1/len) from a family of edge-disjoint paths.
double path_upper_bound(const std::vector<int>& lengths);

// Lower bound on the curvature at a vertex of a simple 3-polytope whose three
// incident faces have the given lengths:
// 1 - (1/2) sum_C (l_C - 1) / ((l_C - 1)(S + 1) - 1), S = sum_C 1/(l_C - 1).
// Evaluated in exact rational arithmetic before conversion.
double simple3_lower_bound(const std::vector<int>& lengths);

// True iff the bound's inner sum is strictly below 2, i.e. the face-length
// vector alone forces positive curvature.  Exact rational test.
bool face_vector_is_positive(const std::vector<int>& lengths);

// Quadratic form of the pseudoinverse of the principal Laplacian submatrix on
// the vertex set A at 1_u - 1_v; always a lower bound for r_uv.  Blocks of
// L_A that form a full component of the graph are singular and handled by the
// same J-completion device; all other blocks are invertible.
double submatrix_lower_bound(const Graph& g, const std::vector<int>& subset, int u, int v);

// max{(d_u + d_v - 2)/(d_u d_v - 1), 4/(d_u + d_v + 2)}; the first branch is
// exactly the two-vertex submatrix bound.
double degree_lower_bound(int du, int dv);

// True iff d_v >= 2 and every neighbor u satisfies d_u <= d_v - 2, which
// forces kappa(v) <= 0.
bool negative_curvature_criterion(const Graph& g, int v);

// ceil(sqrt(max_degree * kappa^T R kappa / min_kappa) * ln n), valid when all
// curvatures are positive; errors with a witness vertex otherwise.  Natural
// logarithm by design decision.
long long resistance_diameter_bound(const Graph& g);

// Greedy edge-disjoint u-v paths by repeated shortest-path extraction with
// ascending neighbor order; returns the path lengths.  Any edge-disjoint
// family is admissible for path_upper_bound, so greediness only weakens the
// bound.
std::vector<int> greedy_edge_disjoint_paths(const Graph& g, int u, int v);

}  // namespace polycurv
