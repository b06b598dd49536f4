#pragma once

#include <Eigen/Dense>

#include <vector>

namespace polycurv {

// Closed-form machinery for the k-pointed tube (C3 x P_k with two cone caps).
// Everything is driven by phi = arccosh(5/2) and the table s_j = sinh(j*phi),
// which satisfies s_{j+1} = 5 s_j - s_{j-1} with s_1 = sqrt(21)/2.  Public
// evaluators work with logarithms of s_j so values stay in range for k up to
// about 1e4; direct sinh is only stored while j*phi < 700.
class TubeClosedForm {
  public:
    explicit TubeClosedForm(int k);

    int k() const { return k_; }
    double phi() const { return phi_; }
    // Direct table value; +inf once j*phi leaves double range.
    double s(int j) const;
    // ln s_j for 1 <= j <= k+2 via j*phi + log1p(-exp(-2j*phi)) - ln 2.
    double log_s(int j) const;
    // ln cosh(t*phi) for t >= 0 (valid at t = 0).
    double log_cosh(int t) const;
    // s_a / s_b evaluated in log space; a = 0 returns 0.
    double s_ratio(int a, int b) const;

  private:
    int k_ = 0;
    double phi_ = 0.0;
    std::vector<double> s_;  // s_0 .. s_{k+2}
};

enum class TubeResistanceKind { cycle, path, cap };

// Edge resistances of the tube:
//   cycle edges at level j:      2 s_{j+1} s_{k-j} / (s_1 s_{k+1})
//   path edges between j, j+1:   1/3 + (2/3)(s_{j+1} s_{k-j} + s_{j+2} s_{k-j-1}
//                                          - 2 s_{j+1} s_{k-j-1}) / (s_1 s_{k+1})
//   cap edges:                   1/3 + (2/3) s_k / s_{k+1}
// Levels: cycle 0 <= j <= k-1; path 0 <= j <= k-2 (k >= 2); cap takes no j.
double closed_form_resistance(int k, TubeResistanceKind kind, int j = -1);

enum class TubeVertexRole { cap, level };

// Vertex curvatures of the tube.  Cap: 1/2 - s_k/s_{k+1}.  Interior level
// 1 <= j <= k-2: (7 / (2 s_1 s_{k+1})) cosh((2j+1-k) phi).  Boundary levels
// j = 0 and k-1 have no standalone closed form and are assembled from the
// closed-form edge resistances as 1 minus half the sum over incident edges.
double closed_form_curvature(int k, TubeVertexRole role, int j = -1);

// The interior cosh formula evaluated at any level 0 <= j <= k-1, including
// the boundary levels it is not a priori valid for.  Used to report the
// empirical gap between it and the assembled boundary value instead of
// assuming they agree.
double interior_formula_curvature(int k, int j);

struct TubeBlocks {
    Eigen::MatrixXd delta0;  // (k+2) x (k+2) tridiagonal, corners 3, end couplings -sqrt(3)
    Eigen::MatrixXd delta3;  // k x k tridiagonal, diagonal 5, couplings -1 (used twice)
    Eigen::MatrixXd U;       // orthogonal change of basis, n x n
};

// Block diagonalization of the tube Laplacian:
// U * diag(delta0, delta3, delta3) * U^T equals the Laplacian of
// tube_skeleton(k) under its (x, y, levels) vertex order.  The columns of U
// are e_x, the per-level vectors (1,1,1)/sqrt(3), e_y, then the per-level
// vectors (1,-1,0)/sqrt(2) and (1,1,-2)/sqrt(6).
TubeBlocks tube_blocks(int k);

// Symmetric tridiagonal matrix with diag d_i and entries -off_i next to the
// diagonal, together with the positive unit kernel vector omega required by
// the pseudoinverse formula.  omega must satisfy
// d_i w_i = off_i w_{i+1} + off_{i-1} w_{i-1} (boundary terms zero).
struct TridiagonalSpec {
    Eigen::VectorXd diag;
    Eigen::VectorXd off;
    Eigen::VectorXd omega;
};

// Closed-form pseudoinverse of a singular symmetric tridiagonal matrix with
// known positive kernel vector.  With A_t = sum_{l<=t} w_l^2, B_t = 1 - A_t
// and g_t = 1/(off_t w_t w_{t+1}), the entry for i <= j is
//   w_i w_j ( sum_{t<i} A_t^2 g_t + sum_{t>=i} B_t^2 g_t - sum_{i<=t<j} B_t g_t ).
// Satisfies M * pinv(M) = I - omega omega^T.
Eigen::MatrixXd tridiagonal_pinv(const TridiagonalSpec& spec);

// The delta0 block of tube_blocks(k) as a TridiagonalSpec; its kernel vector
// is (1, sqrt(3), ..., sqrt(3), 1) / sqrt(3k+2).
TridiagonalSpec tube_delta0_spec(int k);

// Inverse of the k x k block (diagonal 5, couplings -1), 1-based indices:
// s_min(i,j) * s_{k+1-max(i,j)} / (s_1 s_{k+1}).
double delta3_inverse_entry(int i, int j, int k);

// Pseudoinverse of the (k+2) block, 1-based indices, symmetrized so i <= j.
// With h(x) = x(6x^2 - 3x - 1) / (2(3k+2)) and
// c(i,j) = (j-i)(2(3k+4) - 3(i+j-1)) / (2(3k+2)), the entry is
//   (w_i w_j / 3) (h(i-1) + h(k+2-i) - (3k+2) c(i,j)).
// Agrees with tridiagonal_pinv(tube_delta0_spec(k)) entrywise; the tests pin
// that equivalence.
double delta0_pinv_entry(int i, int j, int k);

}  // namespace polycurv
