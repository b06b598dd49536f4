#include "polycurv/tube.hpp"

#include "polycurv/common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace polycurv {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Direct sinh stays finite while j*phi < 700; past that the table holds +inf
// and callers must go through the log-space accessors.
constexpr double kSinhCutoff = 700.0;

std::string idx_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

TubeClosedForm::TubeClosedForm(int k) : k_(k), phi_(std::acosh(2.5)) {
    if (k < 1) fail("tube_closed_form", "need k >= 1, got " + std::to_string(k));
    s_.resize(k + 3);
    for (int j = 0; j <= k + 2; ++j) {
        double arg = j * phi_;
        s_[j] = arg < kSinhCutoff ? std::sinh(arg) : std::numeric_limits<double>::infinity();
    }
}

double TubeClosedForm::s(int j) const {
    if (j < 0 || j > k_ + 2) fail("tube_closed_form", "sinh index " + std::to_string(j) + " out of table");
    return s_[j];
}

double TubeClosedForm::log_s(int j) const {
    if (j < 1) fail("tube_closed_form", "log of s_" + std::to_string(j) + " undefined");
    double arg = j * phi_;
    return arg + std::log1p(-std::exp(-2.0 * arg)) - kLn2;
}

double TubeClosedForm::log_cosh(int t) const {
    if (t < 0) fail("tube_closed_form", "negative cosh index " + std::to_string(t));
    double arg = t * phi_;
    return arg + std::log1p(std::exp(-2.0 * arg)) - kLn2;
}

double TubeClosedForm::s_ratio(int a, int b) const {
    if (a == 0) return 0.0;
    return std::exp(log_s(a) - log_s(b));
}

namespace {

// s_a s_b / (s_1 s_{k+1}), the ratio every resistance formula reduces to.
// Evaluated in log space so it works for any k the caller throws at it.
double sinh_pair_ratio(const TubeClosedForm& f, int a, int b) {
    int k = f.k();
    return std::exp(f.log_s(a) + f.log_s(b) - f.log_s(1) - f.log_s(k + 1));
}

}  // namespace

double closed_form_resistance(int k, TubeResistanceKind kind, int j) {
    TubeClosedForm f(k);
    switch (kind) {
        case TubeResistanceKind::cycle:
            if (j < 0 || j > k - 1)
                fail("closed_form_resistance", "cycle level " + std::to_string(j) + " out of 0.." + std::to_string(k - 1));
            return 2.0 * sinh_pair_ratio(f, j + 1, k - j);
        case TubeResistanceKind::path: {
            if (k < 2) fail("closed_form_resistance", "path edges need k >= 2, got k = " + std::to_string(k));
            if (j < 0 || j > k - 2)
                fail("closed_form_resistance", "path level " + std::to_string(j) + " out of 0.." + std::to_string(k - 2));
            double t1 = sinh_pair_ratio(f, j + 1, k - j);
            double t2 = sinh_pair_ratio(f, j + 2, k - j - 1);
            double t3 = sinh_pair_ratio(f, j + 1, k - j - 1);
            return 1.0 / 3.0 + (2.0 / 3.0) * (t1 + t2 - 2.0 * t3);
        }
        case TubeResistanceKind::cap:
            if (j != -1) fail("closed_form_resistance", "cap resistance takes no level, got " + std::to_string(j));
            return 1.0 / 3.0 + (2.0 / 3.0) * f.s_ratio(k, k + 1);
    }
    fail("closed_form_resistance", "unknown kind");
}

double interior_formula_curvature(int k, int j) {
    TubeClosedForm f(k);
    if (j < 0 || j > k - 1)
        fail("interior_formula_curvature", "level " + std::to_string(j) + " out of 0.." + std::to_string(k - 1));
    int t = std::abs(2 * j + 1 - k);
    return 3.5 * std::exp(f.log_cosh(t) - f.log_s(1) - f.log_s(k + 1));
}

double closed_form_curvature(int k, TubeVertexRole role, int j) {
    TubeClosedForm f(k);
    if (role == TubeVertexRole::cap) {
        if (j != -1) fail("closed_form_curvature", "cap role takes no level, got " + std::to_string(j));
        return 0.5 - f.s_ratio(k, k + 1);
    }
    if (j < 0 || j > k - 1)
        fail("closed_form_curvature", "level " + std::to_string(j) + " out of 0.." + std::to_string(k - 1));
    if (j >= 1 && j <= k - 2) return interior_formula_curvature(k, j);

    // Boundary levels have no standalone formula; assemble the curvature from
    // the closed-form resistances of the four incident edges.
    double r_cap = closed_form_resistance(k, TubeResistanceKind::cap);
    double r_cyc = closed_form_resistance(k, TubeResistanceKind::cycle, j);
    if (k == 1) return 1.0 - 0.5 * (2.0 * r_cyc + 2.0 * r_cap);
    double r_vert = closed_form_resistance(k, TubeResistanceKind::path, j == 0 ? 0 : k - 2);
    return 1.0 - 0.5 * (2.0 * r_cyc + r_vert + r_cap);
}

TubeBlocks tube_blocks(int k) {
    if (k < 1) fail("tube_blocks", "need k >= 1, got " + std::to_string(k));
    int n = 3 * k + 2;
    TubeBlocks blocks;

    blocks.delta0 = Eigen::MatrixXd::Zero(k + 2, k + 2);
    for (int i = 0; i < k + 2; ++i) blocks.delta0(i, i) = (i == 0 || i == k + 1) ? 3.0 : 2.0;
    for (int t = 0; t < k + 1; ++t) {
        double c = (t == 0 || t == k) ? -std::sqrt(3.0) : -1.0;
        blocks.delta0(t, t + 1) = c;
        blocks.delta0(t + 1, t) = c;
    }

    blocks.delta3 = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) blocks.delta3(i, i) = 5.0;
    for (int t = 0; t < k - 1; ++t) {
        blocks.delta3(t, t + 1) = -1.0;
        blocks.delta3(t + 1, t) = -1.0;
    }

    // Column layout: e_x, then one symmetric vector per level, e_y, then the
    // two antisymmetric vectors per level.  Vertex (c, level) sits at row
    // 2 + 3*level + c, matching tube_skeleton's numbering.
    const double u0 = 1.0 / std::sqrt(3.0);
    const double u1 = 1.0 / std::sqrt(2.0);
    const double u2 = 1.0 / std::sqrt(6.0);
    blocks.U = Eigen::MatrixXd::Zero(n, n);
    blocks.U(0, 0) = 1.0;
    blocks.U(1, k + 1) = 1.0;
    for (int level = 0; level < k; ++level) {
        int base = 2 + 3 * level;
        blocks.U(base + 0, 1 + level) = u0;
        blocks.U(base + 1, 1 + level) = u0;
        blocks.U(base + 2, 1 + level) = u0;
        blocks.U(base + 0, k + 2 + level) = u1;
        blocks.U(base + 1, k + 2 + level) = -u1;
        blocks.U(base + 0, 2 * k + 2 + level) = u2;
        blocks.U(base + 1, 2 * k + 2 + level) = u2;
        blocks.U(base + 2, 2 * k + 2 + level) = -2.0 * u2;
    }
    return blocks;
}

Eigen::MatrixXd tridiagonal_pinv(const TridiagonalSpec& spec) {
    const int n = static_cast<int>(spec.diag.size());
    if (n < 1) fail("tridiagonal_pinv", "empty spec");
    if (spec.off.size() != n - 1)
        fail("tridiagonal_pinv", "off-diagonal length " + std::to_string(spec.off.size()) +
                                     " does not match size " + std::to_string(n));
    if (spec.omega.size() != n) fail("tridiagonal_pinv", "kernel vector omega missing or wrong length");

    constexpr double kKernelTol = 1e-10;
    for (int i = 0; i < n; ++i)
        if (!(spec.omega(i) > 0.0))
            fail("tridiagonal_pinv", "omega(" + std::to_string(i) + ") = " + std::to_string(spec.omega(i)) +
                                         " is not positive");
    for (int t = 0; t < n - 1; ++t)
        if (!(spec.off(t) > 0.0))
            fail("tridiagonal_pinv", "coupling off(" + std::to_string(t) + ") must be positive");
    if (std::abs(spec.omega.squaredNorm() - 1.0) > kKernelTol)
        fail("tridiagonal_pinv", "omega is not unit length");
    for (int i = 0; i < n; ++i) {
        double lhs = spec.diag(i) * spec.omega(i);
        double rhs = 0.0;
        if (i + 1 < n) rhs += spec.off(i) * spec.omega(i + 1);
        if (i - 1 >= 0) rhs += spec.off(i - 1) * spec.omega(i - 1);
        if (std::abs(lhs - rhs) > kKernelTol)
            fail("tridiagonal_pinv",
                 "omega fails the kernel relation at row " + std::to_string(i) + " by " + std::to_string(lhs - rhs));
    }

    Eigen::MatrixXd pinv(n, n);
    if (n == 1) {
        pinv(0, 0) = 0.0;
        return pinv;
    }

    // With A_t the left partial sum of omega^2, B_t = 1 - A_t and
    // g_t = 1/(off_t w_t w_{t+1}), the entry for i <= j is
    //   w_i w_j ( sum_{t<i} A_t^2 g_t + sum_{t>=i} B_t^2 g_t - sum_{i<=t<j} B_t g_t ),
    // so three running sums over t cover every entry.
    Eigen::VectorXd g(n - 1), A(n - 1), B(n - 1);
    double acc = 0.0;
    for (int t = 0; t < n - 1; ++t) {
        acc += spec.omega(t) * spec.omega(t);
        A(t) = acc;
        B(t) = 1.0 - acc;
        g(t) = 1.0 / (spec.off(t) * spec.omega(t) * spec.omega(t + 1));
    }
    Eigen::VectorXd before(n), after(n), middle(n);
    before(0) = 0.0;
    middle(0) = 0.0;
    for (int t = 0; t < n - 1; ++t) {
        before(t + 1) = before(t) + A(t) * A(t) * g(t);
        middle(t + 1) = middle(t) + B(t) * g(t);
    }
    after(n - 1) = 0.0;
    for (int t = n - 2; t >= 0; --t) after(t) = after(t + 1) + B(t) * B(t) * g(t);

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double value = spec.omega(i) * spec.omega(j) * (before(i) + after(i) - (middle(j) - middle(i)));
            pinv(i, j) = value;
            pinv(j, i) = value;
        }
    return pinv;
}

TridiagonalSpec tube_delta0_spec(int k) {
    if (k < 1) fail("tube_delta0_spec", "need k >= 1, got " + std::to_string(k));
    int n = k + 2;
    TridiagonalSpec spec;
    spec.diag = Eigen::VectorXd::Constant(n, 2.0);
    spec.diag(0) = 3.0;
    spec.diag(n - 1) = 3.0;
    spec.off = Eigen::VectorXd::Ones(n - 1);
    spec.off(0) = std::sqrt(3.0);
    spec.off(n - 2) = std::sqrt(3.0);
    spec.omega = Eigen::VectorXd::Constant(n, std::sqrt(3.0));
    spec.omega(0) = 1.0;
    spec.omega(n - 1) = 1.0;
    spec.omega /= std::sqrt(3.0 * k + 2.0);
    return spec;
}

double delta3_inverse_entry(int i, int j, int k) {
    TubeClosedForm f(k);
    if (i < 1 || i > k || j < 1 || j > k)
        fail("delta3_inverse_entry", "indices " + idx_str(i, j) + " out of 1.." + std::to_string(k));
    int lo = std::min(i, j);
    int hi = std::max(i, j);
    return sinh_pair_ratio(f, lo, k + 1 - hi);
}

double delta0_pinv_entry(int i, int j, int k) {
    if (k < 1) fail("delta0_pinv_entry", "need k >= 1, got " + std::to_string(k));
    if (i < 1 || i > k + 2 || j < 1 || j > k + 2)
        fail("delta0_pinv_entry", "indices " + idx_str(i, j) + " out of 1.." + std::to_string(k + 2));
    if (i > j) std::swap(i, j);
    double denom = 2.0 * (3.0 * k + 2.0);
    auto h = [&](int x) { return x * (6.0 * x * x - 3.0 * x - 1.0) / denom; };
    double c = (j - i) * (2.0 * (3.0 * k + 4.0) - 3.0 * (i + j - 1.0)) / denom;
    double wi = (i == 1 || i == k + 2) ? 1.0 : std::sqrt(3.0);
    double wj = (j == 1 || j == k + 2) ? 1.0 : std::sqrt(3.0);
    wi /= std::sqrt(3.0 * k + 2.0);
    wj /= std::sqrt(3.0 * k + 2.0);
    return wi * wj / 3.0 * (h(i - 1) + h(k + 2 - i) - (3.0 * k + 2.0) * c);
}

}  // namespace polycurv
