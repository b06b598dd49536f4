#pragma once

#include "polycurv/common.hpp"
#include "polycurv/skeleton.hpp"

#include <string>
#include <vector>

namespace polycurv {

// Edges parallel to e: those sharing an endpoint but no 2-face, or sharing a
// 2-face but no endpoint.  The set itself is materialized (not just its size)
// so the two clauses stay independently testable.
std::vector<int> parallel_neighbors(const TwoSkeleton& sk, int e);

// |incident 2-faces| + 2 - |parallel neighbors|, exact.
long long forman_curvature(const TwoSkeleton& sk, int e);

struct FormanProfile {
    std::vector<long long> per_edge;  // canonical edge order
    long long min = 0;
    Rational average;
    bool positive = false;  // every edge >= 1
};

// Per-edge curvatures are independent, so the default profile evaluates them
// in parallel; the serial variant is the reference the tests compare against.
FormanProfile forman_profile(const TwoSkeleton& sk);
FormanProfile forman_profile_serial(const TwoSkeleton& sk);

// Average curvature straight from incidence statistics:
// (6 f02 + 4 f1 - sum k^2 d_k - sum k^2 p_k) / f1, exact.
Rational average_via_flags(const FlagCounts& fc);

// Cauchy-Schwarz upper bound (9 f2 + 4 f1 - 4 f1^2 / f0) / f1 on the average
// curvature of a simplicial polytope with these face numbers.  With
// simplicial_5_polytope set, f2 is replaced by the Dehn-Sommerville value
// 4 f1 - 10 f0 + 20 before evaluating.
Rational simplicial_average_bound(long long f0, long long f1, long long f2,
                                  bool simplicial_5_polytope = false);

// Diameter bound floor((2/c) * (1 + max_e |faces at e|)) valid whenever every
// edge curvature is >= c > 0; errors with a witness edge otherwise.
long long forman_diameter_bound(const TwoSkeleton& sk, const Rational& c);

// (D*(D-1)^diam - 2) / (D-2) with D = max_degree; the derivation needs
// D >= 3, so 0, 1 and 2 are rejected.
BigInt moore_bound(int max_degree, int diameter);

struct VertexCountBound {
    double log10_bound = 0.0;
    // Exact floor of the bound, available when 3*rho is an integer.
    bool has_exact = false;
    BigInt exact_floor;
    // Two variants of this bound circulate, differing in the exponent
    // (4 + 6 rho vs 2 + 6 rho) and the denominator; this implementation
    // evaluates the 4 + 6 rho form and tags results so reports can say which
    // one they used.
    bool statement_form = true;
};

// log10 of (2^(3r+1) r (2^(3r+1) r - 1)^(4+6r) - 2) / (2^(3r) r - 1) for
// rho = r >= 3, plus the exact integer floor when the exponents are integral.
VertexCountBound vertex_count_bound(const Rational& rho);

// Structural screens.  dim = 3: an empty list iff (max degree <= 5 and max
// face <= 5) or the skeleton is a hexagonal pyramid, the unique 3-polytope
// that stays curvature-positive while reaching degree or face size 6.
// dim = 4: empty iff max degree <= 12.  A nonempty list certifies the
// skeleton cannot be curvature-positive in that dimension.
std::vector<std::string> screen_low_dimension(const TwoSkeleton& sk, int dim);

}  // namespace polycurv
