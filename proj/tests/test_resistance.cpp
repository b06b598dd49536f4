#include "polycurv/common.hpp"
#include "polycurv/families.hpp"
#include "polycurv/resistance.hpp"

#include "support/testsupport.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace polycurv;
namespace ts = polycurv::testsupport;

namespace {

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("effective resistance on reference graphs") {
    LaplacianSystem p2(path_graph(2));
    CHECK(effective_resistance(p2, 0, 1) == doctest::Approx(1.0).epsilon(kTol));

    LaplacianSystem p3(path_graph(3));
    CHECK(effective_resistance(p3, 0, 2) == doctest::Approx(2.0).epsilon(kTol));
    CHECK(effective_resistance(p3, 0, 0) == 0.0);

    LaplacianSystem c4(cycle_graph(4));
    CHECK(effective_resistance(c4, 0, 1) == doctest::Approx(3.0 / 4.0).epsilon(kTol));
    CHECK(effective_resistance(c4, 0, 2) == doctest::Approx(1.0).epsilon(kTol));

    LaplacianSystem k4(complete_graph(4));
    CHECK(effective_resistance(k4, 1, 3) == doctest::Approx(0.5).epsilon(kTol));

    CHECK_THROWS_WITH_AS(effective_resistance(k4, 0, 4), doctest::Contains("invalid vertex pair"), Error);
}

TEST_CASE("cube resistances by graph distance") {
    Graph cube = hypercube_skeleton(3).graph;
    LaplacianSystem sys(cube);
    // Bitmask coding: 1,2,4 adjacent to 0; 3,5,6 across a face; 7 antipodal.
    for (int v : {1, 2, 4}) CHECK(effective_resistance(sys, 0, v) == doctest::Approx(7.0 / 12.0).epsilon(kTol));
    for (int v : {3, 5, 6}) CHECK(effective_resistance(sys, 0, v) == doctest::Approx(3.0 / 4.0).epsilon(kTol));
    CHECK(effective_resistance(sys, 0, 7) == doctest::Approx(5.0 / 6.0).epsilon(kTol));
}

TEST_CASE("laplacian system rejects unusable graphs") {
    CHECK_THROWS_WITH_AS(LaplacianSystem(build_graph(4, {{0, 1}, {2, 3}})), doctest::Contains("disconnected"), Error);
    CHECK_THROWS_WITH_AS(LaplacianSystem(build_graph(0, {})), doctest::Contains("empty graph"), Error);
}

TEST_CASE("curvature profiles of the small solids") {
    // Vertex-transitive cases must sit exactly at 1/n.
    struct Case {
        Graph g;
        double min;
    };
    std::vector<Case> cases;
    cases.push_back({complete_graph(4), 0.25});
    cases.push_back({tube_skeleton(1).graph, 2.0 / 15.0});           // triangular bipyramid
    cases.push_back({pyramid_skeleton(4).graph, 1.0 / 15.0});        // square pyramid
    cases.push_back({prism_skeleton(3).graph, 1.0 / 6.0});
    cases.push_back({hypercube_skeleton(3).graph, 1.0 / 8.0});
    cases.push_back({ts::octahedron_skeleton().graph, 1.0 / 6.0});
    cases.push_back({prism_skeleton(5).graph, 1.0 / 10.0});
    cases.push_back({prism_skeleton(6).graph, 1.0 / 12.0});
    for (const Case& c : cases) {
        ResistanceProfile p = resistance_profile(c.g);
        CHECK(p.min == doctest::Approx(c.min).epsilon(1e-10));
        CHECK(p.positive);
    }
}

TEST_CASE("heptagonal pyramid apex curvature is negative") {
    Graph g = pyramid_skeleton(7).graph;
    ResistanceProfile p = resistance_profile(g);
    CHECK(p.per_vertex[pyramid_apex(7)] == doctest::Approx(-0.568965517241).epsilon(1e-9));
    CHECK(p.min == doctest::Approx(-0.568965517241).epsilon(1e-9));
    CHECK_FALSE(p.positive);
}

TEST_CASE("exactly-flat vertices land in the boundary list") {
    ResistanceProfile p = resistance_profile(path_graph(3));
    CHECK(p.per_vertex[0] == doctest::Approx(0.5).epsilon(kTol));
    CHECK(std::abs(p.per_vertex[1]) <= kPositivityStrictness);
    CHECK(p.boundary_vertices == std::vector<int>{1});
    CHECK_FALSE(p.positive);

    ResistanceProfile one = resistance_profile(path_graph(1));
    CHECK(one.per_vertex == std::vector<double>{1.0});
    CHECK(one.positive);
    CHECK(one.boundary_vertices.empty());
}

TEST_CASE("curvature sums to one on random connected graphs") {
    std::mt19937 rng(20250815);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 39);
        Graph g = ts::random_connected_graph(n, 0.15, rng);
        ResistanceProfile p = resistance_profile(g);
        double total = 0.0;
        for (double kappa : p.per_vertex) total += kappa;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
        // Equivalent statement: edge resistances sum to n - 1.
        double rsum = 0.0;
        for (double r : p.per_edge) rsum += r;
        CHECK(rsum == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-8));
    }
}

TEST_CASE("parallel and serial solvers agree bit for bit") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = ts::random_connected_graph(25, 0.2, rng);
        LaplacianSystem sys(g);
        Eigen::MatrixXd a = all_pairs_resistance(sys);
        Eigen::MatrixXd b = all_pairs_resistance_serial(sys);
        CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
        ResistanceProfile pp = resistance_profile(g);
        ResistanceProfile ps = resistance_profile_serial(g);
        CHECK(pp.per_vertex == ps.per_vertex);
        CHECK(pp.per_edge == ps.per_edge);
    }
}

TEST_CASE("resistance is a metric on random graphs") {
    std::mt19937 rng(11);
    Graph g = ts::random_connected_graph(15, 0.25, rng);
    LaplacianSystem sys(g);
    Eigen::MatrixXd R = all_pairs_resistance(sys);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            for (int w = 0; w < g.n; ++w) CHECK(R(u, v) <= R(u, w) + R(w, v) + 1e-12);
}

TEST_CASE("independent oracles agree with the solver") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        Graph g = ts::random_connected_graph(n, 0.3, rng);
        LaplacianSystem sys(g);
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                double r = effective_resistance(sys, u, v);
                CHECK(r == doctest::Approx(ts::grounded_resistance(g, u, v)).epsilon(1e-9));
                CHECK(r == doctest::Approx(ts::flow_energy(g, u, v)).epsilon(1e-9));
            }
    }
}

TEST_CASE("transitive curvature") {
    CHECK(transitive_curvature(8) == doctest::Approx(0.125).epsilon(kTol));
    ResistanceProfile c5 = resistance_profile(cycle_graph(5));
    for (double kappa : c5.per_vertex) CHECK(kappa == doctest::Approx(transitive_curvature(5)).epsilon(1e-10));
    CHECK_THROWS_WITH_AS(transitive_curvature(0), doctest::Contains("need n >= 1"), Error);
}

TEST_CASE("path upper bound") {
    CHECK(path_upper_bound({1}) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(path_upper_bound({1, 3}) == doctest::Approx(0.75).epsilon(kTol));
    CHECK(path_upper_bound({2, 2}) == doctest::Approx(1.0).epsilon(kTol));
    CHECK_THROWS_WITH_AS(path_upper_bound({}), doctest::Contains("empty path family"), Error);
    CHECK_THROWS_WITH_AS(path_upper_bound({2, 0}), doctest::Contains("nonpositive path length"), Error);
}

TEST_CASE("greedy edge-disjoint paths on the cube") {
    Graph cube = hypercube_skeleton(3).graph;
    std::vector<int> lengths = greedy_edge_disjoint_paths(cube, 0, 1);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{1, 3, 3});
    double upper = path_upper_bound(lengths);
    CHECK(upper == doctest::Approx(0.6).epsilon(kTol));
    LaplacianSystem sys(cube);
    CHECK(effective_resistance(sys, 0, 1) <= upper);
    CHECK_THROWS_WITH_AS(greedy_edge_disjoint_paths(cube, 0, 0), doctest::Contains("invalid endpoints"), Error);
}

TEST_CASE("degree lower bound") {
    CHECK(degree_lower_bound(3, 3) == doctest::Approx(0.5).epsilon(kTol));
    CHECK(degree_lower_bound(2, 2) == doctest::Approx(2.0 / 3.0).epsilon(kTol));
    CHECK(degree_lower_bound(5, 3) == doctest::Approx(3.0 / 7.0).epsilon(kTol));
    CHECK(degree_lower_bound(1, 2) == doctest::Approx(1.0).epsilon(kTol));
    CHECK_THROWS_WITH_AS(degree_lower_bound(1, 1), doctest::Contains("outside the bound's hypothesis"), Error);
    CHECK_THROWS_WITH_AS(degree_lower_bound(0, 3), doctest::Contains("degrees must be >= 1"), Error);
}

TEST_CASE("submatrix lower bound") {
    Graph cube = hypercube_skeleton(3).graph;
    LaplacianSystem sys(cube);
    double r01 = effective_resistance(sys, 0, 1);

    // Full vertex set: the bound is the resistance itself.
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    CHECK(submatrix_lower_bound(cube, all, 0, 1) == doctest::Approx(r01).epsilon(kTol));

    // Two adjacent vertices reproduce the first degree-bound branch.
    double two = submatrix_lower_bound(cube, {0, 1}, 0, 1);
    CHECK(two == doctest::Approx(0.5).epsilon(kTol));
    CHECK(two == doctest::Approx(degree_lower_bound(3, 3)).epsilon(kTol));

    // Intermediate sets stay between those extremes.
    double mid = submatrix_lower_bound(cube, {0, 1, 2, 3}, 0, 1);
    CHECK(mid >= two - kTol);
    CHECK(mid <= r01 + kTol);

    // Non-adjacent endpoints in a 2-set: two grounded singletons.
    double split = submatrix_lower_bound(cube, {0, 3}, 0, 3);
    CHECK(split == doctest::Approx(2.0 / 3.0).epsilon(kTol));

    CHECK_THROWS_WITH_AS(submatrix_lower_bound(cube, {0, 1}, 0, 2), doctest::Contains("must lie in the subset"),
                         Error);
    CHECK_THROWS_WITH_AS(submatrix_lower_bound(cube, {0, 9}, 0, 9), doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(submatrix_lower_bound(cube, {0, 1}, 0, 0), doctest::Contains("endpoints coincide"), Error);
}

TEST_CASE("bounds sandwich the resistance on random graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6 + static_cast<int>(rng() % 10);
        Graph g = ts::random_connected_graph(n, 0.25, rng);
        LaplacianSystem sys(g);
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edges[e];
            double r = effective_resistance(sys, u, v);
            if (!(g.degree(u) == 1 && g.degree(v) == 1))
                CHECK(degree_lower_bound(g.degree(u), g.degree(v)) <= r + 1e-9);
            CHECK(r <= path_upper_bound(greedy_edge_disjoint_paths(g, u, v)) + 1e-9);
            CHECK(submatrix_lower_bound(g, {u, v}, u, v) <= r + 1e-9);
        }
    }
}

TEST_CASE("simple-polytope face-vector bound") {
    CHECK(simple3_lower_bound({3, 3, 3}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(simple3_lower_bound({5, 5, 5}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(simple3_lower_bound({7, 3, 3}) == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(simple3_lower_bound({4, 4, 4}) == doctest::Approx(0.10).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(simple3_lower_bound({3, 3}), doctest::Contains("need exactly 3"), Error);
    CHECK_THROWS_WITH_AS(simple3_lower_bound({3, 3, 2}), doctest::Contains("below 3"), Error);
}

TEST_CASE("face-vector positivity over lengths 3..6") {
    // Exhaustive sweep; the non-positive vectors are exactly these five.
    std::vector<std::vector<int>> forbidden;
    for (int a = 3; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 6; ++c)
                if (!face_vector_is_positive({a, b, c})) forbidden.push_back({a, b, c});
    std::vector<std::vector<int>> want = {{4, 6, 6}, {5, 5, 5}, {5, 5, 6}, {5, 6, 6}, {6, 6, 6}};
    CHECK(forbidden == want);
    // The bound itself is nonpositive exactly on that list.
    for (const auto& fv : forbidden) CHECK(simple3_lower_bound(fv) <= 0.0);
    CHECK(face_vector_is_positive({3, 6, 6}));
    CHECK(face_vector_is_positive({4, 4, 6}));
}

TEST_CASE("face-vector bound undercuts the prism curvature") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = prism_skeleton(n).graph;
        TwoSkeleton sk = prism_skeleton(n);
        ResistanceProfile p = resistance_profile(g);
        for (int v = 0; v < g.n; ++v) {
            double lower = simple3_lower_bound(face_vector(sk, v));
            CHECK(lower <= p.per_vertex[v] + 1e-9);
        }
    }
}

TEST_CASE("negative curvature criterion") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = pyramid_skeleton(n).graph;
        bool fires = negative_curvature_criterion(g, pyramid_apex(n));
        CHECK(fires == (n >= 5));
        if (fires) CHECK(resistance_profile(g).per_vertex[pyramid_apex(n)] < 0.0);
    }
    Graph cube = hypercube_skeleton(3).graph;
    CHECK_FALSE(negative_curvature_criterion(cube, 0));
    // Star: the hub qualifies, leaves do not.
    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(negative_curvature_criterion(star, 0));
    CHECK_FALSE(negative_curvature_criterion(star, 1));
    CHECK_THROWS_WITH_AS(negative_curvature_criterion(star, 5), doctest::Contains("invalid vertex"), Error);
}

TEST_CASE("resistance diameter bound") {
    Graph cube = hypercube_skeleton(3).graph;
    CHECK(resistance_diameter_bound(cube) == 8);
    CHECK(resistance_diameter_bound(cube) >= graph_diameter(cube));
    CHECK_THROWS_WITH_AS(resistance_diameter_bound(pyramid_skeleton(7).graph), doctest::Contains("kappa(7)"), Error);
}

TEST_CASE("expansion keeps the platonic seeds positive") {
    ResistanceProfile cube_ex = resistance_profile(delta_expansion(hypercube_skeleton(3), 0).graph);
    CHECK(cube_ex.min == doctest::Approx(0.068966).epsilon(5e-5));
    CHECK(cube_ex.positive);

    // Repeated expansion at the same site keeps shrinking the minimum but
    // never reaches zero.
    TwoSkeleton sk = simplex_skeleton(3);
    std::vector<double> want = {1.0 / 6.0, 0.092262, 0.076213};
    for (double expected : want) {
        sk = delta_expansion(sk, 0);
        ResistanceProfile p = resistance_profile(sk.graph);
        CHECK(p.min == doctest::Approx(expected).epsilon(5e-5));
        CHECK(p.positive);
    }
}
