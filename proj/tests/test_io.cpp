#include "polycurv/common.hpp"
#include "polycurv/families.hpp"
#include "polycurv/io.hpp"

#include "support/testsupport.hpp"

#include <doctest.h>

#include <set>
#include <sstream>
#include <string>

using namespace polycurv;
namespace ts = polycurv::testsupport;

namespace {

bool same_faces(const TwoSkeleton& a, const TwoSkeleton& b) {
    return std::set<Face>(a.faces.begin(), a.faces.end()) == std::set<Face>(b.faces.begin(), b.faces.end());
}

}  // namespace

TEST_CASE("skeleton JSON round-trip") {
    TwoSkeleton cube = hypercube_skeleton(3);
    std::ostringstream out;
    write_skeleton_json(cube, out);
    CHECK(out.str().back() == '\n');

    std::istringstream in(out.str());
    SkeletonDocument doc = read_skeleton_json(in);
    REQUIRE(doc.has_faces());
    TwoSkeleton back = doc.skeleton();
    CHECK(back.graph.edges == cube.graph.edges);
    CHECK(same_faces(back, cube));
    CHECK(back.polyhedral);
}

TEST_CASE("graph-only JSON inputs") {
    std::istringstream in(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
    SkeletonDocument doc = read_skeleton_json(in);
    CHECK_FALSE(doc.has_faces());
    CHECK(doc.graph.m() == 2);
    CHECK_THROWS_WITH_AS(doc.skeleton(), doctest::Contains("no face lists"), Error);
}

TEST_CASE("skeleton JSON rejects malformed documents") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_skeleton_json(in);
    };
    CHECK_THROWS_WITH_AS(parse("[1, 2]"), doctest::Contains("not an object"), Error);
    CHECK_THROWS_WITH_AS(parse(R"({"edges": []})"), doctest::Contains("missing integer field \"n\""), Error);
    CHECK_THROWS_WITH_AS(parse(R"({"n": 3})"), doctest::Contains("missing array field \"edges\""), Error);
    CHECK_THROWS_WITH_AS(parse(R"({"n": 3, "edges": [[0, 1, 2]]})"), doctest::Contains("integer pairs"), Error);
    CHECK_THROWS_WITH_AS(parse(R"({"n": 3, "edges": [[0, 1]], "faces": 7})"),
                         doctest::Contains("must be an array"), Error);
    CHECK_THROWS_WITH_AS(parse(R"({"n": 3, "edges": [[0, 1]], "faces": [[0, "x"]]})"),
                         doctest::Contains("integer arrays"), Error);
    CHECK_THROWS_AS(parse("{ not json"), Error);
}

TEST_CASE("planar code round-trip with header") {
    RotationSystem rot = rotation_from_skeleton(hypercube_skeleton(3));
    std::ostringstream out;
    write_planar_code_header(out);
    encode_planar_code(rot, out);

    std::istringstream in(out.str());
    PlanarCodeReader reader(in);
    auto got = reader.next();
    REQUIRE(got.has_value());
    TwoSkeleton back = faces_from_rotation(*got);
    CHECK(isomorphic(back, hypercube_skeleton(3)));
    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.count() == 1);
}

TEST_CASE("planar code streams may omit the header and hold many graphs") {
    std::ostringstream out;
    encode_planar_code(rotation_from_skeleton(simplex_skeleton(3)), out);
    encode_planar_code(rotation_from_skeleton(prism_skeleton(4)), out);

    std::istringstream in(out.str());
    PlanarCodeReader reader(in);
    auto first = reader.next();
    REQUIRE(first.has_value());
    CHECK(first->n == 4);
    auto second = reader.next();
    REQUIRE(second.has_value());
    CHECK(second->n == 8);
    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.count() == 2);
}

TEST_CASE("planar code reader handles empty input") {
    std::istringstream bare("");
    PlanarCodeReader reader(bare);
    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.count() == 0);

    std::ostringstream out;
    write_planar_code_header(out);
    std::istringstream header_only(out.str());
    PlanarCodeReader reader2(header_only);
    CHECK_FALSE(reader2.next().has_value());
}

TEST_CASE("planar code reader names the broken graph") {
    // Truncated neighbor list in the very first graph.
    std::string broken1 = {3, 2, 3, 0, 1};
    std::istringstream in1(broken1);
    PlanarCodeReader r1(in1);
    CHECK_THROWS_WITH_AS(r1.next(), doctest::Contains("graph 1: truncated neighbor list"), Error);

    // A valid triangle followed by a graph whose neighbor byte exceeds n.
    std::ostringstream good;
    encode_planar_code(rotation_from_skeleton(simplex_skeleton(3)), good);
    std::string valid = good.str();
    std::string broken2 = valid + std::string({2, 5, 0, 1, 0});
    std::istringstream in2(broken2);
    PlanarCodeReader r2(in2);
    CHECK(r2.next().has_value());
    CHECK_THROWS_WITH_AS(r2.next(), doctest::Contains("graph 2: neighbor byte 5 exceeds vertex count 2"), Error);

    // Leading zero byte announces the unsupported multi-byte variant.
    std::string zero(1, '\0');
    std::istringstream in3(zero);
    PlanarCodeReader r3(in3);
    CHECK_THROWS_WITH_AS(r3.next(), doctest::Contains("multi-byte variant"), Error);
}

TEST_CASE("planar code header validation") {
    std::string bad = ">>planar_cod!<<";
    std::istringstream in(bad);
    CHECK_THROWS_WITH_AS(PlanarCodeReader{in}, doctest::Contains("malformed header"), Error);
}

TEST_CASE("encode_planar_code bounds the vertex count") {
    RotationSystem rot;
    rot.n = 0;
    std::ostringstream out;
    CHECK_THROWS_WITH_AS(encode_planar_code(rot, out), doctest::Contains("outside the 1-byte range"), Error);
    rot.n = 300;
    rot.order.resize(300);
    CHECK_THROWS_WITH_AS(encode_planar_code(rot, out), doctest::Contains("outside the 1-byte range"), Error);
}

TEST_CASE("DOT export without labels") {
    Graph p2 = build_graph(2, {{0, 1}});
    TwoSkeleton sk = attach_faces(p2, {});
    CHECK(export_dot(sk, DotLabels::none) ==
          "graph skeleton {\n"
          "  0;\n"
          "  1;\n"
          "  0 -- 1;\n"
          "}\n");
}

TEST_CASE("DOT export with resistance labels") {
    Graph p2 = build_graph(2, {{0, 1}});
    TwoSkeleton sk = attach_faces(p2, {});
    CHECK(export_dot(sk, DotLabels::resistance) ==
          "graph skeleton {\n"
          "  0 [label=\"0.5000\"];\n"
          "  1 [label=\"0.5000\"];\n"
          "  0 -- 1;\n"
          "}\n");
    TwoSkeleton split = attach_faces(build_graph(2, {}), {});
    CHECK_THROWS_WITH_AS(export_dot(split, DotLabels::resistance), doctest::Contains("disconnected"), Error);
}

TEST_CASE("DOT export with forman labels") {
    std::string dot = export_dot(simplex_skeleton(3), DotLabels::forman);
    CHECK(dot.find("  0 -- 1 [label=\"4\"];\n") != std::string::npos);
    CHECK(dot.find("  2 -- 3 [label=\"4\"];\n") != std::string::npos);
    // Vertex lines stay unlabeled in this mode.
    CHECK(dot.find("  0;\n") != std::string::npos);
    // Negative values print with their sign.
    std::string cupola = export_dot(square_cupola_skeleton(), DotLabels::forman);
    CHECK(cupola.find("[label=\"-2\"]") != std::string::npos);
}
