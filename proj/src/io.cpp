#include "polycurv/io.hpp"

#include "polycurv/common.hpp"
#include "polycurv/forman.hpp"
#include "polycurv/resistance.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace polycurv {

using nlohmann::json;

TwoSkeleton SkeletonDocument::skeleton() const {
    if (!faces) fail("skeleton_document", "input has no face lists");
    return attach_faces(graph, *faces);
}

SkeletonDocument read_skeleton_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail("read_skeleton_json", e.what());
    }
    if (!doc.is_object()) fail("read_skeleton_json", "top-level value is not an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        fail("read_skeleton_json", "missing integer field \"n\"");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail("read_skeleton_json", "missing array field \"edges\"");

    int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
            fail("read_skeleton_json", "edge entries must be integer pairs");
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }

    SkeletonDocument out;
    out.graph = build_graph(n, edges);
    if (doc.contains("faces")) {
        if (!doc["faces"].is_array()) fail("read_skeleton_json", "field \"faces\" must be an array");
        std::vector<std::vector<int>> faces;
        for (const auto& cycle : doc["faces"]) {
            if (!cycle.is_array()) fail("read_skeleton_json", "face entries must be integer arrays");
            std::vector<int> face;
            for (const auto& v : cycle) {
                if (!v.is_number_integer()) fail("read_skeleton_json", "face entries must be integer arrays");
                face.push_back(v.get<int>());
            }
            faces.push_back(std::move(face));
        }
        out.faces = std::move(faces);
    }
    return out;
}

void write_skeleton_json(const TwoSkeleton& sk, std::ostream& out) {
    json doc;
    doc["n"] = sk.graph.n;
    auto edges = json::array();
    for (auto [u, v] : sk.graph.edges) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    auto faces = json::array();
    for (const Face& face : sk.faces) faces.push_back(face.vertices);
    doc["faces"] = std::move(faces);
    out << doc.dump() << '\n';
}

namespace {

constexpr char kHeader[] = ">>planar_code<<";
constexpr int kHeaderLen = 15;

}  // namespace

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {
    if (in_.peek() != '>') return;
    char buf[kHeaderLen];
    in_.read(buf, kHeaderLen);
    if (in_.gcount() != kHeaderLen || std::string(buf, kHeaderLen) != kHeader)
        fail("parse_planar_code", "malformed header, expected \">>planar_code<<\"");
}

std::optional<RotationSystem> PlanarCodeReader::next() {
    int first = in_.get();
    if (first == std::char_traits<char>::eof()) return std::nullopt;

    std::string at = "graph " + std::to_string(count_ + 1);
    int n = first;
    if (n == 0)
        fail("parse_planar_code", at + ": leading zero byte marks the multi-byte variant, which is not supported");

    RotationSystem rot;
    rot.n = n;
    rot.order.resize(n);
    for (int v = 0; v < n; ++v) {
        while (true) {
            int b = in_.get();
            if (b == std::char_traits<char>::eof())
                fail("parse_planar_code", at + ": truncated neighbor list for vertex " + std::to_string(v));
            if (b == 0) break;
            if (b > n)
                fail("parse_planar_code",
                     at + ": neighbor byte " + std::to_string(b) + " exceeds vertex count " + std::to_string(n));
            rot.order[v].push_back(b - 1);
        }
    }
    ++count_;
    return rot;
}

void write_planar_code_header(std::ostream& out) {
    out.write(kHeader, kHeaderLen);
}

void encode_planar_code(const RotationSystem& rot, std::ostream& out) {
    if (rot.n < 1 || rot.n > 255)
        fail("encode_planar_code", "vertex count " + std::to_string(rot.n) + " outside the 1-byte range 1..255");
    out.put(static_cast<char>(rot.n));
    for (const auto& nbrs : rot.order) {
        for (int u : nbrs) out.put(static_cast<char>(u + 1));
        out.put('\0');
    }
}

std::string export_dot(const TwoSkeleton& sk, DotLabels labels) {
    const Graph& g = sk.graph;
    std::ostringstream out;
    out << "graph skeleton {\n";

    std::vector<std::string> vertex_labels;
    if (labels == DotLabels::resistance) {
        ResistanceProfile profile = resistance_profile(g);
        char buf[32];
        for (double kappa : profile.per_vertex) {
            std::snprintf(buf, sizeof buf, "%.4f", kappa);
            vertex_labels.emplace_back(buf);
        }
    }
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        if (labels == DotLabels::resistance) out << " [label=\"" << vertex_labels[v] << "\"]";
        out << ";\n";
    }

    std::vector<long long> edge_labels;
    if (labels == DotLabels::forman) edge_labels = forman_profile(sk).per_edge;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        out << "  " << u << " -- " << v;
        if (labels == DotLabels::forman) out << " [label=\"" << edge_labels[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace polycurv
