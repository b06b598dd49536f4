// Regenerates the bundled planar_code fixtures under tests/fixtures/.  Run
// with the target directory as the only argument; the files it writes are
// committed so the tests never depend on an external graph generator.

#include "polycurv/families.hpp"
#include "polycurv/io.hpp"
#include "polycurv/skeleton.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace polycurv;

namespace {

TwoSkeleton octahedron() {
    // K_{2,2,2} with antipodal pairs (0,1), (2,3), (4,5).
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    std::vector<std::vector<int>> faces = {{0, 2, 4}, {0, 4, 3}, {0, 3, 5}, {0, 5, 2},
                                           {1, 4, 2}, {1, 3, 4}, {1, 5, 3}, {1, 2, 5}};
    return attach_faces(build_graph(6, edges), faces);
}

void write_one(const std::string& dir, const std::string& name, const TwoSkeleton& sk) {
    std::ofstream out(dir + "/" + name + ".plc", std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << dir << "/" << name << ".plc\n";
        std::exit(1);
    }
    write_planar_code_header(out);
    encode_planar_code(rotation_from_skeleton(sk), out);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <output-dir>\n";
        return 1;
    }
    std::string dir = argv[1];

    std::vector<std::pair<std::string, TwoSkeleton>> fixtures = {
        {"tetrahedron", simplex_skeleton(3)},
        {"triangular_bipyramid", tube_skeleton(1)},
        {"square_pyramid", pyramid_skeleton(4)},
        {"prism3", prism_skeleton(3)},
        {"cube", hypercube_skeleton(3)},
        {"octahedron", octahedron()},
        {"prism5", prism_skeleton(5)},
        {"prism6", prism_skeleton(6)},
        {"pyramid7", pyramid_skeleton(7)},
    };

    for (const auto& [name, sk] : fixtures) write_one(dir, name, sk);

    // One stream with everything, for scan tests and the offline fallback of
    // the corpus checks.
    std::ofstream all(dir + "/fallback_corpus.plc", std::ios::binary);
    if (!all) {
        std::cerr << "cannot write " << dir << "/fallback_corpus.plc\n";
        return 1;
    }
    write_planar_code_header(all);
    for (const auto& [name, sk] : fixtures) encode_planar_code(rotation_from_skeleton(sk), all);

    std::cout << "wrote " << fixtures.size() << " fixtures plus fallback_corpus.plc to " << dir << "\n";
    return 0;
}
