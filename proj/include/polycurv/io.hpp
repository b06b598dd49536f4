#pragma once

#include "polycurv/skeleton.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polycurv {

// Skeleton JSON document: {"n": int, "edges": [[u,v],...], "faces": [...]};
// faces are optional so graph-only inputs can feed the resistance side.
struct SkeletonDocument {
    Graph graph;
    std::optional<std::vector<std::vector<int>>> faces;

    bool has_faces() const { return faces.has_value(); }
    // attach_faces on the stored lists; errors when faces are absent.
    TwoSkeleton skeleton() const;
};

SkeletonDocument read_skeleton_json(std::istream& in);
void write_skeleton_json(const TwoSkeleton& sk, std::ostream& out);

// Streaming reader for the 1-byte planar_code format (n <= 255): optional
// 15-byte ">>planar_code<<" header, then per graph one byte n followed by n
// zero-terminated neighbor lists (1-indexed, embedding order).  A leading
// 0x00 byte marks the multi-byte variant, which is not supported.
class PlanarCodeReader {
  public:
    explicit PlanarCodeReader(std::istream& in);

    // Next rotation system (0-based vertices), or nullopt at end of stream.
    // Malformed input throws, naming the graph ordinal.
    std::optional<RotationSystem> next();
    long long count() const { return count_; }

  private:
    std::istream& in_;
    long long count_ = 0;
};

void write_planar_code_header(std::ostream& out);
void encode_planar_code(const RotationSystem& rot, std::ostream& out);

enum class DotLabels { none, forman, resistance };

// DOT text with deterministic vertex and edge ordering.  forman labels edges
// with exact integers; resistance labels vertices with kappa to 4 decimals
// and requires a connected graph.
std::string export_dot(const TwoSkeleton& sk, DotLabels labels);

}  // namespace polycurv
