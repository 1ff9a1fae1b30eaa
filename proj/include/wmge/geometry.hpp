#ifndef WMGE_GEOMETRY_HPP
#define WMGE_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wmge/path_pair.hpp"

namespace wmge {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

// Integer placement of every vertex of a path pair.
struct GridEmbedding {
    std::vector<Point> points;  // indexed by dense vertex id
    std::string provenance;
};

enum class SegmentOwner { PathX, PathY, Shared };

// One drawn edge. A vertex pair traversed by both paths is collapsed into a
// single Shared segment.
struct Segment {
    Point a, b;
    SegmentOwner owner;
    int edge_index;  // index on the owning path (x_index for Shared)
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(Point a, Point b, Point c);

// True iff p lies on segment ab, endpoints included.
bool on_segment(Point p, Point a, Point b);

enum class SegmentRelation {
    Disjoint,      // no common point
    SinglePoint,   // exactly one common point
    Overlap,       // collinear with a common sub-segment of positive length
};

// Exact classification of how two segments intersect. Degenerate
// (zero-length) segments are handled as points.
SegmentRelation classify_intersection(const Segment& s, const Segment& t);

enum class ViolationKind {
    DuplicatePoint,
    NonMonotoneX,
    NonMonotoneY,
    VertexOnEdgeInterior,
    SegmentOverlap,
    DoubleCrossing,
    EdgeCrossingAtNonVertex,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string witness;

    bool operator==(const Violation&) const = default;
};

enum class CheckMode {
    // Enforce weak x-monotonicity of P_x and y-monotonicity of P_y; proper
    // interior crossings are recorded as informational counts only.
    Wmge,
    // No monotonicity requirement, but proper interior crossings between
    // edges of the same path are violations.
    StrictPlanarity,
};

struct CheckOptions {
    CheckMode mode = CheckMode::Wmge;
    // Additionally reject proper interior crossings between an edge of P_x
    // and an edge of P_y (they are permitted by default in both modes).
    bool forbid_cross_path_crossings = false;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
    // Informational: proper interior crossings that the active mode permits.
    int permitted_crossings = 0;
};

// Full validity check of an embedding: distinct points, monotonicity (Wmge
// mode), no vertex interior to an edge, and every pair of distinct segments
// meeting in at most one point. All arithmetic is exact over integers.
ValidationReport check_wmge(const PathPair& p, const GridEmbedding& emb,
                            CheckOptions opts = {});

// True iff every edge (shared edges counted once) has squared length 1.
bool check_unit_length(const PathPair& p, const GridEmbedding& emb);

struct EmbeddingMetrics {
    std::int64_t perimeter = 0;  // 2 * (width + height)
    std::int64_t width = 0;
    std::int64_t height = 0;
    std::int64_t max_sq_edge = 0;   // exact
    double total_length = 0.0;      // floating approximation
};

EmbeddingMetrics metrics(const PathPair& p, const GridEmbedding& emb);

// The drawn segments of an embedding, shared vertex pairs collapsed.
std::vector<Segment> embedding_segments(const PathPair& p,
                                        const DerivedStructure& d,
                                        const GridEmbedding& emb);

std::string report_to_json(const ValidationReport& r);

}  // namespace wmge

#endif
