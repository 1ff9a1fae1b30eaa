#include "wmge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wmge {

namespace {

std::int64_t cross(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int sign(std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string segment_name(const Segment& s) {
    switch (s.owner) {
        case SegmentOwner::PathX:
            return "X edge " + std::to_string(s.edge_index);
        case SegmentOwner::PathY:
            return "Y edge " + std::to_string(s.edge_index);
        case SegmentOwner::Shared:
            return "shared edge (X index " + std::to_string(s.edge_index) + ")";
    }
    return "?";
}

bool same_path(const Segment& s, const Segment& t) {
    if (s.owner == SegmentOwner::Shared || t.owner == SegmentOwner::Shared) {
        return true;
    }
    return s.owner == t.owner;
}

std::int64_t sq_length(Point a, Point b) {
    const std::int64_t dx = b.x - a.x;
    const std::int64_t dy = b.y - a.y;
    return dx * dx + dy * dy;
}

}  // namespace

int orientation(Point a, Point b, Point c) { return sign(cross(a, b, c)); }

bool on_segment(Point p, Point a, Point b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

SegmentRelation classify_intersection(const Segment& s, const Segment& t) {
    if (s.a == s.b) {
        return on_segment(s.a, t.a, t.b) ? SegmentRelation::SinglePoint
                                         : SegmentRelation::Disjoint;
    }
    if (t.a == t.b) {
        return on_segment(t.a, s.a, s.b) ? SegmentRelation::SinglePoint
                                         : SegmentRelation::Disjoint;
    }
    const int d1 = orientation(t.a, t.b, s.a);
    const int d2 = orientation(t.a, t.b, s.b);
    const int d3 = orientation(s.a, s.b, t.a);
    const int d4 = orientation(s.a, s.b, t.b);
    if (d1 == 0 && d2 == 0) {
        // Collinear: compare 1D projections on the dominant axis.
        const bool use_x = s.a.x != s.b.x;
        auto proj = [use_x](Point p) { return use_x ? p.x : p.y; };
        const std::int64_t lo =
            std::max(std::min(proj(s.a), proj(s.b)), std::min(proj(t.a), proj(t.b)));
        const std::int64_t hi =
            std::min(std::max(proj(s.a), proj(s.b)), std::max(proj(t.a), proj(t.b)));
        if (lo > hi) return SegmentRelation::Disjoint;
        return lo == hi ? SegmentRelation::SinglePoint : SegmentRelation::Overlap;
    }
    if (d1 * d2 < 0 && d3 * d4 < 0) return SegmentRelation::SinglePoint;
    if (d1 == 0 && on_segment(s.a, t.a, t.b)) return SegmentRelation::SinglePoint;
    if (d2 == 0 && on_segment(s.b, t.a, t.b)) return SegmentRelation::SinglePoint;
    if (d3 == 0 && on_segment(t.a, s.a, s.b)) return SegmentRelation::SinglePoint;
    if (d4 == 0 && on_segment(t.b, s.a, s.b)) return SegmentRelation::SinglePoint;
    return SegmentRelation::Disjoint;
}

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::DuplicatePoint: return "DUPLICATE_POINT";
        case ViolationKind::NonMonotoneX: return "NON_MONOTONE_X";
        case ViolationKind::NonMonotoneY: return "NON_MONOTONE_Y";
        case ViolationKind::VertexOnEdgeInterior: return "VERTEX_ON_EDGE_INTERIOR";
        case ViolationKind::SegmentOverlap: return "SEGMENT_OVERLAP";
        case ViolationKind::DoubleCrossing: return "DOUBLE_CROSSING";
        case ViolationKind::EdgeCrossingAtNonVertex:
            return "EDGE_CROSSING_AT_NON_VERTEX";
    }
    return "?";
}

std::vector<Segment> embedding_segments(const PathPair& p,
                                        const DerivedStructure& d,
                                        const GridEmbedding& emb) {
    const int m = p.n > 0 ? p.n - 1 : 0;
    std::vector<char> shared_x(m, 0), shared_y(m, 0);
    for (const SharedEdge& s : d.shared_edges) {
        shared_x[s.x_index] = 1;
        shared_y[s.y_index] = 1;
    }
    std::vector<Segment> segs;
    segs.reserve(2 * m);
    for (int i = 0; i < m; ++i) {
        const SegmentOwner owner =
            shared_x[i] ? SegmentOwner::Shared : SegmentOwner::PathX;
        segs.push_back(
            Segment{emb.points[p.pi_x[i]], emb.points[p.pi_x[i + 1]], owner, i});
    }
    for (int i = 0; i < m; ++i) {
        if (shared_y[i]) continue;  // collapsed into the X incarnation
        segs.push_back(Segment{emb.points[p.pi_y[i]], emb.points[p.pi_y[i + 1]],
                               SegmentOwner::PathY, i});
    }
    return segs;
}

ValidationReport check_wmge(const PathPair& p, const GridEmbedding& emb,
                            CheckOptions opts) {
    ValidationReport rep;
    auto add = [&rep](ViolationKind k, std::string w) {
        rep.violations.push_back(Violation{k, std::move(w)});
    };

    // Distinct locations.
    std::vector<int> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return emb.points[a] != emb.points[b] ? emb.points[a] < emb.points[b]
                                              : a < b;
    });
    for (int i = 0; i + 1 < p.n; ++i) {
        const int a = order[i], b = order[i + 1];
        if (emb.points[a] == emb.points[b]) {
            add(ViolationKind::DuplicatePoint,
                "v" + std::to_string(std::min(a, b)) + " and v" +
                    std::to_string(std::max(a, b)) + " both at " +
                    point_str(emb.points[a]));
        }
    }

    if (opts.mode == CheckMode::Wmge) {
        for (int i = 0; i + 1 < p.n; ++i) {
            if (emb.points[p.pi_x[i]].x > emb.points[p.pi_x[i + 1]].x) {
                add(ViolationKind::NonMonotoneX,
                    "x decreases along P_x at edge " + std::to_string(i));
            }
            if (emb.points[p.pi_y[i]].y > emb.points[p.pi_y[i + 1]].y) {
                add(ViolationKind::NonMonotoneY,
                    "y decreases along P_y at edge " + std::to_string(i));
            }
        }
    }

    const DerivedStructure d = derive(p);
    const std::vector<Segment> segs = embedding_segments(p, d, emb);

    // No vertex interior to an edge. Every segment endpoint is a vertex
    // location, so endpoint-on-interior contacts between segments are
    // caught here as well.
    for (const Segment& s : segs) {
        if (s.a == s.b) continue;  // degenerate, flagged as duplicate already
        for (int v = 0; v < p.n; ++v) {
            const Point q = emb.points[v];
            if (q == s.a || q == s.b) continue;
            if (on_segment(q, s.a, s.b)) {
                add(ViolationKind::VertexOnEdgeInterior,
                    "v" + std::to_string(v) + " at " + point_str(q) +
                        " lies inside " + segment_name(s));
            }
        }
    }

    // Pairwise: at most one common point per segment pair.
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Segment& s = segs[i];
            const Segment& t = segs[j];
            if (s.a == s.b || t.a == t.b) continue;
            const bool identical = (s.a == t.a && s.b == t.b) ||
                                   (s.a == t.b && s.b == t.a);
            if (identical) {
                add(ViolationKind::DoubleCrossing,
                    segment_name(s) + " and " + segment_name(t) +
                        " coincide as segments");
                continue;
            }
            const SegmentRelation rel = classify_intersection(s, t);
            if (rel == SegmentRelation::Overlap) {
                add(ViolationKind::SegmentOverlap,
                    segment_name(s) + " overlaps " + segment_name(t));
                continue;
            }
            if (rel != SegmentRelation::SinglePoint) continue;
            const bool proper =
                orientation(t.a, t.b, s.a) * orientation(t.a, t.b, s.b) < 0 &&
                orientation(s.a, s.b, t.a) * orientation(s.a, s.b, t.b) < 0;
            if (!proper) continue;  // meeting at a vertex point
            const bool within_one_path = same_path(s, t);
            const bool forbidden =
                (opts.mode == CheckMode::StrictPlanarity && within_one_path) ||
                (!within_one_path && opts.forbid_cross_path_crossings);
            if (forbidden) {
                add(ViolationKind::EdgeCrossingAtNonVertex,
                    segment_name(s) + " crosses " + segment_name(t) +
                        " at an interior point");
            } else {
                ++rep.permitted_crossings;
            }
        }
    }

    rep.valid = rep.violations.empty();
    return rep;
}

bool check_unit_length(const PathPair& p, const GridEmbedding& emb) {
    const DerivedStructure d = derive(p);
    for (const Segment& s : embedding_segments(p, d, emb)) {
        if (sq_length(s.a, s.b) != 1) return false;
    }
    return true;
}

EmbeddingMetrics metrics(const PathPair& p, const GridEmbedding& emb) {
    EmbeddingMetrics m;
    if (p.n == 0) return m;
    std::int64_t min_x = emb.points[0].x, max_x = emb.points[0].x;
    std::int64_t min_y = emb.points[0].y, max_y = emb.points[0].y;
    for (const Point& q : emb.points) {
        min_x = std::min(min_x, q.x);
        max_x = std::max(max_x, q.x);
        min_y = std::min(min_y, q.y);
        max_y = std::max(max_y, q.y);
    }
    m.width = max_x - min_x;
    m.height = max_y - min_y;
    m.perimeter = 2 * (m.width + m.height);
    const DerivedStructure d = derive(p);
    for (const Segment& s : embedding_segments(p, d, emb)) {
        const std::int64_t sq = sq_length(s.a, s.b);
        m.max_sq_edge = std::max(m.max_sq_edge, sq);
        m.total_length += std::sqrt(static_cast<double>(sq));
    }
    return m;
}

std::string report_to_json(const ValidationReport& r) {
    nlohmann::json doc;
    doc["valid"] = r.valid;
    doc["permitted_crossings"] = r.permitted_crossings;
    doc["violations"] = nlohmann::json::array();
    for (const Violation& v : r.violations) {
        doc["violations"].push_back(
            {{"kind", violation_kind_name(v.kind)}, {"witness", v.witness}});
    }
    return doc.dump(2);
}

}  // namespace wmge
