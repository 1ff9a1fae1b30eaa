#ifndef WMGE_TESTS_RATIONAL_ORACLE_HPP
#define WMGE_TESTS_RATIONAL_ORACLE_HPP

#include <algorithm>
#include <cstdint>

#include "wmge/geometry.hpp"

namespace wmge::testutil {

// Independent rational-arithmetic intersection oracle: solves the
// parametric segment equations with exact int64 fractions instead of the
// orientation predicates used by the library.
inline SegmentRelation rational_intersection(Point a, Point b, Point c, Point d) {
    const std::int64_t rx = b.x - a.x, ry = b.y - a.y;
    const std::int64_t sx = d.x - c.x, sy = d.y - c.y;
    const std::int64_t denom = rx * sy - ry * sx;
    const std::int64_t qpx = c.x - a.x, qpy = c.y - a.y;
    auto param_in_unit = [](std::int64_t num, std::int64_t den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return 0 <= num && num <= den;
    };
    if (denom != 0) {
        const std::int64_t t_num = qpx * sy - qpy * sx;
        const std::int64_t u_num = qpx * ry - qpy * rx;
        return param_in_unit(t_num, denom) && param_in_unit(u_num, denom)
                   ? SegmentRelation::SinglePoint
                   : SegmentRelation::Disjoint;
    }
    // Parallel. Distinct lines never meet.
    if (qpx * ry - qpy * rx != 0) return SegmentRelation::Disjoint;
    const std::int64_t len2 = rx * rx + ry * ry;
    if (len2 == 0) {
        // Degenerate first segment: is the point a within [c, d]?
        const std::int64_t s2 = sx * sx + sy * sy;
        if (s2 == 0) {
            return a == c ? SegmentRelation::SinglePoint : SegmentRelation::Disjoint;
        }
        const std::int64_t t = (a.x - c.x) * sx + (a.y - c.y) * sy;
        return 0 <= t && t <= s2 ? SegmentRelation::SinglePoint
                                 : SegmentRelation::Disjoint;
    }
    // Collinear: compare the 1D parameter intervals along (rx, ry).
    const std::int64_t tc = qpx * rx + qpy * ry;
    const std::int64_t td = (d.x - a.x) * rx + (d.y - a.y) * ry;
    const std::int64_t lo = std::max<std::int64_t>(0, std::min(tc, td));
    const std::int64_t hi = std::min(len2, std::max(tc, td));
    if (lo > hi) return SegmentRelation::Disjoint;
    return lo == hi ? SegmentRelation::SinglePoint : SegmentRelation::Overlap;
}

}  // namespace wmge::testutil

#endif
