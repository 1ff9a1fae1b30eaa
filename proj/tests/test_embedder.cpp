#include <doctest.h>

#include <numeric>
#include <random>

#include "test_util.hpp"
#include "wmge/embedder.hpp"

using namespace wmge;

namespace {

std::vector<char> cover_from_indices(const ConstraintGraph& g,
                                     std::vector<std::pair<Side, int>> picks) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (auto [side, idx] : picks) {
        covered[side == Side::X ? g.x_vertex(idx) : g.y_vertex(idx)] = 1;
    }
    return covered;
}

}  // namespace

TEST_CASE("extents from a cover of the triangle instance") {
    const PathPair p = testutil::instance_with_py({0, 2, 1});
    const DerivedStructure d = derive(p);
    const ConstraintGraph g = build_constraint_graph(p, d);
    const ExtentAssignment e = extents_from_cover(
        g, cover_from_indices(g, {{Side::X, 1}, {Side::Y, 1}}));
    CHECK(e.d_x == std::vector<int>{0, 1});
    CHECK(e.d_y == std::vector<int>{0, 1});
    CHECK(extents_satisfy(p, d, e));
}

TEST_CASE("n=2 identity: covering the X edge") {
    const PathPair p = PathPair::from_orders({0, 1}, {0, 1});
    const ConstraintGraph g = build_constraint_graph(p, derive(p));
    const ExtentAssignment e =
        extents_from_cover(g, cover_from_indices(g, {{Side::X, 0}}));
    CHECK(e.d_x == std::vector<int>{1});
    CHECK(e.d_y == std::vector<int>{0});
}

TEST_CASE("identity n=3 with both X edges covered") {
    const PathPair p = testutil::instance_with_py({0, 1, 2});
    const ConstraintGraph g = build_constraint_graph(p, derive(p));
    const ExtentAssignment e = extents_from_cover(
        g, cover_from_indices(g, {{Side::X, 0}, {Side::X, 1}}));
    CHECK(e.d_x == std::vector<int>{1, 1});
    CHECK(e.d_y == std::vector<int>{0, 0});
}

TEST_CASE("an invalid cover is rejected") {
    const PathPair p = testutil::instance_with_py({0, 2, 1});
    const ConstraintGraph g = build_constraint_graph(p, derive(p));
    CHECK_THROWS_AS(extents_from_cover(g, cover_from_indices(g, {{Side::X, 0}})),
                    std::invalid_argument);
}

TEST_CASE("coordinates from extents: triangle") {
    const PathPair p = testutil::instance_with_py({0, 2, 1});
    const GridEmbedding emb = coordinates_from_extents(p, {{0, 1}, {0, 1}});
    CHECK(emb.points == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(check_wmge(p, emb).valid);
    CHECK(metrics(p, emb).perimeter == 4);
}

TEST_CASE("coordinates for n=1") {
    const PathPair p = PathPair::from_orders({0}, {0});
    const GridEmbedding emb = coordinates_from_extents(p, {{}, {}});
    CHECK(emb.points == std::vector<Point>{{0, 0}});
}

TEST_CASE("identity paths collapse to a horizontal segment") {
    const PathPair p = testutil::instance_with_py({0, 1, 2});
    const GridEmbedding emb = coordinates_from_extents(p, {{1, 1}, {0, 0}});
    CHECK(emb.points == std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
    // Valid: the two paths coincide edge for edge, so the collinear
    // segments are single shared segments, not overlaps.
    CHECK(check_wmge(p, emb).valid);
}

TEST_CASE("constraint-violating extents are rejected before reconstruction") {
    const PathPair p = testutil::instance_with_py({0, 2, 1});
    CHECK_THROWS_AS(coordinates_from_extents(p, {{0, 0}, {0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(coordinates_from_extents(p, {{0, 1}, {0}}),
                    std::invalid_argument);
}

TEST_CASE("solver examples") {
    CHECK(solve_min_perimeter(testutil::instance_with_py({0, 2, 1})).perimeter == 4);
    CHECK(solve_min_perimeter(PathPair::from_orders({0, 1}, {1, 0})).perimeter == 2);
    CHECK(solve_min_perimeter(PathPair::from_orders({0, 1}, {0, 1})).perimeter == 2);
    CHECK(solve_min_perimeter(PathPair::from_orders({0}, {0})).perimeter == 0);
}

TEST_CASE("solver output is always a valid WMGE") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const PathPair p = testutil::random_instance(1 + trial % 40, rng);
        const SolveResult res = solve_min_perimeter(p);
        CHECK(check_wmge(p, res.embedding).valid);
        const EmbeddingMetrics m = metrics(p, res.embedding);
        CHECK(m.perimeter == res.perimeter);
        CHECK(res.perimeter == 2 * res.cover_size);
        CHECK(m.width == res.width);
        CHECK(m.height == res.height);
    }
}

TEST_CASE("solver never exceeds the rank baseline") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 40;
        const PathPair p = testutil::random_instance(n, rng);
        CHECK(solve_min_perimeter(p).perimeter <= 4 * (n - 1));
    }
}

TEST_CASE("brass baseline examples") {
    const PathPair p = PathPair::from_orders({0, 1, 2}, {2, 0, 1});
    const GridEmbedding emb = brass_baseline(p);
    CHECK(emb.points == std::vector<Point>{{0, 1}, {1, 2}, {2, 0}});

    const PathPair p2 = PathPair::from_orders({0, 1}, {0, 1});
    CHECK(brass_baseline(p2).points == std::vector<Point>{{0, 0}, {1, 1}});

    std::mt19937 rng(47);
    const PathPair p5 = testutil::random_instance(5, rng);
    CHECK(metrics(p5, brass_baseline(p5)).perimeter == 16);
}

TEST_CASE("clamping extents above 1 preserves feasibility") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> extent(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const PathPair p = testutil::random_instance(2 + trial % 20, rng);
        const DerivedStructure d = derive(p);
        const int m = p.n - 1;
        ExtentAssignment e;
        e.d_x.resize(m);
        e.d_y.resize(m);
        for (int i = 0; i < m; ++i) {
            e.d_x[i] = extent(rng);
            e.d_y[i] = extent(rng);
        }
        if (!extents_satisfy(p, d, e)) continue;
        for (int i = 0; i < m; ++i) {
            e.d_x[i] = std::min(e.d_x[i], 1);
            e.d_y[i] = std::min(e.d_y[i], 1);
        }
        CHECK(extents_satisfy(p, d, e));
    }
}

TEST_CASE("translation leaves validity and perimeter unchanged") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const PathPair p = testutil::random_instance(2 + trial % 15, rng);
        GridEmbedding emb = solve_min_perimeter(p).embedding;
        const EmbeddingMetrics before = metrics(p, emb);
        for (Point& q : emb.points) {
            q.x += 17;
            q.y -= 5;
        }
        CHECK(check_wmge(p, emb).valid);
        CHECK(metrics(p, emb).perimeter == before.perimeter);
    }
}
