#ifndef WMGE_EMBEDDER_HPP
#define WMGE_EMBEDDER_HPP

#include <cstdint>
#include <vector>

#include "wmge/bipartite_matching.hpp"
#include "wmge/constraint_graph.hpp"
#include "wmge/geometry.hpp"
#include "wmge/path_pair.hpp"

namespace wmge {

// Nonnegative integer x-extent per P_x edge and y-extent per P_y edge.
struct ExtentAssignment {
    std::vector<int> d_x;
    std::vector<int> d_y;

    bool operator==(const ExtentAssignment&) const = default;
};

// The constraint graph mapped onto the generic bipartite carrier. A-side
// vertices are the color-A CgVertices in cg order, B-side the color-B ones.
struct CgBipartite {
    BipartiteGraph graph;
    std::vector<int> a_to_cg;  // A index -> cg vertex id
    std::vector<int> b_to_cg;
    std::vector<int> cg_to_ab;  // cg vertex id -> index within its class
};

CgBipartite to_bipartite(const ConstraintGraph& g);

// Cover flags per cg vertex id, translated back from the bipartite carrier.
std::vector<char> cover_on_cg(const CgBipartite& bip, const VertexCover& c);

// True iff the extents satisfy the two switch constraint families and the
// shared-edge constraint.
bool extents_satisfy(const PathPair& p, const DerivedStructure& d,
                     const ExtentAssignment& e);

// Extent 1 for each covered path edge, 0 elsewhere. Throws
// std::invalid_argument if `covered` is not a vertex cover of g.
ExtentAssignment extents_from_cover(const ConstraintGraph& g,
                                    const std::vector<char>& covered);

// Prefix sums along both paths, anchored at 0. Throws std::invalid_argument
// if the extents violate a constraint family.
GridEmbedding coordinates_from_extents(const PathPair& p,
                                       const ExtentAssignment& e);

struct SolveResult {
    GridEmbedding embedding;
    ExtentAssignment extents;
    int cover_size = 0;
    std::int64_t perimeter = 0;
    std::int64_t width = 0;
    std::int64_t height = 0;
};

// Full minimum-perimeter pipeline: derive, constraint graph, maximum
// matching, Kőnig cover, extents, coordinates.
SolveResult solve_min_perimeter(const PathPair& p);

// Rank placement: x(v) = pos_x[v], y(v) = pos_y[v].
GridEmbedding brass_baseline(const PathPair& p);

}  // namespace wmge

#endif
