#ifndef WMGE_CONSTRAINT_GRAPH_HPP
#define WMGE_CONSTRAINT_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "wmge/path_pair.hpp"

namespace wmge {

enum class CgColor { A, B };

// One vertex of the constraint graph: a single path edge.
struct CgVertex {
    Side side;
    int edge_index;
    Alignment alignment;
    CgColor color;

    bool operator==(const CgVertex&) const = default;
};

// Constraint graph of a path pair. Vertices are path edges (all X edges,
// then all Y edges); edges link switch pairs within a side and the two
// incarnations of each shared edge across sides. The stored two-coloring
// comes from the alignment rule and is proper by construction.
struct ConstraintGraph {
    int n = 0;  // vertex count of the underlying path pair
    std::vector<CgVertex> vertices;              // 2(n-1) entries
    std::vector<std::pair<int, int>> edges_ex;   // pairs of X edge indices
    std::vector<std::pair<int, int>> edges_ey;   // pairs of Y edge indices
    std::vector<std::pair<int, int>> edges_m;    // (X index, Y index)
    std::vector<std::vector<int>> adjacency;     // cg-vertex id -> sorted cg ids

    int x_vertex(int edge_index) const { return edge_index; }
    int y_vertex(int edge_index) const { return (n - 1) + edge_index; }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const {
        return static_cast<int>(edges_ex.size() + edges_ey.size() + edges_m.size());
    }
    // Every constraint edge as a cg-vertex id pair, E_X then E_Y then M.
    std::vector<std::pair<int, int>> all_edges() const;
};

ConstraintGraph build_constraint_graph(const PathPair& p, const DerivedStructure& d);

// True iff every edge is bi-chromatic under the stored coloring and an
// independent BFS 2-coloring agrees on every component up to color swap.
bool verify_bipartite(const ConstraintGraph& g);

// Graphviz DOT text; V_X nodes are x<i>, V_Y nodes y<i>, shared-edge links
// drawn purple.
std::string export_dot(const ConstraintGraph& g);

}  // namespace wmge

#endif
