#ifndef WMGE_BIPARTITE_MATCHING_HPP
#define WMGE_BIPARTITE_MATCHING_HPP

#include <stdexcept>
#include <vector>

namespace wmge {

inline constexpr int kUnmatched = -1;

// Generic bipartite graph; adjacency lists hold B indices per A vertex and
// must be sorted and duplicate-free.
struct BipartiteGraph {
    int a_count = 0;
    int b_count = 0;
    std::vector<std::vector<int>> adj;  // size a_count

    std::vector<std::pair<int, int>> edges() const;
};

struct Matching {
    std::vector<int> match_a;  // A vertex -> B vertex or kUnmatched
    std::vector<int> match_b;

    int size() const;
};

struct VertexCover {
    std::vector<char> in_cover_a;
    std::vector<char> in_cover_b;

    int size() const;
};

// Maximum matching. Deterministic: phase BFS builds layers, then DFS
// augmentation in ascending A-vertex order following adjacency order.
Matching hopcroft_karp(const BipartiteGraph& g);

// Minimum vertex cover from a maximum matching, by alternating-path
// reachability from the unmatched A vertices. Throws std::invalid_argument
// if an augmenting path is found (m was not maximum).
VertexCover konig_cover(const BipartiteGraph& g, const Matching& m);

bool verify_cover(const BipartiteGraph& g, const VertexCover& c);

}  // namespace wmge

#endif
