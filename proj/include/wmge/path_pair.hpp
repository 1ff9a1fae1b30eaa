#ifndef WMGE_PATH_PAIR_HPP
#define WMGE_PATH_PAIR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wmge {

// Input document could not be parsed or fails validation.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { X, Y };

enum class Alignment { Positive, Negative };

// Two directed paths over a common vertex set, stored as the permutations
// they induce. Vertex ids are dense 0-based integers; `labels` keeps the
// original external labels when the input document used non-dense ids.
struct PathPair {
    int n = 0;
    std::vector<int> pi_x;   // rank on P_x -> vertex id
    std::vector<int> pi_y;   // rank on P_y -> vertex id
    std::vector<int> pos_x;  // vertex id -> rank on P_x
    std::vector<int> pos_y;  // vertex id -> rank on P_y
    std::vector<std::string> labels;  // vertex id -> external label

    // Builds a PathPair from two vertex orders, validating that both are
    // permutations of {0..n-1}. Throws ParseError otherwise.
    static PathPair from_orders(std::vector<int> px, std::vector<int> py);

    bool operator==(const PathPair&) const = default;
};

// Identity of one directed edge of one of the paths.
struct PathEdge {
    Side side;
    int index;  // 0-based position along its path, 0 <= index <= n-2
    int from;   // vertex id, as traversed
    int to;

    bool operator==(const PathEdge&) const = default;
};

// A vertex pair consecutive on both paths. Both incarnations are recorded
// so the constraint-graph build never has to search.
struct SharedEdge {
    int u = 0, v = 0;    // vertex ids, u < v
    int x_index = 0;     // index of the P_x edge between u and v
    int y_index = 0;     // index of the P_y edge between u and v

    bool operator==(const SharedEdge&) const = default;
};

struct DerivedStructure {
    std::vector<int> switch_x;  // switch vertices of P_x, ascending P_x rank
    std::vector<int> switch_y;  // switch vertices of P_y, ascending P_y rank
    std::vector<SharedEdge> shared_edges;        // ascending x_index
    std::vector<Alignment> align_x;              // per P_x edge index
    std::vector<Alignment> align_y;              // per P_y edge index

    bool operator==(const DerivedStructure&) const = default;
};

// Parses an instance document. Accepts the JSON form
//   {"n": <int>, "px": [ids...], "py": [ids...]}
// or the plain-text form
//   PX: id id ...
//   PY: id id ...
// Arbitrary labels are mapped to dense ids (order of first appearance on
// the PX line); the mapping is kept in `labels`.
PathPair parse_instance(const std::string& text);

PathEdge path_edge(const PathPair& p, Side side, int index);

// Switch vertices, shared edges and edge alignments of a path pair.
// Pure: equal inputs give identical outputs.
DerivedStructure derive(const PathPair& p);

}  // namespace wmge

#endif
