#ifndef WMGE_ORACLE_HPP
#define WMGE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wmge/bipartite_matching.hpp"
#include "wmge/embedder.hpp"
#include "wmge/geometry.hpp"
#include "wmge/path_pair.hpp"

namespace wmge {

// Thrown when an exhaustive search would examine more candidates than the
// configured ceiling allows.
struct SearchCeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Objective { Perimeter, MaxEdge, TotalLength, UnitFeasible, MinCover };

struct OracleResult {
    Objective objective;
    // Exact optimum: perimeter, squared max edge length, or cover size.
    std::int64_t optimum = 0;
    double optimum_real = 0.0;        // TotalLength only
    bool feasible = false;            // UnitFeasible only
    std::optional<GridEmbedding> witness;
    std::vector<char> cover_witness;  // MinCover: flags per graph vertex, A then B
    std::uint64_t search_space = 0;   // candidates examined
    std::uint64_t tie_count = 0;      // TotalLength: witnesses within 1e-9 of optimum
};

struct OracleLimits {
    std::uint64_t candidate_ceiling = 200'000'000;
};

// Exhausts anchored weakly monotone placements with width and height at
// most max_side and returns the minimum perimeter over valid WMGEs.
OracleResult min_perimeter_by_placement(const PathPair& p, int max_side,
                                        OracleLimits limits = {});

// Enumerates all 0/1 extent vectors, keeps those satisfying the constraint
// families, and returns the minimum perimeter after validation.
OracleResult min_perimeter_by_extents(const PathPair& p, OracleLimits limits = {});

// Smallest vertex cover, by increasing-size search branching on uncovered
// edges. Requires a_count + b_count <= 64.
OracleResult min_cover_bruteforce(const BipartiteGraph& g);

// Exhausts injective placements on the (max_side+1)^2 grid under
// strict-planarity rules and minimizes MaxEdge (exact squared length) or
// TotalLength (floating, 1e-9 tie tolerance).
OracleResult min_objective_bruteforce(const PathPair& p, Objective objective,
                                      int max_side, OracleLimits limits = {});

// True iff some injective placement is crossing-free with every edge of
// squared length exactly 1.
OracleResult unit_length_feasible(const PathPair& p, int max_side,
                                  OracleLimits limits = {});

}  // namespace wmge

#endif
