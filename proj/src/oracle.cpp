#include "wmge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace wmge {

namespace {

// All nonnegative integer vectors of a given length with sum <= budget,
// in lexicographic order.
std::vector<std::vector<int>> step_vectors(int length, int budget) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(length, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == length) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s <= left; ++s) {
            cur[i] = s;
            rec(i + 1, left - s);
        }
    };
    rec(0, budget);
    return out;
}

GridEmbedding embedding_from_steps(const PathPair& p, const std::vector<int>& sx,
                                   const std::vector<int>& sy) {
    GridEmbedding emb;
    emb.points.assign(p.n, Point{});
    for (int i = 0; i + 1 < p.n; ++i) {
        emb.points[p.pi_x[i + 1]].x = emb.points[p.pi_x[i]].x + sx[i];
        emb.points[p.pi_y[i + 1]].y = emb.points[p.pi_y[i]].y + sy[i];
    }
    emb.provenance = "oracle-placement";
    return emb;
}

// Union edge list with shared vertex pairs collapsed to one entry.
std::vector<std::pair<int, int>> union_edges(const PathPair& p,
                                             const DerivedStructure& d) {
    const int m = p.n > 0 ? p.n - 1 : 0;
    std::vector<char> shared_y(m, 0);
    for (const SharedEdge& s : d.shared_edges) shared_y[s.y_index] = 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(p.pi_x[i], p.pi_x[i + 1]);
    for (int i = 0; i < m; ++i) {
        if (!shared_y[i]) edges.emplace_back(p.pi_y[i], p.pi_y[i + 1]);
    }
    return edges;
}

std::int64_t sq_dist(Point a, Point b) {
    const std::int64_t dx = b.x - a.x;
    const std::int64_t dy = b.y - a.y;
    return dx * dx + dy * dy;
}

// C(n, k) with saturation at cap+1.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    k = std::min(k, n - k);
    if (k < 0) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > cap * i / static_cast<std::uint64_t>(n - k + i)) return cap + 1;
        r = r * (n - k + i) / i;  // exact: r is C(n-k+i, i) after each step
        if (r > cap) return cap + 1;
    }
    return r;
}

std::uint64_t falling_factorial(std::uint64_t base, int count,
                                std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < count; ++i) {
        if (base <= static_cast<std::uint64_t>(i)) return 0;
        const std::uint64_t f = base - i;
        if (r > cap / f) return cap + 1;
        r *= f;
    }
    return r;
}

}  // namespace

OracleResult min_perimeter_by_placement(const PathPair& p, int max_side,
                                        OracleLimits limits) {
    if (max_side < 0) throw std::invalid_argument("max_side must be nonnegative");
    const int m = p.n - 1;
    // Per axis there are C(max_side + m, m) step vectors; bail out before
    // materializing anything.
    const std::uint64_t per_axis =
        binomial_capped(max_side + m, m, limits.candidate_ceiling);
    if (per_axis > limits.candidate_ceiling ||
        per_axis > limits.candidate_ceiling / std::max<std::uint64_t>(per_axis, 1)) {
        throw SearchCeilingExceeded(
            "placement oracle: candidate count exceeds the ceiling");
    }
    const auto xs = step_vectors(m, max_side);
    const auto ys = step_vectors(m, max_side);

    OracleResult res;
    res.objective = Objective::Perimeter;
    std::int64_t best = -1;
    for (const auto& sx : xs) {
        const std::int64_t wx = std::accumulate(sx.begin(), sx.end(), 0LL);
        for (const auto& sy : ys) {
            ++res.search_space;
            const std::int64_t peri =
                2 * (wx + std::accumulate(sy.begin(), sy.end(), 0LL));
            if (best >= 0 && peri >= best) continue;
            GridEmbedding emb = embedding_from_steps(p, sx, sy);
            if (check_wmge(p, emb).valid) {
                best = peri;
                res.witness = std::move(emb);
            }
        }
    }
    if (best < 0) {
        // max_side >= n-1 always admits the rank placement, so this only
        // happens for an undersized grid bound.
        throw std::invalid_argument(
            "no valid WMGE within the given grid bound; increase max_side");
    }
    res.optimum = best;
    return res;
}

OracleResult min_perimeter_by_extents(const PathPair& p, OracleLimits limits) {
    const int m = p.n - 1;
    if (2 * m >= 63 ||
        (std::uint64_t{1} << (2 * m)) > limits.candidate_ceiling) {
        throw SearchCeilingExceeded("extent oracle: 2^" + std::to_string(2 * m) +
                                    " candidates exceed the ceiling");
    }
    const DerivedStructure d = derive(p);
    OracleResult res;
    res.objective = Objective::Perimeter;
    std::int64_t best = -1;
    ExtentAssignment e;
    e.d_x.assign(m, 0);
    e.d_y.assign(m, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * m)); ++mask) {
        ++res.search_space;
        for (int i = 0; i < m; ++i) {
            e.d_x[i] = (mask >> i) & 1;
            e.d_y[i] = (mask >> (m + i)) & 1;
        }
        if (!extents_satisfy(p, d, e)) continue;
        const std::int64_t peri =
            2 * (std::accumulate(e.d_x.begin(), e.d_x.end(), 0LL) +
                 std::accumulate(e.d_y.begin(), e.d_y.end(), 0LL));
        if (best >= 0 && peri >= best) continue;
        GridEmbedding emb = coordinates_from_extents(p, e);
        if (!check_wmge(p, emb).valid) continue;
        best = peri;
        res.witness = std::move(emb);
    }
    if (best < 0) throw std::logic_error("extent oracle found no feasible vector");
    res.optimum = best;
    return res;
}

OracleResult min_cover_bruteforce(const BipartiteGraph& g) {
    const int nv = g.a_count + g.b_count;
    if (nv > 64) throw std::invalid_argument("min_cover_bruteforce: graph too large");
    const auto edges = g.edges();

    OracleResult res;
    res.objective = Objective::MinCover;
    std::vector<char> chosen(nv, 0);  // A vertices first, then B
    std::vector<char> best;

    // Increasing-size search: depth-limited branching on the first
    // uncovered edge; a size-k cover exists iff some branch succeeds.
    std::function<bool(int)> search = [&](int remaining) -> bool {
        ++res.search_space;
        int ea = -1, eb = -1;
        for (auto [a, b] : edges) {
            if (!chosen[a] && !chosen[g.a_count + b]) {
                ea = a;
                eb = g.a_count + b;
                break;
            }
        }
        if (ea == -1) {
            best = chosen;
            return true;
        }
        if (remaining == 0) return false;
        chosen[ea] = 1;
        if (search(remaining - 1)) return true;
        chosen[ea] = 0;
        chosen[eb] = 1;
        if (search(remaining - 1)) return true;
        chosen[eb] = 0;
        return false;
    };

    for (int k = 0; k <= nv; ++k) {
        if (search(k)) {
            res.optimum = k;
            break;
        }
    }
    res.cover_witness = best;
    VertexCover c;
    c.in_cover_a.assign(best.begin(), best.begin() + g.a_count);
    c.in_cover_b.assign(best.begin() + g.a_count, best.end());
    if (!verify_cover(g, c)) throw std::logic_error("oracle cover invalid");
    // Report the actual cover size (branching may cover early).
    res.optimum = c.size();
    return res;
}

namespace {

struct PlacementSearch {
    const PathPair& p;
    Objective objective;
    int side;  // grid has side*side points
    OracleLimits limits;
    std::vector<std::vector<int>> earlier_neighbors;  // per vertex id
    std::vector<Point> grid;
    std::vector<char> used;
    std::vector<Point> placed;
    CheckOptions check_opts;

    OracleResult res;
    std::int64_t best_sq = -1;
    double best_total = 0.0;
    bool found = false;

    explicit PlacementSearch(const PathPair& pp, Objective obj, int max_side,
                             OracleLimits lim)
        : p(pp), objective(obj), side(max_side + 1), limits(lim) {
        const DerivedStructure d = derive(p);
        earlier_neighbors.assign(p.n, {});
        for (auto [u, v] : union_edges(p, d)) {
            earlier_neighbors[std::max(u, v)].push_back(std::min(u, v));
        }
        for (std::int64_t x = 0; x < side; ++x) {
            for (std::int64_t y = 0; y < side; ++y) grid.push_back(Point{x, y});
        }
        used.assign(grid.size(), 0);
        placed.assign(p.n, Point{});
        res.objective = obj;
        check_opts.mode = CheckMode::StrictPlanarity;
        check_opts.forbid_cross_path_crossings = obj == Objective::UnitFeasible;
    }

    void accept_leaf() {
        GridEmbedding emb;
        emb.points = placed;
        emb.provenance = "oracle-exhaustive";
        if (!check_wmge(p, emb, check_opts).valid) return;
        switch (objective) {
            case Objective::UnitFeasible:
                res.feasible = true;
                res.witness = std::move(emb);
                found = true;
                break;
            case Objective::MaxEdge: {
                std::int64_t worst = 0;
                for (int v = 0; v < p.n; ++v) {
                    for (int u : earlier_neighbors[v]) {
                        worst = std::max(worst, sq_dist(placed[u], placed[v]));
                    }
                }
                if (best_sq < 0 || worst < best_sq) {
                    best_sq = worst;
                    res.witness = std::move(emb);
                }
                break;
            }
            case Objective::TotalLength: {
                double total = 0.0;
                for (int v = 0; v < p.n; ++v) {
                    for (int u : earlier_neighbors[v]) {
                        total += std::sqrt(
                            static_cast<double>(sq_dist(placed[u], placed[v])));
                    }
                }
                if (!res.witness || total < best_total - 1e-9) {
                    best_total = total;
                    res.tie_count = 1;
                    res.witness = std::move(emb);
                } else if (total <= best_total + 1e-9) {
                    ++res.tie_count;
                }
                break;
            }
            default:
                break;
        }
    }

    bool prune(int v, Point q) const {
        for (int u : earlier_neighbors[v]) {
            const std::int64_t sq = sq_dist(placed[u], q);
            if (objective == Objective::UnitFeasible && sq != 1) return true;
            if (objective == Objective::MaxEdge && best_sq >= 0 && sq >= best_sq) {
                return true;
            }
        }
        return false;
    }

    void run(int v) {
        if (found) return;
        if (v == p.n) {
            ++res.search_space;
            accept_leaf();
            return;
        }
        for (size_t gi = 0; gi < grid.size(); ++gi) {
            if (used[gi] || prune(v, grid[gi])) continue;
            used[gi] = 1;
            placed[v] = grid[gi];
            run(v + 1);
            used[gi] = 0;
            if (found) return;
        }
    }
};

}  // namespace

OracleResult min_objective_bruteforce(const PathPair& p, Objective objective,
                                      int max_side, OracleLimits limits) {
    if (objective != Objective::MaxEdge && objective != Objective::TotalLength) {
        throw std::invalid_argument("unsupported exhaustive objective");
    }
    const std::uint64_t cells =
        static_cast<std::uint64_t>(max_side + 1) * (max_side + 1);
    if (falling_factorial(cells, p.n, limits.candidate_ceiling) >
        limits.candidate_ceiling) {
        throw SearchCeilingExceeded("placement search exceeds the ceiling");
    }
    PlacementSearch s(p, objective, max_side, limits);
    s.run(0);
    if (!s.res.witness) {
        throw std::invalid_argument("no valid placement within the grid bound");
    }
    if (objective == Objective::MaxEdge) {
        s.res.optimum = s.best_sq;
    } else {
        s.res.optimum_real = s.best_total;
    }
    return s.res;
}

OracleResult unit_length_feasible(const PathPair& p, int max_side,
                                  OracleLimits limits) {
    const std::uint64_t cells =
        static_cast<std::uint64_t>(max_side + 1) * (max_side + 1);
    if (falling_factorial(cells, p.n, limits.candidate_ceiling) >
        limits.candidate_ceiling) {
        throw SearchCeilingExceeded("placement search exceeds the ceiling");
    }
    PlacementSearch s(p, Objective::UnitFeasible, max_side, limits);
    s.run(0);
    return s.res;
}

}  // namespace wmge
