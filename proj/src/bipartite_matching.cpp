#include "wmge/bipartite_matching.hpp"

#include <algorithm>
#include <limits>

namespace wmge {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < a_count; ++a) {
        for (int b : adj[a]) out.emplace_back(a, b);
    }
    return out;
}

int Matching::size() const {
    int s = 0;
    for (int b : match_a) {
        if (b != kUnmatched) ++s;
    }
    return s;
}

int VertexCover::size() const {
    int s = 0;
    for (char f : in_cover_a) s += f;
    for (char f : in_cover_b) s += f;
    return s;
}

Matching hopcroft_karp(const BipartiteGraph& g) {
    Matching m;
    m.match_a.assign(g.a_count, kUnmatched);
    m.match_b.assign(g.b_count, kUnmatched);

    std::vector<int> dist(g.a_count, kInf);
    std::vector<int> queue;
    queue.reserve(g.a_count);

    auto bfs = [&]() {
        queue.clear();
        int reachable_free_b_dist = kInf;
        for (int a = 0; a < g.a_count; ++a) {
            if (m.match_a[a] == kUnmatched) {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = kInf;
            }
        }
        for (size_t head = 0; head < queue.size(); ++head) {
            const int a = queue[head];
            if (dist[a] >= reachable_free_b_dist) continue;
            for (int b : g.adj[a]) {
                const int a2 = m.match_b[b];
                if (a2 == kUnmatched) {
                    reachable_free_b_dist = std::min(reachable_free_b_dist, dist[a] + 1);
                } else if (dist[a2] == kInf) {
                    dist[a2] = dist[a] + 1;
                    queue.push_back(a2);
                }
            }
        }
        return reachable_free_b_dist != kInf;
    };

    auto dfs = [&](auto&& self, int a) -> bool {
        for (int b : g.adj[a]) {
            const int a2 = m.match_b[b];
            if (a2 == kUnmatched || (dist[a2] == dist[a] + 1 && self(self, a2))) {
                m.match_a[a] = b;
                m.match_b[b] = a;
                return true;
            }
        }
        dist[a] = kInf;
        return false;
    };

    while (bfs()) {
        for (int a = 0; a < g.a_count; ++a) {
            if (m.match_a[a] == kUnmatched) dfs(dfs, a);
        }
    }
    return m;
}

VertexCover konig_cover(const BipartiteGraph& g, const Matching& m) {
    if (static_cast<int>(m.match_a.size()) != g.a_count ||
        static_cast<int>(m.match_b.size()) != g.b_count) {
        throw std::invalid_argument("matching size does not fit the graph");
    }
    for (int a = 0; a < g.a_count; ++a) {
        const int b = m.match_a[a];
        if (b == kUnmatched) continue;
        if (b < 0 || b >= g.b_count || m.match_b[b] != a ||
            !std::binary_search(g.adj[a].begin(), g.adj[a].end(), b)) {
            throw std::invalid_argument("matching is inconsistent with the graph");
        }
    }

    // Z = vertices reachable from unmatched A vertices by alternating paths
    // (unmatched edges A->B, matched edges B->A).
    std::vector<char> z_a(g.a_count, 0), z_b(g.b_count, 0);
    std::vector<int> stack;
    for (int a = 0; a < g.a_count; ++a) {
        if (m.match_a[a] == kUnmatched) {
            z_a[a] = 1;
            stack.push_back(a);
        }
    }
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b : g.adj[a]) {
            if (b == m.match_a[a] || z_b[b]) continue;
            z_b[b] = 1;
            const int a2 = m.match_b[b];
            if (a2 == kUnmatched) {
                // Alternating path from a free A vertex to a free B vertex.
                throw std::invalid_argument(
                    "matching is not maximum: augmenting path found");
            }
            if (!z_a[a2]) {
                z_a[a2] = 1;
                stack.push_back(a2);
            }
        }
    }

    VertexCover c;
    c.in_cover_a.resize(g.a_count);
    c.in_cover_b.resize(g.b_count);
    for (int a = 0; a < g.a_count; ++a) c.in_cover_a[a] = !z_a[a];
    for (int b = 0; b < g.b_count; ++b) c.in_cover_b[b] = z_b[b];

    if (!verify_cover(g, c) || c.size() != m.size()) {
        throw std::logic_error("Kőnig construction produced an invalid cover");
    }
    return c;
}

bool verify_cover(const BipartiteGraph& g, const VertexCover& c) {
    for (int a = 0; a < g.a_count; ++a) {
        if (c.in_cover_a[a]) continue;
        for (int b : g.adj[a]) {
            if (!c.in_cover_b[b]) return false;
        }
    }
    return true;
}

}  // namespace wmge
