#include "wmge/embedder.hpp"

#include <numeric>
#include <stdexcept>

namespace wmge {

CgBipartite to_bipartite(const ConstraintGraph& g) {
    CgBipartite bip;
    const int nv = g.vertex_count();
    bip.cg_to_ab.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (g.vertices[v].color == CgColor::A) {
            bip.cg_to_ab[v] = static_cast<int>(bip.a_to_cg.size());
            bip.a_to_cg.push_back(v);
        } else {
            bip.cg_to_ab[v] = static_cast<int>(bip.b_to_cg.size());
            bip.b_to_cg.push_back(v);
        }
    }
    bip.graph.a_count = static_cast<int>(bip.a_to_cg.size());
    bip.graph.b_count = static_cast<int>(bip.b_to_cg.size());
    bip.graph.adj.assign(bip.graph.a_count, {});
    for (int a = 0; a < bip.graph.a_count; ++a) {
        // cg ids ascend within a class, so mapped neighbors stay sorted.
        for (int w : g.adjacency[bip.a_to_cg[a]]) {
            bip.graph.adj[a].push_back(bip.cg_to_ab[w]);
        }
    }
    return bip;
}

std::vector<char> cover_on_cg(const CgBipartite& bip, const VertexCover& c) {
    std::vector<char> covered(bip.a_to_cg.size() + bip.b_to_cg.size(), 0);
    for (size_t a = 0; a < bip.a_to_cg.size(); ++a) {
        if (c.in_cover_a[a]) covered[bip.a_to_cg[a]] = 1;
    }
    for (size_t b = 0; b < bip.b_to_cg.size(); ++b) {
        if (c.in_cover_b[b]) covered[bip.b_to_cg[b]] = 1;
    }
    return covered;
}

bool extents_satisfy(const PathPair& p, const DerivedStructure& d,
                     const ExtentAssignment& e) {
    for (int dv : e.d_x) {
        if (dv < 0) return false;
    }
    for (int dv : e.d_y) {
        if (dv < 0) return false;
    }
    for (int v : d.switch_x) {
        const int i = p.pos_x[v];
        if (e.d_x[i - 1] + e.d_x[i] < 1) return false;
    }
    for (int v : d.switch_y) {
        const int i = p.pos_y[v];
        if (e.d_y[i - 1] + e.d_y[i] < 1) return false;
    }
    for (const SharedEdge& s : d.shared_edges) {
        if (e.d_x[s.x_index] + e.d_y[s.y_index] < 1) return false;
    }
    return true;
}

ExtentAssignment extents_from_cover(const ConstraintGraph& g,
                                    const std::vector<char>& covered) {
    for (auto [a, b] : g.all_edges()) {
        if (!covered[a] && !covered[b]) {
            throw std::invalid_argument("not a vertex cover of the constraint graph");
        }
    }
    const int m = g.n > 0 ? g.n - 1 : 0;
    ExtentAssignment e;
    e.d_x.assign(m, 0);
    e.d_y.assign(m, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!covered[v]) continue;
        const CgVertex& cv = g.vertices[v];
        (cv.side == Side::X ? e.d_x : e.d_y)[cv.edge_index] = 1;
    }
    return e;
}

GridEmbedding coordinates_from_extents(const PathPair& p,
                                       const ExtentAssignment& e) {
    const int m = p.n > 0 ? p.n - 1 : 0;
    if (static_cast<int>(e.d_x.size()) != m ||
        static_cast<int>(e.d_y.size()) != m) {
        throw std::invalid_argument("extent vector length does not match instance");
    }
    const DerivedStructure d = derive(p);
    if (!extents_satisfy(p, d, e)) {
        throw std::invalid_argument("extents violate a constraint family");
    }
    GridEmbedding emb;
    emb.points.assign(p.n, Point{});
    emb.points[p.pi_x[0]].x = 0;
    for (int i = 0; i + 1 < p.n; ++i) {
        emb.points[p.pi_x[i + 1]].x = emb.points[p.pi_x[i]].x + e.d_x[i];
    }
    emb.points[p.pi_y[0]].y = 0;
    for (int i = 0; i + 1 < p.n; ++i) {
        emb.points[p.pi_y[i + 1]].y = emb.points[p.pi_y[i]].y + e.d_y[i];
    }
    emb.provenance = "extents";
    return emb;
}

SolveResult solve_min_perimeter(const PathPair& p) {
    const DerivedStructure d = derive(p);
    const ConstraintGraph g = build_constraint_graph(p, d);
    const CgBipartite bip = to_bipartite(g);
    const Matching m = hopcroft_karp(bip.graph);
    const VertexCover c = konig_cover(bip.graph, m);

    SolveResult res;
    res.cover_size = c.size();
    res.extents = extents_from_cover(g, cover_on_cg(bip, c));
    res.embedding = coordinates_from_extents(p, res.extents);
    res.embedding.provenance = "min-perimeter";
    res.width = std::accumulate(res.extents.d_x.begin(), res.extents.d_x.end(),
                                std::int64_t{0});
    res.height = std::accumulate(res.extents.d_y.begin(), res.extents.d_y.end(),
                                 std::int64_t{0});
    res.perimeter = 2 * (res.width + res.height);
    return res;
}

GridEmbedding brass_baseline(const PathPair& p) {
    GridEmbedding emb;
    emb.points.reserve(p.n);
    for (int v = 0; v < p.n; ++v) {
        emb.points.push_back(Point{p.pos_x[v], p.pos_y[v]});
    }
    emb.provenance = "brass-baseline";
    return emb;
}

}  // namespace wmge
