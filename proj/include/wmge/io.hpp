#ifndef WMGE_IO_HPP
#define WMGE_IO_HPP

#include <string>

#include "wmge/embedder.hpp"
#include "wmge/geometry.hpp"
#include "wmge/oracle.hpp"
#include "wmge/path_pair.hpp"

namespace wmge {

// {"points": [[x,y], ...], "metrics": {"perimeter": p, "width": w, "height": h}}
std::string embedding_to_json(const PathPair& p, const GridEmbedding& emb);
std::string solve_result_to_json(const PathPair& p, const SolveResult& res);

// Parses an embedding document; requires exactly expected_n points and
// coordinates within +/-1e9 (keeps all predicate arithmetic in int64).
GridEmbedding parse_embedding(const std::string& text, int expected_n);

std::string oracle_result_to_json(const OracleResult& res);

struct RenderOptions {
    int cell_px = 40;
    std::string path_x_color = "#1f77b4";   // blue
    std::string path_y_color = "#ff9896";   // light red
    std::string shared_color = "#9467bd";   // purple
};

// SVG 1.1 drawing of an embedding: grid lines, colored edges, labeled
// vertices, y-up orientation via an explicit flip transform.
std::string render_svg(const PathPair& p, const GridEmbedding& emb,
                       RenderOptions opts = {});

}  // namespace wmge

#endif
