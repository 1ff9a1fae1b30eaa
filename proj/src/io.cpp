#include "wmge/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace wmge {

namespace {

constexpr std::int64_t kMaxCoord = 1'000'000'000;

nlohmann::json metrics_json(const PathPair& p, const GridEmbedding& emb) {
    const EmbeddingMetrics m = metrics(p, emb);
    return {{"perimeter", m.perimeter},
            {"width", m.width},
            {"height", m.height},
            {"max_sq_edge", m.max_sq_edge},
            {"total_length_approx", m.total_length}};
}

nlohmann::json points_json(const GridEmbedding& emb) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point& q : emb.points) pts.push_back({q.x, q.y});
    return pts;
}

}  // namespace

std::string embedding_to_json(const PathPair& p, const GridEmbedding& emb) {
    nlohmann::json doc;
    doc["points"] = points_json(emb);
    doc["metrics"] = metrics_json(p, emb);
    if (!emb.provenance.empty()) doc["provenance"] = emb.provenance;
    return doc.dump(2) + "\n";
}

std::string solve_result_to_json(const PathPair& p, const SolveResult& res) {
    nlohmann::json doc;
    doc["points"] = points_json(res.embedding);
    doc["metrics"] = metrics_json(p, res.embedding);
    doc["extents"] = {{"dx", res.extents.d_x}, {"dy", res.extents.d_y}};
    doc["cover_size"] = res.cover_size;
    doc["provenance"] = res.embedding.provenance;
    return doc.dump(2) + "\n";
}

GridEmbedding parse_embedding(const std::string& text, int expected_n) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed embedding JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
        throw ParseError("embedding document must contain a \"points\" array");
    }
    GridEmbedding emb;
    for (const auto& entry : doc["points"]) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
            throw ParseError("embedding point must be an [x, y] integer pair: " +
                             entry.dump());
        }
        const std::int64_t x = entry[0].get<std::int64_t>();
        const std::int64_t y = entry[1].get<std::int64_t>();
        if (std::abs(x) > kMaxCoord || std::abs(y) > kMaxCoord) {
            throw ParseError("coordinate out of supported range: " + entry.dump());
        }
        emb.points.push_back(Point{x, y});
    }
    if (static_cast<int>(emb.points.size()) != expected_n) {
        throw ParseError("embedding has " + std::to_string(emb.points.size()) +
                         " points but the instance has " +
                         std::to_string(expected_n) + " vertices");
    }
    emb.provenance = "document";
    return emb;
}

std::string oracle_result_to_json(const OracleResult& res) {
    nlohmann::json doc;
    switch (res.objective) {
        case Objective::Perimeter:
            doc["objective"] = "perimeter";
            doc["optimum"] = res.optimum;
            break;
        case Objective::MaxEdge:
            doc["objective"] = "max-edge";
            doc["optimum_sq"] = res.optimum;
            break;
        case Objective::TotalLength:
            doc["objective"] = "total-length";
            doc["optimum"] = res.optimum_real;
            doc["tie_count"] = res.tie_count;
            break;
        case Objective::UnitFeasible:
            doc["objective"] = "unit";
            doc["feasible"] = res.feasible;
            break;
        case Objective::MinCover:
            doc["objective"] = "min-cover";
            doc["optimum"] = res.optimum;
            break;
    }
    doc["search_space"] = res.search_space;
    if (res.witness) {
        doc["witness"] = points_json(*res.witness);
    }
    return doc.dump(2) + "\n";
}

std::string render_svg(const PathPair& p, const GridEmbedding& emb,
                       RenderOptions opts) {
    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const Point& q : emb.points) {
        min_x = std::min(min_x, q.x);
        max_x = std::max(max_x, q.x);
        min_y = std::min(min_y, q.y);
        max_y = std::max(max_y, q.y);
    }
    const int cell = opts.cell_px;
    const std::int64_t margin = cell;
    const std::int64_t w = (max_x - min_x) * cell + 2 * margin;
    const std::int64_t h = (max_y - min_y) * cell + 2 * margin;

    auto gx = [&](std::int64_t x) { return (x - min_x) * cell + margin; };
    auto gy = [&](std::int64_t y) { return (y - min_y) * cell + margin; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
        << "\">\n";
    // Mathematical orientation: y grows upward.
    out << "<g transform=\"translate(0," << h << ") scale(1,-1)\">\n";
    out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (std::int64_t x = min_x; x <= max_x; ++x) {
        out << "    <line x1=\"" << gx(x) << "\" y1=\"" << gy(min_y) << "\" x2=\""
            << gx(x) << "\" y2=\"" << gy(max_y) << "\"/>\n";
    }
    for (std::int64_t y = min_y; y <= max_y; ++y) {
        out << "    <line x1=\"" << gx(min_x) << "\" y1=\"" << gy(y) << "\" x2=\""
            << gx(max_x) << "\" y2=\"" << gy(y) << "\"/>\n";
    }
    out << "  </g>\n";

    const DerivedStructure d = derive(p);
    out << "  <g stroke-width=\"3\" fill=\"none\">\n";
    for (const Segment& s : embedding_segments(p, d, emb)) {
        const std::string& color = s.owner == SegmentOwner::PathX
                                       ? opts.path_x_color
                                       : s.owner == SegmentOwner::PathY
                                             ? opts.path_y_color
                                             : opts.shared_color;
        out << "    <line x1=\"" << gx(s.a.x) << "\" y1=\"" << gy(s.a.y)
            << "\" x2=\"" << gx(s.b.x) << "\" y2=\"" << gy(s.b.y) << "\" stroke=\""
            << color << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g fill=\"#000000\">\n";
    for (int v = 0; v < p.n; ++v) {
        out << "    <circle cx=\"" << gx(emb.points[v].x) << "\" cy=\""
            << gy(emb.points[v].y) << "\" r=\"4\"/>\n";
    }
    out << "  </g>\n";
    out << "</g>\n";
    // Labels are drawn outside the flipped group so the text reads upright.
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (int v = 0; v < p.n; ++v) {
        const std::string label =
            p.labels.empty() ? "v" + std::to_string(v) : p.labels[v];
        out << "  <text x=\"" << gx(emb.points[v].x) + 6 << "\" y=\""
            << h - gy(emb.points[v].y) - 6 << "\">" << label << "</text>\n";
    }
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace wmge
