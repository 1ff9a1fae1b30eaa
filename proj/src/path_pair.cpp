#include "wmge/path_pair.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

namespace wmge {

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& pi) {
    std::vector<int> pos(pi.size(), -1);
    for (int i = 0; i < static_cast<int>(pi.size()); ++i) pos[pi[i]] = i;
    return pos;
}

void check_permutation(const std::vector<int>& seq, int n, const char* name,
                       const std::vector<std::string>& labels) {
    std::vector<char> seen(n, 0);
    for (int id : seq) {
        if (id < 0 || id >= n) {
            throw ParseError(std::string(name) + ": vertex id out of range: " +
                             std::to_string(id));
        }
        if (seen[id]) {
            const std::string shown =
                labels.empty() ? std::to_string(id) : labels[id];
            throw ParseError(std::string(name) + ": duplicate vertex id " + shown);
        }
        seen[id] = 1;
    }
}

PathPair from_labels(const std::vector<std::string>& px_tokens,
                     const std::vector<std::string>& py_tokens) {
    if (px_tokens.empty()) throw ParseError("PX: empty vertex sequence");
    if (px_tokens.size() != py_tokens.size()) {
        throw ParseError("length mismatch: PX has " +
                         std::to_string(px_tokens.size()) + " vertices, PY has " +
                         std::to_string(py_tokens.size()));
    }
    const int n = static_cast<int>(px_tokens.size());
    std::map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::vector<int> px(n), py(n);
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = id_of.try_emplace(px_tokens[i],
                                                static_cast<int>(labels.size()));
        if (!inserted) throw ParseError("PX: duplicate vertex id " + px_tokens[i]);
        labels.push_back(px_tokens[i]);
        px[i] = it->second;
    }
    for (int i = 0; i < n; ++i) {
        auto it = id_of.find(py_tokens[i]);
        if (it == id_of.end()) {
            throw ParseError("PY: unknown vertex id " + py_tokens[i]);
        }
        py[i] = it->second;
    }
    PathPair p = PathPair::from_orders(std::move(px), std::move(py));
    p.labels = std::move(labels);
    return p;
}

PathPair parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("px") || !doc.contains("py")) {
        throw ParseError("instance document must contain \"px\" and \"py\" arrays");
    }
    auto read_ids = [](const nlohmann::json& arr, const char* name) {
        if (!arr.is_array()) {
            throw ParseError(std::string(name) + " must be an array");
        }
        std::vector<long long> ids;
        for (const auto& v : arr) {
            if (!v.is_number_integer()) {
                throw ParseError(std::string(name) + ": non-integer vertex id " +
                                 v.dump());
            }
            ids.push_back(v.get<long long>());
        }
        return ids;
    };
    const auto px_raw = read_ids(doc["px"], "px");
    const auto py_raw = read_ids(doc["py"], "py");
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer()) throw ParseError("n must be an integer");
        const long long n = doc["n"].get<long long>();
        if (n != static_cast<long long>(px_raw.size())) {
            throw ParseError("length mismatch: n=" + std::to_string(n) +
                             " but px has " + std::to_string(px_raw.size()) +
                             " entries");
        }
    }

    // Dense 0..n-1 ids are used directly; anything else goes through the
    // label mapping.
    const int n = static_cast<int>(px_raw.size());
    bool dense = true;
    for (long long id : px_raw) {
        if (id < 0 || id >= n) dense = false;
    }
    if (dense) {
        std::vector<int> px(px_raw.begin(), px_raw.end());
        std::vector<int> py;
        for (long long id : py_raw) {
            if (id < 0 || id >= n) {
                throw ParseError("py: vertex id out of range: " + std::to_string(id));
            }
            py.push_back(static_cast<int>(id));
        }
        return PathPair::from_orders(std::move(px), std::move(py));
    }
    std::vector<std::string> px_tok, py_tok;
    for (long long id : px_raw) px_tok.push_back(std::to_string(id));
    for (long long id : py_raw) py_tok.push_back(std::to_string(id));
    return from_labels(px_tok, py_tok);
}

PathPair parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> px_tok, py_tok;
    bool saw_px = false, saw_py = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::vector<std::string>* dst = nullptr;
        if (head == "PX:") {
            dst = &px_tok;
            saw_px = true;
        } else if (head == "PY:") {
            dst = &py_tok;
            saw_py = true;
        } else {
            throw ParseError("unexpected line head: " + head);
        }
        std::string tok;
        while (ls >> tok) dst->push_back(tok);
    }
    if (!saw_px || !saw_py) throw ParseError("document must contain PX: and PY: lines");
    return from_labels(px_tok, py_tok);
}

}  // namespace

PathPair PathPair::from_orders(std::vector<int> px, std::vector<int> py) {
    if (px.empty()) throw ParseError("px: empty vertex sequence");
    if (px.size() != py.size()) {
        throw ParseError("length mismatch: px has " + std::to_string(px.size()) +
                         " vertices, py has " + std::to_string(py.size()));
    }
    const int n = static_cast<int>(px.size());
    check_permutation(px, n, "px", {});
    check_permutation(py, n, "py", {});
    PathPair p;
    p.n = n;
    p.pi_x = std::move(px);
    p.pi_y = std::move(py);
    p.pos_x = inverse_permutation(p.pi_x);
    p.pos_y = inverse_permutation(p.pi_y);
    return p;
}

PathPair parse_instance(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty instance document");
    if (text[first] == '{') return parse_json(text);
    return parse_text(text);
}

PathEdge path_edge(const PathPair& p, Side side, int index) {
    const auto& pi = side == Side::X ? p.pi_x : p.pi_y;
    return PathEdge{side, index, pi[index], pi[index + 1]};
}

DerivedStructure derive(const PathPair& p) {
    DerivedStructure d;
    const int n = p.n;
    d.align_x.reserve(n > 0 ? n - 1 : 0);
    d.align_y.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) {
        d.align_x.push_back(p.pos_y[p.pi_x[i]] < p.pos_y[p.pi_x[i + 1]]
                                ? Alignment::Positive
                                : Alignment::Negative);
        d.align_y.push_back(p.pos_x[p.pi_y[i]] < p.pos_x[p.pi_y[i + 1]]
                                ? Alignment::Positive
                                : Alignment::Negative);
    }
    for (int i = 1; i + 1 < n; ++i) {
        // v internal on P_x; both path neighbors on the same side of v in P_y.
        const int v = p.pi_x[i];
        const int a = p.pos_y[p.pi_x[i - 1]];
        const int b = p.pos_y[p.pi_x[i + 1]];
        const int c = p.pos_y[v];
        if ((a < c && b < c) || (a > c && b > c)) d.switch_x.push_back(v);

        const int w = p.pi_y[i];
        const int ax = p.pos_x[p.pi_y[i - 1]];
        const int bx = p.pos_x[p.pi_y[i + 1]];
        const int cx = p.pos_x[w];
        if ((ax < cx && bx < cx) || (ax > cx && bx > cx)) d.switch_y.push_back(w);
    }
    for (int i = 0; i + 1 < n; ++i) {
        const int u = p.pi_x[i];
        const int v = p.pi_x[i + 1];
        if (std::abs(p.pos_y[u] - p.pos_y[v]) == 1) {
            SharedEdge s;
            s.u = std::min(u, v);
            s.v = std::max(u, v);
            s.x_index = i;
            s.y_index = std::min(p.pos_y[u], p.pos_y[v]);
            d.shared_edges.push_back(s);
        }
    }
    return d;
}

}  // namespace wmge
