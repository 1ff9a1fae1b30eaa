// Command-line front end: solve, baseline, check, oracle, graph, render.
// Exit codes: 0 success/valid, 1 semantic failure, 2 input error,
// 3 search ceiling exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wmge/constraint_graph.hpp"
#include "wmge/embedder.hpp"
#include "wmge/geometry.hpp"
#include "wmge/io.hpp"
#include "wmge/oracle.hpp"
#include "wmge/path_pair.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wmge::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// The full O(m^2) geometry check is a desk-scale audit; above this size the
// solver relies on the constraint validation done during reconstruction.
constexpr int kAuditLimit = 2000;

struct Options {
    std::string input;
    std::string output;
    std::string embedding_path;
    std::string objective = "perimeter";
    bool strict_planarity = false;
    bool forbid_crossings = false;
    int max_side = -1;  // -1: derive from instance size
    std::uint64_t ceiling = 200'000'000;
    int cell = 40;
};

int cmd_solve(const Options& opt) {
    const wmge::PathPair p = wmge::parse_instance(read_input(opt.input));
    const wmge::SolveResult res = wmge::solve_min_perimeter(p);
    if (p.n <= kAuditLimit) {
        const wmge::ValidationReport rep = wmge::check_wmge(p, res.embedding);
        if (!rep.valid) {
            std::cerr << "solver output failed validation:\n"
                      << wmge::report_to_json(rep) << "\n";
            return 1;
        }
    }
    write_output(opt.output, wmge::solve_result_to_json(p, res));
    return 0;
}

int cmd_baseline(const Options& opt) {
    const wmge::PathPair p = wmge::parse_instance(read_input(opt.input));
    const wmge::GridEmbedding emb = wmge::brass_baseline(p);
    write_output(opt.output, wmge::embedding_to_json(p, emb));
    return 0;
}

int cmd_check(const Options& opt) {
    const wmge::PathPair p = wmge::parse_instance(read_input(opt.input));
    const wmge::GridEmbedding emb =
        wmge::parse_embedding(read_input(opt.embedding_path), p.n);
    wmge::CheckOptions copts;
    copts.mode = opt.strict_planarity ? wmge::CheckMode::StrictPlanarity
                                      : wmge::CheckMode::Wmge;
    copts.forbid_cross_path_crossings = opt.forbid_crossings;
    const wmge::ValidationReport rep = wmge::check_wmge(p, emb, copts);
    write_output(opt.output, wmge::report_to_json(rep) + "\n");
    return rep.valid ? 0 : 1;
}

int cmd_oracle(const Options& opt) {
    const wmge::PathPair p = wmge::parse_instance(read_input(opt.input));
    const int max_side = opt.max_side >= 0 ? opt.max_side : p.n - 1;
    wmge::OracleLimits limits{opt.ceiling};
    wmge::OracleResult res;
    if (opt.objective == "perimeter") {
        res = wmge::min_perimeter_by_placement(p, max_side, limits);
    } else if (opt.objective == "max-edge") {
        res = wmge::min_objective_bruteforce(p, wmge::Objective::MaxEdge, max_side,
                                             limits);
    } else if (opt.objective == "total-length") {
        res = wmge::min_objective_bruteforce(p, wmge::Objective::TotalLength,
                                             max_side, limits);
    } else if (opt.objective == "unit") {
        res = wmge::unit_length_feasible(p, max_side, limits);
    } else {
        throw wmge::ParseError("unknown objective: " + opt.objective);
    }
    write_output(opt.output, wmge::oracle_result_to_json(res));
    return 0;
}

int cmd_graph(const Options& opt) {
    const wmge::PathPair p = wmge::parse_instance(read_input(opt.input));
    const wmge::ConstraintGraph g = wmge::build_constraint_graph(p, wmge::derive(p));
    write_output(opt.output, wmge::export_dot(g));
    return 0;
}

int cmd_render(const Options& opt) {
    const wmge::PathPair p = wmge::parse_instance(read_input(opt.input));
    wmge::GridEmbedding emb;
    if (!opt.embedding_path.empty()) {
        emb = wmge::parse_embedding(read_input(opt.embedding_path), p.n);
    } else {
        emb = wmge::solve_min_perimeter(p).embedding;
    }
    wmge::RenderOptions ropts;
    ropts.cell_px = opt.cell;
    write_output(opt.output, wmge::render_svg(p, emb, ropts));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-perimeter simultaneous grid embeddings of two monotone paths"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", opt.input, "instance document (default stdin)");
        sub->add_option("-o,--output", opt.output, "output file (default stdout)");
    };

    auto* solve = app.add_subcommand("solve", "minimum-perimeter WMGE");
    add_io(solve);
    auto* baseline = app.add_subcommand("baseline", "rank placement baseline");
    add_io(baseline);
    auto* check = app.add_subcommand("check", "validate an embedding");
    add_io(check);
    check->add_option("-e,--embedding", opt.embedding_path, "embedding document")
        ->required();
    check->add_flag("--strict-planarity", opt.strict_planarity,
                    "no monotonicity, but same-path crossings are violations");
    check->add_flag("--forbid-crossings", opt.forbid_crossings,
                    "also reject crossings between edges of different paths");
    auto* oracle = app.add_subcommand("oracle", "brute-force optimum");
    add_io(oracle);
    oracle->add_option("--objective", opt.objective, "objective")
        ->check(CLI::IsMember({"perimeter", "max-edge", "total-length", "unit"}));
    oracle->add_option("--max-side", opt.max_side, "grid bound");
    oracle->add_option("--ceiling", opt.ceiling, "candidate ceiling");
    auto* graph = app.add_subcommand("graph", "constraint graph as DOT");
    add_io(graph);
    auto* render = app.add_subcommand("render", "SVG drawing");
    add_io(render);
    render->add_option("-e,--embedding", opt.embedding_path,
                       "embedding document (default: solve)");
    render->add_option("--cell", opt.cell, "grid cell size in pixels")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (baseline->parsed()) return cmd_baseline(opt);
        if (check->parsed()) return cmd_check(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (graph->parsed()) return cmd_graph(opt);
        if (render->parsed()) return cmd_render(opt);
    } catch (const wmge::SearchCeilingExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wmge::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
