#include "blpack/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blpack/corners.hpp"
#include "blpack/io.hpp"
#include "blpack/relations.hpp"
#include "blpack/solver.hpp"

namespace blpack {

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

Dims parse_dims_flag(const std::string& text) {
    std::size_t sep = text.find('x');
    if (sep == std::string::npos) throw ParseError("--dims expects WxH, e.g. 2x1 or 3/2x1");
    Dims d;
    d.w = Rational::parse(text.substr(0, sep));
    d.h = Rational::parse(text.substr(sep + 1));
    if (!d.valid()) throw ParseError("--dims must be positive");
    return d;
}

struct SolveArgs {
    std::string instance_path;
    std::string packing_out;
    std::string sequence_out;
    std::uint64_t node_limit = 0;
    double time_limit = 0.0;
    bool deterministic = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    Instance instance = parse_instance(read_file(a.instance_path));
    SolveConfig cfg;
    cfg.node_limit = a.node_limit;
    cfg.time_limit_seconds = a.time_limit;
    cfg.deterministic = a.deterministic;
    Verdict v = solve_exact(instance, cfg);

    out << "nodes: " << v.stats.nodes << "\n";
    out << "max-corners: " << v.stats.max_corners << "\n";
    switch (v.outcome) {
        case Outcome::kSat:
            out << "verdict: SAT\n";
            if (!a.packing_out.empty()) write_file(a.packing_out, serialize_packing(*v.packing));
            if (!a.sequence_out.empty()) {
                write_file(a.sequence_out, serialize_sequence(*v.sequence, instance));
            }
            if (a.packing_out.empty() && a.sequence_out.empty()) {
                out << serialize_packing(*v.packing);
            }
            return kExitSat;
        case Outcome::kUnsat:
            out << "verdict: UNSAT\n";
            return kExitUnsat;
        case Outcome::kUnknown:
        default:
            out << "verdict: UNKNOWN (" << v.unknown_reason << ")\n";
            return kExitUnknown;
    }
}

int cmd_verify(const std::string& instance_path, const std::string& packing_path, bool stable,
               std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    Packing p = parse_packing(read_file(packing_path), instance);
    bool feasible = is_feasible(p);
    out << "feasible: " << (feasible ? "yes" : "no") << "\n";
    if (!feasible) return kExitUnsat;
    if (stable) {
        bool st = is_bl_stable(p);
        out << "stable: " << (st ? "yes" : "no") << "\n";
        if (!st) return kExitUnsat;
    }
    return kExitSat;
}

int cmd_replay(const std::string& instance_path, const std::string& sequence_path,
               const std::string& packing_out, std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    PlacementSequence seq = parse_sequence(read_file(sequence_path), instance);
    Packing p = replay(instance, seq);  // throws ReplayError on a bad certificate
    out << "replay: ok (" << seq.actions.size() << " actions)\n";
    if (!packing_out.empty()) write_file(packing_out, serialize_packing(p));
    return kExitSat;
}

int cmd_stabilize(const std::string& instance_path, const std::string& packing_path,
                  const std::string& packing_out, const std::string& sequence_out,
                  std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    Packing p = parse_packing(read_file(packing_path), instance);
    StabilizeResult result = stabilize(p);
    out << "total-coordinate: " << total_coordinate(p).to_string() << " -> "
        << total_coordinate(result.packing).to_string() << "\n";
    if (!packing_out.empty()) write_file(packing_out, serialize_packing(result.packing));
    if (!sequence_out.empty()) {
        write_file(sequence_out, serialize_sequence(result.sequence, instance));
    }
    if (packing_out.empty() && sequence_out.empty()) out << serialize_packing(result.packing);
    return kExitSat;
}

int cmd_order(const std::string& instance_path, const std::string& packing_path,
              const std::string& sequence_out, std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    Packing p = parse_packing(read_file(packing_path), instance);
    std::vector<int> order = extraction_order(p);
    out << "extraction-order:";
    for (int id : order) out << " " << id;
    out << "\n";
    PlacementSequence seq = extract_sequence(p);
    out << "placement-order:";
    for (const PlacementAction& a : seq.actions) out << " " << a.id;
    out << "\n";
    if (!sequence_out.empty()) write_file(sequence_out, serialize_sequence(seq, instance));
    return kExitSat;
}

int cmd_corners(const std::string& instance_path, const std::string& packing_path,
                const std::string& dims_text, std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    Packing p = parse_packing(read_file(packing_path), instance);
    Dims dims = parse_dims_flag(dims_text);
    auto corners = enumerate_corners(p, dims, Orientation::kHorizontal);
    for (const Corner& c : corners) {
        out << "x=" << c.x.to_string() << " y=" << c.y.to_string() << " left="
            << (c.left_support == 0 ? std::string("wall") : std::to_string(c.left_support))
            << " bottom="
            << (c.bottom_support == 0 ? std::string("floor") : std::to_string(c.bottom_support))
            << "\n";
    }
    out << "corners: " << corners.size() << "\n";
    return kExitSat;
}

int cmd_render(const std::string& instance_path, const std::string& packing_path,
               const std::string& svg_out, std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    Packing p = parse_packing(read_file(packing_path), instance);
    std::string svg = render_svg(p);
    if (svg_out.empty()) {
        out << svg;
    } else {
        write_file(svg_out, svg);
    }
    return kExitSat;
}

int cmd_oracle(const std::string& instance_path, std::ostream& out) {
    Instance instance = parse_instance(read_file(instance_path));
    Outcome o = oracle_lattice(instance);
    out << "verdict: " << (o == Outcome::kSat ? "SAT" : "UNSAT") << "\n";
    return o == Outcome::kSat ? kExitSat : kExitUnsat;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rectangle packing by bottom-left placement actions"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide an instance by complete search");
    solve->add_option("instance", solve_args.instance_path, "Instance file")->required();
    solve->add_option("-o,--out", solve_args.packing_out, "Write the packing here on SAT");
    solve->add_option("--seq", solve_args.sequence_out, "Write the placement sequence here on SAT");
    solve->add_option("--node-limit", solve_args.node_limit, "Stop after this many search nodes");
    solve->add_option("--time-limit", solve_args.time_limit, "Stop after this many seconds");
    solve->add_flag("--deterministic", solve_args.deterministic,
                    "Sequential, reproducible search (disables worker parallelism)");

    std::string instance_path, packing_path, sequence_path, out_path, seq_path, dims_text;
    bool stable = false;

    auto* verify = app.add_subcommand("verify", "Check a packing for feasibility");
    verify->add_option("instance", instance_path, "Instance file")->required();
    verify->add_option("packing", packing_path, "Packing file")->required();
    verify->add_flag("--stable", stable, "Also require bottom-left stability");

    auto* replay_cmd = app.add_subcommand("replay", "Check a placement-sequence certificate");
    replay_cmd->add_option("instance", instance_path, "Instance file")->required();
    replay_cmd->add_option("sequence", sequence_path, "Sequence file")->required();
    replay_cmd->add_option("-o,--out", out_path, "Write the replayed packing here");

    auto* stabilize_cmd = app.add_subcommand("stabilize", "Slide a feasible packing into a stable one");
    stabilize_cmd->add_option("instance", instance_path, "Instance file")->required();
    stabilize_cmd->add_option("packing", packing_path, "Packing file")->required();
    stabilize_cmd->add_option("-o,--out", out_path, "Write the stabilized packing here");
    stabilize_cmd->add_option("--seq", seq_path, "Write the placement sequence here");

    auto* order_cmd = app.add_subcommand("order", "Extraction order and placement sequence");
    order_cmd->add_option("instance", instance_path, "Instance file")->required();
    order_cmd->add_option("packing", packing_path, "Packing file")->required();
    order_cmd->add_option("--seq", seq_path, "Write the placement sequence here");

    auto* corners_cmd = app.add_subcommand("corners", "List bottom-left corners for a rectangle");
    corners_cmd->add_option("instance", instance_path, "Instance file")->required();
    corners_cmd->add_option("packing", packing_path, "Packing file")->required();
    corners_cmd->add_option("--dims", dims_text, "Effective rectangle size, WxH")->required();

    auto* render_cmd = app.add_subcommand("render", "Render a packing as SVG");
    render_cmd->add_option("instance", instance_path, "Instance file")->required();
    render_cmd->add_option("packing", packing_path, "Packing file")->required();
    render_cmd->add_option("-o,--out", out_path, "Output SVG path (stdout when omitted)");

    auto* oracle_cmd = app.add_subcommand("oracle", "Integer-lattice exhaustive decision");
    oracle_cmd->add_option("instance", instance_path, "Instance file")->required();

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    argv.reserve(argv_storage.size() + 1);
    std::string program = "blpack";
    argv.push_back(program.data());
    for (std::string& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitSat : kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args, out);
        if (verify->parsed()) return cmd_verify(instance_path, packing_path, stable, out);
        if (replay_cmd->parsed()) return cmd_replay(instance_path, sequence_path, out_path, out);
        if (stabilize_cmd->parsed()) {
            return cmd_stabilize(instance_path, packing_path, out_path, seq_path, out);
        }
        if (order_cmd->parsed()) return cmd_order(instance_path, packing_path, seq_path, out);
        if (corners_cmd->parsed()) return cmd_corners(instance_path, packing_path, dims_text, out);
        if (render_cmd->parsed()) return cmd_render(instance_path, packing_path, out_path, out);
        if (oracle_cmd->parsed()) return cmd_oracle(instance_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "error: no subcommand\n";
    return kExitInputError;
}

}  // namespace blpack
