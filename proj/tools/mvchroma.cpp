// mvchroma: command-line front end for mutual-visibility colorings.
//
// Exit codes: 0 success/agreement, 2 usage or input error, 3 semantic
// negative (invalid coloring, infeasible, unsatisfiable, mismatch),
// 4 budget exhausted.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mvchroma/json.hpp"
#include "mvchroma/mvchroma.hpp"

namespace {

using namespace mvchroma;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitBudget = 4;

struct BudgetFlags {
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    Budget resolve() const {
        Budget b;
        b.max_nodes = nodes;
        b.max_time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--budget-nodes", b.nodes, "Search node cap (0 = unlimited)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--budget-secs", b.seconds, "Wall-clock cap in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidParams, "cannot write '" + path + "'");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidParams, "cannot read '" + path + "'");
    return in;
}

void emit_json(const std::string& path, json report, json config) {
    report["tool_version"] = kToolVersion;
    report["config"] = std::move(config);
    const std::string text = report.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
    } else if (!path.empty()) {
        auto out = open_output(path);
        out << text;
    }
}

Graph load_graph(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

NaeFormula load_formula(const std::string& path) {
    auto in = open_input(path);
    return parse_nae_formula(in);
}

std::string format_assignment(const NaeAssignment& a) {
    std::ostringstream out;
    for (std::size_t x = 0; x < a.values.size(); ++x) out << ' ' << (a.values[x] ? "" : "-") << x + 1;
    return out.str();
}

unsigned resolve_threads(unsigned flag) {
    if (flag != 0) return flag;
    if (const char* env = std::getenv("MVCHROMA_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct Options {
    unsigned threads = 0;

    int r = 0, t = 2;
    std::string out, labels, json_path;

    bool exact = false, gp = false;
    BudgetFlags budget;

    std::string graph, coloring, mode = "mv";
    bool fail_fast = false;

    long long k = 0;

    std::string formula, legend;
};

int cmd_gen_tree(const Options& o) {
    const auto tree = build_glued_tree(o.r, o.t);
    auto out = open_output(o.out);
    write_graph(out, tree.graph());
    if (!o.labels.empty()) {
        auto labels = open_output(o.labels);
        write_labels(labels, tree);
    }
    std::cout << "GT(" << o.r << "," << o.t << ") " << tree.graph().num_vertices() << " vertices "
              << tree.graph().num_edges() << " edges\n";
    return kExitOk;
}

int cmd_color(const Options& o) {
    const auto tree = build_glued_tree(o.r, o.t);
    const auto oracle = all_pairs_distances(tree.graph(), resolve_threads(o.threads));
    const auto built = constructive_coloring(tree, oracle);
    auto out = open_output(o.out);
    write_coloring(out, built.coloring);
    std::cout << "COLORS " << built.coloring.num_colors() << '\n';
    return kExitOk;
}

int cmd_theorem(const Options& o) {
    TheoremOptions opts;
    opts.exact = o.exact;
    opts.general_position = o.gp;
    opts.budget = o.budget.resolve();
    opts.threads = resolve_threads(o.threads);
    const auto rep = verify_theorem(o.r, o.t, opts);
    json config{{"command", "theorem"}, {"r", o.r}, {"t", o.t}, {"exact", o.exact}, {"gp", o.gp},
                {"budget_nodes", o.budget.nodes}, {"budget_secs", o.budget.seconds}};
    emit_json(o.json_path.empty() ? "-" : o.json_path, to_json(rep), config);
    if (rep.exact_status == SearchStatus::BudgetExhausted) return kExitBudget;
    return rep.agree ? kExitOk : kExitNegative;
}

int cmd_validate(const Options& o) {
    const Graph g = load_graph(o.graph);
    auto in = open_input(o.coloring);
    const auto loaded = read_coloring(in);
    const auto oracle = all_pairs_distances(g, resolve_threads(o.threads));
    const auto detail = o.fail_fast ? ReportDetail::FailFast : ReportDetail::Exhaustive;
    ValidationReport rep;
    if (o.mode == "mv") {
        rep = validate_mv_coloring(g, oracle, loaded.coloring, detail);
    } else {
        rep = validate_gp_coloring(g, oracle, loaded.coloring, detail);
    }
    json report = to_json(rep, loaded.original_ids);
    json color_map = json::object();
    for (std::size_t c = 0; c < loaded.original_ids.size(); ++c) color_map[std::to_string(c + 1)] = loaded.original_ids[c];
    report["color_map"] = std::move(color_map);
    json config{{"command", "validate"}, {"graph", o.graph}, {"coloring", o.coloring}, {"mode", o.mode},
                {"fail_fast", o.fail_fast}};
    emit_json(o.json_path, report, config);
    std::cout << (rep.valid ? "VALID" : "INVALID") << ' ' << rep.violations.size() << " violations "
              << rep.checked_pairs << " pairs\n";
    return rep.valid ? kExitOk : kExitNegative;
}

int cmd_solve(const Options& o) {
    const Graph g = load_graph(o.graph);
    const auto oracle = all_pairs_distances(g, resolve_threads(o.threads));
    const Budget budget = o.budget.resolve();
    auto write_result = [&](const Coloring& c) {
        if (o.out.empty()) return;
        auto out = open_output(o.out);
        write_coloring(out, c);
    };
    if (o.k > 0) {
        const auto outcome = mv_k_colorable(g, oracle, static_cast<std::size_t>(o.k), budget);
        std::cout << to_string(outcome.status) << " nodes " << outcome.nodes_explored << '\n';
        switch (outcome.status) {
        case SearchStatus::Feasible: write_result(*outcome.coloring); return kExitOk;
        case SearchStatus::Infeasible: return kExitNegative;
        case SearchStatus::BudgetExhausted: return kExitBudget;
        }
    }
    try {
        const auto result = chi_mu_exact(g, oracle, budget);
        std::cout << "CHI " << result.k << " nodes " << result.nodes_explored << '\n';
        write_result(result.coloring);
        return kExitOk;
    } catch (const BudgetExhaustedError& e) {
        std::cout << "BUDGET " << e.lower() << ' ' << e.upper() << " nodes " << e.nodes() << '\n';
        return kExitBudget;
    }
}

int cmd_reduce(const Options& o) {
    const auto norm = normalize(load_formula(o.formula));
    if (norm.trivially_unsat) {
        std::cerr << "formula is trivially NAE-unsatisfiable; no graph is produced\n";
        return kExitNegative;
    }
    const auto rg = build_reduction(norm.formula);
    auto out = open_output(o.out);
    write_graph(out, rg.graph);
    if (!o.legend.empty()) {
        auto legend = open_output(o.legend);
        legend << to_json(rg.legend).dump(2) << '\n';
    }
    std::cout << "REDUCTION " << rg.graph.num_vertices() << " vertices " << rg.graph.num_edges() << " edges\n";
    return kExitOk;
}

int cmd_reduce_verify(const Options& o) {
    const auto rep = verify_reduction(load_formula(o.formula), o.budget.resolve());
    json config{{"command", "reduce-verify"}, {"formula", o.formula},
                {"budget_nodes", o.budget.nodes}, {"budget_secs", o.budget.seconds}};
    emit_json(o.json_path.empty() ? "-" : o.json_path, to_json(rep), config);
    if (!rep.decided) return kExitBudget;
    return rep.agree ? kExitOk : kExitNegative;
}

int cmd_nae(const Options& o) {
    const NaeFormula f = load_formula(o.formula);
    const auto num_vars = f.num_vars;
    const auto norm = normalize(f);
    if (norm.trivially_unsat) {
        std::cout << "TRIVIALLY-UNSAT\n";
        return kExitNegative;
    }
    // Fresh variables from normalization are not reported.
    const auto witness = nae_satisfiable(norm.formula);
    if (!witness) {
        std::cout << "UNSAT\n";
        return kExitNegative;
    }
    NaeAssignment original = *witness;
    original.values.resize(std::min(original.values.size(), static_cast<std::size_t>(num_vars)));
    std::cout << "SAT" << format_assignment(original) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutual-visibility colorings: validation, exact search, glued trees and the NAE3SAT reduction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for distance computation (output is unaffected)");

    auto add_tree_params = [&](CLI::App* cmd) {
        cmd->add_option("--r", o.r, "Depth r >= 1")->required();
        cmd->add_option("--t", o.t, "Arity t >= 2");
    };

    auto* gen = app.add_subcommand("gen-tree", "Write GT(r,t) and its coordinate labels");
    add_tree_params(gen);
    gen->add_option("--out", o.out, "Graph file")->required();
    gen->add_option("--labels", o.labels, "Label sidecar file");

    auto* color = app.add_subcommand("color", "Write the constructive coloring of GT(r,t)");
    add_tree_params(color);
    color->add_option("--out", o.out, "Coloring file")->required();

    auto* theorem = app.add_subcommand("theorem", "Check the closed-form value of chi_mu(GT(r,t))");
    add_tree_params(theorem);
    theorem->add_flag("--exact", o.exact, "Also certify the value with the exact solver");
    theorem->add_flag("--gp", o.gp, "Also check that every color class is in general position");
    theorem->add_option("--json", o.json_path, "Report file (default stdout)");
    add_budget_flags(theorem, o.budget);

    auto* validate = app.add_subcommand("validate", "Validate a coloring of a graph");
    validate->add_option("--graph", o.graph, "Graph file")->required();
    validate->add_option("--coloring", o.coloring, "Coloring file")->required();
    validate->add_option("--mode", o.mode, "mv or gp")->check(CLI::IsMember({"mv", "gp"}));
    validate->add_option("--json", o.json_path, "Report file ('-' for stdout)");
    validate->add_flag("--fail-fast", o.fail_fast, "Stop at the first violation");

    auto* solve = app.add_subcommand("solve", "Exact mutual-visibility coloring search");
    solve->add_option("--graph", o.graph, "Graph file")->required();
    solve->add_option("--k", o.k, "Decide k-colorability instead of computing chi_mu")->check(CLI::PositiveNumber);
    solve->add_option("--out", o.out, "Coloring file for the witness");
    add_budget_flags(solve, o.budget);

    auto* reduce = app.add_subcommand("reduce", "Build the graph of a NAE3SAT formula");
    reduce->add_option("--formula", o.formula, "Formula file")->required();
    reduce->add_option("--out", o.out, "Graph file")->required();
    reduce->add_option("--legend", o.legend, "Legend JSON file");

    auto* reduce_verify = app.add_subcommand("reduce-verify", "Compare NAE satisfiability with 2-colorability");
    reduce_verify->add_option("--formula", o.formula, "Formula file")->required();
    reduce_verify->add_option("--json", o.json_path, "Report file (default stdout)");
    add_budget_flags(reduce_verify, o.budget);

    auto* nae = app.add_subcommand("nae", "Brute-force NAE3SAT");
    nae->add_option("--formula", o.formula, "Formula file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    const std::pair<CLI::App*, std::function<int(const Options&)>> commands[] = {
        {gen, cmd_gen_tree},     {color, cmd_color},   {theorem, cmd_theorem},
        {validate, cmd_validate}, {solve, cmd_solve},   {reduce, cmd_reduce},
        {reduce_verify, cmd_reduce_verify}, {nae, cmd_nae},
    };
    try {
        for (const auto& [cmd, run] : commands) {
            if (cmd->parsed()) return run(o);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return kExitInput;
}
