#ifndef MVCHROMA_REDUCTION_HPP
#define MVCHROMA_REDUCTION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mvchroma/nae.hpp"
#include "mvchroma/solver.hpp"

namespace mvchroma {

// Two stars K_{1,n+1} with centers c, c' and private leaves p, p', whose
// remaining n leaves are identified.
struct HGadget {
    Graph graph;
    Vertex c = 0, p = 1, c_prime = 2, p_prime = 3;
    std::vector<Vertex> shared_leaves;
};

inline HGadget build_h_gadget(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidParams, "H_n needs n >= 2");
    HGadget h;
    std::vector<Edge> edges{{h.c, h.p}, {h.c_prime, h.p_prime}};
    for (std::size_t k = 0; k < n; ++k) {
        const Vertex leaf = static_cast<Vertex>(4 + k);
        h.shared_leaves.push_back(leaf);
        edges.push_back({h.c, leaf});
        edges.push_back({h.c_prime, leaf});
    }
    h.graph = graph_from_edge_list(n + 4, edges);
    return h;
}

struct VariableGadget {
    Vertex u, u_bar, a, b;
};

struct ClauseGadget {
    Vertex v, w;
    std::array<Vertex, 3> literals;  // the set T_j
};

struct ReductionLegend {
    Vertex p = 0, c = 1, z = 2, z_prime = 3;
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
};

struct ReductionGraph {
    Graph graph;
    ReductionLegend legend;
    NaeFormula formula;
};

// Vertex ids: p, c, z, z' = 0..3; then (u_i, ~u_i, a_i, b_i) per variable;
// then (v_j, w_j) per clause.
inline ReductionGraph build_reduction(const NaeFormula& f) {
    if (f.num_vars == 0) throw Error(ErrorCode::InvalidParams, "reduction needs at least one variable");
    if (!f.is_normalized()) {
        throw Error(ErrorCode::NonNormalizedInput, "every clause must mention three distinct variables");
    }
    ReductionGraph rg;
    rg.formula = f;
    auto& L = rg.legend;
    const std::size_t q = f.num_vars, r = f.clauses.size();
    const std::size_t n = 4 * q + 2 * r + 4;

    for (std::size_t i = 0; i < q; ++i) {
        const Vertex base = static_cast<Vertex>(4 + 4 * i);
        L.variables.push_back({base, base + 1, base + 2, base + 3});
    }
    for (std::size_t j = 0; j < r; ++j) {
        const Vertex base = static_cast<Vertex>(4 + 4 * q + 2 * j);
        ClauseGadget cg{base, base + 1, {}};
        for (std::size_t k = 0; k < 3; ++k) {
            const Literal lit = f.clauses[j][k];
            if (lit.var == 0 || lit.var > q) throw Error(ErrorCode::VariableOutOfRange, "clause literal out of range");
            const auto& var = L.variables[lit.var - 1];
            cg.literals[k] = lit.negated ? var.u_bar : var.u;
        }
        L.clauses.push_back(cg);
    }

    std::vector<Edge> edges;
    edges.push_back({L.p, L.c});
    for (const auto& var : L.variables) {
        edges.insert(edges.end(), {{var.u, var.a}, {var.u_bar, var.a}, {var.u, L.c}, {var.u_bar, L.c}, {var.a, var.b}});
    }
    for (const auto& cl : L.clauses) {
        edges.push_back({cl.v, cl.w});
        for (Vertex t : cl.literals) {
            edges.push_back({L.c, t});
            edges.push_back({cl.v, t});
        }
    }
    for (Vertex hub : {L.z, L.z_prime}) {
        for (const auto& var : L.variables) {
            edges.insert(edges.end(), {{hub, var.u}, {hub, var.u_bar}, {hub, var.a}});
        }
        for (const auto& cl : L.clauses) edges.push_back({hub, cl.v});
    }
    rg.graph = graph_from_edge_list(n, edges);
    return rg;
}

inline constexpr Color kRed = 0;
inline constexpr Color kWhite = 1;

// Two-coloring from a truth assignment: p, z, b_i, w_j red; c, z', a_i, v_j
// white; u_i red and ~u_i white exactly when x_i is true.
inline Coloring assignment_to_coloring(const ReductionGraph& rg, const NaeAssignment& a) {
    const auto& L = rg.legend;
    if (a.values.size() != L.variables.size()) {
        throw Error(ErrorCode::PartialAssignment, "assignment covers " + std::to_string(a.values.size()) + " of " +
                                                      std::to_string(L.variables.size()) + " variables");
    }
    std::vector<Color> colors(rg.graph.num_vertices(), kRed);
    colors[L.p] = kRed;
    colors[L.c] = kWhite;
    colors[L.z] = kRed;
    colors[L.z_prime] = kWhite;
    for (std::size_t i = 0; i < L.variables.size(); ++i) {
        const auto& var = L.variables[i];
        colors[var.a] = kWhite;
        colors[var.b] = kRed;
        colors[var.u] = a.values[i] ? kRed : kWhite;
        colors[var.u_bar] = a.values[i] ? kWhite : kRed;
    }
    for (const auto& cl : L.clauses) {
        colors[cl.v] = kWhite;
        colors[cl.w] = kRed;
    }
    return Coloring(std::move(colors));
}

// x_i is true iff u_i shares the color of u_1. NAE satisfaction is closed
// under complementing every variable, so the anchor choice is harmless.
inline NaeAssignment coloring_to_assignment(const ReductionGraph& rg, const Coloring& c) {
    if (c.num_colors() != 2) {
        throw Error(ErrorCode::WrongColorCount, "expected a 2-coloring, got " + std::to_string(c.num_colors()) + " colors");
    }
    c.require_total(rg.graph.num_vertices());
    const auto& vars = rg.legend.variables;
    NaeAssignment a;
    a.values.resize(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) a.values[i] = c[vars[i].u] == c[vars.front().u];
    return a;
}

enum class NaeVerdict { Satisfiable, Unsatisfiable, TooManyVariables };

inline const char* to_string(NaeVerdict v) {
    switch (v) {
    case NaeVerdict::Satisfiable: return "SAT";
    case NaeVerdict::Unsatisfiable: return "UNSAT";
    case NaeVerdict::TooManyVariables: return "TOO-MANY-VARIABLES";
    }
    return "?";
}

struct ReductionReport {
    bool trivially_unsat = false;
    NaeFormula normalized;
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::optional<Distance> diameter;

    NaeVerdict nae = NaeVerdict::Unsatisfiable;
    std::optional<NaeAssignment> witness;
    // Proof direction (=>): the witness mapped to a coloring.
    std::optional<bool> witness_coloring_valid;

    std::optional<SearchStatus> coloring_status;
    std::uint64_t search_nodes = 0;
    // Proof direction (<=): the solver's 2-coloring mapped to an assignment.
    std::optional<bool> extracted_assignment_satisfies;

    bool decided = false;
    bool agree = false;
    std::string basis;
};

inline ReductionReport verify_reduction(const NaeFormula& f, const Budget& budget = Budget::unlimited(),
                                        std::uint32_t variable_cap = kDefaultNaeVariableCap) {
    ReductionReport rep;
    auto norm = normalize(f);
    if (norm.trivially_unsat) {
        rep.trivially_unsat = true;
        rep.nae = NaeVerdict::Unsatisfiable;
        rep.decided = true;
        rep.agree = true;
        rep.basis = "by normalization";
        return rep;
    }
    rep.normalized = norm.formula;

    try {
        rep.witness = nae_satisfiable(rep.normalized, variable_cap);
        rep.nae = rep.witness ? NaeVerdict::Satisfiable : NaeVerdict::Unsatisfiable;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooManyVariables) throw;
        rep.nae = NaeVerdict::TooManyVariables;
    }

    auto rg = build_reduction(rep.normalized);
    const auto oracle = all_pairs_distances(rg.graph);
    rep.num_vertices = rg.graph.num_vertices();
    rep.num_edges = rg.graph.num_edges();
    rep.diameter = diameter(oracle);

    if (rep.witness) {
        rep.witness_coloring_valid = validate_mv_coloring(rg.graph, oracle, assignment_to_coloring(rg, *rep.witness)).valid;
    }

    auto outcome = mv_k_colorable(rg.graph, oracle, 2, budget);
    rep.coloring_status = outcome.status;
    rep.search_nodes = outcome.nodes_explored;
    if (outcome.coloring && outcome.coloring->num_colors() == 2) {
        rep.extracted_assignment_satisfies = nae_satisfies(rep.normalized, coloring_to_assignment(rg, *outcome.coloring));
    }

    rep.decided = rep.nae != NaeVerdict::TooManyVariables && outcome.status != SearchStatus::BudgetExhausted;
    if (rep.decided) {
        const bool sat = rep.nae == NaeVerdict::Satisfiable;
        const bool colorable = outcome.status == SearchStatus::Feasible;
        rep.agree = sat == colorable;
        rep.basis = "both sides";
    } else {
        rep.basis = "undecided";
    }
    return rep;
}

}  // namespace mvchroma

#endif
