#ifndef MVCHROMA_THEOREM_HPP
#define MVCHROMA_THEOREM_HPP

#include <optional>
#include <utility>

#include "mvchroma/construction.hpp"
#include "mvchroma/solver.hpp"

namespace mvchroma {

struct TheoremOptions {
    bool exact = false;
    bool general_position = false;
    Budget budget = Budget::unlimited();
    unsigned threads = 1;
};

struct TheoremReport {
    int r = 0, t = 0;
    std::size_t num_vertices = 0;
    FormulaResult formula;
    std::size_t construction_colors = 0;
    RecolorChoice recolor = RecolorChoice::NotApplicable;
    bool mv_valid = false;
    std::optional<bool> gp_valid;

    std::optional<SearchStatus> exact_status;
    std::optional<std::size_t> exact;
    std::optional<std::pair<std::size_t, std::size_t>> exact_bounds;
    std::uint64_t exact_nodes = 0;

    // Formula, construction and (when run) the exact solver all agree.
    bool agree = false;
};

// Builds GT(r,t), colors it constructively, re-validates, and compares the
// color count with the closed form; optionally certifies the value exactly.
inline TheoremReport verify_theorem(int r, int t, const TheoremOptions& options = {}) {
    TheoremReport rep;
    rep.r = r;
    rep.t = t;
    rep.formula = chi_mu_formula(r, t);
    if (rep.formula.gap) {
        throw Error(ErrorCode::GapInput, "formula gap: candidates " + std::to_string(rep.formula.candidates[0]) + "," +
                                             std::to_string(rep.formula.candidates[1]));
    }
    const auto tree = build_glued_tree(r, t);
    const auto oracle = all_pairs_distances(tree.graph(), options.threads);
    rep.num_vertices = tree.graph().num_vertices();

    const auto built = constructive_coloring(tree, oracle);
    rep.construction_colors = built.coloring.num_colors();
    rep.recolor = built.recolor;
    rep.mv_valid = validate_mv_coloring(tree.graph(), oracle, built.coloring).valid;
    if (options.general_position) rep.gp_valid = validate_gp_coloring(tree.graph(), oracle, built.coloring).valid;

    const auto expected = static_cast<std::size_t>(*rep.formula.value);
    rep.agree = rep.mv_valid && rep.construction_colors == expected;

    if (options.exact) {
        try {
            auto result = chi_mu_exact(tree.graph(), oracle, options.budget);
            rep.exact_status = SearchStatus::Feasible;
            rep.exact = result.k;
            rep.exact_nodes = result.nodes_explored;
            rep.agree = rep.agree && result.k == expected;
        } catch (const BudgetExhaustedError& e) {
            rep.exact_status = SearchStatus::BudgetExhausted;
            rep.exact_bounds = std::make_pair(e.lower(), e.upper());
            rep.exact_nodes = e.nodes();
            rep.agree = false;
        }
    }
    return rep;
}

}  // namespace mvchroma

#endif
