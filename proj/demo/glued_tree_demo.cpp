// Builds a few glued trees, colors them with the construction, and certifies
// the small ones with the exact solver.
//
//   glued_tree_demo [max_r] [t]

#include <cstdlib>
#include <iostream>

#include "mvchroma/mvchroma.hpp"

int main(int argc, char** argv) {
    const int max_r = argc > 1 ? std::atoi(argv[1]) : 4;
    const int t = argc > 2 ? std::atoi(argv[2]) : 2;

    for (int r = 1; r <= max_r; ++r) {
        const auto formula = mvchroma::chi_mu_formula(r, t);
        std::cout << "GT(" << r << "," << t << "): ";
        if (formula.gap) {
            std::cout << "gap, candidates " << formula.candidates[0] << " and " << formula.candidates[1] << '\n';
            continue;
        }
        const auto tree = mvchroma::build_glued_tree(r, t);
        const auto oracle = mvchroma::all_pairs_distances(tree.graph());
        const auto built = mvchroma::constructive_coloring(tree, oracle);
        std::cout << tree.graph().num_vertices() << " vertices, " << built.coloring.num_colors() << " colors";

        if (tree.graph().num_vertices() <= 22) {
            mvchroma::Budget budget;
            budget.max_nodes = 5'000'000;
            try {
                const auto exact = mvchroma::chi_mu_exact(tree.graph(), oracle, budget);
                std::cout << ", exact chi_mu " << exact.k;
            } catch (const mvchroma::BudgetExhaustedError& e) {
                std::cout << ", exact search stopped in [" << e.lower() << ", " << e.upper() << "]";
            }
        }
        std::cout << '\n';
    }
}
