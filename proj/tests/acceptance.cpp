// Acceptance gate: one PASS/FAIL line per criterion, each with its own time
// limit. Exit status is 0 only when every criterion passes.
//
//   mvchroma_acceptance [--seed N] [--only K]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "mvchroma/mvchroma.hpp"
#include "oracles.hpp"

using namespace mvchroma;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Clause clause_of(const std::array<long long, 3>& lits) {
    return {Literal::from_signed(lits[0]), Literal::from_signed(lits[1]), Literal::from_signed(lits[2])};
}

Verdict formula_fidelity() {
    const std::int64_t expected[][3] = {{1, 2, 2}, {2, 2, 3}, {3, 2, 4}};
    std::ostringstream d;
    bool ok = true;
    for (const auto& [r, t, value] : expected) {
        const auto f = chi_mu_formula(r, t);
        ok = ok && !f.gap && f.value == value;
        d << "(" << r << "," << t << ")=" << (f.value ? std::to_string(*f.value) : "gap") << ' ';
    }
    return {ok, d.str()};
}

Verdict golden_colorings() {
    std::ostringstream d;
    bool ok = true;
    for (int r : {2, 3}) {
        const auto tree = build_glued_tree(r, 2);
        const auto built = constructive_coloring(tree, all_pairs_distances(tree.graph()));
        const std::string golden = slurp(std::string(MVCHROMA_GOLDEN_DIR) + "/gt" + std::to_string(r) + "_2.coloring");
        const bool match = !golden.empty() && write_coloring_string(built.coloring) == golden;
        ok = ok && match;
        d << "GT(" << r << ") " << built.coloring.num_colors() << " colors " << (match ? "match" : "MISMATCH") << "; ";
    }
    return {ok, d.str()};
}

Verdict upper_bound_sweep() {
    constexpr std::uint64_t kMaxOrder = 2000;
    std::set<std::pair<int, int>> cases;
    for (int r = 2; r <= 7; ++r) cases.insert({r, 2});
    for (int r = 2; r <= 3; ++r) cases.insert({r, 4});
    for (int t = 2; glued_tree_order(2, t) <= kMaxOrder; t += 2)
        for (int r = 2; glued_tree_order(r, t) <= kMaxOrder; ++r) cases.insert({r, t});

    std::size_t violations = 0, mismatches = 0, max_n = 0;
    std::ostringstream bad;
    for (const auto& [r, t] : cases) {
        const auto tree = build_glued_tree(r, t);
        const auto o = all_pairs_distances(tree.graph());
        const auto built = constructive_coloring(tree, o);
        const auto rep = validate_mv_coloring(tree.graph(), o, built.coloring, ReportDetail::Exhaustive);
        const auto f = chi_mu_formula(r, t);
        violations += rep.violations.size();
        if (f.gap || static_cast<std::int64_t>(built.coloring.num_colors()) != *f.value) {
            ++mismatches;
            bad << " (" << r << "," << t << ")";
        }
        max_n = std::max(max_n, tree.graph().num_vertices());
    }
    std::ostringstream d;
    d << cases.size() << " trees up to n=" << max_n << ", " << violations << " violations, " << mismatches
      << " color-count mismatches" << bad.str();
    return {violations == 0 && mismatches == 0, d.str()};
}

Verdict exact_lower_bounds() {
    const Graph c4 = graph_from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto c4_result = chi_mu_exact(c4);
    const auto tree = build_glued_tree(2, 2);
    const auto o = all_pairs_distances(tree.graph());
    const auto gt = chi_mu_exact(tree.graph(), o);
    const auto two = mv_k_colorable(tree.graph(), o, 2);
    std::ostringstream d;
    d << "chi_mu(C4)=" << c4_result.k << ", chi_mu(GT(2))=" << gt.k << ", GT(2) k=2 " << to_string(two.status) << " after "
      << two.nodes_explored << " nodes";
    return {c4_result.k == 2 && gt.k == 3 && two.status == SearchStatus::Infeasible, d.str()};
}

Verdict stretch_lower_bound() {
    const auto tree = build_glued_tree(3, 2);
    const auto o = all_pairs_distances(tree.graph());
    Budget budget;
    budget.max_time = std::chrono::minutes(15);
    const auto three = mv_k_colorable(tree.graph(), o, 3, budget);
    const auto upper = constructive_coloring(tree, o);
    const bool upper_ok = validate_mv_coloring(tree.graph(), o, upper.coloring).valid && upper.coloring.num_colors() == 4;
    std::ostringstream d;
    d << "GT(3) k=3 " << to_string(three.status) << " after " << three.nodes_explored << " nodes; 4-coloring "
      << (upper_ok ? "valid" : "INVALID") << ", so chi_mu(GT(3))=" << (three.status == SearchStatus::Infeasible && upper_ok ? "4" : "?");
    return {three.status == SearchStatus::Infeasible && upper_ok, d.str()};
}

Verdict cycle_lemma() {
    std::size_t trees = 0, checks = 0, exceptions = 0, worst = 0;
    for (int t = 2; t <= 3; ++t) {
        for (int r = 1; r <= 4; ++r) {
            if (chi_mu_formula(r, t).gap) continue;
            const auto tree = build_glued_tree(r, t);
            const auto o = all_pairs_distances(tree.graph());
            const auto built = constructive_coloring(tree, o);
            const auto classes = built.coloring.classes();
            ++trees;
            for (std::uint64_t a = 1; a <= tree.num_quasi_leaves(); ++a) {
                for (std::uint64_t b = a + 1; b <= tree.num_quasi_leaves(); ++b) {
                    const auto cycle = cycle_vertices(tree, o, a, b).all_vertices;
                    for (const auto& s : classes) {
                        const std::size_t hit = cycle_class_intersection(s, cycle);
                        ++checks;
                        worst = std::max(worst, hit);
                        if (hit > 3) ++exceptions;
                    }
                }
            }
        }
    }
    std::ostringstream d;
    d << trees << " trees, " << checks << " class/cycle pairs, max |S cap C|=" << worst << ", " << exceptions << " exceptions";
    return {exceptions == 0 && checks > 0, d.str()};
}

Verdict corollary_check() {
    std::ostringstream d;
    bool ok = true;
    for (int r : {2, 3, 4}) {
        const auto tree = build_glued_tree(r, 2);
        const auto o = all_pairs_distances(tree.graph());
        const auto built = constructive_coloring(tree, o);
        const bool mv = validate_mv_coloring(tree.graph(), o, built.coloring).valid;
        const bool gp = validate_gp_coloring(tree.graph(), o, built.coloring).valid;
        if (r != 3) ok = ok && mv && gp;
        d << "GT(" << r << ") mv=" << (mv ? "valid" : "invalid") << " gp=" << (gp ? "valid" : "invalid")
          << (r == 3 ? " (not required)" : "") << "; ";
    }
    return {ok, d.str()};
}

Verdict h_gadget_lemma() {
    std::ostringstream d;
    bool ok = true;
    for (std::size_t n : {2u, 3u}) {
        const auto h = build_h_gadget(n);
        const auto o = all_pairs_distances(h.graph);
        const auto tab = oracle::geodesic_table(h.graph);
        const std::size_t size = h.graph.num_vertices();
        std::size_t accepted = 0, lemma_ok = 0, outside_lemma = 0, oracle_mismatch = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
            std::vector<Color> raw(size);
            std::vector<unsigned> plain(size);
            for (std::size_t v = 0; v < size; ++v) plain[v] = raw[v] = (bits >> v & 1) ? 2 : 1;
            const bool valid = validate_mv_coloring(h.graph, o, Coloring::from_sparse(raw)).valid;
            bool leaves_mixed = false;
            for (Vertex leaf : h.shared_leaves) leaves_mixed |= raw[leaf] != raw[h.shared_leaves.front()];
            const bool lemma = raw[h.p] != raw[h.c] && raw[h.p_prime] != raw[h.c_prime] && leaves_mixed;
            accepted += valid;
            lemma_ok += lemma;
            outside_lemma += valid && !lemma;
            oracle_mismatch += valid != oracle::mv_coloring(tab, plain);
        }
        ok = ok && outside_lemma == 0 && oracle_mismatch == 0;
        d << "H_" << n << ": " << (std::uint64_t{1} << size) << " colorings, " << accepted << " accepted, " << lemma_ok
          << " meet the lemma constraints, " << outside_lemma << " accepted outside them, " << oracle_mismatch
          << " oracle mismatches; ";
    }
    return {ok, d.str()};
}

NaeFormula random_normalized(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> qdist(3, 6);
    NaeFormula f;
    f.num_vars = qdist(rng);
    std::uniform_int_distribution<int> cdist(1, 8);
    const int m = cdist(rng);
    std::vector<long long> vars(f.num_vars);
    for (std::size_t x = 0; x < vars.size(); ++x) vars[x] = static_cast<long long>(x + 1);
    std::bernoulli_distribution neg(0.5);
    for (int j = 0; j < m; ++j) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::array<long long, 3> lits{};
        for (int k = 0; k < 3; ++k) lits[k] = neg(rng) ? -vars[k] : vars[k];
        f.clauses.push_back(clause_of(lits));
    }
    return f;
}

Verdict reduction_structure(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t size_errors = 0, diameter_errors = 0;
    for (int round = 0; round < 20; ++round) {
        const auto f = random_normalized(rng);
        const auto rg = build_reduction(f);
        const std::size_t q = f.num_vars, m = f.clauses.size();
        size_errors += rg.graph.num_vertices() != 4 * q + 2 * m + 4;
        size_errors += rg.graph.num_edges() != 11 * q + 6 * m + 1;
        diameter_errors += diameter(rg.graph) != 4;
    }
    std::ostringstream d;
    d << "20 formulas (seed " << seed << "), " << size_errors << " size errors, " << diameter_errors << " diameter errors";
    return {size_errors == 0 && diameter_errors == 0, d.str()};
}

Verdict reduction_equivalence() {
    // The eight clauses over {x1,x2,x3}; formulas are multisets of them.
    std::vector<Clause> pool;
    for (int signs = 0; signs < 8; ++signs) {
        pool.push_back(clause_of({signs & 4 ? -1 : 1, signs & 2 ? -2 : 2, signs & 1 ? -3 : 3}));
    }
    std::size_t formulas = 0, sat = 0, disagreements = 0, bad_witness = 0, bad_extraction = 0;
    bool saw_four_clause_unsat = false;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> visit = [&](std::size_t from) {
        NaeFormula f;
        f.num_vars = 3;
        for (std::size_t i : pick) f.clauses.push_back(pool[i]);
        ++formulas;
        const bool is_sat = nae_satisfiable(f).has_value();
        sat += is_sat;
        if (is_sat != oracle::nae_satisfiable(f)) ++disagreements;
        const auto rg = build_reduction(f);
        const auto o = all_pairs_distances(rg.graph);
        const auto out = mv_k_colorable(rg.graph, o, 2);
        if ((out.status == SearchStatus::Feasible) != is_sat) ++disagreements;
        if (out.status == SearchStatus::Feasible && !nae_satisfies(f, coloring_to_assignment(rg, *out.coloring))) {
            ++bad_extraction;
        }
        if (!is_sat && f.clauses.size() == 4) saw_four_clause_unsat = true;
        for (std::uint32_t bits = 0; bits < 8; ++bits) {
            NaeAssignment a;
            a.values = {(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0};
            if (nae_satisfies(f, a) && !validate_mv_coloring(rg.graph, o, assignment_to_coloring(rg, a)).valid) ++bad_witness;
        }
        if (pick.size() == 4) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            pick.push_back(i);
            visit(i);
            pick.pop_back();
        }
    };
    visit(0);
    std::ostringstream d;
    d << formulas << " formulas (" << sat << " satisfiable), " << disagreements << " disagreements, " << bad_witness
      << " invalid witness colorings, " << bad_extraction << " bad extractions, 4-clause unsat instance "
      << (saw_four_clause_unsat ? "included" : "MISSING");
    return {disagreements == 0 && bad_witness == 0 && bad_extraction == 0 && saw_four_clause_unsat, d.str()};
}

Verdict oracle_equivalence(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> ndist(2, 8);
    std::uniform_real_distribution<double> pdist(0.0, 0.6);
    std::size_t graphs = 0, mismatches = 0;
    std::size_t feasible[4] = {};
    for (; graphs < 220; ++graphs) {
        const Graph g = oracle::random_connected_graph(ndist(rng), pdist(rng), rng);
        const auto tab = oracle::geodesic_table(g);
        const auto o = all_pairs_distances(g);
        for (unsigned k = 1; k <= 3; ++k) {
            const auto out = mv_k_colorable(g, o, k);
            const bool yes = out.status == SearchStatus::Feasible;
            feasible[k] += yes;
            if (out.status == SearchStatus::BudgetExhausted || yes != oracle::mv_k_colorable(tab, k)) ++mismatches;
        }
    }
    std::ostringstream d;
    d << graphs << " graphs (seed " << seed << "), feasible k=1/2/3: " << feasible[1] << "/" << feasible[2] << "/"
      << feasible[3] << ", " << mismatches << " mismatches";
    return {mismatches == 0, d.str()};
}

Verdict geodesic_observations() {
    std::size_t same_side = 0, mirror = 0, errors = 0;
    for (int r = 1; r <= 3; ++r) {
        const auto tree = build_glued_tree(r, 2);
        const auto o = all_pairs_distances(tree.graph());
        for (int side = 1; side <= 2; ++side) {
            std::vector<Vertex> internal;
            for (int level = 1; level <= r; ++level) {
                const auto row = tree.level_vertices(side, level);
                internal.insert(internal.end(), row.begin(), row.end());
            }
            for (std::size_t a = 0; a < internal.size(); ++a) {
                for (std::size_t b = a + 1; b < internal.size(); ++b) {
                    ++same_side;
                    errors += geodesic_count(tree.graph(), o, internal[a], internal[b]) != 1;
                }
            }
        }
        for (int level = 1; level <= r; ++level) {
            for (std::uint64_t j = 1; j <= tree.level_width(level); ++j) {
                ++mirror;
                const auto count = geodesic_count(tree.graph(), o, tree.internal_id(1, level, j), tree.internal_id(2, level, j));
                errors += count != tree.subtree_quasi_leaves(level);
            }
        }
    }
    std::ostringstream d;
    d << same_side << " same-side pairs, " << mirror << " mirror pairs, " << errors << " errors";
    return {errors == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20240611;
    int only = 0;
    for (int a = 1; a < argc; ++a) {
        const std::string arg = argv[a];
        if (arg == "--seed" && a + 1 < argc) {
            seed = std::strtoull(argv[++a], nullptr, 10);
        } else if (arg == "--only" && a + 1 < argc) {
            only = std::atoi(argv[++a]);
        } else {
            std::cerr << "usage: mvchroma_acceptance [--seed N] [--only K]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "formula fidelity", 0.001, formula_fidelity},
        {2, "golden colorings", 1, golden_colorings},
        {3, "upper-bound sweep", 60, upper_bound_sweep},
        {4, "exact lower bounds", 60, exact_lower_bounds},
        {5, "GT(3) lower bound", 900, stretch_lower_bound},
        {6, "cycle lemma", 120, cycle_lemma},
        {7, "general position corollary", 30, corollary_check},
        {8, "H_n gadget", 10, h_gadget_lemma},
        {9, "reduction structure", 30, [seed] { return reduction_structure(seed); }},
        {10, "reduction equivalence", 600, reduction_equivalence},
        {11, "solver vs enumeration", 300, [seed] { return oracle_equivalence(seed); }},
        {12, "geodesic counts", 30, geodesic_observations},
    };

    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = v.ok && in_time;
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  [" << std::fixed
                  << std::setprecision(secs < 0.01 ? 5 : 2) << secs << " s, limit " << std::defaultfloat << std::setprecision(6)
                  << c.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << "]  " << v.detail << '\n';
    }
    std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
