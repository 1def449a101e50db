#ifndef MVCHROMA_CONSTRUCTION_HPP
#define MVCHROMA_CONSTRUCTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvchroma/formula.hpp"
#include "mvchroma/glued_tree.hpp"
#include "mvchroma/visibility.hpp"

namespace mvchroma {

// Which vertex takes color 1 at the first r of the 2(r-i)+2 regime, where
// j depth-(i-1) vertices per side are already covered by the prefix
// sequences. Listed in the order they are tried.
enum class RecolorChoice {
    NotApplicable,
    Side1NextPosition,       // v_{i,j+1}
    Side2NextPosition,       // v'_{i,j+1}
    Side1NextDescending,     // v_{i,t^{i-1}-j}
    Side2NextDescending,     // v'_{i,t^{i-1}-j}
};

inline const char* to_string(RecolorChoice c) {
    switch (c) {
    case RecolorChoice::NotApplicable: return "none";
    case RecolorChoice::Side1NextPosition: return "side1:j+1";
    case RecolorChoice::Side2NextPosition: return "side2:j+1";
    case RecolorChoice::Side1NextDescending: return "side1:width-j";
    case RecolorChoice::Side2NextDescending: return "side2:width-j";
    }
    return "?";
}

struct ConstructedColoring {
    Coloring coloring;
    FormulaResult formula;
    RecolorChoice recolor = RecolorChoice::NotApplicable;
};

namespace detail {

// Side 2: level order with positions ascending (v'_{1,1}, v'_{2,1}, v'_{2,2}, ...).
// Side 1: level order with positions descending (v_{1,1}, v_{2,t}, ..., v_{2,1}, ...).
inline std::vector<Vertex> prefix_sequence(const LabeledGluedTree& tree, int side, std::size_t count) {
    std::vector<Vertex> seq;
    for (int level = 1; level <= tree.depth() && seq.size() < count; ++level) {
        auto row = tree.level_vertices(side, level);
        if (side == 1) std::reverse(row.begin(), row.end());
        for (Vertex v : row) {
            if (seq.size() == count) break;
            seq.push_back(v);
        }
    }
    return seq;
}

// Colors follow the 1-based numbering of the construction; 0 means "not yet".
// Empty when the requested recolor target is not a leftover vertex.
inline std::optional<std::vector<Color>> recipe(const LabeledGluedTree& tree, const FormulaInterval& iv, bool odd_regime,
                                 RecolorChoice recolor) {
    const int r = tree.depth();
    const std::size_t n = tree.graph().num_vertices();
    std::vector<Color> color(n, 0);
    auto paint = [&](Vertex v, Color c) {
        if (color[v] != 0) throw std::logic_error("construction paints a vertex twice");
        color[v] = c;
    };

    for (Vertex v : tree.quasi_leaves()) paint(v, 1);
    if (r == 1) {
        paint(tree.internal_id(1, 1, 1), 2);
        paint(tree.internal_id(2, 1, 1), 2);
        return color;
    }

    const int i = iv.i;
    const bool first_of_odd = odd_regime && r == iv.first;
    const std::size_t rounds = first_of_odd ? static_cast<std::size_t>(r - i + 1) : static_cast<std::size_t>(r - i);
    const auto seq_side2 = prefix_sequence(tree, 2, rounds);
    const auto seq_side1 = prefix_sequence(tree, 1, rounds);
    for (std::size_t k = 1; k <= rounds; ++k) {
        const int level = r - static_cast<int>(k) + 1;  // depth r-k
        const Color even = static_cast<Color>(2 * k), odd = static_cast<Color>(2 * k + 1);
        for (Vertex v : tree.level_vertices(1, level)) paint(v, even);
        paint(seq_side2[k - 1], even);
        for (Vertex v : tree.level_vertices(2, level)) paint(v, odd);
        paint(seq_side1[k - 1], odd);
    }
    if (first_of_odd) return color;

    const Color next = static_cast<Color>(2 * rounds + 2);
    for (int side = 1; side <= 2; ++side) {
        const Color fill = (odd_regime && side == 2) ? next + 1 : next;
        for (Vertex v : tree.level_vertices(side, i)) {
            if (color[v] == 0) color[v] = fill;
        }
    }

    if (recolor != RecolorChoice::NotApplicable) {
        const std::uint64_t j = static_cast<std::uint64_t>(r - i - iv.above);
        const std::uint64_t width = static_cast<std::uint64_t>(iv.width);
        Vertex target = 0;
        switch (recolor) {
        case RecolorChoice::Side1NextPosition: target = tree.internal_id(1, i, j + 1); break;
        case RecolorChoice::Side2NextPosition: target = tree.internal_id(2, i, j + 1); break;
        case RecolorChoice::Side1NextDescending: target = tree.internal_id(1, i, width - j); break;
        case RecolorChoice::Side2NextDescending: target = tree.internal_id(2, i, width - j); break;
        case RecolorChoice::NotApplicable: break;
        }
        if (color[target] != next) return std::nullopt;
        color[target] = 1;
    }
    return color;
}

inline Coloring to_dense(const std::vector<Color>& one_based) {
    std::vector<Color> dense(one_based.size());
    for (std::size_t v = 0; v < dense.size(); ++v) {
        if (one_based[v] == 0) throw std::logic_error("construction left a vertex uncolored");
        dense[v] = one_based[v] - 1;
    }
    return Coloring(std::move(dense));
}

}  // namespace detail

// Upper-bound coloring of GT(r,t) with exactly chi_mu_formula(r,t) colors:
// quasi-leaves take color 1; for k = 1..K, color 2k goes to side-1 depth r-k
// plus the k-th vertex of the side-2 prefix sequence, and color 2k+1 to
// side-2 depth r-k plus the k-th vertex of the side-1 prefix sequence.
// Depth i-1 leftovers get one shared color (2(r-i)+2 regime) or one color per
// side (2(r-i)+3 regime). The result is checked with the validator; where
// the recolored vertex is ambiguous every RecolorChoice is tried in order.
inline ConstructedColoring constructive_coloring(const LabeledGluedTree& tree, const DistanceOracle& o) {
    const int r = tree.depth(), t = tree.arity();
    ConstructedColoring out;
    out.formula = chi_mu_formula(r, t);
    if (out.formula.gap) {
        throw Error(ErrorCode::GapInput, "formula gap at r=" + std::to_string(r) + ", t=" + std::to_string(t) +
                                             ": candidates " + std::to_string(out.formula.candidates[0]) + "," +
                                             std::to_string(out.formula.candidates[1]));
    }
    const FormulaInterval iv = formula_interval(r, t);
    const bool odd_regime = r > 1 && *out.formula.value == 2 * (r - iv.i) + 3;
    const bool first_of_even = r > 1 && !odd_regime && r == iv.lower_start;

    std::vector<RecolorChoice> choices{RecolorChoice::NotApplicable};
    if (first_of_even) {
        choices = {RecolorChoice::Side1NextPosition, RecolorChoice::Side2NextPosition,
                   RecolorChoice::Side1NextDescending, RecolorChoice::Side2NextDescending};
    }
    for (RecolorChoice choice : choices) {
        auto painted = detail::recipe(tree, iv, odd_regime, choice);
        if (!painted) continue;
        Coloring candidate = detail::to_dense(*painted);
        if (static_cast<std::int64_t>(candidate.num_colors()) != *out.formula.value) continue;
        if (!validate_mv_coloring(tree.graph(), o, candidate).valid) continue;
        out.coloring = std::move(candidate);
        out.recolor = choice;
        return out;
    }
    throw Error(ErrorCode::ConstructionFailed,
                "no construction variant validates for GT(" + std::to_string(r) + "," + std::to_string(t) + ")");
}

}  // namespace mvchroma

#endif
