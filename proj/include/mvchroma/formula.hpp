#ifndef MVCHROMA_FORMULA_HPP
#define MVCHROMA_FORMULA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvchroma/error.hpp"

namespace mvchroma {

// Closed-form chi_mu(GT(r,t)). `gap` marks the single r per interval that
// the two regimes leave uncovered when t is odd; both candidates are listed
// and no value is claimed.
struct FormulaResult {
    int i = 0;
    std::optional<std::int64_t> value;
    bool gap = false;
    std::vector<std::int64_t> candidates;
};

namespace detail {

// Internal vertices per tree copy above depth i-1: (t^{i-1}-1)/(t-1).
// Saturates far above any admissible r.
inline std::int64_t levels_above(int i, std::int64_t t) {
    std::int64_t width = 1, total = 0;
    for (int level = 1; level < i; ++level) {
        total += width;
        if (width > (INT64_MAX / 4) / t) return INT64_MAX / 4;
        width *= t;
    }
    return total;
}

inline std::int64_t level_width(int i, std::int64_t t) {
    std::int64_t width = 1;
    for (int level = 1; level < i; ++level) {
        if (width > (INT64_MAX / 4) / t) return INT64_MAX / 4;
        width *= t;
    }
    return width;
}

}  // namespace detail

// Shape of the interval that contains r, shared by the evaluator and the
// constructive coloring.
struct FormulaInterval {
    int i = 0;
    std::int64_t above = 0;       // (t^{i-1}-1)/(t-1)
    std::int64_t width = 0;       // t^{i-1}
    std::int64_t first = 0;       // smallest r with this i
    std::int64_t last = 0;        // largest r with this i
    std::int64_t upper_end = 0;   // largest r of the 2(r-i)+3 regime
    std::int64_t lower_start = 0; // smallest r of the 2(r-i)+2 regime
};

inline FormulaInterval formula_interval(std::int64_t r, std::int64_t t) {
    if (r < 1 || t < 2) {
        throw Error(ErrorCode::InvalidParams,
                    "formula needs r >= 1 and t >= 2 (got r=" + std::to_string(r) + ", t=" + std::to_string(t) + ")");
    }
    FormulaInterval iv;
    for (int i = 1;; ++i) {
        const std::int64_t above = detail::levels_above(i, t);
        const std::int64_t next_above = detail::levels_above(i + 1, t);
        const std::int64_t first = above + i - 1;
        const std::int64_t last = next_above + i - 1;
        if (first <= r && r <= last) {
            iv.i = i;
            iv.above = above;
            iv.width = detail::level_width(i, t);
            iv.first = first;
            iv.last = last;
            // Split point B = above + width/2, possibly a half-integer.
            const std::int64_t twice_split = 2 * above + iv.width;
            const std::int64_t split_floor = twice_split / 2;
            const std::int64_t split_ceil = (twice_split + 1) / 2;
            iv.upper_end = split_floor + i - 2;
            iv.lower_start = split_ceil + i - 1;
            return iv;
        }
    }
}

inline FormulaResult chi_mu_formula(std::int64_t r, std::int64_t t) {
    const FormulaInterval iv = formula_interval(r, t);
    FormulaResult out;
    out.i = iv.i;
    if (r == 1) {
        out.value = 2;
        return out;
    }
    const std::int64_t odd_regime = 2 * (r - iv.i) + 3;
    const std::int64_t even_regime = 2 * (r - iv.i) + 2;
    if (r <= iv.upper_end) {
        out.value = odd_regime;
    } else if (r >= iv.lower_start) {
        out.value = even_regime;
    } else {
        out.gap = true;
        out.candidates = {even_regime, odd_regime};
    }
    return out;
}

}  // namespace mvchroma

#endif
