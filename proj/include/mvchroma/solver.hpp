#ifndef MVCHROMA_SOLVER_HPP
#define MVCHROMA_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mvchroma/visibility.hpp"

namespace mvchroma {

// Node and wall-clock limits; zero means unlimited. Whichever trips first
// ends the search.
struct Budget {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds max_time{0};

    static Budget unlimited() { return {}; }
};

enum class SearchStatus { Feasible, Infeasible, BudgetExhausted };

inline const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Feasible: return "FEASIBLE";
    case SearchStatus::Infeasible: return "INFEASIBLE";
    case SearchStatus::BudgetExhausted: return "BUDGET";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::Infeasible;
    std::optional<Coloring> coloring;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

// Vertices by descending degree, ties by ascending id.
inline std::vector<Vertex> search_order(const Graph& g) {
    std::vector<Vertex> order(g.num_vertices());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

namespace detail {

// Partial mutual-visibility coloring with an incremental consistency test.
// A pair of same-colored assigned vertices is considered visible while some
// geodesic between them has no internal vertex that is assigned that color.
// Assigned colors never change along a search branch, so a pair that fails
// this test can never be repaired deeper in the branch.
class PartialColoring {
public:
    static constexpr Color kUnassigned = std::numeric_limits<Color>::max();

    PartialColoring(const Graph& g, const DistanceOracle& o)
        : o_(o), probe_(g, o), color_(g.num_vertices(), kUnassigned) {}

    std::size_t colors_in_use() const noexcept { return members_.size(); }

    // Assigns v := c and reports whether every affected class pair is still
    // visible. The caller must unassign(v) regardless of the answer.
    bool assign(Vertex v, Color c) {
        color_[v] = c;
        if (c == members_.size()) members_.emplace_back();
        auto& cls = members_[c];
        auto blocked = [&](Vertex w) { return color_[w] == c; };
        // Pairs that include v.
        for (Vertex u : cls) {
            if (!probe_.exists_avoiding(u, v, blocked)) {
                cls.push_back(v);
                return false;
            }
        }
        // Pairs whose geodesics v may now obstruct.
        for (std::size_t a = 0; a < cls.size(); ++a) {
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
                const Vertex x = cls[a], y = cls[b];
                const Distance xv = o_(x, v), vy = o_(v, y);
                if (xv == 0 || vy == 0 || xv + vy != o_(x, y)) continue;
                if (!probe_.exists_avoiding(x, y, blocked)) {
                    cls.push_back(v);
                    return false;
                }
            }
        }
        cls.push_back(v);
        return true;
    }

    void unassign(Vertex v) {
        const Color c = color_[v];
        members_[c].pop_back();
        if (members_[c].empty() && c + 1 == members_.size()) members_.pop_back();
        color_[v] = kUnassigned;
    }

    Coloring snapshot() const { return Coloring(color_); }

private:
    const DistanceOracle& o_;
    GeodesicProbe probe_;
    std::vector<Color> color_;
    std::vector<std::vector<Vertex>> members_;
};

class BudgetClock {
public:
    explicit BudgetClock(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Counts one node; true once a limit has been hit.
    bool tick() {
        if (budget_.max_nodes != 0 && nodes_ >= budget_.max_nodes) return true;
        ++nodes_;
        if (budget_.max_time.count() != 0 && (nodes_ & 0xFF) == 0 &&
            std::chrono::steady_clock::now() - start_ > budget_.max_time) {
            return true;
        }
        return false;
    }

    void charge(std::uint64_t nodes) noexcept { nodes_ += nodes; }

    std::uint64_t nodes() const noexcept { return nodes_; }
    std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

    Budget remaining() const {
        Budget left;
        if (budget_.max_nodes != 0) left.max_nodes = budget_.max_nodes > nodes_ ? budget_.max_nodes - nodes_ : 1;
        if (budget_.max_time.count() != 0) {
            auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed());
            left.max_time = budget_.max_time > spent ? budget_.max_time - spent : std::chrono::milliseconds(1);
        }
        return left;
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

inline void require_search_input(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "search requires a connected graph");
}

}  // namespace detail

// Exact decision: is there a mutual-visibility coloring with at most k colors?
// Depth-first over search_order(); the first vertex gets color 0 and a new
// color may only be opened once every smaller id is in use.
inline SearchOutcome mv_k_colorable(const Graph& g, const DistanceOracle& o, std::size_t k,
                                    const Budget& budget = Budget::unlimited()) {
    if (k == 0) throw Error(ErrorCode::InvalidParams, "color budget k must be >= 1");
    detail::require_search_input(g);

    const auto order = search_order(g);
    detail::PartialColoring partial(g, o);
    detail::BudgetClock clock(budget);
    SearchOutcome outcome;
    bool exhausted = false;

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const Vertex v = order[depth];
        const std::size_t limit = std::min(k, partial.colors_in_use() + 1);
        for (Color c = 0; c < limit; ++c) {
            if (clock.tick()) {
                exhausted = true;
                return false;
            }
            const bool ok = partial.assign(v, c);
            if (ok && self(self, depth + 1)) return true;
            partial.unassign(v);
            if (exhausted) return false;
        }
        return false;
    };

    const bool found = search(search, 0);
    outcome.nodes_explored = clock.nodes();
    outcome.elapsed = clock.elapsed();
    if (found) {
        Coloring result = partial.snapshot();
        if (!validate_mv_coloring(g, o, result).valid) {
            throw std::logic_error("search produced a coloring the validator rejects");
        }
        outcome.status = SearchStatus::Feasible;
        outcome.coloring = std::move(result);
    } else {
        outcome.status = exhausted ? SearchStatus::BudgetExhausted : SearchStatus::Infeasible;
    }
    return outcome;
}

inline SearchOutcome mv_k_colorable(const Graph& g, std::size_t k, const Budget& budget = Budget::unlimited()) {
    return mv_k_colorable(g, all_pairs_distances(g), k, budget);
}

struct GreedyResult {
    std::size_t k = 0;
    Coloring coloring;
};

// First fit over search_order(). Opening a fresh color is always consistent,
// so this never fails and the result is always a valid coloring.
inline GreedyResult greedy_upper_bound(const Graph& g, const DistanceOracle& o) {
    detail::require_search_input(g);
    detail::PartialColoring partial(g, o);
    for (Vertex v : search_order(g)) {
        const std::size_t limit = partial.colors_in_use() + 1;
        for (Color c = 0; c < limit; ++c) {
            if (partial.assign(v, c)) break;
            partial.unassign(v);
        }
    }
    GreedyResult out;
    out.coloring = partial.snapshot();
    out.k = out.coloring.num_colors();
    return out;
}

class BudgetExhaustedError : public std::runtime_error {
public:
    BudgetExhaustedError(std::size_t lower, std::size_t upper, std::uint64_t nodes)
        : std::runtime_error("budget exhausted with chi_mu in [" + std::to_string(lower) + ", " +
                             std::to_string(upper) + "]"),
          lower_(lower), upper_(upper), nodes_(nodes) {}

    std::size_t lower() const noexcept { return lower_; }
    std::size_t upper() const noexcept { return upper_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::size_t lower_, upper_;
    std::uint64_t nodes_;
};

struct SweepStep {
    std::size_t k;
    SearchStatus status;
    std::uint64_t nodes;
};

struct ChromaticResult {
    std::size_t k = 0;
    Coloring coloring;
    std::vector<SweepStep> sweep;
    std::uint64_t nodes_explored = 0;
};

// Smallest k with a mutual-visibility k-coloring, by an upward sweep from 1.
// The greedy bound caps the sweep; the budget is shared by all steps.
inline ChromaticResult chi_mu_exact(const Graph& g, const DistanceOracle& o,
                                    const Budget& budget = Budget::unlimited()) {
    detail::require_search_input(g);
    ChromaticResult result;
    if (g.num_vertices() == 0) return result;

    auto greedy = greedy_upper_bound(g, o);
    detail::BudgetClock clock(budget);
    for (std::size_t k = 1; k < greedy.k; ++k) {
        auto step = mv_k_colorable(g, o, k, clock.remaining());
        result.nodes_explored += step.nodes_explored;
        clock.charge(step.nodes_explored);
        result.sweep.push_back({k, step.status, step.nodes_explored});
        if (step.status == SearchStatus::Feasible) {
            result.k = k;
            result.coloring = std::move(*step.coloring);
            return result;
        }
        if (step.status == SearchStatus::BudgetExhausted) {
            throw BudgetExhaustedError(k, greedy.k, result.nodes_explored);
        }
    }
    result.k = greedy.k;
    result.coloring = std::move(greedy.coloring);
    result.sweep.push_back({greedy.k, SearchStatus::Feasible, 0});
    return result;
}

inline ChromaticResult chi_mu_exact(const Graph& g, const Budget& budget = Budget::unlimited()) {
    return chi_mu_exact(g, all_pairs_distances(g), budget);
}

}  // namespace mvchroma

#endif
