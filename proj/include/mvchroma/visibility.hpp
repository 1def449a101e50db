#ifndef MVCHROMA_VISIBILITY_HPP
#define MVCHROMA_VISIBILITY_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "mvchroma/coloring.hpp"
#include "mvchroma/geodesic.hpp"

namespace mvchroma {

enum class ValidationMode { MutualVisibility, GeneralPosition };

inline const char* to_string(ValidationMode mode) {
    return mode == ValidationMode::MutualVisibility ? "mv" : "gp";
}

// Same-colored u < v that fail the class predicate. For general position,
// `between` is a class member lying on a u-v geodesic.
struct Violation {
    Vertex u;
    Vertex v;
    Color color;
    std::optional<Vertex> between;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    ValidationMode mode = ValidationMode::MutualVisibility;
    bool valid = true;
    std::vector<Violation> violations;
    std::size_t checked_pairs = 0;
};

enum class ReportDetail { FailFast, Exhaustive };

namespace detail {

inline std::vector<bool> membership(std::size_t n, std::span<const Vertex> s) {
    std::vector<bool> in(n, false);
    for (Vertex v : s) {
        if (v >= n) throw Error(ErrorCode::OutOfRangeVertex, "set member " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    return in;
}

}  // namespace detail

// Every pair in s sees each other through a geodesic with no internal vertex in s.
inline bool is_mv_set(const Graph& g, const DistanceOracle& o, std::span<const Vertex> s) {
    auto in = detail::membership(g.num_vertices(), s);
    GeodesicProbe probe(g, o);
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (s[a] == s[b]) continue;
            if (!o.reachable(s[a], s[b])) return false;
            if (!probe.exists_avoiding(s[a], s[b], [&](Vertex w) { return in[w]; })) return false;
        }
    }
    return true;
}

// No member of s lies on a geodesic between two other members.
inline bool is_gp_set(const DistanceOracle& o, std::span<const Vertex> s) {
    for (Vertex v : s) o.check(v);
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            const Vertex x = s[a], y = s[b];
            if (x == y) continue;
            if (!o.reachable(x, y)) return false;
            for (Vertex z : s) {
                if (z == x || z == y) continue;
                if (o.reachable(x, z) && o(x, z) + o(z, y) == o(x, y)) return false;
            }
        }
    }
    return true;
}

inline ValidationReport validate_mv_coloring(const Graph& g, const DistanceOracle& o, const Coloring& c,
                                             ReportDetail detail = ReportDetail::FailFast) {
    c.require_total(g.num_vertices());
    ValidationReport report;
    report.mode = ValidationMode::MutualVisibility;
    GeodesicProbe probe(g, o);
    const auto classes = c.classes();
    for (Color color = 0; color < classes.size(); ++color) {
        const auto& members = classes[color];
        auto same_color = [&](Vertex w) { return c[w] == color; };
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                ++report.checked_pairs;
                const Vertex u = members[a], v = members[b];
                if (o.reachable(u, v) && probe.exists_avoiding(u, v, same_color)) continue;
                report.valid = false;
                report.violations.push_back({u, v, color, std::nullopt});
                if (detail == ReportDetail::FailFast) return report;
            }
        }
    }
    return report;
}

inline ValidationReport validate_gp_coloring(const Graph& g, const DistanceOracle& o, const Coloring& c,
                                             ReportDetail detail = ReportDetail::FailFast) {
    c.require_total(g.num_vertices());
    ValidationReport report;
    report.mode = ValidationMode::GeneralPosition;
    const auto classes = c.classes();
    for (Color color = 0; color < classes.size(); ++color) {
        const auto& members = classes[color];
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                ++report.checked_pairs;
                const Vertex u = members[a], v = members[b];
                std::optional<Vertex> witness;
                if (o.reachable(u, v)) {
                    auto it = std::find_if(members.begin(), members.end(), [&](Vertex z) {
                        return z != u && z != v && o.reachable(u, z) && o(u, z) + o(z, v) == o(u, v);
                    });
                    if (it == members.end()) continue;
                    witness = *it;
                }
                report.valid = false;
                report.violations.push_back({u, v, color, witness});
                if (detail == ReportDetail::FailFast) return report;
            }
        }
    }
    return report;
}

inline std::size_t cycle_class_intersection(std::span<const Vertex> s, std::span<const Vertex> cycle) {
    std::vector<Vertex> a(s.begin(), s.end()), b(cycle.begin(), cycle.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.size();
}

}  // namespace mvchroma

#endif
