#ifndef MVCHROMA_JSON_HPP
#define MVCHROMA_JSON_HPP

#include <nlohmann/json.hpp>

#include "mvchroma/reduction.hpp"
#include "mvchroma/theorem.hpp"

#ifndef MVCHROMA_VERSION
#define MVCHROMA_VERSION "0.1.0"
#endif

namespace mvchroma {

inline constexpr const char* kToolVersion = MVCHROMA_VERSION;

// Vertex ids and color ids are written 1-based. `color_ids` maps dense color
// ids back to the ids of an input file; when empty, colors print as dense+1.
inline nlohmann::json to_json(const ValidationReport& rep, const std::vector<Color>& color_ids = {}) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : rep.violations) {
        nlohmann::json item{{"u", v.u + 1}, {"v", v.v + 1},
                            {"color", color_ids.empty() ? v.color + 1 : color_ids.at(v.color)}};
        if (v.between) item["between"] = *v.between + 1;
        violations.push_back(std::move(item));
    }
    return {{"valid", rep.valid},
            {"mode", to_string(rep.mode)},
            {"violations", std::move(violations)},
            {"checked_pairs", rep.checked_pairs}};
}

inline nlohmann::json to_json(const FormulaResult& f) {
    return {{"i", f.i},
            {"value", f.value ? nlohmann::json(*f.value) : nlohmann::json(nullptr)},
            {"gap", f.gap},
            {"candidates", f.candidates}};
}

inline nlohmann::json to_json(const TheoremReport& rep) {
    nlohmann::json j{{"r", rep.r},
                     {"t", rep.t},
                     {"formula", to_json(rep.formula)},
                     {"construction_colors", rep.construction_colors},
                     {"mv_valid", rep.mv_valid},
                     {"gp_valid", rep.gp_valid ? nlohmann::json(*rep.gp_valid) : nlohmann::json(nullptr)},
                     {"exact", rep.exact ? nlohmann::json(*rep.exact) : nlohmann::json(nullptr)},
                     {"num_vertices", rep.num_vertices},
                     {"recolor", to_string(rep.recolor)},
                     {"agree", rep.agree}};
    if (rep.exact_status) {
        j["exact_status"] = to_string(*rep.exact_status);
        j["exact_nodes"] = rep.exact_nodes;
    }
    if (rep.exact_bounds) j["exact_bounds"] = {rep.exact_bounds->first, rep.exact_bounds->second};
    return j;
}

inline nlohmann::json to_json(const ReductionLegend& L) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : L.variables) vars.push_back({{"u", v.u + 1}, {"ubar", v.u_bar + 1}, {"a", v.a + 1}, {"b", v.b + 1}});
    nlohmann::json clauses = nlohmann::json::array();
    for (const auto& c : L.clauses) {
        clauses.push_back({{"v", c.v + 1},
                           {"w", c.w + 1},
                           {"T", {c.literals[0] + 1, c.literals[1] + 1, c.literals[2] + 1}}});
    }
    return {{"p", L.p + 1}, {"c", L.c + 1}, {"z", L.z + 1}, {"zp", L.z_prime + 1},
            {"vars", std::move(vars)}, {"clauses", std::move(clauses)}};
}

inline nlohmann::json to_json(const NaeAssignment& a) {
    nlohmann::json out = nlohmann::json::array();
    for (bool v : a.values) out.push_back(v);
    return out;
}

inline nlohmann::json to_json(const ReductionReport& rep) {
    auto opt_bool = [](const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); };
    nlohmann::json j{{"trivially_unsat", rep.trivially_unsat},
                     {"nae", to_string(rep.nae)},
                     {"witness", rep.witness ? to_json(*rep.witness) : nlohmann::json(nullptr)},
                     {"witness_coloring_valid", opt_bool(rep.witness_coloring_valid)},
                     {"coloring", rep.coloring_status ? nlohmann::json(to_string(*rep.coloring_status))
                                                      : nlohmann::json(nullptr)},
                     {"search_nodes", rep.search_nodes},
                     {"extracted_assignment_satisfies", opt_bool(rep.extracted_assignment_satisfies)},
                     {"decided", rep.decided},
                     {"agree", rep.agree},
                     {"basis", rep.basis}};
    if (!rep.trivially_unsat) {
        j["graph"] = {{"num_vertices", rep.num_vertices},
                      {"num_edges", rep.num_edges},
                      {"diameter", rep.diameter ? nlohmann::json(*rep.diameter) : nlohmann::json(nullptr)}};
        j["normalized"] = {{"q", rep.normalized.num_vars}, {"clauses", rep.normalized.clauses.size()}};
    }
    return j;
}

}  // namespace mvchroma

#endif
