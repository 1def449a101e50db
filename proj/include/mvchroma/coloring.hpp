#ifndef MVCHROMA_COLORING_HPP
#define MVCHROMA_COLORING_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvchroma/graph_io.hpp"

namespace mvchroma {

using Color = std::uint32_t;

// Total vertex -> color map with dense color ids 0..k-1.
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
        Color max_seen = 0;
        for (Color c : colors_) max_seen = std::max(max_seen, c);
        std::vector<bool> used(colors_.empty() ? 0 : max_seen + 1, false);
        for (Color c : colors_) used[c] = true;
        if (std::find(used.begin(), used.end(), false) != used.end()) {
            throw Error(ErrorCode::InvalidParams, "color ids must form a contiguous range 0..k-1");
        }
        num_colors_ = used.size();
    }

    // Renumbers arbitrary ids to 0..k-1 by ascending original id.
    static Coloring from_sparse(const std::vector<Color>& raw, std::vector<Color>* original_ids = nullptr) {
        std::vector<Color> distinct(raw);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<Color> dense(raw.size());
        for (std::size_t v = 0; v < raw.size(); ++v) {
            dense[v] = static_cast<Color>(std::lower_bound(distinct.begin(), distinct.end(), raw[v]) - distinct.begin());
        }
        if (original_ids) *original_ids = distinct;
        return Coloring(std::move(dense));
    }

    std::size_t size() const noexcept { return colors_.size(); }
    std::size_t num_colors() const noexcept { return num_colors_; }
    Color operator[](Vertex v) const { return colors_[v]; }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    std::vector<std::vector<Vertex>> classes() const {
        std::vector<std::vector<Vertex>> out(num_colors_);
        for (Vertex v = 0; v < colors_.size(); ++v) out[colors_[v]].push_back(v);
        return out;
    }

    void require_total(std::size_t n) const {
        if (colors_.size() != n) {
            throw Error(ErrorCode::ColoringNotTotal, "coloring covers " + std::to_string(colors_.size()) +
                                                         " vertices, graph has " + std::to_string(n));
        }
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    std::size_t num_colors_ = 0;
};

struct LoadedColoring {
    Coloring coloring;
    // original_ids[dense] is the 1-based color id found in the file.
    std::vector<Color> original_ids;
};

// Format: "s color <n> <k>" then one "v <vertex> <color>" per vertex (1-based).
inline LoadedColoring read_coloring(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, k = 0;
    std::vector<Color> raw;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable_line(line)) continue;
        std::istringstream tokens(line);
        std::string tag;
        tokens >> tag;
        if (tag == "s") {
            if (have_header) detail::parse_fail(line_no, "duplicate header");
            std::string kind;
            long long nn = -1, kk = -1;
            if (!(tokens >> kind >> nn >> kk) || kind != "color" || nn < 0 || kk < 0) {
                detail::parse_fail(line_no, "expected 's color <n> <k>'");
            }
            detail::expect_end(tokens, line_no);
            n = static_cast<std::size_t>(nn);
            k = static_cast<std::size_t>(kk);
            raw.assign(n, 0);
            seen.assign(n, false);
            have_header = true;
        } else if (tag == "v") {
            if (!have_header) detail::parse_fail(line_no, "vertex line before header");
            Vertex v = detail::read_one_based(tokens, n, line_no, "vertex");
            long long color = 0;
            if (!(tokens >> color) || color < 1) detail::parse_fail(line_no, "expected positive color id");
            detail::expect_end(tokens, line_no);
            if (seen[v]) detail::parse_fail(line_no, "vertex " + std::to_string(v + 1) + " colored twice");
            seen[v] = true;
            raw[v] = static_cast<Color>(color);
        } else {
            detail::parse_fail(line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) detail::parse_fail(line_no, "missing 's color' header");
    for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v]) throw Error(ErrorCode::ColoringNotTotal, "vertex " + std::to_string(v + 1) + " has no color");
    }
    LoadedColoring out;
    out.coloring = Coloring::from_sparse(raw, &out.original_ids);
    if (out.coloring.num_colors() != k) {
        detail::parse_fail(line_no, "header declares " + std::to_string(k) + " colors, found " +
                                        std::to_string(out.coloring.num_colors()));
    }
    return out;
}

inline LoadedColoring read_coloring_string(const std::string& text) {
    std::istringstream in(text);
    return read_coloring(in);
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
    out << "s color " << c.size() << ' ' << c.num_colors() << '\n';
    for (Vertex v = 0; v < c.size(); ++v) out << "v " << v + 1 << ' ' << c[v] + 1 << '\n';
}

inline std::string write_coloring_string(const Coloring& c) {
    std::ostringstream out;
    write_coloring(out, c);
    return out.str();
}

}  // namespace mvchroma

#endif
