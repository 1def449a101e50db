#ifndef MVCHROMA_GRAPH_IO_HPP
#define MVCHROMA_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvchroma/graph.hpp"

namespace mvchroma {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

inline bool skippable_line(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == 'c';
}

// Reads a 1-based id and converts it to 0-based.
inline Vertex read_one_based(std::istringstream& in, std::size_t n, std::size_t line_no, const char* what) {
    long long value = 0;
    if (!(in >> value)) parse_fail(line_no, std::string("expected ") + what);
    if (value < 1 || static_cast<unsigned long long>(value) > n) {
        throw Error(ErrorCode::OutOfRangeVertex,
                    "line " + std::to_string(line_no) + ": " + what + " " + std::to_string(value) +
                        " outside 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(value - 1);
}

inline void expect_end(std::istringstream& in, std::size_t line_no) {
    std::string rest;
    if (in >> rest) parse_fail(line_no, "unexpected trailing token '" + rest + "'");
}

}  // namespace detail

// Format: "p edge <n> <m>" followed by m lines "e <u> <v>" (1-based);
// "c" lines are comments and may appear anywhere.
inline Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::skippable_line(line)) continue;
        std::istringstream tokens(line);
        std::string tag;
        tokens >> tag;
        if (tag == "p") {
            if (have_header) detail::parse_fail(line_no, "duplicate header");
            std::string kind;
            long long nn = -1, mm = -1;
            if (!(tokens >> kind >> nn >> mm) || kind != "edge" || nn < 0 || mm < 0) {
                detail::parse_fail(line_no, "expected 'p edge <n> <m>'");
            }
            detail::expect_end(tokens, line_no);
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) detail::parse_fail(line_no, "edge before header");
            Vertex u = detail::read_one_based(tokens, n, line_no, "endpoint");
            Vertex v = detail::read_one_based(tokens, n, line_no, "endpoint");
            detail::expect_end(tokens, line_no);
            edges.push_back({u, v});
        } else {
            detail::parse_fail(line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) detail::parse_fail(line_no, "missing 'p edge' header");
    if (edges.size() != m) {
        detail::parse_fail(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    }
    return graph_from_edge_list(n, edges);
}

inline Graph read_graph_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string write_graph_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace mvchroma

#endif
