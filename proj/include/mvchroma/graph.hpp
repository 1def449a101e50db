#ifndef MVCHROMA_GRAPH_HPP
#define MVCHROMA_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mvchroma/error.hpp"

namespace mvchroma {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
// Neighbor lists are sorted ascending, so every traversal is deterministic.
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        auto adj = neighbors(u);
        check_vertex(v);
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(num_edges_);
        for (Vertex u = 0; u < adjacency_.size(); ++u) {
            for (Vertex v : adjacency_[u]) {
                if (u < v) out.push_back({u, v});
            }
        }
        return out;
    }

    void check_vertex(Vertex v) const {
        if (v >= adjacency_.size()) {
            throw Error(ErrorCode::OutOfRangeVertex,
                        "vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(adjacency_.size()));
        }
    }

    friend Graph graph_from_edge_list(std::size_t n, std::span<const Edge> edges);

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

// Builds the canonical graph. Duplicate edges (in either orientation) collapse.
inline Graph graph_from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.assign(n, {});
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw Error(ErrorCode::OutOfRangeVertex,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint >= " + std::to_string(n));
        }
        if (e.u == e.v) {
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
        }
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    std::size_t twice_m = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        twice_m += adj.size();
    }
    g.num_edges_ = twice_m / 2;
    return g;
}

inline Graph graph_from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return graph_from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<Distance> dist(g.num_vertices(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.num_vertices());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kUnreachable; });
}

}  // namespace mvchroma

#endif
