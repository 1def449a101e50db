#ifndef MVCHROMA_DISTANCE_HPP
#define MVCHROMA_DISTANCE_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "mvchroma/graph.hpp"

namespace mvchroma {

// Dense all-pairs hop distances. Unreachable pairs hold kUnreachable.
class DistanceOracle {
public:
    DistanceOracle() = default;

    std::size_t size() const noexcept { return n_; }

    Distance operator()(Vertex u, Vertex v) const noexcept { return dist_[u * n_ + v]; }

    Distance at(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return (*this)(u, v);
    }

    bool reachable(Vertex u, Vertex v) const noexcept { return (*this)(u, v) != kUnreachable; }

    std::span<const Distance> row(Vertex u) const {
        check(u);
        return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
    }

    void check(Vertex v) const {
        if (v >= n_) {
            throw Error(ErrorCode::OutOfRangeVertex,
                        "vertex " + std::to_string(v) + " not in oracle of order " + std::to_string(n_));
        }
    }

    friend DistanceOracle all_pairs_distances(const Graph& g, unsigned threads);

private:
    std::size_t n_ = 0;
    std::vector<Distance> dist_;
};

// One BFS per source. Rows are independent, so splitting sources across
// threads produces the same matrix as the sequential run.
inline DistanceOracle all_pairs_distances(const Graph& g, unsigned threads = 1) {
    DistanceOracle o;
    const std::size_t n = g.num_vertices();
    o.n_ = n;
    o.dist_.assign(n * n, kUnreachable);

    auto fill_rows = [&](std::size_t begin, std::size_t end) {
        std::vector<Vertex> queue;
        queue.reserve(n);
        for (std::size_t s = begin; s < end; ++s) {
            Distance* row = o.dist_.data() + s * n;
            queue.clear();
            row[s] = 0;
            queue.push_back(static_cast<Vertex>(s));
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex x = queue[head];
                for (Vertex y : g.neighbors(x)) {
                    if (row[y] == kUnreachable) {
                        row[y] = row[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        fill_rows(0, n);
        return o;
    }
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back(fill_rows, begin, end);
    }
    return o;
}

inline Distance diameter(const DistanceOracle& o) {
    Distance best = 0;
    for (Vertex u = 0; u < o.size(); ++u) {
        for (Distance d : o.row(u)) {
            if (d == kUnreachable) throw Error(ErrorCode::DisconnectedGraph, "diameter of a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

inline Distance diameter(const Graph& g) { return diameter(all_pairs_distances(g)); }

}  // namespace mvchroma

#endif
