#ifndef MVCHROMA_GEODESIC_HPP
#define MVCHROMA_GEODESIC_HPP

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mvchroma/distance.hpp"

namespace mvchroma {

using PathCount = boost::multiprecision::cpp_int;

namespace detail {

inline void require_reachable(const DistanceOracle& o, Vertex u, Vertex v) {
    if (!o.reachable(u, v)) {
        throw Error(ErrorCode::UnreachablePair,
                    "no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
}

}  // namespace detail

// w lies on some shortest u-v path (endpoints included).
inline bool on_some_geodesic(const DistanceOracle& o, Vertex u, Vertex w, Vertex v) {
    o.check(u);
    o.check(w);
    o.check(v);
    detail::require_reachable(o, u, v);
    const Distance uw = o(u, w);
    const Distance wv = o(w, v);
    if (uw == kUnreachable || wv == kUnreachable) return false;
    return uw + wv == o(u, v);
}

// Number of distinct shortest u-v paths, counted over the shortest-path DAG
// in increasing distance from u.
inline PathCount geodesic_count(const Graph& g, const DistanceOracle& o, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    detail::require_reachable(o, u, v);
    const Distance total = o(u, v);

    std::vector<std::vector<Vertex>> layers(total + 1);
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
        const Distance uw = o(u, w);
        const Distance wv = o(w, v);
        if (uw != kUnreachable && wv != kUnreachable && uw + wv == total) layers[uw].push_back(w);
    }

    std::vector<PathCount> count(g.num_vertices());
    count[u] = 1;
    for (Distance layer = 1; layer <= total; ++layer) {
        for (Vertex y : layers[layer]) {
            PathCount sum = 0;
            for (Vertex x : g.neighbors(y)) {
                if (o(u, x) + 1 == layer && o(x, v) == total - layer + 1) sum += count[x];
            }
            count[y] = std::move(sum);
        }
    }
    return count[v];
}

// Reusable scratch space for repeated "is there a u-v geodesic whose internal
// vertices avoid a blocked set" queries. Not thread-safe; one per thread.
class GeodesicProbe {
public:
    GeodesicProbe(const Graph& g, const DistanceOracle& o)
        : g_(&g), o_(&o), stamp_(g.num_vertices(), 0) {
        stack_.reserve(g.num_vertices());
    }

    const Graph& graph() const noexcept { return *g_; }
    const DistanceOracle& oracle() const noexcept { return *o_; }

    // Depth-first reachability from u to v inside the u-v shortest-path DAG,
    // admitting an internal vertex only when blocked(w) is false.
    template <class BlockedPred>
    bool exists_avoiding(Vertex u, Vertex v, BlockedPred&& blocked) {
        g_->check_vertex(u);
        g_->check_vertex(v);
        detail::require_reachable(*o_, u, v);
        if (u == v) return true;
        const Distance total = (*o_)(u, v);
        if (total == 1) return true;

        next_stamp();
        stack_.clear();
        stack_.push_back(u);
        stamp_[u] = current_;
        while (!stack_.empty()) {
            Vertex x = stack_.back();
            stack_.pop_back();
            const Distance next = (*o_)(u, x) + 1;
            const Distance remaining = total - next;
            for (Vertex y : g_->neighbors(x)) {
                if ((*o_)(y, v) != remaining || stamp_[y] == current_) continue;
                if (y == v) return true;
                if ((*o_)(u, y) != next) continue;
                stamp_[y] = current_;
                if (blocked(y)) continue;
                stack_.push_back(y);
            }
        }
        return false;
    }

private:
    void next_stamp() {
        if (++current_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            current_ = 1;
        }
    }

    const Graph* g_;
    const DistanceOracle* o_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_ = 0;
    std::vector<Vertex> stack_;
};

template <class BlockedPred>
bool geodesic_exists_avoiding(const Graph& g, const DistanceOracle& o, Vertex u, Vertex v,
                              BlockedPred&& blocked) {
    GeodesicProbe probe(g, o);
    return probe.exists_avoiding(u, v, std::forward<BlockedPred>(blocked));
}

}  // namespace mvchroma

#endif
