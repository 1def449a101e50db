#ifndef MVCHROMA_GLUED_TREE_HPP
#define MVCHROMA_GLUED_TREE_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvchroma/distance.hpp"

namespace mvchroma {

// v_{i,j} (side 1) or v'_{i,j} (side 2) at level i (depth i-1) and position
// j in 1..t^{i-1}; or the quasi-leaf v_a, a in 1..t^r.
struct TreeCoordinate {
    enum class Kind { Internal, QuasiLeaf };

    Kind kind = Kind::Internal;
    int side = 1;
    int level = 1;
    std::uint64_t position = 1;
    std::uint64_t leaf = 0;

    static TreeCoordinate internal(int side, int level, std::uint64_t position) {
        return {Kind::Internal, side, level, position, 0};
    }
    static TreeCoordinate quasi_leaf(std::uint64_t a) { return {Kind::QuasiLeaf, 0, 0, 0, a}; }

    bool is_quasi_leaf() const noexcept { return kind == Kind::QuasiLeaf; }

    friend bool operator==(const TreeCoordinate&, const TreeCoordinate&) = default;
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (unsigned e = 0; e < exp; ++e) {
        if (out > cap / base) return cap + 1;
        out *= base;
    }
    return out;
}

}  // namespace detail

inline constexpr std::size_t kDefaultTreeSizeCap = 1'000'000;

// Vertex count of GT(r,t): two perfect t-ary trees of depth r sharing t^r leaves.
inline std::uint64_t glued_tree_order(int r, int t, std::uint64_t cap = UINT64_MAX / 4) {
    const std::uint64_t leaves = detail::checked_pow(t, r, cap);
    if (leaves > cap) return cap + 1;
    const std::uint64_t per_side_internal = (leaves - 1) / (t - 1);
    const std::uint64_t n = 2 * per_side_internal + leaves;
    return n;
}

// GT(r,t) with its coordinate labeling. Ids: side-1 internals in level order,
// then side-2 internals in level order, then quasi-leaves v_1..v_{t^r}.
class LabeledGluedTree {
public:
    const Graph& graph() const noexcept { return graph_; }
    int depth() const noexcept { return r_; }
    int arity() const noexcept { return t_; }

    std::uint64_t num_quasi_leaves() const noexcept { return leaves_; }
    std::uint64_t internal_per_side() const noexcept { return per_side_; }
    std::uint64_t level_width(int level) const { return pow_t(level - 1); }

    Vertex internal_id(int side, int level, std::uint64_t position) const {
        if ((side != 1 && side != 2) || level < 1 || level > r_ || position < 1 || position > level_width(level)) {
            throw Error(ErrorCode::InvalidParams, "no internal vertex (" + std::to_string(side) + "," +
                                                      std::to_string(level) + "," + std::to_string(position) + ")");
        }
        const std::uint64_t level_offset = (pow_t(level - 1) - 1) / (t_ - 1);
        return static_cast<Vertex>((side - 1) * per_side_ + level_offset + position - 1);
    }

    Vertex quasi_leaf_id(std::uint64_t a) const {
        if (a < 1 || a > leaves_) {
            throw Error(ErrorCode::InvalidQuasiLeaf, "quasi-leaf " + std::to_string(a) + " outside 1.." + std::to_string(leaves_));
        }
        return static_cast<Vertex>(2 * per_side_ + a - 1);
    }

    Vertex id_of(const TreeCoordinate& c) const {
        return c.is_quasi_leaf() ? quasi_leaf_id(c.leaf) : internal_id(c.side, c.level, c.position);
    }

    const TreeCoordinate& coordinate(Vertex v) const {
        graph_.check_vertex(v);
        return coords_[v];
    }

    // Internal vertices of one side in level order, positions ascending.
    std::vector<Vertex> level_vertices(int side, int level) const {
        std::vector<Vertex> out;
        for (std::uint64_t j = 1; j <= level_width(level); ++j) out.push_back(internal_id(side, level, j));
        return out;
    }

    std::vector<Vertex> quasi_leaves() const {
        std::vector<Vertex> out;
        for (std::uint64_t a = 1; a <= leaves_; ++a) out.push_back(quasi_leaf_id(a));
        return out;
    }

    // Number of quasi-leaf descendants of an internal vertex at `level`.
    std::uint64_t subtree_quasi_leaves(int level) const { return pow_t(r_ - level + 1); }

    // Range [first, last] of quasi-leaf indices below v_{level,position}.
    std::pair<std::uint64_t, std::uint64_t> subtree_leaf_range(int level, std::uint64_t position) const {
        const std::uint64_t span = subtree_quasi_leaves(level);
        return {(position - 1) * span + 1, position * span};
    }

    friend LabeledGluedTree build_glued_tree(int r, int t, std::size_t size_cap);

private:
    std::uint64_t pow_t(int e) const { return detail::checked_pow(t_, e, UINT64_MAX / 4); }

    Graph graph_;
    int r_ = 0, t_ = 0;
    std::uint64_t leaves_ = 0, per_side_ = 0;
    std::vector<TreeCoordinate> coords_;
};

inline LabeledGluedTree build_glued_tree(int r, int t, std::size_t size_cap = kDefaultTreeSizeCap) {
    if (r < 1 || t < 2) {
        throw Error(ErrorCode::InvalidParams, "glued tree needs r >= 1 and t >= 2 (got r=" + std::to_string(r) +
                                                  ", t=" + std::to_string(t) + ")");
    }
    const std::uint64_t n = glued_tree_order(r, t, size_cap);
    if (n > size_cap) {
        throw Error(ErrorCode::SizeCapExceeded, "GT(" + std::to_string(r) + "," + std::to_string(t) +
                                                    ") exceeds the size cap of " + std::to_string(size_cap));
    }
    LabeledGluedTree tree;
    tree.r_ = r;
    tree.t_ = t;
    tree.leaves_ = tree.pow_t(r);
    tree.per_side_ = (tree.leaves_ - 1) / (t - 1);
    tree.coords_.resize(n);

    std::vector<Edge> edges;
    edges.reserve(2 * (n - 1));
    for (int side = 1; side <= 2; ++side) {
        for (int level = 1; level <= r; ++level) {
            for (std::uint64_t j = 1; j <= tree.level_width(level); ++j) {
                const Vertex parent = tree.internal_id(side, level, j);
                tree.coords_[parent] = TreeCoordinate::internal(side, level, j);
                for (std::uint64_t c = (j - 1) * t + 1; c <= j * static_cast<std::uint64_t>(t); ++c) {
                    const Vertex child = level == r ? tree.quasi_leaf_id(c) : tree.internal_id(side, level + 1, c);
                    edges.push_back({parent, child});
                }
            }
        }
    }
    for (std::uint64_t a = 1; a <= tree.leaves_; ++a) tree.coords_[tree.quasi_leaf_id(a)] = TreeCoordinate::quasi_leaf(a);
    tree.graph_ = graph_from_edge_list(n, edges);
    return tree;
}

// The two v_a - v_b geodesics of GT(r,t), one through each tree copy, and
// the cycle C_{a,b} they form.
struct CycleDecomposition {
    std::uint64_t a = 0, b = 0;
    std::vector<Vertex> path_side1;  // v_a ... v_b through side 1
    std::vector<Vertex> path_side2;  // v_a ... v_b through side 2
    std::vector<Vertex> interior_side1;
    std::vector<Vertex> interior_side2;
    // Cycle order: path_side1 followed by interior_side2 reversed.
    std::vector<Vertex> all_vertices;
};

inline CycleDecomposition cycle_vertices(const LabeledGluedTree& tree, const DistanceOracle& o, std::uint64_t a,
                                         std::uint64_t b) {
    const Vertex va = tree.quasi_leaf_id(a);
    const Vertex vb = tree.quasi_leaf_id(b);
    if (a == b) throw Error(ErrorCode::InvalidQuasiLeaf, "cycle needs two distinct quasi-leaves");
    const std::uint64_t t = tree.arity();

    CycleDecomposition cd;
    cd.a = a;
    cd.b = b;
    for (int side = 1; side <= 2; ++side) {
        // Climb from both parents until they meet at the lowest common ancestor.
        std::uint64_t pa = (a + t - 1) / t, pb = (b + t - 1) / t;
        int level = tree.depth();
        std::vector<Vertex> up, down;
        while (pa != pb) {
            up.push_back(tree.internal_id(side, level, pa));
            down.push_back(tree.internal_id(side, level, pb));
            pa = (pa + t - 1) / t;
            pb = (pb + t - 1) / t;
            --level;
        }
        auto& interior = side == 1 ? cd.interior_side1 : cd.interior_side2;
        interior = up;
        interior.push_back(tree.internal_id(side, level, pa));
        interior.insert(interior.end(), down.rbegin(), down.rend());

        auto& path = side == 1 ? cd.path_side1 : cd.path_side2;
        path.push_back(va);
        path.insert(path.end(), interior.begin(), interior.end());
        path.push_back(vb);
        if (o.size() == tree.graph().num_vertices() && path.size() - 1 != o(va, vb)) {
            throw std::logic_error("cycle side path is not a geodesic");
        }
    }
    cd.all_vertices = cd.path_side1;
    cd.all_vertices.insert(cd.all_vertices.end(), cd.interior_side2.rbegin(), cd.interior_side2.rend());
    return cd;
}

// Sidecar: "L <id> <side> <i> <j>" per internal vertex and "Q <id> <a>" per
// quasi-leaf, 1-based ids in ascending order.
inline void write_labels(std::ostream& out, const LabeledGluedTree& tree) {
    for (Vertex v = 0; v < tree.graph().num_vertices(); ++v) {
        const auto& c = tree.coordinate(v);
        if (c.is_quasi_leaf()) {
            out << "Q " << v + 1 << ' ' << c.leaf << '\n';
        } else {
            out << "L " << v + 1 << ' ' << c.side << ' ' << c.level << ' ' << c.position << '\n';
        }
    }
}

inline std::string write_labels_string(const LabeledGluedTree& tree) {
    std::ostringstream out;
    write_labels(out, tree);
    return out.str();
}

}  // namespace mvchroma

#endif
