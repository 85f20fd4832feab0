#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latred/basis.hpp"
#include "latred/numeric.hpp"
#include "latred/transform.hpp"

namespace latred {

enum class EdgeColor { Red, Blue, Zero };  // negative, positive, zero weight

// Complete weighted graph on the basis vectors; weights are the Gram
// off-diagonals, the diagonal is ignored.
struct SignGraph {
    std::size_t n = 0;
    IntMat weight;

    EdgeColor color(std::size_t i, std::size_t j) const {
        int s = sgn(weight[i][j]);
        return s < 0 ? EdgeColor::Red : (s > 0 ? EdgeColor::Blue : EdgeColor::Zero);
    }
    bool zero_free() const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (sgn(weight[i][j]) == 0) return false;
        return true;
    }
};

inline SignGraph build_sign_graph(const IntMat& gram) {
    return SignGraph{gram.size(), gram};
}

// (x - y) mod 4 where x counts strictly negative and y strictly positive
// edges; zero edges count in neither. Result in {0,1,2,3}.
inline int parity_signature(const SignGraph& g) {
    long long x = 0, y = 0;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j) {
            int s = sgn(g.weight[i][j]);
            if (s < 0) ++x;
            else if (s > 0) ++y;
        }
    return static_cast<int>((((x - y) % 4) + 4) % 4);
}

// Negate all edges incident to v (the effect of flipping basis vector v).
inline void flip_vertex(SignGraph& g, std::size_t v) {
    for (std::size_t j = 0; j < g.n; ++j) {
        if (j == v) continue;
        g.weight[v][j] = -g.weight[v][j];
        g.weight[j][v] = -g.weight[j][v];
    }
}

struct SignPartition {
    std::vector<std::size_t> a, b;  // disjoint, a ∪ b = V; flipping b makes all edges <= 0
};

namespace detail {

// Zero edges never invalidate a side assignment: they stay zero under flips
// and 0 <= 0 is obtuse.
inline bool partition_valid(const SignGraph& g, const std::vector<int>& side) {
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j) {
            EdgeColor c = g.color(i, j);
            if (c == EdgeColor::Zero) continue;
            if (side[i] == side[j]) {
                if (c == EdgeColor::Blue) return false;  // positive edge inside a part
            } else {
                if (c == EdgeColor::Red) return false;  // negative edge across
            }
        }
    return true;
}

}  // namespace detail

// Try each start vertex u in ascending order: A = {u} + red neighbors (zero
// neighbors join A as well), B = blue neighbors. Report the first u whose
// split is valid. On zero-free graphs one u suffices — the split is forced —
// so scanning all n is only about zero-edge ties.
inline std::optional<SignPartition> find_partition(const SignGraph& g) {
    for (std::size_t u = 0; u < g.n; ++u) {
        std::vector<int> side(g.n, 0);  // 0 = A, 1 = B
        for (std::size_t v = 0; v < g.n; ++v) {
            if (v == u) continue;
            side[v] = (g.color(u, v) == EdgeColor::Blue) ? 1 : 0;
        }
        if (detail::partition_valid(g, side)) {
            SignPartition p;
            for (std::size_t v = 0; v < g.n; ++v) (side[v] == 0 ? p.a : p.b).push_back(v);
            return p;
        }
    }
    return std::nullopt;
}

// Negate every vector in B of a valid partition. Fail is a normal outcome
// (ok = false, output = input) so pipelines can fall through to the full
// obtuse reduction.
inline ReductionReport sign_flip_reduce(const LatticeBasis& basis) {
    validate(basis);
    SignGraph g = build_sign_graph(gram(basis));
    auto part = find_partition(g);
    if (!part)
        return make_report(basis, identity_matrix(basis.n()), Method::signflip,
                           /*ok=*/false, 0);
    LatticeBasis out = basis;
    IntMat u = identity_matrix(basis.n());
    for (std::size_t v : part->b) {
        for (auto& e : out.rows[v]) e = -e;
        u[v][v] = -1;
    }
    return make_report(std::move(out), std::move(u), Method::signflip, /*ok=*/true, 1);
}

}  // namespace latred
