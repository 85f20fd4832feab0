#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/linalg.hpp"
#include "latred/numeric.hpp"
#include "latred/sign_graph.hpp"
#include "latred/transform.hpp"

namespace latred {

// One inequality system A v <= y c: A is the Gram submatrix on the current
// obtuse clique K (symmetric positive definite, off-diagonals <= 0), and
// c[l] = -(b_j . b_l) for the vector b_j being fixed up.
struct MMatrixSystem {
    IntMat a;
    IntVec c;
    long y = 1;
};

struct MSolveResult {
    IntVec v;           // greatest integer solution of A v <= y c
    RatVec x;           // y * A^{-1} * c
    RatMat a_inv;
    long refine_sweeps = 0;  // 0 when floor(x) was already feasible
};

namespace detail {

inline bool satisfies(const IntMat& a, const IntVec& v, const IntVec& rhs) {
    std::size_t k = a.size();
    for (std::size_t l = 0; l < k; ++l) {
        Int s = 0;
        for (std::size_t i = 0; i < k; ++i) s += a[l][i] * v[i];
        if (s > rhs[l]) return false;
    }
    return true;
}

}  // namespace detail

// Solve A v <= y c over the integers, returning the componentwise greatest
// solution. Starts from floor(y A^{-1} c); every integer solution lies at or
// below that point, but the floor itself can violate a row when the rounded-
// off fractional part f has (A f) negative somewhere, so we lower entries by
// Gauss-Seidel sweeps until all rows hold. Each sweep keeps v an upper bound
// on every integer solution and never raises an entry, which forces finite
// termination at the greatest solution.
inline MSolveResult solve_coefficients(const MMatrixSystem& sys) {
    std::size_t k = sys.a.size();
    if (k == 0) throw NotMMatrix("empty system");
    if (sys.y == 0) throw UserError("multiplier y must be nonzero");
    for (std::size_t i = 0; i < k; ++i) {
        if (sys.a[i].size() != k) throw NotMMatrix("system matrix is not square");
        for (std::size_t j = 0; j < k; ++j) {
            if (sys.a[i][j] != sys.a[j][i]) throw NotMMatrix("system matrix is not symmetric");
            if (i != j && sgn(sys.a[i][j]) > 0)
                throw NotMMatrix("positive off-diagonal entry");
        }
    }
    auto inv = invert_spd(sys.a);
    if (!inv) throw NotMMatrix("matrix is not positive definite");
    for (const auto& row : inv->inverse)
        for (const auto& e : row)
            if (sgn(e) < 0) throw NotMMatrix("inverse has a negative entry");

    RatVec cq(k);
    IntVec rhs(k);
    for (std::size_t l = 0; l < k; ++l) {
        cq[l] = Rat(sys.c[l]) * sys.y;
        rhs[l] = sys.c[l] * sys.y;
    }
    RatVec x = mat_vec(inv->inverse, cq);

    MSolveResult res;
    res.x = x;
    res.a_inv = std::move(inv->inverse);
    res.v.resize(k);
    for (std::size_t i = 0; i < k; ++i) res.v[i] = rat_floor(x[i]);

    const long sweep_cap = 1'000'000;
    while (!detail::satisfies(sys.a, res.v, rhs)) {
        if (++res.refine_sweeps > sweep_cap)
            throw InternalError("inequality refinement did not converge");
        for (std::size_t l = 0; l < k; ++l) {
            Int free = rhs[l];
            for (std::size_t i = 0; i < k; ++i)
                if (i != l) free -= sys.a[l][i] * res.v[i];
            Int cap = rat_floor(make_rat(free, sys.a[l][l]));
            if (cap < res.v[l]) res.v[l] = cap;
        }
    }
    return res;
}

// Inclusion-maximal set of vertices whose internal edges are all red or zero.
// Greedy: seed with the vertex of maximum red degree, then repeatedly add the
// compatible vertex of maximum red degree; smallest index breaks ties.
inline std::vector<std::size_t> initial_clique(const SignGraph& g) {
    std::vector<std::size_t> red_deg(g.n, 0);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            if (j != i && sgn(g.weight[i][j]) < 0) ++red_deg[i];

    std::size_t seed = 0;
    for (std::size_t i = 1; i < g.n; ++i)
        if (red_deg[i] > red_deg[seed]) seed = i;

    std::vector<std::size_t> k{seed};
    std::vector<bool> in_k(g.n, false);
    in_k[seed] = true;
    while (true) {
        std::optional<std::size_t> best;
        for (std::size_t v = 0; v < g.n; ++v) {
            if (in_k[v]) continue;
            bool compatible = true;
            for (std::size_t u : k)
                if (sgn(g.weight[v][u]) > 0) { compatible = false; break; }
            if (!compatible) continue;
            if (!best || red_deg[v] > red_deg[*best]) best = v;
        }
        if (!best) break;
        in_k[*best] = true;
        k.push_back(*best);
    }
    std::sort(k.begin(), k.end());
    return k;
}

// Trace of one solved system, fired once per multiplier candidate. Used by
// tests/acceptance to verify the M-matrix facts on every extracted A.
struct MStepTrace {
    const IntMat& a;
    const IntVec& c;
    long y;
    const IntVec& v;
    const RatMat& a_inv;
    const RatVec& x;
    long refine_sweeps;
    std::size_t j;                        // index of the vector being replaced
    const std::vector<std::size_t>& clique;
};

using ObtuseObserver = std::function<void(const MStepTrace&)>;

struct ObtuseOptions {
    // With |y| >= 2 the step matrix has determinant y, the output spans a
    // proper sublattice, and same_lattice fails; multipliers are therefore
    // limited to {-1,+1} unless this flag is set.
    bool allow_sublattice = false;
};

namespace detail {

struct Candidate {
    long y = 0;
    IntVec v;
    IntVec vec;  // y*b_j + sum v_i b_i
    Int nsq;
    long refine_sweeps = 0;
};

// selection key: smallest ||b'||^2, then smaller |y|, then positive y
inline bool better(const Candidate& a, const Candidate& b) {
    if (a.nsq != b.nsq) return a.nsq < b.nsq;
    long aa = a.y < 0 ? -a.y : a.y, ab = b.y < 0 ? -b.y : b.y;
    if (aa != ab) return aa < ab;
    return a.y > b.y;
}

}  // namespace detail

// Scan admissible multipliers y, solve the inequality system for each, and
// return the candidate replacement vector for b_j that is obtuse to all of K.
// y = 1 is always feasible, so a candidate always exists.
inline detail::Candidate choose_multiplier(const IntMat& rows, const IntMat& g,
                                           std::size_t j, const std::vector<std::size_t>& clique,
                                           const ObtuseOptions& opts,
                                           const ObtuseObserver& observer) {
    std::size_t kk = clique.size();
    std::size_t n = rows.size();
    IntMat a(kk, IntVec(kk));
    IntVec c(kk);
    for (std::size_t p = 0; p < kk; ++p) {
        c[p] = -g[j][clique[p]];
        for (std::size_t q = 0; q < kk; ++q) a[p][q] = g[clique[p]][clique[q]];
    }
    std::vector<long> ys;
    if (opts.allow_sublattice) {
        for (long y = 1; y <= static_cast<long>(n); ++y) { ys.push_back(y); ys.push_back(-y); }
    } else {
        ys = {1, -1};
    }

    std::optional<detail::Candidate> best;
    for (long y : ys) {
        MSolveResult sol = solve_coefficients(MMatrixSystem{a, c, y});
        if (observer)
            observer(MStepTrace{a, c, y, sol.v, sol.a_inv, sol.x, sol.refine_sweeps, j, clique});
        detail::Candidate cand;
        cand.y = y;
        cand.v = sol.v;
        cand.refine_sweeps = sol.refine_sweeps;
        cand.vec.assign(rows[j].size(), 0);
        for (std::size_t t = 0; t < rows[j].size(); ++t) cand.vec[t] = rows[j][t] * y;
        for (std::size_t p = 0; p < kk; ++p)
            for (std::size_t t = 0; t < rows[j].size(); ++t)
                cand.vec[t] += sol.v[p] * rows[clique[p]][t];
        cand.nsq = norm_sq(cand.vec);
        if (!best || detail::better(cand, *best)) best = std::move(cand);
    }
    return *best;
}

// Grow an obtuse clique K to the whole basis: start from a maximal red clique,
// then repeatedly rewrite the vector with the most red edges into K so it
// becomes obtuse to everything already in K. Vectors keep their original
// positions; K is tracked as an index set.
inline ReductionReport obtuse_reduce(const LatticeBasis& basis,
                                     const ObtuseOptions& opts = {},
                                     const ObtuseObserver& observer = nullptr) {
    validate(basis);
    std::size_t n = basis.n(), m = basis.dim();
    IntMat rows = basis.rows;
    IntMat g = gram(basis);
    IntMat u = identity_matrix(n);

    std::vector<std::size_t> clique = initial_clique(build_sign_graph(g));
    std::vector<bool> in_k(n, false);
    for (std::size_t v : clique) in_k[v] = true;

    long iterations = 0;
    long refined = 0;
    while (clique.size() < n) {
        // next vector: most strictly-negative edges into K, smallest index tie
        std::optional<std::size_t> next;
        std::size_t best_red = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (in_k[j]) continue;
            std::size_t red = 0;
            for (std::size_t v : clique)
                if (sgn(g[j][v]) < 0) ++red;
            if (!next || red > best_red) { next = j; best_red = red; }
        }
        std::size_t j = *next;

        auto cand = choose_multiplier(rows, g, j, clique, opts, observer);
        refined += cand.refine_sweeps > 0 ? 1 : 0;

        // apply the elementary row operation to the basis and the transform
        rows[j] = cand.vec;
        for (std::size_t t = 0; t < n; ++t) u[j][t] *= cand.y;
        for (std::size_t p = 0; p < clique.size(); ++p)
            for (std::size_t t = 0; t < n; ++t) u[j][t] += cand.v[p] * u[clique[p]][t];

        // refresh Gram row/column j
        for (std::size_t t = 0; t < n; ++t) {
            g[j][t] = dot(rows[j], rows[t]);
            g[t][j] = g[j][t];
        }
        for (std::size_t v : clique)
            if (sgn(g[j][v]) > 0) throw InternalError("replacement vector not obtuse to clique");

        in_k[j] = true;
        clique.insert(std::lower_bound(clique.begin(), clique.end(), j), j);
        ++iterations;
    }

    if (!is_obtuse(g)) throw InternalError("obtuse reduction finished on a non-obtuse basis");
    (void)m;
    auto report = make_report(LatticeBasis{std::move(rows)}, std::move(u), Method::obtuse,
                              /*ok=*/true, iterations, refined);
    if (!opts.allow_sublattice && !(report.transform_det == 1 || report.transform_det == -1))
        throw InternalError("obtuse reduction transform is not unimodular");
    return report;
}

}  // namespace latred
