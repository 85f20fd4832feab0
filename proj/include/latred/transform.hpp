#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/linalg.hpp"
#include "latred/numeric.hpp"

namespace latred {

// Row convention: new_basis = U * old_basis.
inline bool is_unimodular(const IntMat& u) {
    Int d = det_bareiss(u);
    return d == 1 || d == -1;
}

// Exact change-of-basis test: true iff b2 = X * b1 for an integer matrix X
// with det(X) = +-1. Works for m >= n by solving against the Gram matrix of
// b1 and then checking the residual.
inline bool same_lattice(const LatticeBasis& b1, const LatticeBasis& b2) {
    if (b1.n() != b2.n() || b1.dim() != b2.dim()) return false;
    std::size_t n = b1.n(), m = b1.dim();
    IntMat g1 = gram(b1);
    if (sgn(det_bareiss(g1)) == 0) throw DegenerateBasis("first basis is degenerate");

    RatMat g1q(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g1q[i][j] = Rat(g1[i][j]);

    // row i of X solves G1 * x = B1 * b2_i  (G1 symmetric)
    IntMat x(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        RatVec rhs(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) rhs[j] = Rat(dot(b2.rows[i], b1.rows[j]));
        auto sol = solve_rational(g1q, rhs);
        if (!sol) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if ((*sol)[j].get_den() != 1) return false;  // not integral
            x[i][j] = (*sol)[j].get_num();
        }
    }
    // residual: X * B1 must equal B2 exactly (meaningful when m > n)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j) s += x[i][j] * b1.rows[j][k];
            if (s != b2.rows[i][k]) return false;
        }
    return is_unimodular(x);
}

enum class Method { signflip, obtuse, lll, composed };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::signflip: return "signflip";
        case Method::obtuse: return "obtuse";
        case Method::lll: return "lll";
        case Method::composed: return "composed";
    }
    return "?";
}

// Outcome of one reduction step. `transform` maps the input to the output
// basis (rows); its determinant is +-1 unless sublattice multipliers were
// explicitly allowed.
struct ReductionReport {
    LatticeBasis output;
    IntMat transform;
    Int transform_det;
    Method method = Method::signflip;
    bool ok = true;
    long iterations = 0;
    std::size_t max_coeff_bits = 0;
    long refined_floor_steps = 0;  // M-matrix floor solutions that needed lowering
};

inline ReductionReport make_report(LatticeBasis output, IntMat transform, Method method,
                                   bool ok, long iterations, long refined = 0) {
    ReductionReport r;
    r.transform_det = det_bareiss(transform);
    r.max_coeff_bits = max_entry_bits(output);
    r.output = std::move(output);
    r.transform = std::move(transform);
    r.method = method;
    r.ok = ok;
    r.iterations = iterations;
    r.refined_floor_steps = refined;
    return r;
}

}  // namespace latred
