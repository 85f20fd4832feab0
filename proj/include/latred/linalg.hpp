#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "latred/errors.hpp"
#include "latred/numeric.hpp"

namespace latred {

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int norm_sq(const IntVec& a) { return dot(a, a); }

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntMat identity_matrix(std::size_t n) {
    IntMat u(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    return u;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat r(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (sgn(a[i][t]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

inline IntMat transpose(const IntMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    IntMat r(m, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int det_bareiss(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// All leading principal minors M_1..M_n via one fraction-free pass, no row
// swaps (a zero pivot means the corresponding minor is zero; later minors are
// then not defined by this scheme and are reported as zero — callers only use
// this for positive-definiteness tests, where any nonpositive value decides).
inline IntVec leading_minors(IntMat a) {
    std::size_t n = a.size();
    IntVec minors(n, 0);
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors[k] = a[k][k];
        if (sgn(a[k][k]) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return minors;
}

inline bool is_positive_definite(const IntMat& a) {
    for (const Int& m : leading_minors(a))
        if (sgn(m) <= 0) return false;
    return true;
}

inline Rat det_rational(RatMat a) {
    std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a[p][k]) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[k], a[p]);
            det = -det;
        }
        det *= a[k][k];
        Rat inv = 1 / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            Rat f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// Solve a*x = b exactly over the rationals (Gauss with partial pivoting by
// first nonzero). Returns nullopt when a is singular.
inline std::optional<RatVec> solve_rational(RatMat a, RatVec b) {
    std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a[p][k]) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            std::swap(a[k], a[p]);
            std::swap(b[k], b[p]);
        }
        Rat inv = 1 / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a[i][k]) == 0) continue;
            Rat f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    RatVec x(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// Inverse of a symmetric positive definite matrix by pivot-free elimination.
// The pivots are the ratios of consecutive leading minors, so the matrix is
// positive definite iff every pivot is positive; returns the pivots too.
// Returns nullopt as soon as a pivot is <= 0.
struct SymInverse {
    RatMat inverse;
    RatVec pivots;
};

inline std::optional<SymInverse> invert_spd(const IntMat& a_in) {
    std::size_t n = a_in.size();
    RatMat a(n, RatVec(n));
    RatMat inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(a_in[i][j]);
    }
    RatVec pivots(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a[k][k]) <= 0) return std::nullopt;
        pivots[k] = a[k][k];
        Rat pinv = 1 / a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] *= pinv;
            inv[k][j] *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(a[i][k]) == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return SymInverse{std::move(inv), std::move(pivots)};
}

inline RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

}  // namespace latred
