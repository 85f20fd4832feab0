#pragma once

#include <cstddef>
#include <vector>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/linalg.hpp"
#include "latred/numeric.hpp"

namespace latred {

// Exact Gram-Schmidt data: mu is lower triangular (mu[i][j] defined for j < i),
// normsq[i] = ||b*_i||^2 > 0.
struct GsDataExact {
    RatMat mu;
    RatVec normsq;
    RatMat bstar;  // the orthogonalized vectors themselves (dimension m each)

    std::size_t n() const { return normsq.size(); }
};

// Double-precision view used by the enumeration hot path.
struct GsData {
    std::vector<std::vector<double>> mu;
    std::vector<double> normsq;

    std::size_t n() const { return normsq.size(); }
};

inline GsDataExact gram_schmidt_exact(const LatticeBasis& b) {
    std::size_t n = b.n(), m = b.dim();
    GsDataExact gs;
    gs.mu.assign(n, RatVec(n, Rat(0)));
    gs.normsq.assign(n, Rat(0));
    gs.bstar.assign(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) gs.bstar[i][k] = Rat(b.rows[i][k]);
        for (std::size_t j = 0; j < i; ++j) {
            Rat num = 0;
            for (std::size_t k = 0; k < m; ++k) num += Rat(b.rows[i][k]) * gs.bstar[j][k];
            gs.mu[i][j] = num / gs.normsq[j];
            for (std::size_t k = 0; k < m; ++k) gs.bstar[i][k] -= gs.mu[i][j] * gs.bstar[j][k];
        }
        gs.normsq[i] = dot(gs.bstar[i], gs.bstar[i]);
        if (sgn(gs.normsq[i]) <= 0)
            throw DegenerateBasis("zero Gram-Schmidt norm: basis is linearly dependent");
    }
    return gs;
}

inline GsData to_double(const GsDataExact& e) {
    std::size_t n = e.n();
    GsData gs;
    gs.mu.assign(n, std::vector<double>(n, 0.0));
    gs.normsq.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        gs.normsq[i] = e.normsq[i].get_d();
        for (std::size_t j = 0; j < i; ++j) gs.mu[i][j] = e.mu[i][j].get_d();
    }
    return gs;
}

// Double mode is derived from the exact data; at the sizes this library
// targets the exact pass is cheap and removes cancellation worries.
inline GsData gram_schmidt(const LatticeBasis& b) { return to_double(gram_schmidt_exact(b)); }

// Reconstruction identity b_i = b*_i + sum_{j<i} mu_{i,j} b*_j, exact.
inline bool gs_reconstructs(const LatticeBasis& b, const GsDataExact& gs) {
    std::size_t n = b.n(), m = b.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            Rat s = gs.bstar[i][k];
            for (std::size_t j = 0; j < i; ++j) s += gs.mu[i][j] * gs.bstar[j][k];
            if (s != Rat(b.rows[i][k])) return false;
        }
    }
    return true;
}

}  // namespace latred
