#pragma once

#include <cstddef>
#include <utility>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/gram_schmidt.hpp"
#include "latred/numeric.hpp"
#include "latred/transform.hpp"

namespace latred {

// Textbook LLL over exact rationals. This is baseline machinery: correctness
// at desk scale matters, throughput does not. Gram-Schmidt data is maintained
// incrementally with the classical swap formulas.
inline ReductionReport lll_reduce(const LatticeBasis& basis, double delta = 0.99) {
    if (!(delta > 0.25 && delta < 1.0)) throw UserError("delta must lie in (1/4, 1)");
    validate(basis);
    const std::size_t n = basis.n();
    const Rat delta_q(delta);  // exact binary value of the double

    IntMat rows = basis.rows;
    IntMat u = identity_matrix(n);
    GsDataExact gs = gram_schmidt_exact(LatticeBasis{rows});

    auto size_reduce = [&](std::size_t k, std::size_t l) {
        if (2 * abs(gs.mu[k][l].get_num()) <= gs.mu[k][l].get_den()) return;  // |mu| <= 1/2
        Int q = rat_round(gs.mu[k][l]);
        for (std::size_t t = 0; t < rows[k].size(); ++t) rows[k][t] -= q * rows[l][t];
        for (std::size_t t = 0; t < n; ++t) u[k][t] -= q * u[l][t];
        for (std::size_t i = 0; i < l; ++i) gs.mu[k][i] -= Rat(q) * gs.mu[l][i];
        gs.mu[k][l] -= Rat(q);
    };

    long iterations = 0;
    std::size_t k = 1;
    while (k < n) {
        ++iterations;
        size_reduce(k, k - 1);
        Rat lhs = gs.normsq[k];
        Rat rhs = (delta_q - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.normsq[k - 1];
        if (lhs < rhs) {
            std::swap(rows[k - 1], rows[k]);
            std::swap(u[k - 1], u[k]);
            // classical mu/B update for the swap
            Rat mu_old = gs.mu[k][k - 1];
            Rat b_new = gs.normsq[k] + mu_old * mu_old * gs.normsq[k - 1];
            gs.mu[k][k - 1] = mu_old * gs.normsq[k - 1] / b_new;
            gs.normsq[k] = gs.normsq[k - 1] * gs.normsq[k] / b_new;
            gs.normsq[k - 1] = b_new;
            for (std::size_t l = 0; l + 1 < k; ++l) std::swap(gs.mu[k - 1][l], gs.mu[k][l]);
            for (std::size_t i = k + 1; i < n; ++i) {
                Rat t = gs.mu[i][k];
                gs.mu[i][k] = gs.mu[i][k - 1] - mu_old * t;
                gs.mu[i][k - 1] = t + gs.mu[k][k - 1] * gs.mu[i][k];
            }
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
            ++k;
        }
    }
    return make_report(LatticeBasis{std::move(rows)}, std::move(u), Method::lll,
                       /*ok=*/true, iterations);
}

// Post-hoc condition checks from a fresh exact Gram-Schmidt pass, independent
// of the incremental bookkeeping above.
inline bool is_size_reduced(const LatticeBasis& b) {
    GsDataExact gs = gram_schmidt_exact(b);
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (2 * abs(gs.mu[i][j].get_num()) > gs.mu[i][j].get_den()) return false;
    return true;
}

inline bool satisfies_lovasz(const LatticeBasis& b, double delta = 0.99) {
    GsDataExact gs = gram_schmidt_exact(b);
    Rat delta_q(delta);
    for (std::size_t k = 1; k < b.n(); ++k) {
        Rat rhs = (delta_q - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.normsq[k - 1];
        if (gs.normsq[k] < rhs) return false;
    }
    return true;
}

}  // namespace latred
