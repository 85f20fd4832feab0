#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/numeric.hpp"
#include "latred/sign_graph.hpp"

namespace latred {

// Ground truth for desk-scale verification. Deliberately shares no code with
// the enumeration engine: norms, bounds and the scan are all local to this
// translation unit and exact.
struct OracleResult {
    Int lambda1_sq = 0;
    std::vector<std::vector<long long>> witnesses;  // capped; see overflow
    bool witness_overflow = false;
    std::vector<long long> box_bound;  // per-coordinate scan bound
    bool has_same_sign_witness = false;  // tracked over all minima, not just stored ones
};

namespace oracle_detail {

inline Int odot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// plain Gauss-Jordan inverse over exact rationals, local to the oracle
inline std::optional<RatMat> oinverse(const IntMat& g) {
    std::size_t n = g.size();
    RatMat a(n, RatVec(n)), inv(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(g[i][j]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a[p][k]) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) { std::swap(a[k], a[p]); std::swap(inv[k], inv[p]); }
        Rat piv = 1 / a[k][k];
        for (std::size_t j = 0; j < n; ++j) { a[k][j] *= piv; inv[k][j] *= piv; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(a[i][k]) == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

inline bool same_sign(const std::vector<long long>& v) {
    bool any_pos = false, any_neg = false;
    for (long long t : v) {
        if (t > 0) any_pos = true;
        if (t < 0) any_neg = true;
    }
    return !(any_pos && any_neg);
}

}  // namespace oracle_detail

// Exhaustive scan of the coefficient box |v_i| <= C_i where
// C_i = ceil(min_j ||b_j|| * sqrt((G^-1)_ii)): for any vector s with
// ||s|| <= min_j ||b_j||, the coefficient v_i = s . d_i of the dual basis
// vector d_i is bounded by ||s|| ||d_i|| and ||d_i||^2 = (G^-1)_ii, so the box
// provably contains every shortest vector. box_scale > 1 enlarges the box for
// self-consistency checks.
inline OracleResult brute_force_svp(const LatticeBasis& basis, int box_scale = 1,
                                    std::size_t witness_cap = 10000) {
    const std::size_t n = basis.n(), m = basis.dim();
    if (n > 8) throw DimensionTooLarge("oracle handles dimension <= 8 only");
    validate(basis);

    IntMat g(n, IntVec(n));
    Int min_nsq = oracle_detail::odot(basis.rows[0], basis.rows[0]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            g[i][j] = oracle_detail::odot(basis.rows[i], basis.rows[j]);
            g[j][i] = g[i][j];
        }
        if (g[i][i] < min_nsq) min_nsq = g[i][i];
    }
    auto ginv = oracle_detail::oinverse(g);
    if (!ginv) throw DegenerateBasis("oracle: Gram matrix is singular");

    OracleResult res;
    std::vector<long long> bound(n);
    double log_points = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Int c = ceil_sqrt(Rat(min_nsq) * (*ginv)[i][i]) * box_scale;
        if (!c.fits_slong_p()) throw DimensionTooLarge("oracle box bound too large");
        bound[i] = c.get_si();
        log_points += std::log10(2.0 * static_cast<double>(bound[i]) + 1.0);
    }
    if (log_points > 9.6) throw DimensionTooLarge("oracle box has too many points");
    res.box_bound = bound;

    // int64 fast path when the worst-case squared norm provably fits
    Int worst = 0;
    for (std::size_t t = 0; t < m; ++t) {
        Int comp = 0;
        for (std::size_t i = 0; i < n; ++i) comp += abs(basis.rows[i][t]) * bound[i];
        worst += comp * comp;
    }
    const bool fits64 = worst < Int("4611686018427387904");  // 2^62

    std::vector<long long> v(n, 0);
    bool found = false;

    auto consider = [&](const Int& nsq) {
        bool is_zero = true;
        for (long long t : v)
            if (t) { is_zero = false; break; }
        if (is_zero) return;
        if (!found || nsq < res.lambda1_sq) {
            found = true;
            res.lambda1_sq = nsq;
            res.witnesses.clear();
            res.witness_overflow = false;
            res.has_same_sign_witness = false;
        }
        if (nsq == res.lambda1_sq) {
            if (oracle_detail::same_sign(v)) res.has_same_sign_witness = true;
            if (res.witnesses.size() < witness_cap) res.witnesses.push_back(v);
            else res.witness_overflow = true;
        }
    };

    if (fits64) {
        std::vector<std::vector<long long>> rows64(n, std::vector<long long>(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < m; ++t) rows64[i][t] = basis.rows[i][t].get_si();
        std::vector<long long> s(m, 0);
        auto scan = [&](auto&& self, std::size_t i) -> void {
            if (i == n) {
                unsigned long long nsq = 0;
                for (std::size_t t = 0; t < m; ++t)
                    nsq += static_cast<unsigned long long>(s[t] * s[t]);
                consider(Int(static_cast<unsigned long>(nsq)));
                return;
            }
            for (std::size_t t = 0; t < m; ++t) s[t] -= bound[i] * rows64[i][t];
            for (long long x = -bound[i];; ++x) {
                v[i] = x;
                self(self, i + 1);
                if (x == bound[i]) break;
                for (std::size_t t = 0; t < m; ++t) s[t] += rows64[i][t];
            }
            for (std::size_t t = 0; t < m; ++t) s[t] -= bound[i] * rows64[i][t];
            v[i] = 0;
        };
        scan(scan, 0);
    } else {
        IntVec s(m, 0);
        auto scan = [&](auto&& self, std::size_t i) -> void {
            if (i == n) {
                Int nsq = 0;
                for (std::size_t t = 0; t < m; ++t) nsq += s[t] * s[t];
                consider(nsq);
                return;
            }
            for (std::size_t t = 0; t < m; ++t) s[t] -= bound[i] * basis.rows[i][t];
            for (long long x = -bound[i];; ++x) {
                v[i] = x;
                self(self, i + 1);
                if (x == bound[i]) break;
                for (std::size_t t = 0; t < m; ++t) s[t] += basis.rows[i][t];
            }
            for (std::size_t t = 0; t < m; ++t) s[t] -= bound[i] * basis.rows[i][t];
            v[i] = 0;
        };
        scan(scan, 0);
    }

    if (!found) throw InternalError("oracle scan found no nonzero vector");
    return res;
}

// True iff some witness has all coefficients >= 0 or all <= 0. Input must be
// obtuse (that is the hypothesis of the statement being verified).
inline bool check_same_sign(const LatticeBasis& basis, const OracleResult& result) {
    if (!is_obtuse(basis)) throw UserError("check_same_sign requires an obtuse basis");
    if (result.has_same_sign_witness) return true;
    for (const auto& w : result.witnesses)
        if (oracle_detail::same_sign(w)) return true;
    return false;
}

// Scan all 2^n sign patterns; return one that makes every edge weight <= 0,
// or nullopt. Pattern entry 1 means "flip that vertex".
inline std::optional<std::vector<int>> exhaustive_flip_search(const SignGraph& g) {
    if (g.n > 12) throw DimensionTooLarge("flip search handles n <= 12 only");
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < g.n && ok; ++i)
            for (std::size_t j = i + 1; j < g.n; ++j) {
                int s = sgn(g.weight[i][j]);
                if (((mask >> i) ^ (mask >> j)) & 1u) s = -s;
                if (s > 0) { ok = false; break; }
            }
        if (ok) {
            std::vector<int> flips(g.n);
            for (std::size_t i = 0; i < g.n; ++i) flips[i] = (mask >> i) & 1u;
            return flips;
        }
    }
    return std::nullopt;
}

}  // namespace latred
