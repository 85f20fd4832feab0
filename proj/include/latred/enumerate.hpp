#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/gram_schmidt.hpp"
#include "latred/numeric.hpp"

namespace latred {

struct EnumConfig {
    double radius = 0.0;       // R > 0, ambient norm
    bool sign_restricted = false;
    std::optional<std::vector<double>> profile;  // per-level radii, size n
    std::optional<std::uint64_t> node_budget;
};

struct EnumResult {
    bool found = false;
    std::vector<long long> coeffs;
    IntVec vec;
    Int norm_sq = 0;
};

// Per-level node accounting, indexed by the level whose variable the counter
// describes. good_nodes[l] counts computed intervals for v_l that contain
// both a negative and a positive integer; sign_pruned[l] counts the negative
// integers dropped from those intervals when sign restriction is active.
struct EnumStats {
    std::vector<std::uint64_t> nodes_visited;
    std::vector<std::uint64_t> good_nodes;
    std::vector<std::uint64_t> sign_pruned;
    std::vector<std::uint64_t> interval_count;
    std::vector<double> interval_len_sum;
    std::uint64_t total_nodes = 0;
    bool budget_exceeded = false;

    explicit EnumStats(std::size_t n = 0)
        : nodes_visited(n, 0), good_nodes(n, 0), sign_pruned(n, 0),
          interval_count(n, 0), interval_len_sum(n, 0.0) {}

    void merge(const EnumStats& o) {
        for (std::size_t l = 0; l < nodes_visited.size(); ++l) {
            nodes_visited[l] += o.nodes_visited[l];
            good_nodes[l] += o.good_nodes[l];
            sign_pruned[l] += o.sign_pruned[l];
            interval_count[l] += o.interval_count[l];
            interval_len_sum[l] += o.interval_len_sum[l];
        }
        total_nodes += o.total_nodes;
        budget_exceeded = budget_exceeded || o.budget_exceeded;
    }
};

struct LevelInterval {
    long long lo = 0, hi = -1;
    double center = 0.0;
    bool empty() const { return lo > hi; }
    std::uint64_t length() const { return empty() ? 0 : static_cast<std::uint64_t>(hi - lo + 1); }
};

// Admissible integers for v_level given the coefficients above it and the
// squared budget left at this level. Bounds are widened by a small relative
// epsilon so boundary integers are never lost to rounding.
inline LevelInterval level_interval(const GsData& gs, std::size_t level,
                                    std::span<const long long> coeffs, double budget) {
    double center = 0.0;
    for (std::size_t k = level + 1; k < gs.n(); ++k)
        center -= gs.mu[k][level] * static_cast<double>(coeffs[k]);
    double bound = std::sqrt(std::max(budget, 0.0) / gs.normsq[level]);
    double eps = 1e-9 * (1.0 + std::fabs(center) + bound);
    LevelInterval iv;
    iv.center = center;
    iv.lo = static_cast<long long>(std::ceil(center - bound - eps));
    iv.hi = static_cast<long long>(std::floor(center + bound + eps));
    return iv;
}

// R = min_i ||b_i||: guarantees the ball contains a nonzero lattice vector.
inline double radius_default(const LatticeBasis& basis) {
    Int best = norm_sq(basis.rows[0]);
    for (std::size_t i = 1; i < basis.n(); ++i) best = std::min(best, norm_sq(basis.rows[i]));
    return std::sqrt(best.get_d());
}

namespace detail {

struct EnumContext {
    const LatticeBasis& basis;
    const GsData& gs;
    const EnumConfig& cfg;
    std::vector<double> profile_sq;  // per-level squared budget ceiling
    Rat rsq_accept;                  // exact acceptance bound for ||v||^2
};

struct Walker {
    const EnumContext& ctx;
    EnumStats stats;
    EnumResult best;
    std::vector<long long> coeffs;
    bool aborted = false;

    explicit Walker(const EnumContext& c)
        : ctx(c), stats(c.basis.n()), coeffs(c.basis.n(), 0) {}

    void leaf() {
        bool all_zero = true;
        for (long long t : coeffs)
            if (t != 0) { all_zero = false; break; }
        if (all_zero) return;
        IntVec vec(ctx.basis.dim(), 0);
        for (std::size_t i = 0; i < ctx.basis.n(); ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t t = 0; t < vec.size(); ++t)
                vec[t] += Int(coeffs[i]) * ctx.basis.rows[i][t];
        }
        Int nsq = norm_sq(vec);
        if (Rat(nsq) > ctx.rsq_accept) return;  // exact bound check at the boundary
        if (!best.found || nsq < best.norm_sq) {
            best.found = true;
            best.coeffs = coeffs;
            best.vec = std::move(vec);
            best.norm_sq = std::move(nsq);
        }
    }

    // `used` is sum_{k>level} u_k^2 ||b*_k||^2; `spine` means all coefficients
    // above are zero, in which case only v_level >= 0 is explored (v/-v
    // symmetry: the topmost nonzero coefficient is forced positive).
    void descend(std::size_t level, double used, bool spine) {
        double budget = ctx.profile_sq[level] - used;
        LevelInterval iv = level_interval(ctx.gs, level, coeffs, budget);
        stats.interval_count[level]++;
        stats.interval_len_sum[level] += static_cast<double>(iv.length());
        if (iv.lo <= -1 && iv.hi >= 1) stats.good_nodes[level]++;
        long long start = iv.lo;
        if (ctx.cfg.sign_restricted) {
            long long neg_hi = std::min(iv.hi, -1LL);
            if (neg_hi >= iv.lo)
                stats.sign_pruned[level] += static_cast<std::uint64_t>(neg_hi - iv.lo + 1);
            start = std::max(start, 0LL);
        } else if (spine) {
            start = std::max(start, 0LL);
        }
        for (long long t = start; t <= iv.hi; ++t) {
            if (ctx.cfg.node_budget && stats.total_nodes >= *ctx.cfg.node_budget) {
                stats.budget_exceeded = true;
                aborted = true;
                return;
            }
            stats.nodes_visited[level]++;
            stats.total_nodes++;
            coeffs[level] = t;
            if (level == 0) {
                leaf();
            } else {
                double u = static_cast<double>(t) - iv.center;
                descend(level - 1, used + u * u * ctx.gs.normsq[level], spine && t == 0);
                if (aborted) return;
            }
        }
        coeffs[level] = 0;
    }

    // top-level variant over an explicit value range (for work splitting)
    void run_top_range(long long from, long long to, const LevelInterval& iv) {
        std::size_t top = ctx.basis.n() - 1;
        for (long long t = from; t <= to; ++t) {
            if (ctx.cfg.node_budget && stats.total_nodes >= *ctx.cfg.node_budget) {
                stats.budget_exceeded = true;
                return;
            }
            stats.nodes_visited[top]++;
            stats.total_nodes++;
            coeffs[top] = t;
            if (top == 0) {
                leaf();
            } else {
                double u = static_cast<double>(t) - iv.center;
                descend(top - 1, u * u * ctx.gs.normsq[top], t == 0);
                if (aborted) return;
            }
        }
    }
};

inline EnumContext make_context(const LatticeBasis& basis, const GsData& gs,
                                const EnumConfig& cfg) {
    std::size_t n = basis.n();
    if (!(cfg.radius > 0.0)) throw UserError("enumeration radius must be positive");
    if (gs.n() != n) throw UserError("Gram-Schmidt data does not match the basis");
    if (cfg.sign_restricted && !is_obtuse(basis))
        throw UserError("sign-restricted enumeration requires an obtuse basis");
    EnumContext ctx{basis, gs, cfg, {}, Rat(0)};
    ctx.profile_sq.assign(n, cfg.radius * cfg.radius);
    if (cfg.profile) {
        if (cfg.profile->size() != n) throw UserError("bounding profile must have n entries");
        for (std::size_t l = 0; l < n; ++l) {
            double r = (*cfg.profile)[l];
            if (!(r > 0.0) || r > cfg.radius * (1 + 1e-12))
                throw UserError("profile radii must be positive and <= R");
            if (l + 1 < n && (*cfg.profile)[l] < (*cfg.profile)[l + 1])
                throw UserError("profile must be nondecreasing from level n-1 down to 0");
            ctx.profile_sq[l] = r * r;
        }
    }
    Rat rq(cfg.radius);
    ctx.rsq_accept = rq * rq * Rat(1.0 + 1e-9);
    return ctx;
}

// first-found tie-breaking: replace only on strictly smaller norm
inline void merge_best(EnumResult& into, EnumResult&& from) {
    if (!from.found) return;
    if (!into.found || from.norm_sq < into.norm_sq) into = std::move(from);
}

}  // namespace detail

// Depth-first enumeration of all coefficient vectors with ||sum v_i b_i|| <= R,
// levels n-1 down to 0, ascending integer order within each interval. Returns
// the minimum-norm nonzero vector found (exact integer norm) plus node stats.
inline std::pair<EnumResult, EnumStats> enumerate(const LatticeBasis& basis, const GsData& gs,
                                                  const EnumConfig& cfg) {
    detail::EnumContext ctx = detail::make_context(basis, gs, cfg);
    detail::Walker w(ctx);
    w.descend(basis.n() - 1, 0.0, true);
    return {std::move(w.best), std::move(w.stats)};
}

// Deterministic work splitting: the top-level interval is cut into `parts`
// contiguous chunks which may run on separate threads; merged results equal
// the sequential run exactly (interval sums are integer-valued doubles, and
// the best vector is merged in chunk order).
inline std::pair<EnumResult, EnumStats> enumerate_split(const LatticeBasis& basis,
                                                        const GsData& gs, const EnumConfig& cfg,
                                                        unsigned parts) {
    if (parts <= 1 || basis.n() == 1 || cfg.node_budget)
        return enumerate(basis, gs, cfg);  // budgeted runs stay sequential
    detail::EnumContext ctx = detail::make_context(basis, gs, cfg);
    std::size_t top = basis.n() - 1;

    std::vector<long long> zero(basis.n(), 0);
    LevelInterval iv = level_interval(gs, top, zero, ctx.profile_sq[top]);
    EnumStats root(basis.n());
    root.interval_count[top] = 1;
    root.interval_len_sum[top] = static_cast<double>(iv.length());
    if (iv.lo <= -1 && iv.hi >= 1) root.good_nodes[top] = 1;
    long long start = iv.lo;
    if (cfg.sign_restricted) {
        long long neg_hi = std::min(iv.hi, -1LL);
        if (neg_hi >= iv.lo)
            root.sign_pruned[top] = static_cast<std::uint64_t>(neg_hi - iv.lo + 1);
    }
    start = std::max(start, 0LL);  // spine at the very top in both modes

    if (start > iv.hi) return {EnumResult{}, std::move(root)};

    std::uint64_t width = static_cast<std::uint64_t>(iv.hi - start + 1);
    unsigned chunks = static_cast<unsigned>(std::min<std::uint64_t>(parts, width));
    std::vector<detail::Walker> workers;
    workers.reserve(chunks);
    for (unsigned i = 0; i < chunks; ++i) workers.emplace_back(ctx);

    std::vector<std::thread> threads;
    long long pos = start;
    for (unsigned i = 0; i < chunks; ++i) {
        std::uint64_t len = width / chunks + (i < width % chunks ? 1 : 0);
        long long from = pos, to = pos + static_cast<long long>(len) - 1;
        pos = to + 1;
        threads.emplace_back([&, i, from, to] { workers[i].run_top_range(from, to, iv); });
    }
    for (auto& t : threads) t.join();

    EnumResult best;
    EnumStats stats = std::move(root);
    for (unsigned i = 0; i < chunks; ++i) {
        stats.merge(workers[i].stats);
        detail::merge_best(best, std::move(workers[i].best));
    }
    return {std::move(best), std::move(stats)};
}

// built-in example profile: R_l^2 = R^2 (n-l)/n
inline std::vector<double> linear_profile(std::size_t n, double radius) {
    std::vector<double> p(n);
    for (std::size_t l = 0; l < n; ++l)
        p[l] = radius * std::sqrt(static_cast<double>(n - l) / static_cast<double>(n));
    return p;
}

}  // namespace latred
