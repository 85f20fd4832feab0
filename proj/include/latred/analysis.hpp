#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "latred/enumerate.hpp"
#include "latred/errors.hpp"

namespace latred {

// Volume of the d-dimensional ball of radius R: pi^(d/2) / Gamma(d/2+1) * R^d.
inline double ball_volume(int d, double radius) {
    if (d < 0) throw UserError("ball dimension must be >= 0");
    double half = 0.5 * d;
    return std::exp(half * std::log(M_PI) + d * std::log(radius) - std::lgamma(half + 1.0));
}

// Model fraction of good nodes for a d-dimensional stage of the tree:
// Gamma(d/2+1) / Gamma((d-1)/2+1) * 1/(sqrt(pi) R).
inline double good_fraction_exact(int d, double radius) {
    if (d < 1) throw UserError("dimension must be >= 1");
    double lg = std::lgamma(0.5 * d + 1.0) - std::lgamma(0.5 * (d - 1) + 1.0);
    return std::exp(lg) / (std::sqrt(M_PI) * radius);
}

// Stirling form of the same ratio: sqrt(d-1) / (sqrt(2 pi) R).
inline double good_fraction_asymptotic(int d, double radius) {
    if (d < 1) throw UserError("dimension must be >= 1");
    return std::sqrt(static_cast<double>(d - 1)) / (std::sqrt(2.0 * M_PI) * radius);
}

struct ModelRow {
    int level = 0;
    int d = 0;  // n - level
    std::uint64_t visited = 0;
    std::uint64_t good = 0;
    std::optional<double> empirical;  // good/visited, absent when nothing visited
    double exact_frac = 0.0;
    double asym_frac = 0.0;
};

// Per-level empirical good-node fractions next to the volume model. The model
// is a heuristic; nothing here is a pass/fail check. The level-0 row carries
// the whole-tree number sqrt(n-1)/(sqrt(2 pi) R).
struct ModelReport {
    std::vector<ModelRow> rows;       // level n-1 first
    double theorem_fraction = 0.0;    // asymptotic value at level 0
    double alpha = 0.0;               // 1 - 1/(4 sqrt(2 pi) R)
    double avg_interval_len = 0.0;
    double tree_size_log10 = 0.0;     // log10 of (alpha * avg_len)^n, derived estimate
};

inline ModelReport compare_model(const EnumStats& stats, int n, double radius) {
    ModelReport rep;
    for (int level = n - 1; level >= 0; --level) {
        ModelRow row;
        row.level = level;
        row.d = n - level;
        row.visited = stats.nodes_visited[level];
        row.good = stats.good_nodes[level];
        if (row.visited > 0)
            row.empirical = static_cast<double>(row.good) / static_cast<double>(row.visited);
        row.exact_frac = good_fraction_exact(row.d, radius);
        row.asym_frac = good_fraction_asymptotic(row.d, radius);
        rep.rows.push_back(row);
    }
    rep.theorem_fraction = good_fraction_asymptotic(n, radius);
    rep.alpha = 1.0 - 1.0 / (4.0 * std::sqrt(2.0 * M_PI) * radius);
    std::uint64_t count = 0;
    double len = 0.0;
    for (int level = 0; level < n; ++level) {
        count += stats.interval_count[level];
        len += stats.interval_len_sum[level];
    }
    rep.avg_interval_len = count ? len / static_cast<double>(count) : 0.0;
    rep.tree_size_log10 = rep.avg_interval_len > 0.0 && rep.alpha > 0.0
                              ? n * (std::log10(rep.alpha) + std::log10(rep.avg_interval_len))
                              : 0.0;
    return rep;
}

}  // namespace latred
