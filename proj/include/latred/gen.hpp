#pragma once

#include <cstdint>
#include <string>

#include "latred/basis.hpp"
#include "latred/errors.hpp"
#include "latred/linalg.hpp"
#include "latred/rng.hpp"

namespace latred {

namespace gen_tag {
inline constexpr std::uint64_t uniform = 0x756E6966;   // "unif"
inline constexpr std::uint64_t knapsack = 0x6B6E6170;  // "knap"
}

// n x n basis with entries i.i.d. uniform in [-bound, bound], resampled until
// linearly independent. Deterministic in the seed.
inline LatticeBasis gen_uniform(std::size_t n, long long bound, std::uint64_t seed) {
    if (n < 1) throw UserError("gen: n must be >= 1");
    if (bound < 1) throw UserError("gen: bound must be >= 1");
    SplitMix64 rng = SplitMix64(seed).split(gen_tag::uniform);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        IntMat rows(n, IntVec(n));
        for (auto& row : rows)
            for (auto& e : row) e = Int(static_cast<long>(rng.range(-bound, bound)));
        if (sgn(det_bareiss(rows)) != 0) return LatticeBasis{std::move(rows)};
    }
    throw InternalError("gen: could not sample an independent basis");
}

// Standard subset-sum lattice: rows (e_i | w_i) with random weights in
// [1, bound], shape n x (n+1). The identity block keeps it independent.
inline LatticeBasis gen_knapsack(std::size_t n, long long bound, std::uint64_t seed) {
    if (n < 1) throw UserError("gen: n must be >= 1");
    if (bound < 1) throw UserError("gen: bound must be >= 1");
    SplitMix64 rng = SplitMix64(seed).split(gen_tag::knapsack);
    IntMat rows(n, IntVec(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        rows[i][i] = 1;
        rows[i][n] = Int(static_cast<long>(rng.range(1, bound)));
    }
    return LatticeBasis{std::move(rows)};
}

inline LatticeBasis gen_basis(const std::string& kind, std::size_t n, long long bound,
                              std::uint64_t seed) {
    if (kind == "uniform") return gen_uniform(n, bound, seed);
    if (kind == "knapsack") return gen_knapsack(n, bound, seed);
    throw UserError("gen: unknown kind '" + kind + "' (expected uniform or knapsack)");
}

}  // namespace latred
