#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace latred {

using Int = mpz_class;   // arbitrary-precision integer
using Rat = mpq_class;   // exact rational

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// floor of an exact rational (den > 0 after canonicalization)
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// nearest integer, halves rounded up: floor(q + 1/2)
inline Int rat_round(const Rat& q) {
    Rat t = q + make_rat(1, 2);
    return rat_floor(t);
}

// smallest nonnegative integer c with c*c >= q
inline Int ceil_sqrt(const Rat& q) {
    if (sgn(q) <= 0) return 0;
    Int hi = rat_ceil(q);
    Int c;
    mpz_sqrt(c.get_mpz_t(), hi.get_mpz_t());  // floor sqrt of ceil(q)
    while (Rat(c * c) < q) ++c;
    while (c > 0 && Rat((c - 1) * (c - 1)) >= q) --c;
    return c;
}

inline std::size_t bit_length(const Int& z) {
    if (sgn(z) == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace latred
