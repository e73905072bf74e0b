#ifndef CDC_QCOMB_HPP
#define CDC_QCOMB_HPP

#include <gmpxx.h>

#include "cdc/error.hpp"

namespace cdc {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// q^e as an exact integer, e >= 0.
BigInt q_pow(int q, long e);

/// [x]_q = (q^x - 1) / (q - 1) for x >= 0.
BigInt q_int(long x, int q);

/// Gaussian binomial coefficient [v k]_q: the number of k-dimensional
/// subspaces of F_q^v. Zero outside 0 <= k <= v.
BigInt q_binomial(long v, long k, int q);

/// Number of c-dimensional subspaces of a w-dimensional space that intersect
/// a fixed u-dimensional subspace trivially: q^{uc} [w-u, c]_q for
/// 0 <= c <= w-u, zero otherwise.
BigInt count_avoiding(long w, long u, long c, int q);

/// Rational enclosure of the infinite product prod_{i>=1} (1 - q^-i)^-1,
/// truncated after `terms` factors. lower <= true value <= upper; the tail is
/// bounded with 1/(1-x) estimates so both ends are exact rationals.
struct MuApprox {
    int q;
    BigRat lower;
    BigRat upper;
};

MuApprox mu(int q, int terms);

}  // namespace cdc

#endif
