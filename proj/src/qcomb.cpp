#include "cdc/qcomb.hpp"

namespace cdc {

BigInt q_pow(int q, long e) {
    require(e >= 0, Errc::Precondition, "negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(e));
    return r;
}

BigInt q_int(long x, int q) {
    require(x >= 0, Errc::Precondition, "[x]_q needs x >= 0");
    return (q_pow(q, x) - 1) / (q - 1);
}

BigInt q_binomial(long v, long k, int q) {
    if (k < 0 || v < 0 || k > v) return 0;
    // prod_{i<k} (q^v - q^i) / (q^k - q^i); the quotient of the full products
    // is an integer.
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= q_pow(q, v) - q_pow(q, i);
        den *= q_pow(q, k) - q_pow(q, i);
    }
    return num / den;
}

BigInt count_avoiding(long w, long u, long c, int q) {
    if (c < 0 || c > w - u) return 0;
    return q_pow(q, u * c) * q_binomial(w - u, c, q);
}

MuApprox mu(int q, int terms) {
    require(q >= 2, Errc::Precondition, "mu needs q >= 2");
    require(terms >= 1, Errc::Precondition, "mu needs at least one term");
    BigRat partial = 1;
    for (int i = 1; i <= terms; ++i) {
        BigRat factor(q_pow(q, i), q_pow(q, i) - 1);  // (1 - q^-i)^-1
        partial *= factor;
    }
    // Tail: prod_{i>T} (1-q^-i)^-1 <= 1 / (1 - sum_{i>T} q^-i)
    //       with sum_{i>T} q^-i = q^-T / (q-1).
    BigRat tail_sum(BigInt(1), q_pow(q, terms) * (q - 1));
    BigRat tail_cap = BigRat(1) / (BigRat(1) - tail_sum);
    MuApprox out;
    out.q = q;
    out.lower = partial;
    out.upper = partial * tail_cap;
    out.lower.canonicalize();
    out.upper.canonicalize();
    return out;
}

}  // namespace cdc
