#include "cdc/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cdc {

bool is_prime_power(int q, int* p_out, int* e_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    int e = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<uint8_t>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    const int dm = int(m.size()) - 1;
    for (int i = int(a.size()) - 1; i >= dm; --i) {
        if (a[i] == 0) continue;
        // m is monic: subtract a[i] * x^(i-dm) * m
        int c = a[i];
        for (int j = 0; j <= dm; ++j) {
            int v = a[i - dm + j] - c * m[j] % p;
            v %= p;
            if (v < 0) v += p;
            a[i - dm + j] = uint8_t(v);
        }
    }
    a.resize(dm);
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, int p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = uint8_t((prod[i + j] + a[i] * b[j]) % p);
        }
    }
    return poly_mod(std::move(prod), m, p);
}

// Remainder of a / b over GF(p); b need not be monic.
Poly poly_rem(Poly a, const Poly& b, int p) {
    int db = int(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    // inverse of the leading coefficient mod p
    int lead = b[db], lead_inv = 1;
    for (int x = 1; x < p; ++x)
        if (lead * x % p == 1) {
            lead_inv = x;
            break;
        }
    for (int i = int(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        int c = a[i] * lead_inv % p;
        for (int j = 0; j <= db; ++j) {
            int v = (a[i - db + j] - c * b[j]) % p;
            if (v < 0) v += p;
            a[i - db + j] = uint8_t(v);
        }
    }
    a.resize(std::max(db, 1));
    return a;
}

bool poly_is_zero(const Poly& a) {
    for (uint8_t c : a)
        if (c) return false;
    return true;
}

// Exhaustive trial division: a monic reducible polynomial of degree e has a
// monic factor of degree <= e/2.
bool is_irreducible(const Poly& f, int p) {
    int e = int(f.size()) - 1;
    for (int d = 1; 2 * d <= e; ++d) {
        // all monic polynomials of degree d
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long enc = 0; enc < count; ++enc) {
            Poly g(d + 1, 0);
            long long m = enc;
            for (int i = 0; i < d; ++i) {
                g[i] = uint8_t(m % p);
                m /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

// Fixed default moduli for the documented fields; everything else uses the
// lexicographically smallest monic irreducible (stable across runs).
Poly default_modulus(int p, int e) {
    if (p == 2 && e == 2) return {1, 1, 1};     // x^2+x+1
    if (p == 2 && e == 3) return {1, 1, 0, 1};  // x^3+x+1
    if (p == 3 && e == 2) return {2, 2, 1};     // x^2+2x+2
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
        Poly f(e + 1, 0);
        long long m = enc;
        for (int i = 0; i < e; ++i) {
            f[i] = uint8_t(m % p);
            m /= p;
        }
        f[e] = 1;
        if (is_irreducible(f, p)) return f;
    }
    raise(Errc::NotAPrimePower, "no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(int q) : q_(q) {
    require(is_prime_power(q, &p_, &e_), Errc::NotAPrimePower,
            "q = " + std::to_string(q) + " is not a prime power");
    require(q <= 256, Errc::Precondition, "fields larger than 256 are not supported");

    if (e_ == 1) {
        modulus_ = {0, 1};
    } else {
        modulus_ = default_modulus(p_, e_);
    }

    add_.resize(size_t(q_) * q_);
    mul_.resize(size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    auto decode = [&](int enc) {
        Poly c(e_, 0);
        for (int i = 0; i < e_; ++i) {
            c[i] = uint8_t(enc % p_);
            enc /= p_;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        int enc = 0;
        for (int i = e_ - 1; i >= 0; --i) enc = enc * p_ + (i < int(c.size()) ? c[i] : 0);
        return uint8_t(enc);
    };

    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        Poly na(e_);
        for (int i = 0; i < e_; ++i) na[i] = uint8_t((p_ - pa[i]) % p_);
        neg_[a] = encode(na);
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b);
            Poly s(e_);
            for (int i = 0; i < e_; ++i) s[i] = uint8_t((pa[i] + pb[i]) % p_);
            add_[idx(a, b)] = encode(s);
            mul_[idx(a, b)] = encode(poly_mul_mod(pa, pb, modulus_, p_));
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = uint8_t(b);
                break;
            }
        }
        require(inv_[a] != 0, Errc::NotAPrimePower, "modulus is not irreducible");
    }
}

const Field& Field::of(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    }
    return *it->second;
}

}  // namespace cdc
