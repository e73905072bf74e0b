#ifndef CDC_GF_HPP
#define CDC_GF_HPP

#include <cstdint>
#include <vector>

#include "cdc/error.hpp"

namespace cdc {

class FieldElement;

/// A finite field GF(q) for a prime power q <= 256, with full arithmetic
/// tables. Elements are encoded as integers in [0, q): the coefficient vector
/// of the element written in the polynomial basis, packed base p. 0 and 1
/// encode the additive and multiplicative identities.
///
/// Instances are immutable after construction and cached per q, so Field
/// pointers stay valid for the program lifetime and are freely shareable
/// across threads.
class Field {
  public:
    /// The field with the fixed default modulus for q. Throws NotAPrimePower.
    static const Field& of(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    /// Modulus coefficients over GF(p), constant term first, length degree()+1.
    /// For prime fields this is {0, 1} by convention (the polynomial x).
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const {
        require(a != 0, Errc::DivisionByZero, "inverse of zero");
        return inv_[a];
    }
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    FieldElement element(int rep) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const Field& o) const { return this == &o; }

  private:
    explicit Field(int q);
    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

    int q_, p_, e_;
    std::vector<uint8_t> modulus_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

/// A typed element of a specific Field. Mixing fields throws FieldMismatch.
class FieldElement {
  public:
    FieldElement(const Field& f, uint8_t rep) : f_(&f), rep_(rep) {}

    const Field& field() const { return *f_; }
    uint8_t rep() const { return rep_; }

    FieldElement operator+(FieldElement o) const { return {*f_, f_->add(rep_, same(o))}; }
    FieldElement operator-(FieldElement o) const { return {*f_, f_->sub(rep_, same(o))}; }
    FieldElement operator*(FieldElement o) const { return {*f_, f_->mul(rep_, same(o))}; }
    FieldElement operator/(FieldElement o) const { return {*f_, f_->div(rep_, same(o))}; }
    FieldElement operator-() const { return {*f_, f_->neg(rep_)}; }
    FieldElement inverse() const { return {*f_, f_->inv(rep_)}; }

    bool operator==(FieldElement o) const { return f_ == o.f_ && rep_ == o.rep_; }

  private:
    uint8_t same(FieldElement o) const {
        require(f_ == o.f_, Errc::FieldMismatch, "elements of different fields");
        return o.rep_;
    }
    const Field* f_;
    uint8_t rep_;
};

inline FieldElement Field::element(int rep) const {
    require(rep >= 0 && rep < q_, Errc::Precondition, "element encoding out of range");
    return FieldElement(*this, uint8_t(rep));
}
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

/// True iff q = p^e for a prime p and e >= 1; on success reports p and e.
bool is_prime_power(int q, int* p = nullptr, int* e = nullptr);

}  // namespace cdc

#endif
