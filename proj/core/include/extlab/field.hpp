#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extlab/errors.hpp"

namespace extlab {

// Arithmetic context for F_{p^e}.  Elements are stored as uint32 indices:
// the element sum c_i t^i (0 <= c_i < p) has index sum c_i p^i, where t is a
// root of the deterministic modulus (the lexicographically smallest monic
// irreducible of degree e over F_p, coefficients compared from the x^{e-1}
// coefficient down to the constant term).
//
// Fields are interned: Field::get(p, e) always returns the same pointer, so
// raw const Field* handles are safe to hold for the process lifetime.
class Field {
 public:
  static const Field* get(uint32_t p, uint32_t e);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }  // p^e

  // modulus coefficients c_0..c_e (c_e = 1); for e == 1 this is t + c_0
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_slow(a, b);
  }

  uint32_t neg(uint32_t a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_slow(a);
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  uint32_t inv(uint32_t a) const {
    require(a != 0, ErrorCode::DimensionMismatch, "division by zero in F_q");
    return inv_[a];
  }

  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  uint32_t pow(uint32_t a, uint64_t n) const;

  // a^p and a^q (the q-power map is the identity; kept for symmetry checks)
  uint32_t frobenius(uint32_t a) const { return frob_[a]; }

  // embed an integer (residue of the prime field)
  uint32_t of_int(int64_t n) const {
    int64_t r = n % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  // digits of the representative polynomial, constant term first, length e
  std::vector<uint32_t> digits(uint32_t a) const;
  uint32_t from_digits(const std::vector<uint32_t>& d) const;

  // "3", or "t^2+t+1" style rendering for extension fields
  std::string to_string(uint32_t a) const;

 private:
  Field(uint32_t p, uint32_t e);
  void build_tables();

  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t neg_slow(uint32_t a) const;
  uint32_t raw_mul(uint32_t a, uint32_t b) const;  // table-free, used to bootstrap

  uint32_t p_, e_, q_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_, log_, inv_, frob_;
  std::vector<uint32_t> ppow_;  // p^0..p^e
};

// Value type pairing an element with its field; convenient at API boundaries
// and in polynomial code.  Dense matrices store raw indices instead.
struct FieldElement {
  const Field* field = nullptr;
  uint32_t v = 0;

  FieldElement() = default;
  FieldElement(const Field* f, uint32_t value) : field(f), v(value) {}

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.field, a.field->add(a.v, b.v)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {a.field, a.field->sub(a.v, b.v)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {a.field, a.field->mul(a.v, b.v)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    return {a.field, a.field->div(a.v, b.v)};
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    return a.v == b.v && a.field == b.field;
  }
  bool is_zero() const { return v == 0; }
};

}  // namespace extlab
