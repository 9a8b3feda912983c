#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extlab/field.hpp"

namespace extlab {

// Dense univariate polynomial over a finite field.  Coefficients are raw
// element indices, low degree first, with no trailing zeros (the zero
// polynomial has an empty coefficient vector and degree -1).
class Poly {
 public:
  Poly() : field_(nullptr) {}
  explicit Poly(const Field* f) : field_(f) {}
  Poly(const Field* f, std::vector<uint32_t> coeffs) : field_(f), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(const Field* f) { return Poly(f); }
  static Poly constant(const Field* f, uint32_t v) {
    return Poly(f, std::vector<uint32_t>{v});
  }
  static Poly x(const Field* f) { return Poly(f, {0, 1}); }
  static Poly x_power(const Field* f, int n);
  static Poly x_minus(const Field* f, uint32_t alpha) {
    return Poly(f, {f->neg(alpha), 1});
  }

  const Field* field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_unit() const { return degree() == 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  uint32_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(uint32_t s) const;
  Poly shifted(int n) const;  // multiply by x^n
  Poly monic() const;
  Poly derivative() const;

  uint32_t eval(uint32_t alpha) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const Field* field_;
  std::vector<uint32_t> c_;
};

// quotient and remainder; b must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_div_exact(const Poly& a, const Poly& b);

// monic gcd (gcd(0,0) = 0)
Poly poly_gcd(Poly a, Poly b);

// g = u*a + v*b with g the monic gcd
struct PolyXgcd {
  Poly g, u, v;
};
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

// a^n mod m
Poly poly_powmod(Poly a, uint64_t n, const Poly& m);

// largest squarefree divisor (handles inseparable parts: x^p factors)
Poly squarefree_part(const Poly& f);

// all alpha in the coefficient field with f(alpha) = 0, ascending element
// order; exhaustive evaluation.  f must be nonzero.
std::vector<uint32_t> roots_in_field(const Poly& f);

}  // namespace extlab
