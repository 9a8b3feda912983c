#include "extlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace extlab {

Poly Poly::x_power(const Field* f, int n) {
  std::vector<uint32_t> c(n + 1, 0);
  c[n] = 1;
  return Poly(f, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field* F = a.field_ ? a.field_ : b.field_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F->add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field* F = a.field_ ? a.field_ : b.field_;
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F->sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field* F = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Poly::zero(F);
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = F->add(c[i + j], F->mul(a.c_[i], b.c_[j]));
  }
  return Poly(F, std::move(c));
}

Poly Poly::scaled(uint32_t s) const {
  std::vector<uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = field_->mul(c_[i], s);
  return Poly(field_, std::move(c));
}

Poly Poly::shifted(int n) const {
  if (is_zero()) return *this;
  std::vector<uint32_t> c(c_.size() + n, 0);
  std::copy(c_.begin(), c_.end(), c.begin() + n);
  return Poly(field_, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero() || c_.back() == 1) return *this;
  return scaled(field_->inv(c_.back()));
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly::zero(field_);
  std::vector<uint32_t> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = field_->mul(c_[i], field_->of_int(static_cast<int64_t>(i)));
  return Poly(field_, std::move(c));
}

uint32_t Poly::eval(uint32_t alpha) const {
  uint32_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, alpha), c_[i]);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    uint32_t v = coeff(i);
    if (v == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = field_->to_string(v);
    bool needs_parens = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (v != 1) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorCode::ZeroPolynomial, "polynomial division by zero");
  const Field* F = b.field();
  if (a.degree() < b.degree()) return {Poly::zero(F), a};
  std::vector<uint32_t> rem(a.coeffs());
  std::vector<uint32_t> quo(a.degree() - b.degree() + 1, 0);
  uint32_t inv_lead = F->inv(b.lead());
  for (int i = a.degree(); i >= b.degree(); --i) {
    uint32_t cur = rem[i];
    if (cur == 0) continue;
    uint32_t qc = F->mul(cur, inv_lead);
    quo[i - b.degree()] = qc;
    for (int j = 0; j <= b.degree(); ++j) {
      int k = i - b.degree() + j;
      rem[k] = F->sub(rem[k], F->mul(qc, b.coeff(j)));
    }
  }
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  require(r.is_zero(), ErrorCode::Internal, "inexact polynomial division");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
  const Field* F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(F, 1), u1 = Poly::zero(F);
  Poly v0 = Poly::zero(F), v1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    Poly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero() && r0.lead() != 1) {
    uint32_t s = F->inv(r0.lead());
    r0 = r0.scaled(s);
    u0 = u0.scaled(s);
    v0 = v0.scaled(s);
  }
  return {r0, u0, v0};
}

Poly poly_powmod(Poly a, uint64_t n, const Poly& m) {
  const Field* F = m.field();
  Poly r = Poly::constant(F, 1);
  a = poly_mod(a, m);
  while (n) {
    if (n & 1) r = poly_mod(r * a, m);
    a = poly_mod(a * a, m);
    n >>= 1;
  }
  return r;
}

Poly squarefree_part(const Poly& f) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "squarefree part of zero");
  const Field* F = f.field();
  Poly g = f.monic();
  if (g.degree() <= 1) return g;
  Poly d = g.derivative();
  if (d.is_zero()) {
    // g = h(x^p); over F_{p^e} take the p-th "root" coefficientwise
    uint32_t p = F->p();
    std::vector<uint32_t> c(g.degree() / p + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      uint32_t v = g.coeff(static_cast<int>(i * p));
      // v^(p^(e-1)) is the p-th root in F_{p^e}
      uint32_t r = v;
      for (uint32_t k = 0; k + 1 < F->e(); ++k) r = F->frobenius(r);
      c[i] = r;
    }
    return squarefree_part(Poly(F, std::move(c)));
  }
  Poly g1 = poly_div_exact(g, poly_gcd(g, d));
  // g1 carries every separable irreducible factor once; inseparable factors
  // survive inside g / g1^(multiplicity), recurse on the remaining part
  Poly rest = g;
  Poly gg = poly_gcd(rest, g1);
  while (!gg.is_unit()) {
    rest = poly_div_exact(rest, gg);
    gg = poly_gcd(rest, g1);
  }
  if (rest.degree() >= 1) {
    Poly tail = squarefree_part(rest);
    Poly overlap = poly_gcd(g1, tail);
    return (g1 * poly_div_exact(tail, overlap)).monic();
  }
  return g1.monic();
}

std::vector<uint32_t> roots_in_field(const Poly& f) {
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const Field* F = f.field();
  std::vector<uint32_t> roots;
  for (uint32_t a = 0; a < F->q(); ++a)
    if (f.eval(a) == 0) roots.push_back(a);
  return roots;
}

}  // namespace extlab
