#pragma once

#include <string>
#include <vector>

#include "extlab/poly.hpp"

namespace extlab {

// Dense matrix with entries in k[x].
class PolyMat {
 public:
  PolyMat() : field_(nullptr), rows_(0), cols_(0) {}
  PolyMat(const Field* f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, Poly(f)) {}

  static PolyMat identity(const Field* f, int n);

  const Field* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b) { return a.e_ == b.e_; }

  PolyMat transposed() const;
  std::string to_string() const;

 private:
  const Field* field_;
  int rows_, cols_;
  std::vector<Poly> e_;
};

// Isomorphism class of a finitely generated k[x]-module: divisibility-ordered
// monic torsion factors (each of degree >= 1) plus the free rank.
struct InvariantFactorData {
  std::vector<Poly> torsion;  // f_1 | f_2 | ...
  int free_rank = 0;

  bool operator==(const InvariantFactorData& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }

  // dimension over k of the fiber at alpha: free_rank + #{f : f(alpha) = 0}
  int fiber_dim(uint32_t alpha) const;
  // dimension over k of Tor_1(-, k[x]/(x - alpha)): #{f : f(alpha) = 0}
  int torsion_fiber_dim(uint32_t alpha) const;

  std::string to_string() const;
};

struct SmithResult {
  PolyMat u;  // rows transform, invertible over k[x]
  PolyMat d;  // diagonal, monic entries, d_1 | d_2 | ...
  PolyMat v;  // column transform, invertible over k[x]
  int rank = 0;
  InvariantFactorData invariants;  // of coker(a : column space convention)
};

// Smith normal form over k[x]: d = u * a * v.  The invariant factor data
// describes coker(a) viewed as k[x]^rows / (column span of a): torsion from
// the non-unit diagonal entries, free rank = rows - rank.
SmithResult smith_normal_form(const PolyMat& a);

// Generating set (in fact a basis) of {v : a v = 0} as the columns of the
// returned matrix; computed by column Hermite-style reduction.
PolyMat kernel_over_poly(const PolyMat& a);

// Laplace-expansion determinant (square matrices; test oracles and unimodular
// checks).
Poly poly_det(const PolyMat& a);

// invariant factors of coker(a) computed from gcds of k-minors (brute force;
// exposed for verification against smith_normal_form)
InvariantFactorData invariants_from_minors(const PolyMat& a);

}  // namespace extlab
