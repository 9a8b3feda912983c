#pragma once

#include <memory>
#include <mutex>

#include "extlab/algebra.hpp"

namespace extlab {

class FiniteModule;
class FreeResolution;
using ModulePtr = std::shared_ptr<const FiniteModule>;

// Matrix with entries in a FiniteAlgebra (row-major; entry = coordinate
// vector).  Rows are relations, columns index module generators.
struct AlgMat {
  AlgebraPtr algebra;
  int rows = 0, cols = 0;
  std::vector<Vec> entries;

  AlgMat() = default;
  AlgMat(AlgebraPtr a, int r, int c)
      : algebra(std::move(a)), rows(r), cols(c),
        entries(static_cast<size_t>(r) * c, Vec(algebra->dim(), 0)) {}

  const Vec& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
  Vec& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }

  // (a*b) with rows-as-images composition: rows of the product present the
  // composite map F -> H when `this` presents F -> G and `o` presents G -> H
  AlgMat compose(const AlgMat& o) const;
  bool is_zero() const;
};

// A finitely generated module over a finite-dimensional algebra, realized as
// a k-vector space with one commuting action operator per algebra basis
// element.
class FiniteModule : public std::enable_shared_from_this<FiniteModule> {
 public:
  static ModulePtr create(AlgebraPtr algebra, std::vector<Mat> actions);

  const AlgebraPtr& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const Mat& action(int i) const { return actions_[i]; }
  Mat action_of(const Vec& elem) const;

  // resolution cache (write-once per bound; see resolution.hpp)
  mutable std::mutex res_mu;
  mutable std::shared_ptr<const FreeResolution> res_cache;

 private:
  FiniteModule() = default;
  void validate() const;

  AlgebraPtr algebra_;
  int dim_ = 0;
  std::vector<Mat> actions_;
};

// coker of the presentation (rows = relations on `cols` generators); the
// algebra must be local.  The zero module is allowed.
ModulePtr module_from_presentation(const AlgMat& presentation);

// A/m with its induced action (dimension = residue degree)
ModulePtr residue_module(const AlgebraPtr& a);

// A as a module over itself
ModulePtr regular_module(const AlgebraPtr& a);

ModulePtr zero_module(const AlgebraPtr& a);

// k-linear dual with transposed actions
ModulePtr matlis_dual(const ModulePtr& m);

// E(k) = dual of the regular module (Artinian local case)
ModulePtr injective_envelope_of_residue(const AlgebraPtr& a);

bool is_free(const ModulePtr& m);
bool is_injective(const ModulePtr& m);

// number of minimal generators over the algebra (dim_k(M/mM) / f)
int minimal_generator_count(const ModulePtr& m);

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

// Regard a module over the base ring R as a module over the trivial extension
// A = R(M0) through the projection A -> R.
ModulePtr module_via_projection(const AlgebraPtr& trivial_ext, const ModulePtr& over_base);

// Transport a module along a base change of its algebra.
ModulePtr base_change_module(const BaseChanged& bc, const ModulePtr& m);

// The component e*M of a module over a decomposable algebra, as a module over
// the local factor.
ModulePtr restrict_to_factor(const LocalFactor& factor, const ModulePtr& m);

// The trivial extension A(M): underlying space A + M, (r,m)(r',m') =
// (rr', rm' + r'm).  Requires A local; always local itself.
AlgebraPtr trivial_extension(const AlgebraPtr& a, const ModulePtr& m);

}  // namespace extlab
