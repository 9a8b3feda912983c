#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "extlab/linalg.hpp"
#include "extlab/poly.hpp"

namespace extlab {

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;
using Vec = std::vector<uint32_t>;  // element coordinates on the basis

// Data attached to a local algebra: the maximal ideal, the residue field
// degree f = [A/m : k], and the nilpotency index (least s with m^s = 0).
struct LocalData {
  Mat maximal_ideal;                  // rows: reduced basis of m
  int residue_degree = 0;             // f
  int nilpotency_index = 0;           // s
  std::vector<int> complement_coords; // coordinates whose basis vectors
                                      // represent a k-basis of A/m
};

// Provenance for trivial extensions A = R(M): first base_dim coordinates are
// R, the rest are M.  socle_witness is (0, m_0) where m_0 is the first basis
// vector of M.
struct TrivialExtInfo {
  AlgebraPtr base;
  int base_dim = 0;
  int module_dim = 0;
  Vec socle_witness;
};

// A commutative unital algebra of finite dimension over F_{p^e}, given by
// structure constants on a distinguished basis.  Commutativity, associativity
// and the unit law are checked on every basis pair/triple at construction.
class FiniteAlgebra : public std::enable_shared_from_this<FiniteAlgebra> {
 public:
  // mult[i] is the multiplication operator of the i-th basis element:
  // coords(b_i * v) = mult[i] * coords(v).
  static AlgebraPtr create(const Field* field, std::vector<std::string> labels,
                           std::vector<Mat> mult, Vec unit,
                           std::map<std::string, Vec> generators = {},
                           std::optional<TrivialExtInfo> triv = std::nullopt);

  const Field* field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const Mat& left_mult(int i) const { return mult_[i]; }
  const std::map<std::string, Vec>& generators() const { return generators_; }
  const std::optional<TrivialExtInfo>& trivial_ext_info() const { return triv_; }

  Vec mul(const Vec& u, const Vec& v) const;
  Vec apply_basis_mult(int i, const Vec& v) const;  // b_i * v
  Mat op_matrix(const Vec& v) const;                // multiplication by v
  Vec elem_pow(const Vec& v, uint64_t n) const;
  bool is_unit_elem(const Vec& v) const;
  bool is_zero_elem(const Vec& v) const;
  Vec scalar(uint32_t c) const;  // c * 1

  // minimal polynomial of the element v over the base field
  Poly min_poly(const Vec& v) const;

  // rows form a reduced basis of the nilradical (computed once, cached)
  const Mat& nilradical_basis() const;

  bool is_local() const;
  // local data; throws NotLocal on non-local algebras
  const LocalData& local_data() const;

  // human-readable element rendering on the basis labels
  std::string render(const Vec& v) const;

 private:
  FiniteAlgebra() = default;
  void validate() const;
  void compute_nilradical() const;
  void compute_local() const;

  const Field* field_ = nullptr;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Mat> mult_;
  Vec unit_;
  std::map<std::string, Vec> generators_;
  std::optional<TrivialExtInfo> triv_;

  mutable std::mutex cache_mu_;
  mutable std::optional<Mat> nilradical_;
  mutable std::optional<bool> local_flag_;
  mutable std::optional<LocalData> local_data_;
};

// A subspace of an algebra that is closed under multiplication by every basis
// element (an ideal), e.g. the socle or the nilradical.
struct IdealSubspace {
  AlgebraPtr algebra;
  Mat basis;  // rows

  int dim() const { return basis.rows(); }
};

IdealSubspace make_ideal(AlgebraPtr a, Mat basis_rows);  // validates closure

// ---- constructors ----

// F_{p^e}[vars] / (monomial ideal).  Every variable needs a pure power among
// the generators; otherwise InfiniteDimensional.
AlgebraPtr monomial_quotient(const Field* field, const std::vector<std::string>& vars,
                             const std::vector<std::vector<int>>& gens);

// quotient by the ideal generated by the given elements (UnitIdeal if 1 lands
// in the ideal)
AlgebraPtr quotient_by_elements(const AlgebraPtr& a, const std::vector<Vec>& elements);

// quotient by a subspace that is already an ideal (rows of `ideal`)
AlgebraPtr quotient_by_ideal_subspace(const AlgebraPtr& a, const Mat& ideal);

// A[x]/(f) for monic f of degree >= 1 over the base field; the adjoined
// generator is registered under `gen_name`
AlgebraPtr extend_by_polynomial(const AlgebraPtr& a, const Poly& f,
                                const std::string& gen_name = "u");

AlgebraPtr product(const AlgebraPtr& a1, const AlgebraPtr& a2);

struct FieldEmbedding {
  const Field* from = nullptr;
  const Field* to = nullptr;
  std::vector<uint32_t> map;  // image of every element of `from`
  uint32_t operator()(uint32_t v) const { return map[v]; }
};

FieldEmbedding embed_field(const Field* from, const Field* to);

struct BaseChanged {
  AlgebraPtr algebra;
  FieldEmbedding embedding;
};

// reinterpret the structure constants over F_{p^{e'}} (e | e')
BaseChanged base_change(const AlgebraPtr& a, uint32_t e_prime);

struct LocalFactor {
  AlgebraPtr algebra;       // the local factor
  Vec idempotent;           // in the coordinates of the input algebra
  Mat basis;                // rows: factor basis vectors in input coordinates
};

// orthogonal idempotent decomposition into local factors
std::vector<LocalFactor> local_decompose(const AlgebraPtr& a);

IdealSubspace nilradical(const AlgebraPtr& a);
IdealSubspace socle(const AlgebraPtr& a);  // NotLocal on non-local input
bool is_gorenstein(const AlgebraPtr& a);   // socle dimension == residue degree

}  // namespace extlab
