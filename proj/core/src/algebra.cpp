#include "extlab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace extlab {

namespace {

// out = M * v
Vec matvec(const Mat& m, const Vec& v) {
  const Field* F = m.field();
  Vec out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    uint32_t acc = 0;
    for (int j = 0; j < m.cols(); ++j) {
      uint32_t a = m.get(i, j);
      if (a && v[j]) acc = F->add(acc, F->mul(a, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Vec vec_add(const Field* F, Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = F->add(a[i], b[i]);
  return a;
}

Vec vec_scale(const Field* F, Vec a, uint32_t c) {
  for (auto& x : a) x = F->mul(x, c);
  return a;
}

bool vec_is_zero(const Vec& v) {
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

// v expressed through rows of `basis`:  v = sum coords_i * basis_row_i
Vec vec_through_rows(const Field* F, const Vec& coords, const Mat& basis) {
  Vec out(basis.cols(), 0);
  for (int i = 0; i < basis.rows(); ++i) {
    if (!coords[i]) continue;
    for (int j = 0; j < basis.cols(); ++j) {
      uint32_t b = basis.get(i, j);
      if (b) out[j] = F->add(out[j], F->mul(coords[i], b));
    }
  }
  return out;
}

Mat col_from_vec(const Field* F, const Vec& v) {
  Mat m(F, static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) m.set(static_cast<int>(i), 0, v[i]);
  return m;
}

}  // namespace

AlgebraPtr FiniteAlgebra::create(const Field* field, std::vector<std::string> labels,
                                 std::vector<Mat> mult, Vec unit,
                                 std::map<std::string, Vec> generators,
                                 std::optional<TrivialExtInfo> triv) {
  auto a = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
  a->field_ = field;
  a->dim_ = static_cast<int>(mult.size());
  a->labels_ = std::move(labels);
  a->mult_ = std::move(mult);
  a->unit_ = std::move(unit);
  a->generators_ = std::move(generators);
  a->triv_ = std::move(triv);
  a->validate();
  return a;
}

void FiniteAlgebra::validate() const {
  int d = dim_;
  require(d >= 1, ErrorCode::ValidationError, "algebra dimension must be >= 1");
  require(static_cast<int>(labels_.size()) == d, ErrorCode::ValidationError,
          "label count != dimension");
  require(static_cast<int>(unit_.size()) == d, ErrorCode::ValidationError,
          "unit vector length != dimension");
  for (int i = 0; i < d; ++i)
    require(mult_[i].rows() == d && mult_[i].cols() == d, ErrorCode::ValidationError,
            "structure constant block has wrong shape");

  // commutativity: column j of L_i equals column i of L_j
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (mult_[i].get(k, j) != mult_[j].get(k, i))
          fail(ErrorCode::NotCommutative,
               "b_" + std::to_string(i) + " * b_" + std::to_string(j) +
                   " != b_" + std::to_string(j) + " * b_" + std::to_string(i) +
                   " (labels " + labels_[i] + ", " + labels_[j] + ")");

  // unit law
  {
    Mat u = op_matrix(unit_);
    if (!(u == Mat::identity(field_, d)))
      for (int j = 0; j < d; ++j) {
        Vec ej(d, 0);
        ej[j] = 1;
        if (mul(unit_, ej) != ej)
          fail(ErrorCode::BadUnit, "unit * b_" + std::to_string(j) + " != b_" +
                                       std::to_string(j) + " (label " + labels_[j] + ")");
      }
  }

  // associativity: L_i L_j must equal the multiplication operator of b_i b_j
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Vec ej(d, 0);
      ej[j] = 1;
      Vec bibj = apply_basis_mult(i, ej);
      Mat lhs = mat_mul(mult_[i], mult_[j]);
      Mat rhs = op_matrix(bibj);
      if (!(lhs == rhs))
        fail(ErrorCode::NotAssociative,
             "(b_" + std::to_string(i) + " b_" + std::to_string(j) +
                 ") b_k != b_" + std::to_string(i) + " (b_" + std::to_string(j) +
                 " b_k) for some k (labels " + labels_[i] + ", " + labels_[j] + ")");
    }
  }
}

Vec FiniteAlgebra::mul(const Vec& u, const Vec& v) const {
  Vec out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!u[i]) continue;
    Vec w = matvec(mult_[i], v);
    out = vec_add(field_, std::move(out), vec_scale(field_, std::move(w), u[i]));
  }
  return out;
}

Vec FiniteAlgebra::apply_basis_mult(int i, const Vec& v) const {
  return matvec(mult_[i], v);
}

Mat FiniteAlgebra::op_matrix(const Vec& v) const {
  Mat m(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (!v[i]) continue;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        uint32_t x = mult_[i].get(r, c);
        if (x) m.set(r, c, field_->add(m.get(r, c), field_->mul(v[i], x)));
      }
  }
  return m;
}

Vec FiniteAlgebra::elem_pow(const Vec& v, uint64_t n) const {
  Vec result = unit_;
  Vec base = v;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

bool FiniteAlgebra::is_unit_elem(const Vec& v) const {
  return mat_rank(op_matrix(v)) == dim_;
}

bool FiniteAlgebra::is_zero_elem(const Vec& v) const { return vec_is_zero(v); }

Vec FiniteAlgebra::scalar(uint32_t c) const {
  Vec v = unit_;
  return vec_scale(field_, std::move(v), c);
}

Poly FiniteAlgebra::min_poly(const Vec& v) const {
  RowSpace span(field_, dim_);
  std::vector<Vec> powers;
  Vec w = unit_;
  while (span.add(w)) {
    powers.push_back(w);
    w = mul(w, v);
  }
  // w = v^k is dependent on 1, v, ..., v^{k-1}
  int k = static_cast<int>(powers.size());
  Mat basis(field_, dim_, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim_; ++i)
      if (powers[j][i]) basis.set(i, j, powers[j][i]);
  auto x = mat_solve(basis, col_from_vec(field_, w));
  require(x.has_value(), ErrorCode::Internal, "min_poly dependency solve failed");
  std::vector<uint32_t> coeffs(k + 1, 0);
  for (int j = 0; j < k; ++j) coeffs[j] = field_->neg(x->get(j, 0));
  coeffs[k] = 1;
  return Poly(field_, std::move(coeffs));
}

const Mat& FiniteAlgebra::nilradical_basis() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!nilradical_) compute_nilradical();
  return *nilradical_;
}

void FiniteAlgebra::compute_nilradical() const {
  // kernel of a sufficiently high q-power map; x -> x^q is linear over F_q
  Mat Q(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    Vec ei(dim_, 0);
    ei[i] = 1;
    Vec im = elem_pow(ei, field_->q());
    for (int r = 0; r < dim_; ++r)
      if (im[r]) Q.set(r, i, im[r]);
  }
  Mat Qm = Q;
  uint64_t reach = field_->q();
  while (reach < static_cast<uint64_t>(dim_)) {
    Qm = mat_mul(Q, Qm);
    reach *= field_->q();
  }
  Mat n = kernel_basis_rows(std::move(Qm));
  echelon(n, true);
  nilradical_ = std::move(n);
}

bool FiniteAlgebra::is_local() const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (local_flag_) return *local_flag_;
  }
  compute_local();
  std::lock_guard<std::mutex> lock(cache_mu_);
  return *local_flag_;
}

const LocalData& FiniteAlgebra::local_data() const {
  require(is_local(), ErrorCode::NotLocal, "operation requires a local algebra");
  std::lock_guard<std::mutex> lock(cache_mu_);
  return *local_data_;
}

void FiniteAlgebra::compute_local() const {
  const Mat& nil = nilradical_basis();
  AlgebraPtr reduced = quotient_by_ideal_subspace(
      std::const_pointer_cast<FiniteAlgebra>(shared_from_this()), nil);
  // number of local factors = dim of the fixed space of x -> x^q on A/N
  int bd = reduced->dim();
  Mat QB(field_, bd, bd);
  for (int i = 0; i < bd; ++i) {
    Vec ei(bd, 0);
    ei[i] = 1;
    Vec im = reduced->elem_pow(ei, field_->q());
    for (int r = 0; r < bd; ++r)
      if (im[r]) QB.set(r, i, im[r]);
  }
  Mat fixed = QB;  // QB - I
  for (int i = 0; i < bd; ++i) fixed.set(i, i, field_->sub(fixed.get(i, i), 1));
  int factors = bd - mat_rank(std::move(fixed));
  bool local = factors == 1;

  std::lock_guard<std::mutex> lock(cache_mu_);
  local_flag_ = local;
  if (!local) return;

  LocalData data;
  data.maximal_ideal = nil;
  data.residue_degree = dim_ - nil.rows();
  std::vector<char> is_pivot(dim_, 0);
  for (int r = 0; r < nil.rows(); ++r)
    for (int c = 0; c < dim_; ++c)
      if (nil.get(r, c)) {
        is_pivot[c] = 1;
        break;
      }
  for (int c = 0; c < dim_; ++c)
    if (!is_pivot[c]) data.complement_coords.push_back(c);

  // nilpotency index: least s with m^s = 0
  int s = 1;
  RowSpace cur(field_, dim_);
  for (int r = 0; r < nil.rows(); ++r) cur.add(nil.row_values(r));
  while (cur.dim() > 0) {
    RowSpace next(field_, dim_);
    for (int r = 0; r < nil.rows(); ++r) {
      Vec u = nil.row_values(r);
      for (const auto& v : cur.rows()) next.add(mul(u, v));
    }
    cur = std::move(next);
    ++s;
  }
  data.nilpotency_index = s;
  local_data_ = std::move(data);
}

std::string FiniteAlgebra::render(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim_; ++i) {
    if (!v[i]) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = field_->to_string(v[i]);
    bool parens = cs.find('+') != std::string::npos;
    if (labels_[i] == "1") {
      os << (parens ? "(" + cs + ")" : cs);
    } else {
      if (v[i] != 1) os << (parens ? "(" + cs + ")" : cs) << "*";
      os << labels_[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

IdealSubspace make_ideal(AlgebraPtr a, Mat basis_rows) {
  echelon(basis_rows, true);
  // drop zero rows
  int nz = 0;
  for (int r = 0; r < basis_rows.rows(); ++r)
    if (!vec_is_zero(basis_rows.row_values(r))) ++nz;
  Mat clean(a->field(), nz, a->dim());
  int out = 0;
  for (int r = 0; r < basis_rows.rows(); ++r) {
    Vec v = basis_rows.row_values(r);
    if (vec_is_zero(v)) continue;
    clean.set_row(out++, v);
  }
  RowSpace span(a->field(), a->dim());
  for (int r = 0; r < clean.rows(); ++r) span.add(clean.row_values(r));
  for (int r = 0; r < clean.rows(); ++r)
    for (int i = 0; i < a->dim(); ++i)
      require(span.contains(a->apply_basis_mult(i, clean.row_values(r))),
              ErrorCode::ValidationError, "subspace is not an ideal");
  return IdealSubspace{std::move(a), std::move(clean)};
}

// ---- constructors ----

namespace {

std::string monomial_label(const std::vector<std::string>& vars,
                           const std::vector<int>& exp) {
  std::string s;
  for (size_t v = 0; v < vars.size(); ++v) {
    if (exp[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[v];
    if (exp[v] > 1) s += "^" + std::to_string(exp[v]);
  }
  return s.empty() ? "1" : s;
}

bool divisible(const std::vector<int>& m, const std::vector<int>& g) {
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] < g[i]) return false;
  return true;
}

}  // namespace

AlgebraPtr monomial_quotient(const Field* field, const std::vector<std::string>& vars,
                             const std::vector<std::vector<int>>& gens) {
  size_t nv = vars.size();
  for (const auto& g : gens)
    require(g.size() == nv, ErrorCode::ValidationError,
            "monomial generator arity mismatch");
  // pure-power bound per variable
  std::vector<int> bound(nv, -1);
  for (const auto& g : gens) {
    int nzv = -1;
    bool pure = true;
    for (size_t v = 0; v < nv; ++v) {
      if (g[v] > 0) {
        if (nzv >= 0) {
          pure = false;
          break;
        }
        nzv = static_cast<int>(v);
      }
    }
    if (pure && nzv >= 0)
      bound[nzv] = bound[nzv] < 0 ? g[nzv] : std::min(bound[nzv], g[nzv]);
  }
  for (size_t v = 0; v < nv; ++v)
    require(bound[v] > 0, ErrorCode::InfiniteDimensional,
            "variable " + vars[v] + " has no pure power in the ideal");

  // standard monomials: exponents below the pure-power bounds, not divisible
  // by any generator
  std::vector<std::vector<int>> basis;
  std::vector<int> exp(nv, 0);
  for (;;) {
    bool in_ideal = false;
    for (const auto& g : gens)
      if (divisible(exp, g)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) basis.push_back(exp);
    // odometer
    size_t v = 0;
    while (v < nv) {
      if (++exp[v] < bound[v]) break;
      exp[v] = 0;
      ++v;
    }
    if (v == nv) break;
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  });

  int d = static_cast<int>(basis.size());
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels(d);
  for (int i = 0; i < d; ++i) {
    index[basis[i]] = i;
    labels[i] = monomial_label(vars, basis[i]);
  }

  std::vector<Mat> mult(d, Mat(field, d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<int> sum(nv);
      for (size_t v = 0; v < nv; ++v) sum[v] = basis[i][v] + basis[j][v];
      bool in_ideal = false;
      for (const auto& g : gens)
        if (divisible(sum, g)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) {
        auto it = index.find(sum);
        require(it != index.end(), ErrorCode::Internal, "monomial basis incomplete");
        mult[i].set(it->second, j, 1);
      }
    }

  Vec unit(d, 0);
  unit[index.at(std::vector<int>(nv, 0))] = 1;

  std::map<std::string, Vec> generators;
  for (size_t v = 0; v < nv; ++v) {
    std::vector<int> e1(nv, 0);
    e1[v] = 1;
    Vec g(d, 0);
    auto it = index.find(e1);
    bool in_ideal = false;
    for (const auto& gg : gens)
      if (divisible(e1, gg)) in_ideal = true;
    if (!in_ideal && it != index.end()) g[it->second] = 1;
    generators[vars[v]] = g;
  }

  return FiniteAlgebra::create(field, std::move(labels), std::move(mult),
                               std::move(unit), std::move(generators));
}

AlgebraPtr quotient_by_ideal_subspace(const AlgebraPtr& a, const Mat& ideal) {
  const Field* F = a->field();
  int d = a->dim();
  RowSpace span(F, d);
  for (int r = 0; r < ideal.rows(); ++r) span.add(ideal.row_values(r));
  require(!span.contains(a->unit()), ErrorCode::UnitIdeal,
          "quotient by the unit ideal (zero ring)");

  std::vector<char> is_pivot(d, 0);
  for (const auto& row : span.rows())
    for (int c = 0; c < d; ++c)
      if (row[c]) {
        is_pivot[c] = 1;
        break;
      }
  std::vector<int> reps;
  for (int c = 0; c < d; ++c)
    if (!is_pivot[c]) reps.push_back(c);
  int k = static_cast<int>(reps.size());

  auto project = [&](const Vec& v) {
    Vec red = span.reduce(v);
    Vec out(k, 0);
    for (int j = 0; j < k; ++j) out[j] = red[reps[j]];
    return out;
  };

  std::vector<Mat> mult(k, Mat(F, k, k));
  for (int t = 0; t < k; ++t) {
    for (int j = 0; j < k; ++j) {
      Vec ej(d, 0);
      ej[reps[j]] = 1;
      Vec prod = a->apply_basis_mult(reps[t], ej);
      Vec coords = project(prod);
      for (int r = 0; r < k; ++r)
        if (coords[r]) mult[t].set(r, j, coords[r]);
    }
  }
  std::vector<std::string> labels(k);
  for (int j = 0; j < k; ++j) labels[j] = a->labels()[reps[j]];
  std::map<std::string, Vec> generators;
  for (const auto& [name, g] : a->generators()) generators[name] = project(g);

  return FiniteAlgebra::create(F, std::move(labels), std::move(mult),
                               project(a->unit()), std::move(generators));
}

AlgebraPtr quotient_by_elements(const AlgebraPtr& a, const std::vector<Vec>& elements) {
  const Field* F = a->field();
  int d = a->dim();
  RowSpace ideal(F, d);
  std::queue<Vec> work;
  for (const auto& e : elements) {
    require(static_cast<int>(e.size()) == d, ErrorCode::DimensionMismatch,
            "element coordinate length");
    if (ideal.add(e)) work.push(e);
  }
  while (!work.empty()) {
    Vec v = std::move(work.front());
    work.pop();
    for (int i = 0; i < d; ++i) {
      Vec w = a->apply_basis_mult(i, v);
      if (ideal.add(w)) work.push(w);
    }
  }
  return quotient_by_ideal_subspace(a, ideal.to_mat());
}

AlgebraPtr extend_by_polynomial(const AlgebraPtr& a, const Poly& f,
                                const std::string& gen_name) {
  const Field* F = a->field();
  require(f.field() == F, ErrorCode::FieldMismatch, "extension polynomial field");
  require(f.is_monic() && f.degree() >= 1, ErrorCode::NonMonic,
          "extension polynomial must be monic of degree >= 1");
  int d = a->dim();
  int m = f.degree();
  int D = d * m;

  // x^r mod f for r <= 2m-2
  std::vector<std::vector<uint32_t>> xpow(2 * m - 1, std::vector<uint32_t>(m, 0));
  for (int r = 0; r < m; ++r) xpow[r][r] = 1;
  for (int r = m; r <= 2 * m - 2; ++r) {
    // x * xpow[r-1], reduced by f
    std::vector<uint32_t> cur(m + 1, 0);
    for (int i = 0; i < m; ++i) cur[i + 1] = xpow[r - 1][i];
    uint32_t top = cur[m];
    if (top) {
      for (int i = 0; i < m; ++i)
        cur[i] = F->sub(cur[i], F->mul(top, f.coeff(i)));
    }
    for (int i = 0; i < m; ++i) xpow[r][i] = cur[i];
  }

  auto idx = [&](int i, int j) { return j * d + i; };
  std::vector<Mat> mult(D, Mat(F, D, D));
  for (int i = 0; i < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    for (int kk = 0; kk < d; ++kk) {
      Vec ek(d, 0);
      ek[kk] = 1;
      Vec prod = a->apply_basis_mult(i, ek);  // b_i b_k in A
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) {
          const auto& red = xpow[j + l];
          for (int r = 0; r < m; ++r) {
            if (!red[r]) continue;
            for (int t = 0; t < d; ++t) {
              if (!prod[t]) continue;
              Mat& M = mult[idx(i, j)];
              uint32_t cur = M.get(idx(t, r), idx(kk, l));
              M.set(idx(t, r), idx(kk, l), F->add(cur, F->mul(red[r], prod[t])));
            }
          }
        }
    }
  }

  std::string name = gen_name;
  while (a->generators().count(name)) name += "_";
  std::vector<std::string> labels(D);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d; ++i) {
      std::string base = a->labels()[i];
      if (j == 0) {
        labels[idx(i, j)] = base;
      } else {
        std::string xs = name + (j > 1 ? "^" + std::to_string(j) : "");
        labels[idx(i, j)] = base == "1" ? xs : base + "*" + xs;
      }
    }

  Vec unit(D, 0);
  for (int i = 0; i < d; ++i) unit[idx(i, 0)] = a->unit()[i];

  std::map<std::string, Vec> generators;
  for (const auto& [n, g] : a->generators()) {
    Vec lifted(D, 0);
    for (int i = 0; i < d; ++i) lifted[idx(i, 0)] = g[i];
    generators[n] = lifted;
  }
  Vec xgen(D, 0);
  for (int i = 0; i < d; ++i) xgen[idx(i, 1)] = a->unit()[i];
  generators[name] = xgen;

  return FiniteAlgebra::create(F, std::move(labels), std::move(mult), std::move(unit),
                               std::move(generators));
}

AlgebraPtr product(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  require(a1->field() == a2->field(), ErrorCode::FieldMismatch,
          "product factors over different fields");
  const Field* F = a1->field();
  int d1 = a1->dim(), d2 = a2->dim();
  int D = d1 + d2;
  std::vector<Mat> mult(D, Mat(F, D, D));
  for (int i = 0; i < d1; ++i)
    for (int r = 0; r < d1; ++r)
      for (int c = 0; c < d1; ++c) {
        uint32_t v = a1->left_mult(i).get(r, c);
        if (v) mult[i].set(r, c, v);
      }
  for (int i = 0; i < d2; ++i)
    for (int r = 0; r < d2; ++r)
      for (int c = 0; c < d2; ++c) {
        uint32_t v = a2->left_mult(i).get(r, c);
        if (v) mult[d1 + i].set(d1 + r, d1 + c, v);
      }
  std::vector<std::string> labels(D);
  for (int i = 0; i < d1; ++i) labels[i] = "(" + a1->labels()[i] + ";0)";
  for (int i = 0; i < d2; ++i) labels[d1 + i] = "(0;" + a2->labels()[i] + ")";
  Vec unit(D, 0);
  for (int i = 0; i < d1; ++i) unit[i] = a1->unit()[i];
  for (int i = 0; i < d2; ++i) unit[d1 + i] = a2->unit()[i];

  std::map<std::string, Vec> generators;
  for (const auto& [n, g] : a1->generators()) {
    Vec v(D, 0);
    for (int i = 0; i < d1; ++i) v[i] = g[i];
    generators[n + "@1"] = v;
  }
  for (const auto& [n, g] : a2->generators()) {
    Vec v(D, 0);
    for (int i = 0; i < d2; ++i) v[d1 + i] = g[i];
    generators[n + "@2"] = v;
  }
  {
    Vec e1(D, 0), e2(D, 0);
    for (int i = 0; i < d1; ++i) e1[i] = a1->unit()[i];
    for (int i = 0; i < d2; ++i) e2[d1 + i] = a2->unit()[i];
    generators["e@1"] = e1;
    generators["e@2"] = e2;
  }

  return FiniteAlgebra::create(F, std::move(labels), std::move(mult), std::move(unit),
                               std::move(generators));
}

FieldEmbedding embed_field(const Field* from, const Field* to) {
  require(from->p() == to->p(), ErrorCode::FieldMismatch,
          "embedding requires equal characteristic");
  require(to->e() % from->e() == 0, ErrorCode::BadDegree,
          "extension degree must be a multiple of the source degree");
  FieldEmbedding emb;
  emb.from = from;
  emb.to = to;
  emb.map.resize(from->q());
  if (from == to) {
    for (uint32_t v = 0; v < from->q(); ++v) emb.map[v] = v;
    return emb;
  }
  // image of t: the smallest root of the source modulus in the target field
  std::vector<uint32_t> mod_coeffs;
  for (uint32_t c : from->modulus()) mod_coeffs.push_back(to->of_int(c));
  Poly lifted(to, std::move(mod_coeffs));
  auto roots = roots_in_field(lifted);
  require(!roots.empty(), ErrorCode::Internal, "modulus has no root in extension");
  uint32_t rho = roots[0];
  for (uint32_t v = 0; v < from->q(); ++v) {
    auto digits = from->digits(v);
    uint32_t image = 0;
    for (size_t i = digits.size(); i-- > 0;)
      image = to->add(to->mul(image, rho), to->of_int(digits[i]));
    emb.map[v] = image;
  }
  return emb;
}

BaseChanged base_change(const AlgebraPtr& a, uint32_t e_prime) {
  const Field* F = a->field();
  require(e_prime % F->e() == 0, ErrorCode::BadDegree,
          "base change degree must be a multiple of the current degree");
  const Field* G = Field::get(F->p(), e_prime);
  FieldEmbedding emb = embed_field(F, G);
  if (F == G) return {a, std::move(emb)};

  int d = a->dim();
  std::vector<Mat> mult;
  mult.reserve(d);
  for (int i = 0; i < d; ++i) {
    Mat m(G, d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        uint32_t v = a->left_mult(i).get(r, c);
        if (v) m.set(r, c, emb(v));
      }
    mult.push_back(std::move(m));
  }
  Vec unit(d, 0);
  for (int i = 0; i < d; ++i) unit[i] = emb(a->unit()[i]);
  std::map<std::string, Vec> generators;
  for (const auto& [n, g] : a->generators()) {
    Vec v(d, 0);
    for (int i = 0; i < d; ++i) v[i] = emb(g[i]);
    generators[n] = v;
  }
  auto alg = FiniteAlgebra::create(G, a->labels(), std::move(mult), std::move(unit),
                                   std::move(generators));
  return {std::move(alg), std::move(emb)};
}

namespace {

Vec elem_poly_eval(const FiniteAlgebra& a, const Poly& p, const Vec& v) {
  Vec result(a.dim(), 0);
  for (int i = p.degree(); i >= 0; --i) {
    result = a.mul(result, v);
    if (p.coeff(i))
      result = vec_add(a.field(), std::move(result),
                       vec_scale(a.field(), a.unit(), p.coeff(i)));
  }
  return result;
}

// try to produce a nontrivial idempotent from the element v
std::optional<Vec> try_split(const FiniteAlgebra& a, const Vec& v) {
  const Field* F = a.field();
  Poly mu = a.min_poly(v);
  Poly s = squarefree_part(mu);
  if (s.degree() < 2) return std::nullopt;
  Poly s1(F), s2(F);
  auto roots = roots_in_field(s);
  if (!roots.empty()) {
    s1 = Poly::x_minus(F, roots[0]);
    s2 = poly_div_exact(s, s1);
  } else {
    // extension-degree splitting: gcd with x^{q^dd} - x collects the factors
    // whose degree divides dd
    bool found = false;
    for (int dd = 1; dd < s.degree() && !found; ++dd) {
      Poly xq = Poly::x(F);
      for (int rep = 0; rep < dd; ++rep) xq = poly_powmod(xq, F->q(), s);
      Poly g = poly_gcd(s, xq - Poly::x(F));
      if (g.degree() > 0 && g.degree() < s.degree()) {
        s1 = g;
        s2 = poly_div_exact(s, g);
        found = true;
      }
    }
    if (!found) return std::nullopt;  // squarefree part is irreducible
  }
  // pull the full multiplicity of s1's factors out of mu
  Poly s1pow = Poly::constant(F, 1);
  for (int i = 0; i < mu.degree(); ++i) {
    s1pow = s1pow * s1;
    if (s1pow.degree() > mu.degree()) break;
  }
  Poly g1 = poly_gcd(mu, s1pow);
  Poly g2 = poly_div_exact(mu, g1);
  auto xg = poly_xgcd(g1, g2);
  require(xg.g.is_unit(), ErrorCode::Internal, "split factors not coprime");
  // normalize the Bezout identity so that u*g1 + v*g2 = 1 exactly
  uint32_t inv = F->inv(xg.g.coeff(0));
  Poly idem_poly = poly_mod((xg.u.scaled(inv)) * g1, mu);
  Vec e = elem_poly_eval(a, idem_poly, v);
  if (vec_is_zero(e)) return std::nullopt;
  bool is_one = e == a.unit();
  if (is_one) return std::nullopt;
  require(a.mul(e, e) == e, ErrorCode::Internal, "split element is not idempotent");
  return e;
}

Vec find_split_idempotent(const AlgebraPtr& a) {
  int d = a->dim();
  // basis elements first
  for (int i = 0; i < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    if (auto e = try_split(*a, ei)) return *e;
  }
  // fallback: fixed vectors of the q-power map on A/N provably split
  const Mat& nil = a->nilradical_basis();
  AlgebraPtr reduced = quotient_by_ideal_subspace(a, nil);
  int bd = reduced->dim();
  Mat QB(a->field(), bd, bd);
  for (int i = 0; i < bd; ++i) {
    Vec ei(bd, 0);
    ei[i] = 1;
    Vec im = reduced->elem_pow(ei, a->field()->q());
    for (int r = 0; r < bd; ++r)
      if (im[r]) QB.set(r, i, im[r]);
  }
  for (int i = 0; i < bd; ++i) QB.set(i, i, a->field()->sub(QB.get(i, i), 1));
  Mat fixed = kernel_basis_rows(std::move(QB));
  // lift along the complement coordinates of the nilradical
  std::vector<char> is_pivot(d, 0);
  for (int r = 0; r < nil.rows(); ++r)
    for (int c = 0; c < d; ++c)
      if (nil.get(r, c)) {
        is_pivot[c] = 1;
        break;
      }
  std::vector<int> reps;
  for (int c = 0; c < d; ++c)
    if (!is_pivot[c]) reps.push_back(c);
  for (int r = 0; r < fixed.rows(); ++r) {
    Vec lift(d, 0);
    for (int j = 0; j < bd; ++j) lift[reps[j]] = fixed.get(r, j);
    if (auto e = try_split(*a, lift)) return *e;
  }
  fail(ErrorCode::Internal, "non-local algebra without a splitting idempotent");
}

// the subalgebra e*A with unit e, together with its basis rows in A
std::pair<AlgebraPtr, Mat> corner_algebra(const AlgebraPtr& a, const Vec& e) {
  const Field* F = a->field();
  int d = a->dim();
  RowSpace span(F, d);
  for (int i = 0; i < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    span.add(a->mul(e, ei));
  }
  Mat basis = span.to_mat();  // k x d
  int k = basis.rows();
  Mat basis_t = mat_transpose(basis);
  std::vector<Mat> mult;
  mult.reserve(k);
  for (int t = 0; t < k; ++t) {
    Mat rhs(F, d, k);
    for (int j = 0; j < k; ++j) {
      Vec prod = a->mul(basis.row_values(t), basis.row_values(j));
      for (int r = 0; r < d; ++r)
        if (prod[r]) rhs.set(r, j, prod[r]);
    }
    auto x = mat_solve(basis_t, rhs);
    require(x.has_value(), ErrorCode::Internal, "corner algebra is not closed");
    mult.push_back(std::move(*x));
  }
  auto xu = mat_solve(basis_t, col_from_vec(F, e));
  require(xu.has_value(), ErrorCode::Internal, "corner unit not in span");
  Vec unit(k, 0);
  for (int i = 0; i < k; ++i) unit[i] = xu->get(i, 0);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = a->render(basis.row_values(i));
  auto alg = FiniteAlgebra::create(F, std::move(labels), std::move(mult),
                                   std::move(unit));
  return {std::move(alg), std::move(basis)};
}

void decompose_rec(const AlgebraPtr& a, const Mat& to_root, const Vec& idem_root,
                   std::vector<LocalFactor>& out) {
  if (a->is_local()) {
    out.push_back(LocalFactor{a, idem_root, to_root});
    return;
  }
  Vec e = find_split_idempotent(a);
  Vec e2(a->dim());
  for (int i = 0; i < a->dim(); ++i) e2[i] = a->field()->sub(a->unit()[i], e[i]);
  for (const Vec& idem : {e, e2}) {
    auto [sub, basis] = corner_algebra(a, idem);
    // transport into root coordinates
    const Field* F = a->field();
    Mat basis_root(F, basis.rows(), to_root.cols());
    for (int r = 0; r < basis.rows(); ++r)
      basis_root.set_row(r, vec_through_rows(F, basis.row_values(r), to_root));
    Vec idem_in_root = vec_through_rows(F, idem, to_root);
    decompose_rec(sub, basis_root, idem_in_root, out);
  }
}

}  // namespace

std::vector<LocalFactor> local_decompose(const AlgebraPtr& a) {
  std::vector<LocalFactor> out;
  decompose_rec(a, Mat::identity(a->field(), a->dim()), a->unit(), out);
  return out;
}

IdealSubspace nilradical(const AlgebraPtr& a) {
  return IdealSubspace{a, a->nilradical_basis()};
}

IdealSubspace socle(const AlgebraPtr& a) {
  const LocalData& ld = a->local_data();  // NotLocal if not local
  const Field* F = a->field();
  int d = a->dim();
  if (ld.maximal_ideal.rows() == 0)
    return IdealSubspace{a, Mat::identity(F, d)};  // field: socle is everything
  Mat stacked(F, 0, d);
  for (int r = 0; r < ld.maximal_ideal.rows(); ++r) {
    Mat op = a->op_matrix(ld.maximal_ideal.row_values(r));
    stacked = r == 0 ? op : mat_vstack(stacked, op);
  }
  Mat basis = kernel_basis_rows(std::move(stacked));
  echelon(basis, true);
  return IdealSubspace{a, std::move(basis)};
}

bool is_gorenstein(const AlgebraPtr& a) {
  return socle(a).dim() == a->local_data().residue_degree;
}

}  // namespace extlab
