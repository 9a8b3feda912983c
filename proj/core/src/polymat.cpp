#include "extlab/polymat.hpp"

#include <algorithm>
#include <sstream>

namespace extlab {

PolyMat PolyMat::identity(const Field* f, int n) {
  PolyMat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(f, 1);
  return m;
}

bool PolyMat::is_zero() const {
  for (const Poly& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "PolyMat mul shapes");
  PolyMat c(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return c;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch,
          "PolyMat sub shapes");
  PolyMat c(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

PolyMat PolyMat::transposed() const {
  PolyMat t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string PolyMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

int InvariantFactorData::fiber_dim(uint32_t alpha) const {
  return free_rank + torsion_fiber_dim(alpha);
}

int InvariantFactorData::torsion_fiber_dim(uint32_t alpha) const {
  int n = 0;
  for (const Poly& f : torsion)
    if (f.eval(alpha) == 0) ++n;
  return n;
}

std::string InvariantFactorData::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (i) os << ", ";
    os << torsion[i].to_string();
  }
  os << "] free^" << free_rank;
  return os.str();
}

namespace {

struct SmithWork {
  PolyMat d, u, v;

  void row_swap(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row a -= q * row b
  void row_axpy(int a, int b, const Poly& q) {
    if (q.is_zero()) return;
    for (int j = 0; j < d.cols(); ++j) d.at(a, j) = d.at(a, j) - q * d.at(b, j);
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) - q * u.at(b, j);
  }
  // col a -= q * col b
  void col_axpy(int a, int b, const Poly& q) {
    if (q.is_zero()) return;
    for (int i = 0; i < d.rows(); ++i) d.at(i, a) = d.at(i, a) - q * d.at(i, b);
    for (int i = 0; i < v.rows(); ++i) v.at(i, a) = v.at(i, a) - q * v.at(i, b);
  }
  void row_scale(int a, uint32_t s) {
    for (int j = 0; j < d.cols(); ++j) d.at(a, j) = d.at(a, j).scaled(s);
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j).scaled(s);
  }
};

}  // namespace

SmithResult smith_normal_form(const PolyMat& a) {
  const Field* F = a.field();
  int rows = a.rows(), cols = a.cols();
  SmithWork w{a, PolyMat::identity(F, rows), PolyMat::identity(F, cols)};
  int limit = std::min(rows, cols);
  int t = 0;
  for (; t < limit; ++t) {
    // pivot: nonzero entry of minimal degree in the trailing submatrix
    int pi = -1, pj = -1, best = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Poly& e = w.d.at(i, j);
        if (e.is_zero()) continue;
        if (best < 0 || e.degree() < best) {
          best = e.degree();
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      // clear column t below the pivot, swapping in smaller remainders
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (int i = t + 1; i < rows; ++i) {
          if (w.d.at(i, t).is_zero()) continue;
          auto [q, r] = poly_divmod(w.d.at(i, t), w.d.at(t, t));
          w.row_axpy(i, t, q);
          if (!r.is_zero()) {
            w.row_swap(i, t);
            dirty = true;
          }
        }
        for (int j = t + 1; j < cols; ++j) {
          if (w.d.at(t, j).is_zero()) continue;
          auto [q, r] = poly_divmod(w.d.at(t, j), w.d.at(t, t));
          w.col_axpy(j, t, q);
          if (!r.is_zero()) {
            w.col_swap(j, t);
            dirty = true;
          }
        }
      }
      // enforce divisibility of the trailing submatrix by the pivot
      int vi = -1, vj = -1;
      for (int i = t + 1; i < rows && vi < 0; ++i)
        for (int j = t + 1; j < cols; ++j) {
          if (w.d.at(i, j).is_zero()) continue;
          if (!poly_mod(w.d.at(i, j), w.d.at(t, t)).is_zero()) {
            vi = i;
            vj = j;
            break;
          }
        }
      if (vi < 0) break;
      // fold the offending row into row t and repeat; the pivot degree drops
      for (int j = 0; j < cols; ++j) w.d.at(t, j) = w.d.at(t, j) + w.d.at(vi, j);
      for (int j = 0; j < rows; ++j) w.u.at(t, j) = w.u.at(t, j) + w.u.at(vi, j);
    }
    if (w.d.at(t, t).lead() != 1) {
      w.row_scale(t, F->inv(w.d.at(t, t).lead()));
    }
  }

  SmithResult res;
  res.rank = t;
  res.invariants.free_rank = cols - t;
  for (int i = 0; i < t; ++i) {
    const Poly& di = w.d.at(i, i);
    if (di.degree() >= 1) res.invariants.torsion.push_back(di);
  }
  res.u = std::move(w.u);
  res.d = std::move(w.d);
  res.v = std::move(w.v);
  return res;
}

PolyMat kernel_over_poly(const PolyMat& a) {
  const Field* F = a.field();
  int rows = a.rows(), cols = a.cols();
  PolyMat m = a;
  PolyMat t = PolyMat::identity(F, cols);
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, x), m.at(i, y));
    for (int i = 0; i < cols; ++i) std::swap(t.at(i, x), t.at(i, y));
  };
  auto col_axpy = [&](int x, int y, const Poly& q) {  // col x -= q col y
    if (q.is_zero()) return;
    for (int i = 0; i < rows; ++i) m.at(i, x) = m.at(i, x) - q * m.at(i, y);
    for (int i = 0; i < cols; ++i) t.at(i, x) = t.at(i, x) - q * t.at(i, y);
  };

  int pos = 0;
  for (int row = 0; row < rows && pos < cols; ++row) {
    for (;;) {
      int jmin = -1, best = -1;
      for (int j = pos; j < cols; ++j) {
        const Poly& e = m.at(row, j);
        if (e.is_zero()) continue;
        if (best < 0 || e.degree() < best) {
          best = e.degree();
          jmin = j;
        }
      }
      if (jmin < 0) break;  // row is clear on the active columns
      col_swap(pos, jmin);
      bool clean = true;
      for (int j = pos + 1; j < cols; ++j) {
        if (m.at(row, j).is_zero()) continue;
        auto [q, r] = poly_divmod(m.at(row, j), m.at(row, pos));
        col_axpy(j, pos, q);
        if (!r.is_zero()) clean = false;
      }
      if (clean) {
        ++pos;  // pivot established for this row
        break;
      }
    }
  }
  // columns pos.. of t generate the kernel
  PolyMat k(F, cols, cols - pos);
  for (int i = 0; i < cols; ++i)
    for (int j = pos; j < cols; ++j) k.at(i, j - pos) = t.at(i, j);
  return k;
}

Poly poly_det(const PolyMat& a) {
  require(a.rows() == a.cols(), ErrorCode::DimensionMismatch, "determinant of non-square");
  const Field* F = a.field();
  int n = a.rows();
  if (n == 0) return Poly::constant(F, 1);
  if (n == 1) return a.at(0, 0);
  Poly det = Poly::zero(F);
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    PolyMat minor(F, n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = a.at(i, c);
      }
    }
    Poly term = a.at(0, j) * poly_det(minor);
    if (j % 2 == 1) term = Poly::zero(F) - term;
    det = det + term;
  }
  return det;
}

namespace {

void minor_gcd_rec(const PolyMat& a, int k, int start_row, std::vector<int>& rows,
                   Poly& g) {
  if (static_cast<int>(rows.size()) == k) {
    // choose columns
    std::vector<int> cols;
    struct ColRec {
      static void go(const PolyMat& a, const std::vector<int>& rows, int k, int start,
                     std::vector<int>& cols, Poly& g) {
        if (static_cast<int>(cols.size()) == k) {
          PolyMat sub(a.field(), k, k);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
          Poly d = poly_det(sub);
          if (!d.is_zero()) g = g.is_zero() ? d.monic() : poly_gcd(g, d);
          return;
        }
        for (int c = start; c < a.cols(); ++c) {
          cols.push_back(c);
          go(a, rows, k, c + 1, cols, g);
          cols.pop_back();
        }
      }
    };
    ColRec::go(a, rows, k, 0, cols, g);
    return;
  }
  for (int r = start_row; r < a.rows(); ++r) {
    rows.push_back(r);
    minor_gcd_rec(a, k, r + 1, rows, g);
    rows.pop_back();
  }
}

}  // namespace

InvariantFactorData invariants_from_minors(const PolyMat& a) {
  const Field* F = a.field();
  int limit = std::min(a.rows(), a.cols());
  InvariantFactorData data;
  Poly prev = Poly::constant(F, 1);
  int rank = 0;
  for (int k = 1; k <= limit; ++k) {
    Poly g = Poly::zero(F);
    std::vector<int> rows;
    minor_gcd_rec(a, k, 0, rows, g);
    if (g.is_zero()) break;
    rank = k;
    Poly factor = poly_div_exact(g, prev).monic();
    if (factor.degree() >= 1) data.torsion.push_back(factor);
    prev = g;
  }
  data.free_rank = a.cols() - rank;
  return data;
}

}  // namespace extlab
