#include "extlab/linalg.hpp"

#include <algorithm>
#include <cstring>

namespace extlab {

namespace {

// Barrett reduction helpers; exact for the stated input ranges.
struct Barrett16 {  // inputs < 2^16
  using acc_t = uint32_t;
  uint32_t p, m;
  explicit Barrett16(uint32_t prime) : p(prime), m((1u << 16) / prime) {}
  uint32_t reduce(uint32_t x) const {
    uint32_t q = (x * m) >> 16;
    uint32_t r = x - q * p;
    return r >= p ? r - p : r;
  }
};

struct Barrett64 {  // inputs < 2^64 / p
  using acc_t = uint64_t;
  uint64_t p, m;
  explicit Barrett64(uint32_t prime)
      : p(prime), m(~uint64_t(0) / prime) {}
  uint32_t reduce(uint64_t x) const {
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
    uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return static_cast<uint32_t>(r);
  }
};

}  // namespace

Mat::Mat(const Field* f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (f->q() == 2) {
    rep_ = Rep::Bits;
    stride_ = static_cast<size_t>((cols + 63) / 64);
    if (stride_ == 0) stride_ = 1;
    bits_.assign(stride_ * std::max(rows, 0), 0);
  } else if (f->q() <= 256) {
    rep_ = Rep::U8;
    stride_ = std::max(cols, 1);
    b8_.assign(stride_ * std::max(rows, 0), 0);
  } else {
    rep_ = Rep::U16;
    stride_ = std::max(cols, 1);
    b16_.assign(stride_ * std::max(rows, 0), 0);
  }
}

Mat Mat::identity(const Field* f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const Field* f, const std::vector<std::vector<uint32_t>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, ErrorCode::DimensionMismatch,
            "ragged row list");
    for (int j = 0; j < c; ++j)
      if (rows[i][j]) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<uint32_t> Mat::row_values(int i) const {
  std::vector<uint32_t> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = get(i, j);
  return v;
}

void Mat::set_row(int i, const std::vector<uint32_t>& vals) {
  for (int j = 0; j < cols_; ++j) set(i, j, j < static_cast<int>(vals.size()) ? vals[j] : 0);
}

bool Mat::is_zero() const {
  switch (rep_) {
    case Rep::Bits:
      for (uint64_t w : bits_)
        if (w) return false;
      return true;
    case Rep::U8:
      for (uint8_t v : b8_)
        if (v) return false;
      return true;
    default:
      for (uint16_t v : b16_)
        if (v) return false;
      return true;
  }
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j) != o.get(i, j)) return false;
  return true;
}

void Mat::swap_rows(int a, int b) {
  if (a == b) return;
  switch (rep_) {
    case Rep::Bits:
      std::swap_ranges(bits_row(a), bits_row(a) + stride_, bits_row(b));
      break;
    case Rep::U8:
      std::swap_ranges(u8_row(a), u8_row(a) + stride_, u8_row(b));
      break;
    default:
      std::swap_ranges(u16_row(a), u16_row(a) + stride_, u16_row(b));
  }
}

namespace {

EchelonInfo echelon_bits(Mat& m, bool reduced) {
  EchelonInfo info;
  int rows = m.rows(), cols = m.cols();
  size_t stride = m.stride();
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int word = col >> 6;
    uint64_t mask = 1ULL << (col & 63);
    int r = prow;
    while (r < rows && !(m.bits_row(r)[word] & mask)) ++r;
    if (r == rows) continue;
    m.swap_rows(r, prow);
    const uint64_t* src = m.bits_row(prow);
    int start = reduced ? 0 : prow + 1;
    for (int rr = start; rr < rows; ++rr) {
      if (rr == prow) continue;
      uint64_t* dst = m.bits_row(rr);
      if (dst[word] & mask) {
        for (size_t w = word; w < stride; ++w) dst[w] ^= src[w];
      }
    }
    info.pivot_cols.push_back(col);
    ++prow;
  }
  info.rank = prow;
  return info;
}

template <typename T, typename Reduce>
EchelonInfo echelon_prime(Mat& m, bool reduced, T* (Mat::*rowfn)(int), uint32_t p,
                          const Field* F, Reduce red) {
  EchelonInfo info;
  int rows = m.rows(), cols = m.cols();
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int r = prow;
    while (r < rows && (m.*rowfn)(r)[col] == 0) ++r;
    if (r == rows) continue;
    m.swap_rows(r, prow);
    T* piv = (m.*rowfn)(prow);
    uint32_t inv = F->inv(piv[col]);
    if (inv != 1) {
      for (int j = col; j < cols; ++j)
        piv[j] = static_cast<T>(F->mul(piv[j], inv));
    }
    int start = reduced ? 0 : prow + 1;
    for (int rr = start; rr < rows; ++rr) {
      if (rr == prow) continue;
      T* dst = (m.*rowfn)(rr);
      uint32_t v = dst[col];
      if (v == 0) continue;
      uint32_t c = p - v;  // dst += c * piv  ==  dst -= v * piv
      using Acc = typename Reduce::acc_t;
      for (int j = col; j < cols; ++j) {
        dst[j] = static_cast<T>(
            red.reduce(static_cast<Acc>(dst[j]) + static_cast<Acc>(c) * piv[j]));
      }
    }
    info.pivot_cols.push_back(col);
    ++prow;
  }
  info.rank = prow;
  return info;
}

template <typename T>
EchelonInfo echelon_table(Mat& m, bool reduced, T* (Mat::*rowfn)(int), const Field* F) {
  EchelonInfo info;
  int rows = m.rows(), cols = m.cols();
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int r = prow;
    while (r < rows && (m.*rowfn)(r)[col] == 0) ++r;
    if (r == rows) continue;
    m.swap_rows(r, prow);
    T* piv = (m.*rowfn)(prow);
    uint32_t inv = F->inv(piv[col]);
    if (inv != 1)
      for (int j = col; j < cols; ++j) piv[j] = static_cast<T>(F->mul(piv[j], inv));
    int start = reduced ? 0 : prow + 1;
    for (int rr = start; rr < rows; ++rr) {
      if (rr == prow) continue;
      T* dst = (m.*rowfn)(rr);
      uint32_t v = dst[col];
      if (v == 0) continue;
      uint32_t c = F->neg(v);
      for (int j = col; j < cols; ++j)
        if (piv[j]) dst[j] = static_cast<T>(F->add(dst[j], F->mul(c, piv[j])));
    }
    info.pivot_cols.push_back(col);
    ++prow;
  }
  info.rank = prow;
  return info;
}

}  // namespace

EchelonInfo echelon(Mat& m, bool reduced) {
  const Field* F = m.field();
  if (m.rows() == 0 || m.cols() == 0) return {};
  if (m.rep() == Mat::Rep::Bits) return echelon_bits(m, reduced);
  if (F->e() == 1) {
    if (m.rep() == Mat::Rep::U8)
      return echelon_prime<uint8_t>(m, reduced, &Mat::u8_row, F->p(), F,
                                    Barrett16(F->p()));
    return echelon_prime<uint16_t>(m, reduced, &Mat::u16_row, F->p(), F,
                                   Barrett64(F->p()));
  }
  if (m.rep() == Mat::Rep::U8) return echelon_table<uint8_t>(m, reduced, &Mat::u8_row, F);
  return echelon_table<uint16_t>(m, reduced, &Mat::u16_row, F);
}

int mat_rank(Mat m) { return echelon(m, false).rank; }

Mat kernel_basis_rows(Mat m);

Mat kernel_basis(Mat m) { return mat_transpose(kernel_basis_rows(std::move(m))); }

// Basis of {v : M v = 0} with the vectors as rows of the result.
Mat kernel_basis_rows(Mat m) {
  const Field* F = m.field();
  int cols = m.cols();
  EchelonInfo info = echelon(m, true);
  std::vector<char> is_pivot(cols, 0);
  for (int c : info.pivot_cols) is_pivot[c] = 1;
  int nullity = cols - info.rank;
  Mat k(F, nullity, cols);
  int out = 0;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    k.set(out, j, 1);
    for (int t = 0; t < info.rank; ++t) {
      uint32_t v = m.get(t, info.pivot_cols[t]);
      // rref rows are normalized, v == 1
      (void)v;
      uint32_t a = m.get(t, j);
      if (a) k.set(out, info.pivot_cols[t], F->neg(a));
    }
    ++out;
  }
  return k;
}

std::vector<char> ordered_echelon(Mat& m) {
  const Field* F = m.field();
  int rows = m.rows(), cols = m.cols();
  std::vector<char> contributed(rows, 0);
  if (cols == 0) return contributed;
  // pivot list sorted by pivot column; pivot rows are normalized to 1
  std::vector<std::pair<int, int>> pivots;  // (col, row)
  const bool bits = m.rep() == Mat::Rep::Bits;
  for (int i = 0; i < rows; ++i) {
    // reduce row i against established pivots, ascending column order
    for (const auto& [pc, pr] : pivots) {
      uint32_t v = m.get(i, pc);
      if (!v) continue;
      if (bits) {
        uint64_t* dst = m.bits_row(i);
        const uint64_t* src = m.bits_row(pr);
        for (size_t w = pc >> 6; w < m.stride(); ++w) dst[w] ^= src[w];
      } else {
        uint32_t c = F->neg(v);
        if (m.rep() == Mat::Rep::U8 && F->e() == 1) {
          Barrett16 red(F->p());
          uint8_t* dst = m.u8_row(i);
          const uint8_t* src = m.u8_row(pr);
          for (int j = pc; j < cols; ++j)
            dst[j] = static_cast<uint8_t>(red.reduce(dst[j] + c * src[j]));
        } else {
          for (int j = pc; j < cols; ++j) {
            uint32_t s = m.get(pr, j);
            if (s) m.set(i, j, F->add(m.get(i, j), F->mul(c, s)));
          }
        }
      }
    }
    // find leading entry
    int lead = -1;
    for (int j = 0; j < cols; ++j)
      if (m.get(i, j)) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    uint32_t inv = F->inv(m.get(i, lead));
    if (inv != 1)
      for (int j = lead; j < cols; ++j) {
        uint32_t v = m.get(i, j);
        if (v) m.set(i, j, F->mul(v, inv));
      }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), std::make_pair(lead, 0));
    pivots.insert(pos, {lead, i});
    contributed[i] = 1;
  }
  return contributed;
}

KernelImage kernel_image(const Mat& m) {
  KernelImage ki;
  Mat work = m;
  EchelonInfo info = echelon(work, true);
  ki.rank = info.rank;
  ki.kernel = kernel_basis(m);
  ki.image = mat_cols(m, info.pivot_cols);
  return ki;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const Field* F = a.field();
  require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "mat_mul shapes");
  Mat c(F, a.rows(), b.cols());
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return c;
  if (c.rep() == Mat::Rep::Bits) {
    size_t stride = c.stride();
    for (int i = 0; i < a.rows(); ++i) {
      uint64_t* dst = c.bits_row(i);
      const uint64_t* arow = a.bits_row(i);
      for (int wk = 0; wk < static_cast<int>(a.stride()); ++wk) {
        uint64_t w = arow[wk];
        while (w) {
          int bit = __builtin_ctzll(w);
          w &= w - 1;
          int k = (wk << 6) + bit;
          if (k >= a.cols()) break;
          const uint64_t* src = b.bits_row(k);
          for (size_t t = 0; t < stride; ++t) dst[t] ^= src[t];
        }
      }
    }
    return c;
  }
  if (F->e() == 1) {
    // delayed reduction with 64-bit accumulators
    Barrett64 red(F->p());
    std::vector<uint64_t> acc(b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int k = 0; k < a.cols(); ++k) {
        uint64_t av = a.get(i, k);
        if (!av) continue;
        for (int j = 0; j < b.cols(); ++j) acc[j] += av * b.get(k, j);
      }
      for (int j = 0; j < b.cols(); ++j) c.set(i, j, red.reduce(acc[j]));
    }
    return c;
  }
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      uint32_t av = a.get(i, k);
      if (!av) continue;
      for (int j = 0; j < b.cols(); ++j) {
        uint32_t bv = b.get(k, j);
        if (bv) c.set(i, j, F->add(c.get(i, j), F->mul(av, bv)));
      }
    }
  }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch,
          "mat_add shapes");
  Mat c(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      c.set(i, j, a.field()->add(a.get(i, j), b.get(i, j)));
  return c;
}

Mat mat_transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  if (a.rep() == Mat::Rep::Bits) {
    for (int i = 0; i < a.rows(); ++i) {
      const uint64_t* row = a.bits_row(i);
      for (int w = 0; w < static_cast<int>(a.stride()); ++w) {
        uint64_t word = row[w];
        while (word) {
          int bit = __builtin_ctzll(word);
          word &= word - 1;
          int j = (w << 6) + bit;
          if (j < a.cols()) t.set(j, i, 1);
        }
      }
    }
    return t;
  }
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      uint32_t v = a.get(i, j);
      if (v) t.set(j, i, v);
    }
  return t;
}

Mat mat_hstack(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "hstack rows");
  Mat c(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      uint32_t v = a.get(i, j);
      if (v) c.set(i, j, v);
    }
    for (int j = 0; j < b.cols(); ++j) {
      uint32_t v = b.get(i, j);
      if (v) c.set(i, a.cols() + j, v);
    }
  }
  return c;
}

Mat mat_vstack(const Mat& a, const Mat& b) {
  require(a.cols() == b.cols(), ErrorCode::DimensionMismatch, "vstack cols");
  Mat c(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      uint32_t v = a.get(i, j);
      if (v) c.set(i, j, v);
    }
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      uint32_t v = b.get(i, j);
      if (v) c.set(a.rows() + i, j, v);
    }
  return c;
}

Mat mat_cols(const Mat& a, const std::vector<int>& which) {
  Mat c(a.field(), a.rows(), static_cast<int>(which.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < which.size(); ++j) {
      uint32_t v = a.get(i, which[j]);
      if (v) c.set(i, static_cast<int>(j), v);
    }
  return c;
}

std::optional<Mat> mat_solve(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch, "solve rows");
  Mat aug = mat_hstack(a, b);
  EchelonInfo info = echelon(aug, true);
  for (int c : info.pivot_cols)
    if (c >= a.cols()) return std::nullopt;  // inconsistent system
  Mat x(a.field(), a.cols(), b.cols());
  for (int t = 0; t < info.rank; ++t) {
    int pc = info.pivot_cols[t];
    for (int j = 0; j < b.cols(); ++j) {
      uint32_t v = aug.get(t, a.cols() + j);
      if (v) x.set(pc, j, v);
    }
  }
  return x;
}

RowSpace::RowSpace(const Field* f, int width) : field_(f), width_(width) {}

std::vector<uint32_t> RowSpace::reduce(std::vector<uint32_t> v) const {
  for (size_t t = 0; t < rows_.size(); ++t) {
    uint32_t c = v[pivots_[t]];
    if (c == 0) continue;
    uint32_t nc = field_->neg(c);
    const auto& row = rows_[t];
    for (int j = pivots_[t]; j < width_; ++j)
      if (row[j]) v[j] = field_->add(v[j], field_->mul(nc, row[j]));
  }
  return v;
}

bool RowSpace::contains(std::vector<uint32_t> v) const {
  v = reduce(std::move(v));
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

bool RowSpace::add(std::vector<uint32_t> v) {
  require(static_cast<int>(v.size()) == width_, ErrorCode::DimensionMismatch,
          "RowSpace width");
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j]) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  uint32_t inv = field_->inv(v[pivot]);
  if (inv != 1)
    for (int j = pivot; j < width_; ++j) v[j] = field_->mul(v[j], inv);
  // keep full reduction: clear this pivot from existing rows
  for (size_t t = 0; t < rows_.size(); ++t) {
    uint32_t c = rows_[t][pivot];
    if (c == 0) continue;
    uint32_t nc = field_->neg(c);
    for (int j = pivot; j < width_; ++j)
      if (v[j]) rows_[t][j] = field_->add(rows_[t][j], field_->mul(nc, v[j]));
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

Mat RowSpace::to_mat() const {
  Mat m(field_, dim(), width_);
  for (int i = 0; i < dim(); ++i) m.set_row(i, rows_[i]);
  return m;
}

}  // namespace extlab
