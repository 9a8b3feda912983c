#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extlab/field.hpp"

namespace extlab {

// Dense matrix over a finite field.  Storage adapts to the field: F_2 rows
// are bitpacked into 64-bit words, fields with q <= 256 use one byte per
// entry, larger fields two bytes.  All arithmetic is exact.
class Mat {
 public:
  enum class Rep { Bits, U8, U16 };

  Mat() : field_(nullptr), rows_(0), cols_(0), rep_(Rep::U8), stride_(0) {}
  Mat(const Field* f, int rows, int cols);

  static Mat identity(const Field* f, int n);
  static Mat from_rows(const Field* f, const std::vector<std::vector<uint32_t>>& rows);

  const Field* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rep rep() const { return rep_; }

  uint32_t get(int i, int j) const {
    switch (rep_) {
      case Rep::Bits:
        return (bits_[static_cast<size_t>(i) * stride_ + (j >> 6)] >> (j & 63)) & 1;
      case Rep::U8:
        return b8_[static_cast<size_t>(i) * stride_ + j];
      default:
        return b16_[static_cast<size_t>(i) * stride_ + j];
    }
  }

  void set(int i, int j, uint32_t v) {
    switch (rep_) {
      case Rep::Bits: {
        uint64_t& w = bits_[static_cast<size_t>(i) * stride_ + (j >> 6)];
        w = (w & ~(1ULL << (j & 63))) | (static_cast<uint64_t>(v & 1) << (j & 63));
        break;
      }
      case Rep::U8:
        b8_[static_cast<size_t>(i) * stride_ + j] = static_cast<uint8_t>(v);
        break;
      default:
        b16_[static_cast<size_t>(i) * stride_ + j] = static_cast<uint16_t>(v);
    }
  }

  std::vector<uint32_t> row_values(int i) const;
  void set_row(int i, const std::vector<uint32_t>& vals);

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  // raw access for the elimination engines
  uint64_t* bits_row(int i) { return bits_.data() + static_cast<size_t>(i) * stride_; }
  const uint64_t* bits_row(int i) const {
    return bits_.data() + static_cast<size_t>(i) * stride_;
  }
  uint8_t* u8_row(int i) { return b8_.data() + static_cast<size_t>(i) * stride_; }
  const uint8_t* u8_row(int i) const {
    return b8_.data() + static_cast<size_t>(i) * stride_;
  }
  uint16_t* u16_row(int i) { return b16_.data() + static_cast<size_t>(i) * stride_; }
  const uint16_t* u16_row(int i) const {
    return b16_.data() + static_cast<size_t>(i) * stride_;
  }
  size_t stride() const { return stride_; }

  void swap_rows(int a, int b);

 private:
  const Field* field_;
  int rows_, cols_;
  Rep rep_;
  size_t stride_;  // words (Bits) or entries (U8/U16) per row
  std::vector<uint64_t> bits_;
  std::vector<uint8_t> b8_;
  std::vector<uint16_t> b16_;
};

struct EchelonInfo {
  int rank = 0;
  std::vector<int> pivot_cols;
};

// In-place row echelon.  Rank mode eliminates below pivots only; Rref mode
// produces the reduced form (pivots normalized to 1, zeros above and below).
EchelonInfo echelon(Mat& m, bool reduced);

int mat_rank(Mat m);

// Columns form a basis of the right nullspace {v : M v = 0}.
Mat kernel_basis(Mat m);

// Same basis with vectors as rows (cheaper; no transpose).
Mat kernel_basis_rows(Mat m);

// Gaussian elimination that processes rows strictly in order, with no row
// swaps: row i is reduced against the pivot rows found among rows < i and
// becomes a pivot row itself when a nonzero residual remains.  Returns one
// flag per row telling whether it contributed a pivot.  This implements
// greedy "independent modulo the span of everything before it" selection.
std::vector<char> ordered_echelon(Mat& m);

struct KernelImage {
  Mat kernel;  // columns: basis of ker
  Mat image;   // columns: basis of the column space (original columns at pivots)
  int rank = 0;
};

// Kernel and image of the column map of m.
KernelImage kernel_image(const Mat& m);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
Mat mat_hstack(const Mat& a, const Mat& b);
Mat mat_vstack(const Mat& a, const Mat& b);
Mat mat_cols(const Mat& a, const std::vector<int>& which);

// X with a · X = b, if the system is consistent.
std::optional<Mat> mat_solve(const Mat& a, const Mat& b);

// Incremental row space with reduced echelon rows; used for closures,
// membership tests and greedy generator selection.
class RowSpace {
 public:
  explicit RowSpace(const Field* f, int width);

  // reduces v against the current space; if a nonzero residual remains it is
  // inserted (normalized) and true is returned
  bool add(std::vector<uint32_t> v);
  // membership test without insertion
  bool contains(std::vector<uint32_t> v) const;
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
  Mat to_mat() const;

 private:
  const Field* field_;
  int width_;
  std::vector<std::vector<uint32_t>> rows_;  // reduced, sorted by pivot
  std::vector<int> pivots_;
};

}  // namespace extlab
