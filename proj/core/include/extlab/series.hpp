#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "extlab/errors.hpp"

namespace extlab {

using BigInt = boost::multiprecision::cpp_int;

// Integer power series truncated at degree B.  Coefficients are arbitrary
// precision (Betti numbers grow exponentially with the degree bound).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int bound) : c_(bound + 1, 0) {}
  TruncatedSeries(int bound, std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    c_.resize(bound + 1, 0);
  }

  static TruncatedSeries one(int bound) {
    TruncatedSeries s(bound);
    s.c_[0] = 1;
    return s;
  }
  // the series t
  static TruncatedSeries t(int bound) {
    TruncatedSeries s(bound);
    if (bound >= 1) s.c_[1] = 1;
    return s;
  }

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(int i) const { return c_[i]; }
  BigInt& coeff(int i) { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  std::vector<BigInt> c_;  // c_[i] = coefficient of t^i
};

// convolution product through the common truncation bound
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// multiplicative inverse; requires constant coefficient 1
TruncatedSeries series_inverse(const TruncatedSeries& a);

}  // namespace extlab
