#include "extlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace extlab {

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  int bound = std::min(a.bound(), b.bound());
  TruncatedSeries r(bound);
  for (int i = 0; i <= bound; ++i) r.coeff(i) = a.coeff(i) + b.coeff(i);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  int bound = std::min(a.bound(), b.bound());
  TruncatedSeries r(bound);
  for (int i = 0; i <= bound; ++i) r.coeff(i) = a.coeff(i) - b.coeff(i);
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  int bound = std::min(a.bound(), b.bound());
  TruncatedSeries r(bound);
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; i + j <= bound; ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
  return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  require(a.coeff(0) == 1, ErrorCode::NonUnitConstantTerm,
          "series inverse requires constant coefficient 1");
  int bound = a.bound();
  TruncatedSeries r(bound);
  r.coeff(0) = 1;
  for (int n = 1; n <= bound; ++n) {
    BigInt s = 0;
    for (int i = 1; i <= n; ++i) s += a.coeff(i) * r.coeff(n - i);
    r.coeff(n) = -s;
  }
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= bound(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << bound() + 1 << ")";
  return os.str();
}

}  // namespace extlab
