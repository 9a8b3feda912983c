#include "extlab/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace extlab {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// polynomial helpers over F_p on raw coefficient vectors (low degree first,
// normalized: no trailing zeros).  Only used while bootstrapping a field.
using P = std::vector<uint32_t>;

void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

P pmod(P a, const P& m, uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    uint32_t lead = a.back();  // m is monic
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t s = a[shift + i] + static_cast<uint64_t>(lead) * (p - m[i]) % p;
      a[shift + i] = static_cast<uint32_t>(s % p);
    }
    trim(a);
  }
  return a;
}

P pmul(const P& a, const P& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  P c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  trim(c);
  return c;
}

bool divides(const P& d, P a, uint32_t p) {
  return pmod(std::move(a), d, p).empty();
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> f;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

const Field* Field::get(uint32_t p, uint32_t e) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto field = std::unique_ptr<Field>(new Field(p, e));
  const Field* ptr = field.get();
  registry.emplace(key, std::move(field));
  return ptr;
}

Field::Field(uint32_t p, uint32_t e) : p_(p), e_(e) {
  require(is_prime(p), ErrorCode::ValidationError,
          "field characteristic must be prime, got " + std::to_string(p));
  require(e >= 1, ErrorCode::ValidationError, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    require(q <= 100000, ErrorCode::ValidationError,
            "field size p^e out of supported range");
  }
  q_ = static_cast<uint32_t>(q);

  ppow_.resize(e + 1);
  ppow_[0] = 1;
  for (uint32_t i = 1; i <= e; ++i) ppow_[i] = ppow_[i - 1] * p;

  // deterministic modulus: scan tails in numeric order, digits read as
  // (c_{e-1}, ..., c_0); take the first irreducible monic polynomial
  if (e == 1) {
    modulus_ = {0, 1};  // t
  } else {
    for (uint32_t tail = 0;; ++tail) {
      require(tail < q_, ErrorCode::Internal, "no irreducible modulus found");
      P f(e + 1, 0);
      f[e] = 1;
      // numeric order on the tuple (c_{e-1}, ..., c_0) is the numeric order
      // of the tail with c_i at place value p^i
      for (uint32_t i = 0; i < e; ++i) f[i] = tail / ppow_[i] % p;
      // trial division by all monic polynomials of degree 1..e/2
      bool irreducible = true;
      for (uint32_t deg = 1; irreducible && 2 * deg <= e; ++deg) {
        for (uint32_t g = 0; g < ppow_[deg]; ++g) {
          P d(deg + 1, 0);
          d[deg] = 1;
          uint32_t r = g;
          for (uint32_t i = 0; i < deg; ++i) {
            d[i] = r % p;
            r /= p;
          }
          if (divides(d, f, p)) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
    }
  }
  build_tables();
}

uint32_t Field::raw_mul(uint32_t a, uint32_t b) const {
  P pa = digits(a), pb = digits(b);
  trim(pa);
  trim(pb);
  P m(modulus_.begin(), modulus_.end());
  P c = pmod(pmul(pa, pb, p_), m, p_);
  c.resize(e_, 0);
  uint32_t idx = 0;
  for (uint32_t i = 0; i < e_; ++i) idx += c[i] * ppow_[i];
  return idx;
}

void Field::build_tables() {
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  inv_.assign(q_, 0);
  frob_.assign(q_, 0);

  // find a multiplicative generator: the smallest index whose order is q-1
  auto factors = prime_factors(q_ - 1);
  auto raw_pow = [&](uint32_t a, uint32_t n) {
    uint32_t r = 1;
    uint32_t base = a;
    while (n) {
      if (n & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      n >>= 1;
    }
    return r;
  };
  uint32_t gen = 0;
  for (uint32_t a = 1; a < q_; ++a) {
    bool ok = a != 1 || q_ == 2;
    for (uint32_t f : factors) {
      if (raw_pow(a, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = a;
      break;
    }
  }
  require(gen != 0 || q_ == 2, ErrorCode::Internal, "no multiplicative generator");
  if (q_ == 2) gen = 1;

  uint32_t x = 1;
  for (uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = raw_mul(x, gen);
  }
  require(x == 1, ErrorCode::Internal, "generator order mismatch");
  for (uint32_t a = 1; a < q_; ++a) {
    inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  for (uint32_t a = 0; a < q_; ++a) frob_[a] = raw_pow(a, p_);
}

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
  uint32_t r = 0;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t da = a / ppow_[i] % p_;
    uint32_t db = b / ppow_[i] % p_;
    uint32_t s = da + db;
    if (s >= p_) s -= p_;
    r += s * ppow_[i];
  }
  return r;
}

uint32_t Field::neg_slow(uint32_t a) const {
  uint32_t r = 0;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t da = a / ppow_[i] % p_;
    r += (da == 0 ? 0 : p_ - da) * ppow_[i];
  }
  return r;
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  uint64_t ln = static_cast<uint64_t>(log_[a]) * (n % (q_ - 1)) % (q_ - 1);
  return exp_[ln];
}

std::vector<uint32_t> Field::digits(uint32_t a) const {
  std::vector<uint32_t> d(e_);
  for (uint32_t i = 0; i < e_; ++i) d[i] = a / ppow_[i] % p_;
  return d;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& d) const {
  uint32_t a = 0;
  for (uint32_t i = 0; i < e_ && i < d.size(); ++i) a += d[i] % p_ * ppow_[i];
  return a;
}

std::string Field::to_string(uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream os;
  bool first = true;
  auto d = digits(a);
  for (int i = static_cast<int>(e_) - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << d[i];
    } else {
      if (d[i] != 1) os << d[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NzdPreconditionFailed: return "NzdPreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace extlab
