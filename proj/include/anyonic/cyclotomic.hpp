#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_m).
 *
 * A CycNum of order m is stored in the power basis {1, z, ..., z^(phi(m)-1)}
 * of Q[z]/Phi_m(z), with arbitrary precision rational coordinates. Values of
 * different orders are compared and combined inside Q(zeta_L), L = lcm of the
 * orders, using zeta_m = zeta_L^(L/m). Orders are never re-minimized, so the
 * order of a result is the lcm of the orders of its inputs.
 */

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "anyonic/errors.hpp"

namespace anyonic {

using Rational = mpq_class;

namespace detail {

inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<std::int64_t>;

inline IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t q = num[i];
    quot[i - dn] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw Error("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

struct CyclotomicData {
  IntPoly phi_poly;  // monic, degree phi(m)
  int degree = 0;
};

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  // References stay valid: nodes are never erased.
  const CyclotomicData& get(int m) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(m); it != table_.end()) return it->second;
    }
    CyclotomicData data = compute(m);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(m, std::move(data)).first->second;
  }

 private:
  CyclotomicData compute(int m) {
    IntPoly poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) poly = exact_divide(std::move(poly), get(d).phi_poly);
    }
    CyclotomicData data;
    data.degree = static_cast<int>(poly.size()) - 1;
    data.phi_poly = std::move(poly);
    return data;
  }

  std::shared_mutex mutex_;
  std::map<int, CyclotomicData> table_;
};

inline const CyclotomicData& cyclotomic_data(int m) {
  if (m < 1) throw InvalidArgument("cyclotomic order must be positive, got " + std::to_string(m));
  return CyclotomicCache::instance().get(m);
}

/// Reduce an arbitrary-length rational polynomial modulo Phi_m; result has length phi(m).
inline std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, int m) {
  const auto& data = cyclotomic_data(m);
  const std::size_t deg = static_cast<std::size_t>(data.degree);
  for (std::size_t i = p.size(); i-- > deg;) {
    if (sgn(p[i]) == 0) continue;
    const Rational lead = p[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (data.phi_poly[j] != 0) p[i - deg + j] -= lead * static_cast<long>(data.phi_poly[j]);
    }
    p[i] = 0;
  }
  p.resize(deg);
  return p;
}

}  // namespace detail

/// Euler's totient, equal to the dimension of Q(zeta_m) over Q.
inline int euler_phi(int m) { return detail::cyclotomic_data(m).degree; }

/// The m-th cyclotomic polynomial, lowest coefficient first.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  return detail::cyclotomic_data(m).phi_poly;
}

class CycNum {
 public:
  CycNum() : order_(1), coeffs_(1) {}
  CycNum(long value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  CycNum(int value) : CycNum(static_cast<long>(value)) {}      // NOLINT(google-explicit-constructor)
  CycNum(Rational value) : order_(1), coeffs_{std::move(value)} {  // NOLINT(google-explicit-constructor)
    coeffs_[0].canonicalize();
  }

  /// Builds sum_k coeffs[k] * zeta_order^k for any number of coefficients.
  static CycNum from_poly(int order, std::vector<Rational> coeffs) {
    CycNum out;
    out.order_ = order;
    out.coeffs_ = detail::reduce_mod_phi(std::move(coeffs), order);
    return out;
  }

  /// The zero element of Q(zeta_order).
  static CycNum zero(int order) {
    CycNum out;
    out.order_ = order;
    out.coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    return out;
  }

  int order() const noexcept { return order_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }

  bool is_one() const {
    if (sgn(coeffs_[0] - 1) != 0) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) return false;
    }
    return true;
  }

  /// Rewrites the value inside Q(zeta_target); target must be a multiple of order().
  CycNum embed(int target) const {
    if (target == order_) return *this;
    if (target < 1 || target % order_ != 0) {
      throw InvalidArgument("cannot embed order " + std::to_string(order_) + " into order " +
                            std::to_string(target));
    }
    const std::size_t stride = static_cast<std::size_t>(target / order_);
    std::vector<Rational> poly((coeffs_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    return from_poly(target, std::move(poly));
  }

  CycNum operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  CycNum& operator+=(const CycNum& rhs) { return *this = *this + rhs; }
  CycNum& operator-=(const CycNum& rhs) { return *this = *this - rhs; }
  CycNum& operator*=(const CycNum& rhs) { return *this = *this * rhs; }
  CycNum& operator/=(const CycNum& rhs) { return *this = *this / rhs; }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) {
      CycNum out = a;
      for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
      return out;
    }
    const int l = std::lcm(a.order_, b.order_);
    return a.embed(l) + b.embed(l);
  }

  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
      const int l = std::lcm(a.order_, b.order_);
      return a.embed(l) * b.embed(l);
    }
    if (a.is_zero() || b.is_zero()) return zero(a.order_);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (sgn(b.coeffs_[j]) != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return from_poly(a.order_, std::move(prod));
  }

  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  /// Multiplicative inverse; throws DivisionByZero for zero.
  CycNum inverse() const {
    if (is_zero()) throw DivisionByZero();
    const std::size_t n = coeffs_.size();
    if (n == 1) return CycNum(Rational(1) / coeffs_[0]).embed(order_);
    // Solve M x = e_0 where column j of M holds this * z^j.
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n + 1));
    CycNum column = *this;
    const CycNum z = primitive(order_);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) rows[i][j] = column.coeffs_[i];
      column = column * z;
    }
    rows[0][n] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && sgn(rows[pivot][col]) == 0) ++pivot;
      if (pivot == n) throw DivisionByZero();
      std::swap(rows[col], rows[pivot]);
      const Rational inv = Rational(1) / rows[col][col];
      for (auto& v : rows[col]) v *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || sgn(rows[r][col]) == 0) continue;
        const Rational factor = rows[r][col];
        for (std::size_t k = col; k <= n; ++k) rows[r][k] -= factor * rows[col][k];
      }
    }
    CycNum out = zero(order_);
    for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = rows[i][n];
    return out;
  }

  /// Integer power; negative exponents invert.
  CycNum pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    CycNum result = CycNum(1).embed(order_);
    CycNum base = *this;
    while (exponent > 0) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const int l = std::lcm(a.order_, b.order_);
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
  }

  /// Debug-only numerical value; never used for comparisons.
  std::complex<double> to_complex() const {
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
      sum += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return sum;
  }

  /// Human readable form such as "1 + z3" or "-1/3*z5^2".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (sgn(c) == 0) continue;
      const Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << '-';
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << '*';
      os << 'z' << order_;
      if (k > 1) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

 private:
  static CycNum primitive(int m) {
    std::vector<Rational> poly(2);
    poly[1] = 1;
    return from_poly(m, std::move(poly));
  }

  int order_;
  std::vector<Rational> coeffs_;
};

/// zeta_m^(k mod m).
inline CycNum root_of_unity(int m, long long k) {
  if (m < 1) throw InvalidArgument("root_of_unity: order must be >= 1, got " + std::to_string(m));
  const auto r = static_cast<std::size_t>(detail::mod_floor(k, m));
  std::vector<Rational> poly(r + 1);
  poly[r] = 1;
  return CycNum::from_poly(m, std::move(poly));
}

/// Dispatcher for the four field operations.
enum class ArithOp { add, sub, mul, div };

inline CycNum arith(const CycNum& a, const CycNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

/// q-integer [k]_q = 1 + q + ... + q^(k-1).
inline CycNum q_integer(int k, const CycNum& q) {
  if (k < 0) throw InvalidArgument("q_integer: k must be nonnegative");
  CycNum sum = CycNum::zero(q.order());
  CycNum power = CycNum(1).embed(q.order());
  for (int i = 0; i < k; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

/// Gaussian binomial [a choose k]_q by the Pascal recurrence
/// [a,k] = [a-1,k-1] + q^k [a-1,k]; division free, so valid at roots of unity.
inline CycNum q_binomial(int a, int k, const CycNum& q) {
  if (a < 0 || k < 0) throw InvalidArgument("q_binomial: arguments must be nonnegative");
  if (k > a) {
    throw InvalidArgument("q_binomial: k = " + std::to_string(k) + " exceeds a = " + std::to_string(a));
  }
  const CycNum one = CycNum(1).embed(q.order());
  std::vector<CycNum> q_pow(static_cast<std::size_t>(k) + 1, one);
  for (int j = 1; j <= k; ++j) q_pow[static_cast<std::size_t>(j)] = q_pow[static_cast<std::size_t>(j) - 1] * q;
  // row[j] holds [i, j]_q for the current i.
  std::vector<CycNum> row(static_cast<std::size_t>(k) + 1, CycNum::zero(q.order()));
  row[0] = one;
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      const auto ju = static_cast<std::size_t>(j);
      row[ju] = row[ju - 1] + q_pow[ju] * row[ju];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace anyonic
