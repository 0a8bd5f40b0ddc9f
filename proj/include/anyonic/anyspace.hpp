#pragma once

/**
 * @file anyspace.hpp
 * @brief The anyonic line C[theta]/theta^n and its braided tensor powers.
 *
 * A ThetaPoly over m slots is a combination of ordered monomials
 * theta_1^e1 ... theta_m^em with 0 <= e_i < n. Slots keep their order; moving
 * theta_i^a to the right past theta_j^b (j > i) costs zeta_n^(ab), i.e.
 * theta_j theta_i = zeta_n theta_i theta_j for j > i.
 */

#include <map>
#include <mutex>
#include <vector>

#include "anyonic/cyclotomic.hpp"
#include "anyonic/errors.hpp"

namespace anyonic {

class ThetaPoly {
 public:
  using Exponents = std::vector<int>;

  ThetaPoly(int n, int vars) : n_(n), vars_(vars) {
    if (n < 1) throw InvalidArgument("anyspace modulus n must be at least 1");
    if (vars < 1) throw InvalidArgument("anyspace needs at least one slot");
  }

  static ThetaPoly one(int n, int vars) { return monomial(n, Exponents(static_cast<std::size_t>(vars), 0)); }

  /// theta in the given 0-based slot.
  static ThetaPoly theta(int n, int vars, int slot) {
    Exponents e(static_cast<std::size_t>(vars), 0);
    if (slot < 0 || slot >= vars) throw InvalidArgument("theta slot out of range");
    e[static_cast<std::size_t>(slot)] = 1;
    return monomial(n, e);
  }

  static ThetaPoly monomial(int n, const Exponents& e, CycNum coeff = 1) {
    ThetaPoly p(n, static_cast<int>(e.size()));
    p.add(e, coeff);
    return p;
  }

  int n() const noexcept { return n_; }
  int vars() const noexcept { return vars_; }
  const std::map<Exponents, CycNum>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  CycNum coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycNum() : it->second;
  }

  /// Adds coeff * monomial; powers >= n vanish.
  void add(const Exponents& e, const CycNum& coeff) {
    if (static_cast<int>(e.size()) != vars_) throw InvalidArgument("monomial has the wrong number of slots");
    for (int x : e) {
      if (x < 0) throw InvalidArgument("negative theta exponent");
      if (x >= n_) return;
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ThetaPoly& operator+=(const ThetaPoly& rhs) {
    check_shape(rhs);
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
  }
  ThetaPoly& operator-=(const ThetaPoly& rhs) {
    check_shape(rhs);
    for (const auto& [e, c] : rhs.terms_) add(e, -c);
    return *this;
  }
  friend ThetaPoly operator+(ThetaPoly a, const ThetaPoly& b) { return a += b; }
  friend ThetaPoly operator-(ThetaPoly a, const ThetaPoly& b) { return a -= b; }

  friend ThetaPoly operator*(const CycNum& s, const ThetaPoly& p) {
    ThetaPoly out(p.n_, p.vars_);
    for (const auto& [e, c] : p.terms_) out.add(e, s * c);
    return out;
  }

  friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) {
    return a.n_ == b.n_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  void check_shape(const ThetaPoly& other) const {
    if (other.n_ != n_ || other.vars_ != vars_) {
      throw InvalidArgument("anyspace polynomials differ in modulus or slot count");
    }
  }

 private:
  int n_;
  int vars_;
  std::map<Exponents, CycNum> terms_;
};

/// Product in the braided tensor power.
inline ThetaPoly tp_mul(const ThetaPoly& p, const ThetaPoly& q) {
  p.check_shape(q);
  const int n = p.n();
  const auto m = static_cast<std::size_t>(p.vars());
  std::vector<CycNum> zeta_pow;
  for (int k = 0; k < n; ++k) zeta_pow.push_back(root_of_unity(n, k));
  ThetaPoly out(n, p.vars());
  ThetaPoly::Exponents e(m);
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      long long crossing = 0;
      bool vanishes = false;
      for (std::size_t i = 0; i < m; ++i) {
        e[i] = a[i] + b[i];
        if (e[i] >= n) vanishes = true;
        // b[i] moves left past a[j] for every slot j > i.
        for (std::size_t j = i + 1; j < m; ++j) crossing += static_cast<long long>(a[j]) * b[i];
      }
      if (vanishes) continue;
      out.add(e, zeta_pow[static_cast<std::size_t>(crossing % n)] * ca * cb);
    }
  }
  return out;
}

inline ThetaPoly tp_pow(const ThetaPoly& p, int k) {
  if (k < 0) throw InvalidArgument("negative power in anyspace");
  ThetaPoly out = ThetaPoly::one(p.n(), p.vars());
  for (int i = 0; i < k; ++i) out = tp_mul(out, p);
  return out;
}

/// Algebra map sending slot `slot` to theta_slot + theta_{slot+1}; later slots shift right by one.
inline ThetaPoly coproduct_at(const ThetaPoly& p, int slot) {
  if (slot < 0 || slot >= p.vars()) throw InvalidArgument("coproduct slot out of range");
  const int n = p.n();
  const int m = p.vars() + 1;
  const ThetaPoly sum = ThetaPoly::theta(n, m, slot) + ThetaPoly::theta(n, m, slot + 1);
  std::vector<ThetaPoly> sum_pow{ThetaPoly::one(n, m)};
  for (int k = 1; k < n; ++k) sum_pow.push_back(tp_mul(sum_pow.back(), sum));
  ThetaPoly out(n, m);
  for (const auto& [e, c] : p.terms()) {
    ThetaPoly term = ThetaPoly::monomial(n, ThetaPoly::Exponents(static_cast<std::size_t>(m), 0), c);
    for (int i = 0; i < p.vars(); ++i) {
      const int power = e[static_cast<std::size_t>(i)];
      if (power == 0) continue;
      if (i == slot) {
        term = tp_mul(term, sum_pow[static_cast<std::size_t>(power)]);
      } else {
        ThetaPoly::Exponents f(static_cast<std::size_t>(m), 0);
        f[static_cast<std::size_t>(i < slot ? i : i + 1)] = power;
        term = tp_mul(term, ThetaPoly::monomial(n, f));
      }
    }
    out += term;
  }
  return out;
}

/// Delta theta = theta (x) 1 + 1 (x) theta, extended as an algebra map.
inline ThetaPoly coproduct(const ThetaPoly& p) {
  if (p.vars() != 1) throw InvalidArgument("coproduct expects a one-slot polynomial");
  return coproduct_at(p, 0);
}

/// Evaluation at theta = 0 in every slot.
inline CycNum counit(const ThetaPoly& p) {
  return p.coeff(ThetaPoly::Exponents(static_cast<std::size_t>(p.vars()), 0));
}

/// Applies the counit to one slot, removing it.
inline ThetaPoly counit_at(const ThetaPoly& p, int slot) {
  if (p.vars() < 2) throw InvalidArgument("counit_at needs at least two slots");
  if (slot < 0 || slot >= p.vars()) throw InvalidArgument("counit slot out of range");
  ThetaPoly out(p.n(), p.vars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<std::size_t>(slot)] != 0) continue;
    ThetaPoly::Exponents f = e;
    f.erase(f.begin() + slot);
    out.add(f, c);
  }
  return out;
}

/// Multiplication C[theta]/theta^n (x) C[theta]/theta^n -> C[theta]/theta^n on a two-slot polynomial.
inline ThetaPoly multiply_slots(const ThetaPoly& p) {
  if (p.vars() != 2) throw InvalidArgument("multiply_slots expects two slots");
  ThetaPoly out(p.n(), 1);
  for (const auto& [e, c] : p.terms()) out.add({e[0] + e[1]}, c);
  return out;
}

/// Applies a linear map on one-slot polynomials to a chosen slot of a multi-slot polynomial.
template <class F>
ThetaPoly apply_at(const ThetaPoly& p, int slot, F&& map) {
  if (slot < 0 || slot >= p.vars()) throw InvalidArgument("slot out of range");
  ThetaPoly out(p.n(), p.vars());
  for (const auto& [e, c] : p.terms()) {
    const ThetaPoly image = map(ThetaPoly::monomial(p.n(), {e[static_cast<std::size_t>(slot)]}));
    for (const auto& [f, cf] : image.terms()) {
      ThetaPoly::Exponents g = e;
      g[static_cast<std::size_t>(slot)] = f[0];
      out.add(g, c * cf);
    }
  }
  return out;
}

/// S(theta^k) built by the braided anti-multiplicative rule
/// S(theta^k) = zeta^(k-1) S(theta) S(theta^(k-1)).
inline ThetaPoly antipode_recursive(const ThetaPoly& p) {
  if (p.vars() != 1) throw InvalidArgument("antipode expects a one-slot polynomial");
  const int n = p.n();
  std::vector<ThetaPoly> image{ThetaPoly::one(n, 1)};
  const ThetaPoly s_theta = CycNum(-1) * ThetaPoly::theta(n, 1, 0);
  for (int k = 1; k < n; ++k) image.push_back(root_of_unity(n, k - 1) * tp_mul(s_theta, image.back()));
  ThetaPoly out(n, 1);
  for (const auto& [e, c] : p.terms()) out += c * image[static_cast<std::size_t>(e[0])];
  return out;
}

namespace detail {

inline ThetaPoly antipode_closed_form(const ThetaPoly& p) {
  ThetaPoly out(p.n(), 1);
  for (const auto& [e, c] : p.terms()) {
    const long long k = e[0];
    const CycNum sign = (k % 2 == 0) ? CycNum(1) : CycNum(-1);
    out.add(e, sign * root_of_unity(p.n(), k * (k - 1) / 2) * c);
  }
  return out;
}

/// m (S (x) id) Delta = eta eps = m (id (x) S) Delta on every theta^k.
template <class Antipode>
bool antipode_law_holds(int n, Antipode&& s) {
  for (int k = 0; k < n; ++k) {
    const ThetaPoly mono = ThetaPoly::monomial(n, {k});
    const ThetaPoly delta = coproduct(mono);
    const ThetaPoly expected = counit(mono) * ThetaPoly::one(n, 1);
    if (!(multiply_slots(apply_at(delta, 0, s)) == expected)) return false;
    if (!(multiply_slots(apply_at(delta, 1, s)) == expected)) return false;
  }
  return true;
}

}  // namespace detail

/**
 * S(theta) = -theta extended as a braided anti-homomorphism:
 * S(theta^k) = (-1)^k zeta_n^(k(k-1)/2) theta^k. The closed form is checked
 * against the antipode law once per n and replaced by the recursive expansion
 * if the check fails.
 */
inline ThetaPoly antipode(const ThetaPoly& p) {
  if (p.vars() != 1) throw InvalidArgument("antipode expects a one-slot polynomial");
  static std::mutex mutex;
  static std::map<int, bool> closed_form_ok;
  bool ok = false;
  {
    std::lock_guard lock(mutex);
    auto it = closed_form_ok.find(p.n());
    if (it == closed_form_ok.end()) {
      it = closed_form_ok.emplace(p.n(), detail::antipode_law_holds(p.n(), detail::antipode_closed_form)).first;
    }
    ok = it->second;
  }
  return ok ? detail::antipode_closed_form(p) : antipode_recursive(p);
}

/// d theta^k = [k]_zeta theta^(k-1), d 1 = 0.
inline ThetaPoly braided_derivative(const ThetaPoly& p) {
  if (p.vars() != 1) throw InvalidArgument("derivative expects a one-slot polynomial");
  const CycNum zeta = root_of_unity(p.n(), 1);
  ThetaPoly out(p.n(), 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] == 0) continue;
    out.add({e[0] - 1}, q_integer(e[0], zeta) * c);
  }
  return out;
}

/// Coefficient of theta^(n-1).
inline CycNum braided_integral(const ThetaPoly& p) {
  if (p.vars() != 1) throw InvalidArgument("integral expects a one-slot polynomial");
  return p.coeff({p.n() - 1});
}

}  // namespace anyonic
