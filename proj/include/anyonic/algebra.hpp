#pragma once

/**
 * @file algebra.hpp
 * @brief Structure-constant description of a candidate anyonic Lie algebra.
 *
 * In a homogeneous basis x^mu of degrees p(mu):
 *
 *   eps(x^mu)       = eps^mu
 *   Delta x^mu      = d^mu_{nu rho} x^nu (x) x^rho
 *   [x^mu, x^nu]    = c^{mu nu}_rho x^rho
 *
 * Tensors are stored sparsely; zero values are never kept.
 */

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anyonic/cyclotomic.hpp"
#include "anyonic/graded.hpp"

namespace anyonic {

using Index3 = std::array<int, 3>;

/// Sparse rank-3 tensor keyed by (first, second, third) index.
class SparseTensor3 {
 public:
  using Map = std::map<Index3, CycNum>;

  void set(const Index3& idx, CycNum value) {
    if (value.is_zero()) {
      entries_.erase(idx);
    } else {
      entries_.insert_or_assign(idx, std::move(value));
    }
  }

  void add(const Index3& idx, const CycNum& value) { set(idx, get(idx) + value); }

  CycNum get(const Index3& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? CycNum() : it->second;
  }

  const Map& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const SparseTensor3&, const SparseTensor3&) = default;

 private:
  Map entries_;
};

struct BasisElement {
  std::string name;
  Degree degree;
};

struct AlgebraSpec {
  Bicharacter grading = Bicharacter::anyonic(1);
  std::vector<BasisElement> basis;
  std::map<int, CycNum> eps;  // eps^mu
  SparseTensor3 d;            // (mu, nu, rho) -> d^mu_{nu rho}
  SparseTensor3 c;            // (mu, nu, rho) -> c^{mu nu}_rho

  int dim() const noexcept { return static_cast<int>(basis.size()); }
  const GradingGroup& group() const noexcept { return grading.group(); }
  const Degree& degree(int mu) const { return basis[static_cast<std::size_t>(mu)].degree; }

  CycNum epsilon(int mu) const {
    auto it = eps.find(mu);
    return it == eps.end() ? CycNum() : it->second;
  }

  void set_eps(int mu, CycNum value) {
    if (value.is_zero()) {
      eps.erase(mu);
    } else {
      eps.insert_or_assign(mu, std::move(value));
    }
  }

  std::optional<int> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  /// Throws InvalidArgument if indices are out of range, degrees are malformed or names repeat.
  void validate() const {
    if (basis.empty()) throw InvalidArgument("algebra must have at least one basis element");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      group().check(basis[i].degree);
      for (std::size_t j = 0; j < i; ++j) {
        if (basis[i].name == basis[j].name) throw InvalidArgument("duplicate basis name '" + basis[i].name + "'");
      }
    }
    auto in_range = [&](int i) { return i >= 0 && i < dim(); };
    for (const auto& [mu, v] : eps) {
      if (!in_range(mu)) throw InvalidArgument("eps index out of range");
      if (v.is_zero()) throw InvalidArgument("eps stores an explicit zero");
    }
    for (const auto* t : {&d, &c}) {
      for (const auto& [idx, v] : *t) {
        if (!in_range(idx[0]) || !in_range(idx[1]) || !in_range(idx[2])) {
          throw InvalidArgument("structure constant index out of range");
        }
      }
    }
  }
};

/// A vector in L, sparse over basis indices.
class Element {
 public:
  Element() = default;

  static Element basis(int mu, CycNum coeff = 1) {
    Element e;
    e.add(mu, coeff);
    return e;
  }

  void add(int mu, const CycNum& coeff) {
    auto it = terms_.find(mu);
    CycNum value = it == terms_.end() ? coeff : it->second + coeff;
    if (value.is_zero()) {
      if (it != terms_.end()) terms_.erase(it);
    } else {
      terms_.insert_or_assign(mu, std::move(value));
    }
  }

  CycNum coeff(int mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? CycNum() : it->second;
  }

  const std::map<int, CycNum>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Common degree of the supported basis vectors; nullopt when mixed or zero.
  std::optional<Degree> homogeneous_degree(const AlgebraSpec& spec) const {
    std::optional<Degree> deg;
    for (const auto& [mu, v] : terms_) {
      const Degree& d = spec.degree(mu);
      if (deg && !(*deg == d)) return std::nullopt;
      deg = d;
    }
    return deg;
  }

  Element& operator+=(const Element& rhs) {
    for (const auto& [mu, v] : rhs.terms_) add(mu, v);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }

  Element operator*(const CycNum& s) const {
    Element out;
    for (const auto& [mu, v] : terms_) out.add(mu, v * s);
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, CycNum> terms_;
};

/// Sparse element of L (x) L keyed by (left, right) basis indices.
using Tensor2 = std::map<std::pair<int, int>, CycNum>;

inline void check_element(const AlgebraSpec& spec, const Element& x) {
  for (const auto& [mu, v] : x.terms()) {
    if (mu < 0 || mu >= spec.dim()) throw InvalidArgument("element index out of range for algebra dimension");
  }
}

inline CycNum eval_eps(const AlgebraSpec& spec, const Element& x) {
  check_element(spec, x);
  CycNum sum;
  for (const auto& [mu, v] : x.terms()) sum += v * spec.epsilon(mu);
  return sum;
}

inline Tensor2 eval_delta(const AlgebraSpec& spec, const Element& x) {
  check_element(spec, x);
  Tensor2 out;
  for (const auto& [idx, val] : spec.d) {
    const CycNum coeff = x.coeff(idx[0]);
    if (coeff.is_zero()) continue;
    auto& slot = out[{idx[1], idx[2]}];
    slot += coeff * val;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline Element eval_bracket(const AlgebraSpec& spec, const Element& x, const Element& y) {
  check_element(spec, x);
  check_element(spec, y);
  Element out;
  for (const auto& [idx, val] : spec.c) {
    const CycNum a = x.coeff(idx[0]);
    if (a.is_zero()) continue;
    const CycNum b = y.coeff(idx[1]);
    if (b.is_zero()) continue;
    out.add(idx[2], a * b * val);
  }
  return out;
}

namespace detail {

/// Adjacency views of a spec used by the contraction loops.
struct IndexedSpec {
  int dim = 0;
  std::vector<CycNum> eps;                                          // dense eps^mu
  std::vector<std::vector<std::pair<std::pair<int, int>, CycNum>>> d_by_mu;  // mu -> ((nu,rho), d)
  std::vector<std::vector<std::pair<int, CycNum>>> c_by_pair;        // mu*dim+nu -> (rho, c)
  std::vector<CycNum> phase;                                        // beta(p(mu), p(nu)) at mu*dim+nu

  explicit IndexedSpec(const AlgebraSpec& spec) : dim(spec.dim()) {
    const auto n = static_cast<std::size_t>(dim);
    eps.assign(n, CycNum());
    for (const auto& [mu, v] : spec.eps) eps[static_cast<std::size_t>(mu)] = v;
    d_by_mu.resize(n);
    for (const auto& [idx, v] : spec.d) d_by_mu[static_cast<std::size_t>(idx[0])].push_back({{idx[1], idx[2]}, v});
    c_by_pair.resize(n * n);
    for (const auto& [idx, v] : spec.c) {
      c_by_pair[static_cast<std::size_t>(idx[0]) * n + static_cast<std::size_t>(idx[1])].push_back({idx[2], v});
    }
    phase.reserve(n * n);
    for (int mu = 0; mu < dim; ++mu) {
      for (int nu = 0; nu < dim; ++nu) phase.push_back(spec.grading(spec.degree(mu), spec.degree(nu)));
    }
  }

  const CycNum& beta(int mu, int nu) const { return phase[static_cast<std::size_t>(mu * dim + nu)]; }
  const auto& c(int mu, int nu) const { return c_by_pair[static_cast<std::size_t>(mu * dim + nu)]; }
  const auto& d(int mu) const { return d_by_mu[static_cast<std::size_t>(mu)]; }
};

}  // namespace detail

}  // namespace anyonic
