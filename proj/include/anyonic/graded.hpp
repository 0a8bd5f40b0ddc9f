#pragma once

/**
 * @file graded.hpp
 * @brief Finite abelian grading groups, degrees and braiding bicharacters.
 *
 * A grading group is Z/n1 x ... x Z/nk. A bicharacter is given by an integer
 * matrix B with beta(e_i,e_j) = zeta_{gcd(n_i,n_j)}^(B_ij), so beta(g,h) is a
 * power of zeta_E with E the group exponent. The anyonic braiding on Z/n is the 1x1 matrix [1], so that
 * beta(a,b) = exp(2 pi i ab / n). A raw table of values can also be loaded;
 * such tables are only trusted after validate_bicharacter().
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "anyonic/cyclotomic.hpp"
#include "anyonic/errors.hpp"

namespace anyonic {

/// Reduced coordinates of a group element, one per cyclic factor.
struct Degree {
  std::vector<int> coords;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

class GradingGroup {
 public:
  explicit GradingGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidArgument("grading group needs at least one factor");
    exponent_ = 1;
    order_ = 1;
    for (int n : factors_) {
      if (n < 1) throw InvalidArgument("grading group factors must be positive");
      exponent_ = std::lcm(exponent_, n);
      order_ *= static_cast<std::size_t>(n);
    }
  }

  static GradingGroup cyclic(int n) { return GradingGroup({n}); }

  const std::vector<int>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  int exponent() const noexcept { return exponent_; }
  std::size_t order() const noexcept { return order_; }

  /// Reduces arbitrary integer coordinates; negative values are accepted.
  Degree make(const std::vector<long long>& coords) const {
    if (coords.size() != factors_.size()) {
      throw InvalidArgument("degree has " + std::to_string(coords.size()) + " coordinates, group has rank " +
                            std::to_string(factors_.size()));
    }
    Degree d;
    d.coords.resize(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      d.coords[i] = static_cast<int>(detail::mod_floor(coords[i], factors_[i]));
    }
    return d;
  }

  /// Shorthand for cyclic groups.
  Degree make(long long value) const { return make(std::vector<long long>{value}); }

  Degree zero() const { return Degree{std::vector<int>(factors_.size(), 0)}; }

  void check(const Degree& g) const {
    if (g.coords.size() != factors_.size()) {
      throw InvalidArgument("degree arity " + std::to_string(g.coords.size()) + " does not match group rank " +
                            std::to_string(factors_.size()));
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) throw InvalidArgument("degree is not reduced");
    }
  }

  Degree add(const Degree& g, const Degree& h) const {
    check(g);
    check(h);
    Degree out = g;
    for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] = (g.coords[i] + h.coords[i]) % factors_[i];
    return out;
  }

  Degree neg(const Degree& g) const {
    check(g);
    Degree out = g;
    for (std::size_t i = 0; i < factors_.size(); ++i) out.coords[i] = (factors_[i] - g.coords[i]) % factors_[i];
    return out;
  }

  Degree sub(const Degree& g, const Degree& h) const { return add(g, neg(h)); }

  /// Mixed-radix position of an element, first factor most significant.
  std::size_t index(const Degree& g) const {
    check(g);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * static_cast<std::size_t>(factors_[i]) + g.coords[i];
    return idx;
  }

  Degree element(std::size_t idx) const {
    Degree d;
    d.coords.assign(factors_.size(), 0);
    for (std::size_t i = factors_.size(); i-- > 0;) {
      d.coords[i] = static_cast<int>(idx % static_cast<std::size_t>(factors_[i]));
      idx /= static_cast<std::size_t>(factors_[i]);
    }
    return d;
  }

  std::vector<Degree> elements() const {
    std::vector<Degree> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
    return out;
  }

  /// Standard generators e_1..e_k.
  std::vector<Degree> generators() const {
    std::vector<Degree> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Degree g = zero();
      g.coords[i] = factors_[i] > 1 ? 1 : 0;
      out.push_back(g);
    }
    return out;
  }

  friend bool operator==(const GradingGroup& a, const GradingGroup& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<int> factors_;
  int exponent_ = 1;
  std::size_t order_ = 1;
};

using IntMatrix = std::vector<std::vector<long long>>;

class Bicharacter {
 public:
  /// beta(a,b) = zeta_n^(ab) on Z/n.
  static Bicharacter anyonic(int n) { return from_matrix(GradingGroup::cyclic(n), IntMatrix{{1}}); }

  /// beta(e_i, e_j) = zeta_{gcd(n_i,n_j)}^(B_ij), extended bimultiplicatively. On Z/n this is
  /// zeta_n^(g B h); B_ij is reduced mod gcd(n_i, n_j), the only range on which it is well defined.
  static Bicharacter from_matrix(GradingGroup group, IntMatrix matrix) {
    const std::size_t k = group.rank();
    if (matrix.size() != k) throw InvalidArgument("bicharacter matrix must be k x k for a rank-k group");
    const auto& n = group.factors();
    std::vector<std::vector<long long>> scale(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i) {
      if (matrix[i].size() != k) throw InvalidArgument("bicharacter matrix must be k x k for a rank-k group");
      for (std::size_t j = 0; j < k; ++j) {
        const int g = std::gcd(n[i], n[j]);
        matrix[i][j] = detail::mod_floor(matrix[i][j], g);
        scale[i][j] = group.exponent() / g;
      }
    }
    Bicharacter bi(std::move(group));
    bi.matrix_ = std::move(matrix);
    bi.scale_ = std::move(scale);
    bi.powers_.reserve(static_cast<std::size_t>(bi.group_.exponent()));
    for (int e = 0; e < bi.group_.exponent(); ++e) bi.powers_.push_back(root_of_unity(bi.group_.exponent(), e));
    return bi;
  }

  /// Raw value table indexed [index(g) * |G| + index(h)]. Not bimultiplicative by construction.
  static Bicharacter from_table(GradingGroup group, std::vector<CycNum> table) {
    if (table.size() != group.order() * group.order()) {
      throw InvalidArgument("bicharacter table must have |G|^2 entries");
    }
    Bicharacter bi(std::move(group));
    bi.table_ = std::move(table);
    return bi;
  }

  const GradingGroup& group() const noexcept { return group_; }
  const std::optional<IntMatrix>& matrix() const noexcept { return matrix_; }
  bool has_table() const noexcept { return !table_.empty(); }
  const std::vector<CycNum>& table() const noexcept { return table_; }

  /// True for Z/n with matrix [1], the phase exp(2 pi i |x||y| / n).
  bool is_anyonic() const {
    return matrix_ && group_.rank() == 1 && (*matrix_)[0][0] == (group_.exponent() == 1 ? 0 : 1);
  }

  /// Exponent of zeta_E in beta(g,h); matrix form only.
  long long exponent_of(const Degree& g, const Degree& h) const {
    long long e = 0;
    const auto& m = *matrix_;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
      if (g.coords[i] == 0) continue;
      for (std::size_t j = 0; j < h.coords.size(); ++j) e += g.coords[i] * m[i][j] * scale_[i][j] * h.coords[j];
    }
    return detail::mod_floor(e, group_.exponent());
  }

  const CycNum& operator()(const Degree& g, const Degree& h) const {
    if (matrix_) return powers_[static_cast<std::size_t>(exponent_of(g, h))];
    return table_[group_.index(g) * group_.order() + group_.index(h)];
  }

  const CycNum& at_index(std::size_t gi, std::size_t hi) const {
    if (matrix_) return (*this)(group_.element(gi), group_.element(hi));
    return table_[gi * group_.order() + hi];
  }

 private:
  explicit Bicharacter(GradingGroup group) : group_(std::move(group)) {}

  GradingGroup group_;
  std::optional<IntMatrix> matrix_;
  IntMatrix scale_;  // exponent / gcd(n_i, n_j)
  std::vector<CycNum> powers_;
  std::vector<CycNum> table_;
};

/// beta(g,h), the scalar picked up when x of degree g is moved past y of degree h.
inline CycNum braiding_phase(const Bicharacter& bi, const Degree& g, const Degree& h) {
  bi.group().check(g);
  bi.group().check(h);
  return bi(g, h);
}

/// beta(g,h) beta(h,g) = 1 on all pairs of standard generators.
inline bool is_skew(const Bicharacter& bi) {
  const auto gens = bi.group().generators();
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      if (!(bi(g, h) * bi(h, g)).is_one()) return false;
    }
  }
  return true;
}

struct BicharacterReport {
  bool pass = true;
  std::string failure;  // which law failed
  std::vector<Degree> witness;
  CycNum lhs, rhs;
};

/**
 * Checks normalization beta(0,h) = beta(g,0) = 1, the order relations
 * beta(e_i,h)^(n_i) = 1, and bimultiplicativity in both slots. Generator
 * triples are always checked; when |G|^3 is at most 10^6 every triple of
 * group elements is checked, which is what a raw table needs.
 */
inline BicharacterReport validate_bicharacter(const Bicharacter& bi) {
  const auto& G = bi.group();
  BicharacterReport report;
  auto fail = [&](std::string what, std::vector<Degree> w, CycNum l, CycNum r) {
    report.pass = false;
    report.failure = std::move(what);
    report.witness = std::move(w);
    report.lhs = std::move(l);
    report.rhs = std::move(r);
    return report;
  };

  const bool exhaustive = G.order() <= 100;
  const auto probe = exhaustive ? G.elements() : G.generators();
  const Degree zero = G.zero();
  for (const auto& g : probe) {
    if (!bi(zero, g).is_one()) return fail("normalization beta(0,h) = 1", {zero, g}, bi(zero, g), 1);
    if (!bi(g, zero).is_one()) return fail("normalization beta(g,0) = 1", {g, zero}, bi(g, zero), 1);
  }
  const auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& h : probe) {
      const int n = G.factors()[i];
      const CycNum left = bi(gens[i], h).pow(n);
      if (!left.is_one()) return fail("order relation beta(e_i,h)^n_i = 1", {gens[i], h}, left, 1);
      const CycNum right = bi(h, gens[i]).pow(n);
      if (!right.is_one()) return fail("order relation beta(h,e_i)^n_i = 1", {h, gens[i]}, right, 1);
    }
  }
  for (const auto& g : probe) {
    for (const auto& g2 : probe) {
      const Degree sum = G.add(g, g2);
      for (const auto& h : probe) {
        const CycNum l1 = bi(sum, h);
        const CycNum r1 = bi(g, h) * bi(g2, h);
        if (!(l1 == r1)) return fail("left multiplicativity beta(g+g',h) = beta(g,h)beta(g',h)", {g, g2, h}, l1, r1);
        const CycNum l2 = bi(h, sum);
        const CycNum r2 = bi(h, g) * bi(h, g2);
        if (!(l2 == r2)) return fail("right multiplicativity beta(h,g+g') = beta(h,g)beta(h,g')", {h, g, g2}, l2, r2);
      }
    }
  }
  return report;
}

}  // namespace anyonic
