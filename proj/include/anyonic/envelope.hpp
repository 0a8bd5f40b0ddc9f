#pragma once

/**
 * @file envelope.hpp
 * @brief Quadratic relations of the enveloping algebra U(L) and a rewrite engine for it.
 *
 * generate_relations() produces, for every ordered pair of generators,
 *
 *   x^mu x^nu = beta(p(b), p(nu)) d^mu_{a b} c^{a nu}_g x^g x^b.
 *
 * build_rewrite_system() orients these against a monomial order. Words are
 * compared by length, then by total generator weight, then lexicographically
 * through the generator ranking. The degree-2 relations are row reduced with
 * the largest word as pivot, which derives every consequence of the form
 * "x^mu x^nu = 0" or "(x^mu)^2 = 0" that the quadratic relations force; each
 * pivot word becomes a rule "pivot -> strictly smaller words".
 */

#include <algorithm>
#include <concepts>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "anyonic/algebra.hpp"
#include "anyonic/axioms.hpp"

namespace anyonic {

using Word = std::vector<int>;

/// Element of the free algebra on the generators: sparse map from words to coefficients.
class Poly {
 public:
  using Map = std::map<Word, CycNum>;

  Poly() = default;

  static Poly one() { return word({}); }
  static Poly generator(int g) { return word({g}); }
  static Poly word(Word w, CycNum coeff = 1) {
    Poly p;
    p.add(w, coeff);
    return p;
  }

  void add(const Word& w, const CycNum& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CycNum coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CycNum() : it->second;
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Poly& operator+=(const Poly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add(w, ca * cb);
      }
    }
    return out;
  }

  friend Poly operator*(const CycNum& s, const Poly& p) {
    Poly out;
    for (const auto& [w, c] : p.terms_) out.add(w, s * c);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// x^mu x^nu = sum rhs[(g,b)] x^g x^b.
struct QuadRelation {
  int mu = 0;
  int nu = 0;
  std::map<std::pair<int, int>, CycNum> rhs;
};

struct RelationOptions {
  bool force = false;  // skip the verify_all precondition
};

inline std::vector<QuadRelation> generate_relations(const AlgebraSpec& spec, const RelationOptions& opts = {}) {
  if (!opts.force) {
    const auto report = verify_all(spec, {{1}, true});
    if (!report.pass()) {
      throw InvalidArgument("algebra does not satisfy the axioms; relations need a verified spec (use force)");
    }
  }
  const detail::IndexedSpec ix(spec);
  std::vector<QuadRelation> out;
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (int nu = 0; nu < ix.dim; ++nu) {
      QuadRelation rel{mu, nu, {}};
      for (const auto& [ab, dv] : ix.d(mu)) {
        const auto [alpha, beta] = ab;
        const auto& bracket = ix.c(alpha, nu);
        if (bracket.empty()) continue;
        const CycNum front = ix.beta(beta, nu) * dv;
        for (const auto& [gamma, cv] : bracket) {
          auto& slot = rel.rhs[{gamma, beta}];
          slot += front * cv;
        }
      }
      std::erase_if(rel.rhs, [](const auto& kv) { return kv.second.is_zero(); });
      out.push_back(std::move(rel));
    }
  }
  return out;
}

/// Length, then total weight, then lexicographic by generator rank.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder natural(int generators) {
    std::vector<int> seq(static_cast<std::size_t>(generators));
    for (int i = 0; i < generators; ++i) seq[static_cast<std::size_t>(i)] = i;
    return from_sequence(std::move(seq));
  }

  /// `sequence` lists every generator once, smallest first. Empty weights mean all 1.
  static MonomialOrder from_sequence(std::vector<int> sequence, std::vector<int> weights = {}) {
    const auto n = sequence.size();
    MonomialOrder order;
    order.rank_.assign(n, -1);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const int g = sequence[pos];
      if (g < 0 || static_cast<std::size_t>(g) >= n || order.rank_[static_cast<std::size_t>(g)] != -1) {
        throw InvalidArgument("generator order must be a permutation of all generators");
      }
      order.rank_[static_cast<std::size_t>(g)] = static_cast<int>(pos);
    }
    if (weights.empty()) weights.assign(n, 1);
    if (weights.size() != n) throw InvalidArgument("one weight per generator is required");
    for (int w : weights) {
      if (w < 0) throw InvalidArgument("generator weights must be nonnegative");
    }
    order.sequence_ = std::move(sequence);
    order.weight_ = std::move(weights);
    return order;
  }

  int size() const noexcept { return static_cast<int>(rank_.size()); }
  const std::vector<int>& sequence() const noexcept { return sequence_; }
  const std::vector<int>& weights() const noexcept { return weight_; }

  long weight(const Word& w) const {
    long total = 0;
    for (int g : w) total += weight_[static_cast<std::size_t>(g)];
    return total;
  }

  bool less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const long wa = weight(a);
    const long wb = weight(b);
    if (wa != wb) return wa < wb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int ra = rank_[static_cast<std::size_t>(a[i])];
      const int rb = rank_[static_cast<std::size_t>(b[i])];
      if (ra != rb) return ra < rb;
    }
    return false;
  }

  /// Comparator placing larger words first.
  struct Greater {
    const MonomialOrder* order;
    bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
  };

 private:
  std::vector<int> rank_;
  std::vector<int> weight_;
  std::vector<int> sequence_;
};

/// Oriented quadratic rules with the derived zero products.
class RewriteSystem {
 public:
  using Pair = std::pair<int, int>;

  RewriteSystem(int generators, MonomialOrder order, std::map<Pair, Poly> rules)
      : generators_(generators), order_(std::move(order)), rules_(std::move(rules)) {
    for (const auto& [lhs, rhs] : rules_) {
      if (!rhs.is_zero()) continue;
      if (lhs.first == lhs.second) {
        nilpotents_.insert(lhs.first);
      } else {
        zero_pairs_.insert(lhs);
      }
    }
  }

  int generator_count() const noexcept { return generators_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::map<Pair, Poly>& rules() const noexcept { return rules_; }
  const std::set<Pair>& zero_pairs() const noexcept { return zero_pairs_; }
  const std::set<int>& nilpotents() const noexcept { return nilpotents_; }

  /// True when x^a x^b = 0, including squares.
  bool annihilates(int a, int b) const { return a == b ? nilpotents_.contains(a) : zero_pairs_.contains({a, b}); }

  const Poly* rule(int a, int b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
  }

  std::optional<std::size_t> leftmost_redex(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (rule(w[i], w[i + 1])) return i;
    }
    return std::nullopt;
  }

  /// Every word obtained by applying one rule at one position.
  std::vector<Poly> one_step(const Word& w) const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (const Poly* r = rule(w[i], w[i + 1])) out.push_back(splice(w, i, 2, *r, 1));
    }
    return out;
  }

  Poly normal_form(const Poly& p) const {
    return reduce(p, [this](const Word& w, const CycNum& c) -> std::optional<Poly> {
      if (auto pos = leftmost_redex(w)) return splice(w, *pos, 2, *rule(w[*pos], w[*pos + 1]), c);
      return std::nullopt;
    });
  }

  /// Max-first reduction: the largest pending word is either final or replaced by smaller ones.
  template <class Step>
  Poly reduce(const Poly& p, Step step) const {
    std::map<Word, CycNum, MonomialOrder::Greater> pending(MonomialOrder::Greater{&order_});
    for (const auto& [w, c] : p.terms()) pending.emplace(w, c);
    Poly out;
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      if (node.mapped().is_zero()) continue;
      std::optional<Poly> next = step(node.key(), node.mapped());
      if (!next) {
        out.add(node.key(), node.mapped());
        continue;
      }
      for (const auto& [w, c] : next->terms()) {
        auto [it, inserted] = pending.try_emplace(w, c);
        if (!inserted) it->second += c;
      }
    }
    return out;
  }

  /// Replaces w[pos, pos+len) by `middle`, scaling by `coeff`.
  static Poly splice(const Word& w, std::size_t pos, std::size_t len, const Poly& middle, const CycNum& coeff) {
    Poly out;
    for (const auto& [mid, c] : middle.terms()) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), mid.begin(), mid.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
      out.add(next, coeff * c);
    }
    return out;
  }

 private:
  int generators_;
  MonomialOrder order_;
  std::map<Pair, Poly> rules_;
  std::set<Pair> zero_pairs_;
  std::set<int> nilpotents_;
};

namespace detail {

inline std::string generator_label(int g, const std::vector<std::string>* names) {
  if (names && static_cast<std::size_t>(g) < names->size()) return (*names)[static_cast<std::size_t>(g)];
  return "x" + std::to_string(g);
}

/// First relation whose extra words are not below its larger quasi-commuting word.
inline std::optional<std::pair<int, int>> find_bad_shape(std::span<const QuadRelation> rels, const MonomialOrder& order) {
  for (const auto& rel : rels) {
    const Word ab{rel.mu, rel.nu};
    const Word ba{rel.nu, rel.mu};
    const Word& top = order.less(ab, ba) ? ba : ab;
    for (const auto& [pair, c] : rel.rhs) {
      const Word w{pair.first, pair.second};
      if (w == ab || w == ba) continue;
      if (!order.less(w, top)) return std::pair{rel.mu, rel.nu};
    }
  }
  return std::nullopt;
}

/// Weight 0 on generators present in every extra word, 1 elsewhere.
inline std::optional<MonomialOrder> homogenizing_order(std::span<const QuadRelation> rels, int generators) {
  std::optional<std::set<int>> common;
  for (const auto& rel : rels) {
    for (const auto& [pair, c] : rel.rhs) {
      const bool swap = (pair.first == rel.nu && pair.second == rel.mu);
      const bool same = (pair.first == rel.mu && pair.second == rel.nu);
      if (swap || same) continue;
      std::set<int> letters{pair.first, pair.second};
      if (!common) {
        common = letters;
      } else {
        std::set<int> keep;
        std::ranges::set_intersection(*common, letters, std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
    }
  }
  if (!common || common->empty()) return std::nullopt;
  std::vector<int> weights(static_cast<std::size_t>(generators), 1);
  for (int g : *common) weights[static_cast<std::size_t>(g)] = 0;
  std::vector<int> seq(static_cast<std::size_t>(generators));
  for (int i = 0; i < generators; ++i) seq[static_cast<std::size_t>(i)] = i;
  return MonomialOrder::from_sequence(std::move(seq), std::move(weights));
}

}  // namespace detail

/**
 * Orients quasi-commutation relations into a rewrite system.
 *
 * Accepted shape: the right side of the (mu,nu) relation is supported on the
 * swapped word x^nu x^mu, on x^mu x^nu itself, and on words strictly below the
 * larger of those two. Anything else throws UnsupportedShape naming the pair.
 * Without an explicit order the natural order is tried first, then one that
 * gives weight 0 to the generators shared by all extra words (the homogenizing
 * x^0 of the C + g ansatz).
 */
inline RewriteSystem build_rewrite_system(std::span<const QuadRelation> rels, int generators,
                                          std::optional<MonomialOrder> order = std::nullopt,
                                          const std::vector<std::string>* names = nullptr) {
  for (const auto& rel : rels) {
    auto bad = [&](int g) { return g < 0 || g >= generators; };
    if (bad(rel.mu) || bad(rel.nu)) throw InvalidArgument("relation refers to an unknown generator");
    for (const auto& [pair, c] : rel.rhs) {
      if (bad(pair.first) || bad(pair.second)) throw InvalidArgument("relation refers to an unknown generator");
    }
  }
  MonomialOrder chosen = order ? *order : MonomialOrder::natural(generators);
  if (chosen.size() != generators) throw InvalidArgument("monomial order size does not match generator count");
  auto bad = detail::find_bad_shape(rels, chosen);
  if (bad && !order) {
    if (auto alt = detail::homogenizing_order(rels, generators); alt && !detail::find_bad_shape(rels, *alt)) {
      chosen = *alt;
      bad.reset();
    }
  }
  if (bad) {
    throw UnsupportedShape("relation for " + detail::generator_label(bad->first, names) + "*" +
                           detail::generator_label(bad->second, names) +
                           " is not a quasi-commutation plus lower terms under the monomial order");
  }

  // Row reduction over degree-2 words, pivoting on the largest word.
  using Row = std::map<Word, CycNum, MonomialOrder::Greater>;
  const MonomialOrder::Greater greater{&chosen};
  std::map<Word, Row, MonomialOrder::Greater> pivots(greater);
  auto reduce_row = [&](Row& row) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = row.begin(); it != row.end(); ++it) {
        auto piv = pivots.find(it->first);
        if (piv == pivots.end()) continue;
        const CycNum factor = it->second;
        for (const auto& [w, c] : piv->second) {
          auto [slot, inserted] = row.try_emplace(w, -(factor * c));
          if (!inserted) slot->second -= factor * c;
        }
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
        changed = true;
        break;
      }
    }
  };
  for (const auto& rel : rels) {
    Row row(greater);
    row[Word{rel.mu, rel.nu}] = 1;
    for (const auto& [pair, c] : rel.rhs) {
      auto [slot, inserted] = row.try_emplace(Word{pair.first, pair.second}, -c);
      if (!inserted) slot->second -= c;
    }
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    reduce_row(row);
    if (row.empty()) continue;
    const Word lead = row.begin()->first;
    const CycNum inv = row.begin()->second.inverse();
    for (auto& [w, c] : row) c *= inv;
    for (auto& [w, other] : pivots) {
      auto hit = other.find(lead);
      if (hit == other.end()) continue;
      const CycNum factor = hit->second;
      for (const auto& [w2, c2] : row) {
        auto [slot, inserted] = other.try_emplace(w2, -(factor * c2));
        if (!inserted) slot->second -= factor * c2;
      }
      std::erase_if(other, [](const auto& kv) { return kv.second.is_zero(); });
    }
    pivots.emplace(lead, std::move(row));
  }

  std::map<RewriteSystem::Pair, Poly> rules;
  for (const auto& [lead, row] : pivots) {
    Poly rhs;
    for (const auto& [w, c] : row) {
      if (w != lead) rhs.add(w, -c);
    }
    rules.emplace(RewriteSystem::Pair{lead[0], lead[1]}, std::move(rhs));
  }
  return RewriteSystem(generators, std::move(chosen), std::move(rules));
}

/// What the confluence checker and the coproduct extension need from a reduction system.
template <class S>
concept ReductionSystem = requires(const S& s, const Word& w, const Poly& p) {
  { s.generator_count() } -> std::convertible_to<int>;
  { s.one_step(w) } -> std::same_as<std::vector<Poly>>;
  { s.normal_form(p) } -> std::same_as<Poly>;
};

struct Divergence {
  Word word;
  Poly first;
  Poly second;
};

struct ConfluenceReport {
  bool confluent = true;
  int degree_cap = 0;
  std::size_t words_checked = 0;
  std::size_t ambiguous_words = 0;
  std::vector<Divergence> divergences;
};

/// For every word of length <= degree_cap, all one-step rewrites must reach the same normal form.
template <ReductionSystem S>
ConfluenceReport check_local_confluence(const S& sys, int degree_cap, std::size_t max_divergences = 8) {
  if (degree_cap < 3) throw InvalidArgument("confluence degree cap must be at least 3");
  ConfluenceReport report;
  report.degree_cap = degree_cap;
  const int n = sys.generator_count();
  for (int len = 1; len <= degree_cap; ++len) {
    Word w(static_cast<std::size_t>(len), 0);
    while (true) {
      ++report.words_checked;
      const auto steps = sys.one_step(w);
      if (steps.size() > 1) {
        ++report.ambiguous_words;
        const Poly reference = sys.normal_form(steps.front());
        for (std::size_t i = 1; i < steps.size(); ++i) {
          Poly other = sys.normal_form(steps[i]);
          if (other == reference) continue;
          report.confluent = false;
          if (report.divergences.size() < max_divergences) report.divergences.push_back({w, reference, other});
          break;
        }
      }
      std::size_t pos = w.size();
      while (pos > 0 && w[pos - 1] == n - 1) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
  return report;
}

/// Element of U(L) (x) U(L) keyed by (left word, right word).
class TensorSquarePoly {
 public:
  using Map = std::map<std::pair<Word, Word>, CycNum>;

  void add(const Word& left, const Word& right, const CycNum& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({left, right}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const TensorSquarePoly& a, const TensorSquarePoly& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Total grading degree of a word.
inline Degree word_degree(const AlgebraSpec& spec, const Word& w) {
  Degree d = spec.group().zero();
  for (int g : w) d = spec.group().add(d, spec.degree(g));
  return d;
}

/// Common degree of all words of p; nullopt when mixed or zero.
inline std::optional<Degree> poly_degree(const AlgebraSpec& spec, const Poly& p) {
  std::optional<Degree> deg;
  for (const auto& [w, c] : p.terms()) {
    Degree d = word_degree(spec, w);
    if (deg && !(*deg == d)) return std::nullopt;
    deg = std::move(d);
  }
  return deg;
}

/// Counit extended multiplicatively: eps(x^m1 ... x^mk) = eps^m1 ... eps^mk.
inline CycNum counit_of(const AlgebraSpec& spec, const Poly& p) {
  CycNum sum;
  for (const auto& [w, c] : p.terms()) {
    CycNum term = c;
    for (int g : w) {
      term *= spec.epsilon(g);
      if (term.is_zero()) break;
    }
    sum += term;
  }
  return sum;
}

/// Normalizes both legs of a tensor.
template <ReductionSystem S>
TensorSquarePoly normalize_legs(const S& sys, const TensorSquarePoly& t) {
  std::map<Word, Poly> cache;
  auto nf = [&](const Word& w) -> const Poly& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, sys.normal_form(Poly::word(w))).first;
    return it->second;
  };
  TensorSquarePoly out;
  for (const auto& [words, c] : t.terms()) {
    const Poly& left = nf(words.first);
    if (left.is_zero()) continue;
    const Poly& right = nf(words.second);
    for (const auto& [wl, cl] : left.terms()) {
      for (const auto& [wr, cr] : right.terms()) out.add(wl, wr, c * cl * cr);
    }
  }
  return out;
}

/// Product in the braided tensor square: (a (x) b)(c (x) d) = beta(|b|,|c|) ac (x) bd, legs unnormalized.
inline TensorSquarePoly braided_product_raw(const AlgebraSpec& spec, const TensorSquarePoly& a,
                                            const TensorSquarePoly& b) {
  TensorSquarePoly out;
  for (const auto& [wa, ca] : a.terms()) {
    const Degree right_deg = word_degree(spec, wa.second);
    for (const auto& [wb, cb] : b.terms()) {
      const CycNum& phase = spec.grading(right_deg, word_degree(spec, wb.first));
      Word left = wa.first;
      left.insert(left.end(), wb.first.begin(), wb.first.end());
      Word right = wa.second;
      right.insert(right.end(), wb.second.begin(), wb.second.end());
      out.add(left, right, phase * ca * cb);
    }
  }
  return out;
}

template <ReductionSystem S>
TensorSquarePoly braided_product(const AlgebraSpec& spec, const S& sys, const TensorSquarePoly& a,
                                 const TensorSquarePoly& b) {
  return normalize_legs(sys, braided_product_raw(spec, a, b));
}

/// p (x) q with both legs normalized.
template <ReductionSystem S>
TensorSquarePoly tensor_of(const S& sys, const Poly& p, const Poly& q) {
  TensorSquarePoly t;
  for (const auto& [wp, cp] : p.terms()) {
    for (const auto& [wq, cq] : q.terms()) t.add(wp, wq, cp * cq);
  }
  return normalize_legs(sys, t);
}

/**
 * Delta extended to words as a braided algebra map:
 * (xy)_A (x) (xy)^A = x_A y_B (x) x^A y^B beta(|x^A|, |y_B|).
 * The input is used as given (not normalized first); both output legs are normalized.
 */
template <ReductionSystem S>
TensorSquarePoly delta_on_products(const AlgebraSpec& spec, const S& sys, const Poly& p) {
  std::vector<TensorSquarePoly> gen_delta(static_cast<std::size_t>(spec.dim()));
  for (const auto& [idx, v] : spec.d) gen_delta[static_cast<std::size_t>(idx[0])].add({idx[1]}, {idx[2]}, v);
  TensorSquarePoly total;
  for (const auto& [w, c] : p.terms()) {
    TensorSquarePoly acc;
    acc.add({}, {}, c);
    for (int g : w) {
      if (g < 0 || g >= spec.dim()) throw InvalidArgument("word refers to an unknown generator");
      acc = braided_product_raw(spec, acc, gen_delta[static_cast<std::size_t>(g)]);
      if (acc.is_zero()) break;
    }
    for (const auto& [words, coeff] : acc.terms()) total.add(words.first, words.second, coeff);
  }
  return normalize_legs(sys, total);
}

struct CentralityReport {
  bool central = true;
  std::vector<int> failing;  // generators g with nf(p g - g p) != 0
  std::vector<Poly> commutators;
};

template <ReductionSystem S>
CentralityReport is_central(const S& sys, const Poly& p) {
  CentralityReport report;
  for (int g = 0; g < sys.generator_count(); ++g) {
    const Poly gen = Poly::generator(g);
    Poly comm = sys.normal_form(p * gen - gen * p);
    if (comm.is_zero()) continue;
    report.central = false;
    report.failing.push_back(g);
    report.commutators.push_back(std::move(comm));
  }
  return report;
}

/**
 * U(L) modulo "D = 1" for a central grouplike D, applied at normal form.
 *
 * Generators g with g*D or D*g reducing to zero modulo the already-killed
 * generators are killed (since g = gD in the quotient). The leading word of
 * what remains of D is then rewritten as (1 - rest)/lead_coefficient. This is
 * a best-effort substitution and is reported as experimental.
 */
class QuotientSystem {
 public:
  QuotientSystem(RewriteSystem base, std::set<int> killed, Word lead, Poly lead_rhs)
      : base_(std::move(base)), killed_(std::move(killed)), lead_(std::move(lead)), lead_rhs_(std::move(lead_rhs)) {}

  int generator_count() const noexcept { return base_.generator_count(); }
  const RewriteSystem& base() const noexcept { return base_; }
  const std::set<int>& killed() const noexcept { return killed_; }
  const Word& lead() const noexcept { return lead_; }
  const Poly& lead_rhs() const noexcept { return lead_rhs_; }

  std::vector<Poly> one_step(const Word& w) const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (killed_.contains(w[i])) out.emplace_back();
      if (i + 1 < w.size()) {
        if (const Poly* r = base_.rule(w[i], w[i + 1])) out.push_back(RewriteSystem::splice(w, i, 2, *r, 1));
      }
      if (matches_lead(w, i)) out.push_back(RewriteSystem::splice(w, i, lead_.size(), lead_rhs_, 1));
    }
    return out;
  }

  Poly normal_form(const Poly& p) const {
    return base_.reduce(p, [this](const Word& w, const CycNum& c) -> std::optional<Poly> {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (killed_.contains(w[i])) return Poly();
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size()) {
          if (const Poly* r = base_.rule(w[i], w[i + 1])) return RewriteSystem::splice(w, i, 2, *r, c);
        }
        if (matches_lead(w, i)) return RewriteSystem::splice(w, i, lead_.size(), lead_rhs_, c);
      }
      return std::nullopt;
    });
  }

 private:
  bool matches_lead(const Word& w, std::size_t i) const {
    if (lead_.empty() || i + lead_.size() > w.size()) return false;
    return std::equal(lead_.begin(), lead_.end(), w.begin() + static_cast<std::ptrdiff_t>(i));
  }

  RewriteSystem base_;
  std::set<int> killed_;
  Word lead_;
  Poly lead_rhs_;
};

struct QuotientResult {
  QuotientSystem system;
  bool central = false;
  bool grouplike = false;
  std::vector<std::string> notes;
};

inline QuotientResult quotient_by_grouplike(const AlgebraSpec& spec, const RewriteSystem& rs, const Poly& element,
                                            bool force = false) {
  const Poly d_nf = rs.normal_form(element);
  if (d_nf.is_zero()) throw InvalidArgument("cannot set a zero element equal to 1");
  const std::size_t len = d_nf.terms().begin()->first.size();
  for (const auto& [w, c] : d_nf.terms()) {
    if (w.size() != len || len == 0) throw UnsupportedShape("quotient element must be a nonconstant homogeneous poly");
  }
  const bool central = is_central(rs, d_nf).central;
  const bool grouplike = delta_on_products(spec, rs, d_nf) == tensor_of(rs, d_nf, d_nf) &&
                         counit_of(spec, d_nf).is_one();
  if (!force && !(central && grouplike)) {
    throw Error("quotient element must be central and grouplike (use force to override)");
  }

  std::set<int> killed;
  auto drop_killed = [&](const Poly& p) {
    Poly out;
    for (const auto& [w, c] : p.terms()) {
      if (std::ranges::none_of(w, [&](int g) { return killed.contains(g); })) out.add(w, c);
    }
    return out;
  };
  for (bool grew = true; grew;) {
    grew = false;
    for (int g = 0; g < rs.generator_count(); ++g) {
      if (killed.contains(g)) continue;
      const Poly gen = Poly::generator(g);
      if (drop_killed(rs.normal_form(gen * d_nf)).is_zero() || drop_killed(rs.normal_form(d_nf * gen)).is_zero()) {
        killed.insert(g);
        grew = true;
      }
    }
  }
  const Poly remaining = drop_killed(d_nf);
  if (remaining.is_zero()) throw Error("quotient collapses: 1 = 0");

  const MonomialOrder& order = rs.order();
  auto lead_it = std::ranges::max_element(remaining.terms(), [&](const auto& a, const auto& b) {
    return order.less(a.first, b.first);
  });
  const Word lead = lead_it->first;
  const CycNum inv = lead_it->second.inverse();
  Poly rhs = Poly::word({}, inv);
  for (const auto& [w, c] : remaining.terms()) {
    if (w != lead) rhs.add(w, -(c * inv));
  }
  QuotientResult result{QuotientSystem(rs, std::move(killed), lead, std::move(rhs)), central, grouplike, {}};
  result.notes.push_back("experimental: quotient by a central grouplike element via substitution at normal form");
  return result;
}

}  // namespace anyonic
