#pragma once

// Property checks shared by the unit tests and the acceptance binary.
// Each returns the number of violations found.

#include <cstddef>
#include <random>
#include <string>

#include "fixtures.hpp"

namespace properties {

using namespace anyonic;

/// Field laws on random triples. Each triple lives in Q(zeta_M) for a random M
/// with the three elements given random orders dividing M, so the lcm
/// embedding is exercised as well.
inline std::size_t field_axiom_failures(std::uint64_t seed, std::size_t triples) {
  static const std::vector<std::vector<int>> families{
      {1, 2}, {1, 3}, {1, 2, 4}, {1, 5}, {1, 2, 3, 6}, {1, 2, 4, 8}, {1, 2, 3, 4, 6, 12}, {1, 7}, {1, 3, 9}, {2, 5, 10}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_family(0, families.size() - 1);
  std::size_t failures = 0;
  const CycNum zero, one(1);
  for (std::size_t t = 0; t < triples; ++t) {
    const auto& fam = families[pick_family(rng)];
    std::uniform_int_distribution<std::size_t> pick(0, fam.size() - 1);
    const CycNum a = fixtures::random_cycnum(rng, fam[pick(rng)]);
    const CycNum b = fixtures::random_cycnum(rng, fam[pick(rng)]);
    const CycNum c = fixtures::random_cycnum(rng, fam[pick(rng)]);
    failures += !((a + b) + c == a + (b + c));
    failures += !((a * b) * c == a * (b * c));
    failures += !(a + b == b + a);
    failures += !(a * b == b * a);
    failures += !(a * (b + c) == a * b + a * c);
    failures += !(a + zero == a);
    failures += !(a * one == a);
    failures += !((a - a).is_zero());
    failures += !(a - b == a + (-b));
    if (!a.is_zero()) {
      failures += !((a * a.inverse()).is_one());
      failures += !((b / a) * a == b);
    }
  }
  return failures;
}

/// nf is idempotent, returns irreducible words only, and keeps word length and G-degree.
inline std::size_t normal_form_failures(const fixtures::Example& ex, std::uint64_t seed, std::size_t samples) {
  const RewriteSystem rs = fixtures::rewrite(ex);
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Word w = fixtures::random_word(rng, ex.spec.dim(), 5);
    const Poly nf = rs.normal_form(Poly::word(w));
    failures += !(rs.normal_form(nf) == nf);
    const Degree deg = word_degree(ex.spec, w);
    for (const auto& [v, c] : nf.terms()) {
      failures += rs.leftmost_redex(v).has_value();
      failures += v.size() != w.size();
      failures += !(word_degree(ex.spec, v) == deg);
    }
  }
  return failures;
}

/// Delta is well defined on U(L) and multiplicative for the braided tensor product:
/// Delta(w) = Delta(nf w), Delta(uv) = Delta(u)Delta(v) on normal forms, eps(uv) = eps(u)eps(v),
/// and Delta kills every rewrite rule.
inline std::size_t delta_homomorphism_failures(const fixtures::Example& ex, std::uint64_t seed, std::size_t samples) {
  const RewriteSystem rs = fixtures::rewrite(ex);
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (const auto& [pair, rhs] : rs.rules()) {
    failures += !delta_on_products(ex.spec, rs, Poly::word({pair.first, pair.second}) - rhs).is_zero();
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const Word u = fixtures::random_word(rng, ex.spec.dim(), 3);
    const Word v = fixtures::random_word(rng, ex.spec.dim(), 3);
    const Poly pu = rs.normal_form(Poly::word(u));
    const Poly pv = rs.normal_form(Poly::word(v));
    const Poly uv = Poly::word(u) * Poly::word(v);
    failures += !(delta_on_products(ex.spec, rs, uv) == delta_on_products(ex.spec, rs, rs.normal_form(uv)));
    failures += !(delta_on_products(ex.spec, rs, pu * pv) ==
                  braided_product(ex.spec, rs, delta_on_products(ex.spec, rs, pu), delta_on_products(ex.spec, rs, pv)));
    failures += !(counit_of(ex.spec, uv) == counit_of(ex.spec, pu) * counit_of(ex.spec, pv));
    failures += !(counit_of(ex.spec, rs.normal_form(uv)) == counit_of(ex.spec, uv));
  }
  return failures;
}

inline std::size_t confluence_failures(const fixtures::Example& ex, int cap) {
  const auto report = check_local_confluence(fixtures::rewrite(ex), cap);
  return report.confluent ? 0 : std::max<std::size_t>(1, report.divergences.size());
}

}  // namespace properties
