#pragma once

/**
 * @file axioms.hpp
 * @brief Exact verification of the anyonic Lie algebra axioms on structure constants.
 *
 * Every check contracts the sparse tensors into a left and a right side keyed
 * by the free indices and compares them entry by entry. Index tuples missing
 * from both sides are zero on both sides, so a pass covers every tuple.
 *
 * The phases use beta(p(mu), p(nu)) from the spec's bicharacter. For the
 * anyonic bicharacter on Z/n this is exp(2 pi i p(mu)p(nu)/n). The cocommutation
 * phase p(l)(2p(n) + p(a)) is read as beta(p(l),p(n))^2 beta(p(l),p(a)).
 */

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "anyonic/algebra.hpp"

namespace anyonic {

enum class Axiom { grading, coalgebra, bracket_counit, delta_bracket, cocommutation, braided_jacobi, antisymmetry };

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::grading: return "grading";
    case Axiom::coalgebra: return "coalgebra";
    case Axiom::bracket_counit: return "bracket_counit";
    case Axiom::delta_bracket: return "delta_bracket";
    case Axiom::cocommutation: return "cocommutation";
    case Axiom::braided_jacobi: return "braided_jacobi";
    case Axiom::antisymmetry: return "antisymmetry";
  }
  return "?";
}

struct Witness {
  std::string law;
  std::vector<int> indices;
  CycNum lhs;
  CycNum rhs;
};

struct AxiomResult {
  Axiom axiom = Axiom::grading;
  bool pass = true;
  bool informational = false;
  std::size_t failures = 0;  // total failing tuples; witnesses may be truncated
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  std::vector<std::string> notes;

  /// Verdict over the non-informational checks.
  bool pass() const {
    for (const auto& r : results) {
      if (!r.informational && !r.pass) return false;
    }
    return true;
  }

  const AxiomResult* find(Axiom a) const {
    for (const auto& r : results) {
      if (r.axiom == a) return &r;
    }
    return nullptr;
  }

  /// Non-informational axioms that failed, in check order.
  std::vector<Axiom> failed() const {
    std::vector<Axiom> out;
    for (const auto& r : results) {
      if (!r.informational && !r.pass) out.push_back(r.axiom);
    }
    return out;
  }
};

struct CheckOptions {
  std::size_t max_witnesses = 8;
};

namespace detail {

using Key4 = std::array<int, 4>;
using SideMap = std::map<Key4, CycNum>;

inline void accumulate(SideMap& side, const Key4& key, const CycNum& value) {
  auto [it, inserted] = side.try_emplace(key, value);
  if (!inserted) it->second += value;
}

/// Compares two sides over the union of their keys; `arity` leading key slots are reported.
inline void compare_sides(const SideMap& lhs, const SideMap& rhs, std::size_t arity, std::string_view law,
                          AxiomResult& result, const CheckOptions& opts) {
  auto report = [&](const Key4& key, const CycNum& l, const CycNum& r) {
    if (l == r) return;
    result.pass = false;
    ++result.failures;
    if (result.witnesses.size() < opts.max_witnesses) {
      result.witnesses.push_back(Witness{std::string(law), std::vector<int>(key.begin(), key.begin() + arity), l, r});
    }
  };
  const CycNum zero;
  auto li = lhs.begin();
  auto ri = rhs.begin();
  while (li != lhs.end() || ri != rhs.end()) {
    if (ri == rhs.end() || (li != lhs.end() && li->first < ri->first)) {
      report(li->first, li->second, zero);
      ++li;
    } else if (li == lhs.end() || ri->first < li->first) {
      report(ri->first, zero, ri->second);
      ++ri;
    } else {
      report(li->first, li->second, ri->second);
      ++li;
      ++ri;
    }
  }
}

}  // namespace detail

/// eps^mu != 0 => p(mu) = 0; d^mu_{nu rho} != 0 => p(mu) = p(nu)+p(rho); c^{mu nu}_rho != 0 => p(rho) = p(mu)+p(nu).
inline AxiomResult check_grading(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  AxiomResult result{Axiom::grading, true, false, 0, {}, {}};
  const auto& G = spec.group();
  auto fail = [&](std::string law, std::vector<int> idx, const CycNum& v) {
    result.pass = false;
    ++result.failures;
    if (result.witnesses.size() < opts.max_witnesses) {
      result.witnesses.push_back(Witness{std::move(law), std::move(idx), v, CycNum()});
    }
  };
  for (const auto& [mu, v] : spec.eps) {
    if (!(spec.degree(mu) == G.zero())) fail("eps^mu nonzero but p(mu) != 0", {mu}, v);
  }
  for (const auto& [idx, v] : spec.d) {
    if (!(spec.degree(idx[0]) == G.add(spec.degree(idx[1]), spec.degree(idx[2])))) {
      fail("d^mu_{nu rho} nonzero but p(mu) != p(nu) + p(rho)", {idx[0], idx[1], idx[2]}, v);
    }
  }
  for (const auto& [idx, v] : spec.c) {
    if (!(spec.degree(idx[2]) == G.add(spec.degree(idx[0]), spec.degree(idx[1])))) {
      fail("c^{mu nu}_rho nonzero but p(rho) != p(mu) + p(nu)", {idx[0], idx[1], idx[2]}, v);
    }
  }
  return result;
}

/// Coassociativity d^mu_{a l} d^a_{nu rho} = d^mu_{nu a} d^a_{rho l} and both counit laws.
inline AxiomResult check_coalgebra(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  using detail::accumulate;
  AxiomResult result{Axiom::coalgebra, true, false, 0, {}, {}};
  const detail::IndexedSpec ix(spec);
  detail::SideMap lhs, rhs;
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (const auto& [al, v1] : ix.d(mu)) {
      for (const auto& [nr, v2] : ix.d(al.first)) accumulate(lhs, {mu, nr.first, nr.second, al.second}, v1 * v2);
    }
    for (const auto& [na, v1] : ix.d(mu)) {
      for (const auto& [rl, v2] : ix.d(na.second)) accumulate(rhs, {mu, na.first, rl.first, rl.second}, v1 * v2);
    }
  }
  detail::compare_sides(lhs, rhs, 4, "coassociativity", result, opts);

  detail::SideMap left_counit, right_counit, identity;
  for (int mu = 0; mu < ix.dim; ++mu) {
    identity[{mu, mu, 0, 0}] = 1;
    for (const auto& [pair, v] : ix.d(mu)) {
      const CycNum& e_left = ix.eps[static_cast<std::size_t>(pair.first)];
      if (!e_left.is_zero()) accumulate(left_counit, {mu, pair.second, 0, 0}, v * e_left);
      const CycNum& e_right = ix.eps[static_cast<std::size_t>(pair.second)];
      if (!e_right.is_zero()) accumulate(right_counit, {mu, pair.first, 0, 0}, v * e_right);
    }
  }
  detail::compare_sides(left_counit, identity, 2, "left counit d^mu_{a nu} eps^a = delta^mu_nu", result, opts);
  detail::compare_sides(right_counit, identity, 2, "right counit d^mu_{nu a} eps^a = delta^mu_nu", result, opts);
  return result;
}

/// c^{mu nu}_a eps^a = eps^mu eps^nu.
inline AxiomResult check_bracket_counit(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  AxiomResult result{Axiom::bracket_counit, true, false, 0, {}, {}};
  const detail::IndexedSpec ix(spec);
  detail::SideMap lhs, rhs;
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (int nu = 0; nu < ix.dim; ++nu) {
      for (const auto& [a, v] : ix.c(mu, nu)) {
        const CycNum& e = ix.eps[static_cast<std::size_t>(a)];
        if (!e.is_zero()) detail::accumulate(lhs, {mu, nu, 0, 0}, v * e);
      }
      const CycNum prod = ix.eps[static_cast<std::size_t>(mu)] * ix.eps[static_cast<std::size_t>(nu)];
      if (!prod.is_zero()) rhs[{mu, nu, 0, 0}] = prod;
    }
  }
  detail::compare_sides(lhs, rhs, 2, "c^{mu nu}_a eps^a = eps^mu eps^nu", result, opts);
  return result;
}

/// c^{mu nu}_a d^a_{rho l} = beta(p(b),p(g)) d^mu_{a b} d^nu_{g e} c^{b e}_l c^{a g}_rho, phase per summand.
inline AxiomResult check_delta_bracket(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  AxiomResult result{Axiom::delta_bracket, true, false, 0, {}, {}};
  const detail::IndexedSpec ix(spec);
  detail::SideMap lhs, rhs;
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (int nu = 0; nu < ix.dim; ++nu) {
      for (const auto& [a, cv] : ix.c(mu, nu)) {
        for (const auto& [rl, dv] : ix.d(a)) detail::accumulate(lhs, {mu, nu, rl.first, rl.second}, cv * dv);
      }
    }
  }
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (const auto& [ab, d1] : ix.d(mu)) {
      const auto [alpha, beta] = ab;
      for (int nu = 0; nu < ix.dim; ++nu) {
        for (const auto& [ge, d2] : ix.d(nu)) {
          const auto [gamma, delta] = ge;
          const auto& right_bracket = ix.c(beta, delta);
          const auto& left_bracket = ix.c(alpha, gamma);
          if (right_bracket.empty() || left_bracket.empty()) continue;
          const CycNum front = ix.beta(beta, gamma) * d1 * d2;
          for (const auto& [lambda, c1] : right_bracket) {
            for (const auto& [rho, c2] : left_bracket) {
              detail::accumulate(rhs, {mu, nu, rho, lambda}, front * c1 * c2);
            }
          }
        }
      }
    }
  }
  detail::compare_sides(lhs, rhs, 4, "Delta[x,y] = [x_A,y_B] (x) [x^A,y^B] with braiding", result, opts);
  return result;
}

/// d^mu_{l a} c^{a nu}_rho = beta(p(l),p(nu))^2 beta(p(l),p(a)) d^mu_{a l} c^{a nu}_rho.
inline AxiomResult check_cocommutation(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  AxiomResult result{Axiom::cocommutation, true, false, 0, {}, {}};
  if (!spec.grading.is_anyonic()) {
    result.notes.push_back("bicharacter mode: phase read as beta(p(lambda),p(nu))^2 * beta(p(lambda),p(alpha))");
  }
  const detail::IndexedSpec ix(spec);
  detail::SideMap lhs, rhs;
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (const auto& [la, dv] : ix.d(mu)) {
      const auto [lambda, alpha] = la;
      for (int nu = 0; nu < ix.dim; ++nu) {
        for (const auto& [rho, cv] : ix.c(alpha, nu)) detail::accumulate(lhs, {mu, nu, rho, lambda}, dv * cv);
      }
    }
    for (const auto& [al, dv] : ix.d(mu)) {
      const auto [alpha, lambda] = al;
      for (int nu = 0; nu < ix.dim; ++nu) {
        const auto& bracket = ix.c(alpha, nu);
        if (bracket.empty()) continue;
        const CycNum& b = ix.beta(lambda, nu);
        const CycNum front = b * b * ix.beta(lambda, alpha) * dv;
        for (const auto& [rho, cv] : bracket) detail::accumulate(rhs, {mu, nu, rho, lambda}, front * cv);
      }
    }
  }
  detail::compare_sides(lhs, rhs, 4, "x_A (x) [x^A,y] = x^A (x) [x_A,y] with double braiding", result, opts);
  return result;
}

/// c^{mu nu}_a c^{rho a}_l = beta(p(b),p(mu)) d^rho_{a b} c^{a mu}_g c^{b nu}_e c^{g e}_l.
inline AxiomResult check_braided_jacobi(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  AxiomResult result{Axiom::braided_jacobi, true, false, 0, {}, {}};
  const detail::IndexedSpec ix(spec);
  detail::SideMap lhs, rhs;
  for (int mu = 0; mu < ix.dim; ++mu) {
    for (int nu = 0; nu < ix.dim; ++nu) {
      for (const auto& [alpha, c1] : ix.c(mu, nu)) {
        for (int rho = 0; rho < ix.dim; ++rho) {
          for (const auto& [lambda, c2] : ix.c(rho, alpha)) detail::accumulate(lhs, {mu, nu, rho, lambda}, c1 * c2);
        }
      }
    }
  }
  for (int rho = 0; rho < ix.dim; ++rho) {
    for (const auto& [ab, dv] : ix.d(rho)) {
      const auto [alpha, beta] = ab;
      for (int mu = 0; mu < ix.dim; ++mu) {
        const auto& first = ix.c(alpha, mu);
        if (first.empty()) continue;
        const CycNum front = ix.beta(beta, mu) * dv;
        for (const auto& [gamma, c1] : first) {
          for (int nu = 0; nu < ix.dim; ++nu) {
            for (const auto& [delta, c2] : ix.c(beta, nu)) {
              for (const auto& [lambda, c3] : ix.c(gamma, delta)) {
                detail::accumulate(rhs, {mu, nu, rho, lambda}, front * c1 * c2 * c3);
              }
            }
          }
        }
      }
    }
  }
  detail::compare_sides(lhs, rhs, 4, "[x,[y,z]] = [[x_A,y],[x^A,z]] with braiding", result, opts);
  return result;
}

/// Informational: c^{mu nu}_rho = -beta(p(mu),p(nu)) c^{nu mu}_rho. Never affects the verdict.
inline AxiomResult check_antisymmetry(const AlgebraSpec& spec, const CheckOptions& opts = {}) {
  AxiomResult result{Axiom::antisymmetry, true, false, 0, {}, {}};
  result.informational = true;
  const detail::IndexedSpec ix(spec);
  detail::SideMap lhs, rhs;
  for (const auto& [idx, v] : spec.c) {
    lhs[{idx[0], idx[1], idx[2], 0}] = v;
    detail::accumulate(rhs, {idx[1], idx[0], idx[2], 0}, -(ix.beta(idx[1], idx[0]) * v));
  }
  detail::compare_sides(lhs, rhs, 3, "[x,y] = -beta(|x|,|y|)[y,x]", result, opts);
  return result;
}

struct VerifyOptions {
  CheckOptions check;
  bool stop_at_first_failure = false;
  bool colour_mode = false;  // warn when beta is not skew
};

/// Runs the six axiom checks in order, then the informational antisymmetry check.
inline AxiomReport verify_all(const AlgebraSpec& spec, const VerifyOptions& opts = {}) {
  spec.validate();
  AxiomReport report;
  if (!spec.grading.is_anyonic()) {
    report.notes.push_back("bicharacter mode: anyonic phases replaced by beta(p(mu),p(nu))");
  }
  if (opts.colour_mode && !is_skew(spec.grading)) {
    report.notes.push_back("warning: colour mode requested but the bicharacter is not skew");
  }
  using Check = AxiomResult (*)(const AlgebraSpec&, const CheckOptions&);
  constexpr std::array<Check, 6> checks{check_grading,       check_coalgebra,     check_bracket_counit,
                                        check_delta_bracket, check_cocommutation, check_braided_jacobi};
  for (Check check : checks) {
    report.results.push_back(check(spec, opts.check));
    if (opts.stop_at_first_failure && !report.results.back().pass) return report;
  }
  report.results.push_back(check_antisymmetry(spec, opts.check));
  return report;
}

/// Short-circuit verdict used by the search; cheapest checks first.
inline bool satisfies_axioms(const AlgebraSpec& spec) {
  const CheckOptions opts{1};
  return check_grading(spec, opts).pass && check_bracket_counit(spec, opts).pass &&
         check_coalgebra(spec, opts).pass && check_cocommutation(spec, opts).pass &&
         check_delta_bracket(spec, opts).pass && check_braided_jacobi(spec, opts).pass;
}

}  // namespace anyonic
