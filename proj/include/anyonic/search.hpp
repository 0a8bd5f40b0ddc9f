#pragma once

// Exhaustive search for tiny anyonic Lie algebras over a finite coefficient alphabet.
//
// Candidates are ordered by (degree assignment, eps, d, c), each an odometer
// over the alphabet with the first position varying slowest. Entries whose
// indices violate degree additivity can only be zero in a solution, so by
// default they are held at zero; this shrinks the space without changing the
// solution set. The coalgebra part is filtered before brackets are enumerated.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "anyonic/algebra.hpp"
#include "anyonic/axioms.hpp"

namespace anyonic {

struct SearchSpace {
  int dim = 1;
  Bicharacter grading = Bicharacter::anyonic(1);
  /// Fixed degrees; when empty every assignment G^dim is enumerated.
  std::vector<Degree> degrees;
  bool require_nonzero_degree = false;  // at least one basis element of nonzero degree
  bool require_delta = false;           // d != 0
  std::vector<CycNum> alphabet;         // empty: default_alphabet(n)
  bool prune = true;
  std::uint64_t cap = 10'000'000;
  unsigned threads = 1;
};

/// {0, 1, -1} together with the powers of zeta_n (duplicates removed).
inline std::vector<CycNum> default_alphabet(int n) {
  std::vector<CycNum> out{CycNum(0), CycNum(1), CycNum(-1)};
  for (int k = 1; k < n; ++k) {
    CycNum z = root_of_unity(n, k);
    if (std::ranges::find(out, z) == out.end()) out.push_back(std::move(z));
  }
  return out;
}

struct SearchResult {
  std::uint64_t candidates = 0;       // size of the (pruned) space
  std::uint64_t unpruned_candidates = 0;
  std::uint64_t coalgebras = 0;       // (eps, d) choices passing the coalgebra checks
  std::vector<AlgebraSpec> solutions;
  std::vector<std::string> notes;
};

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

struct Slots {
  std::vector<int> eps;
  std::vector<Index3> d;
  std::vector<Index3> c;
};

inline Slots search_slots(const GradingGroup& G, const std::vector<Degree>& deg, bool prune) {
  Slots s;
  const int n = static_cast<int>(deg.size());
  const Degree zero = G.zero();
  for (int mu = 0; mu < n; ++mu) {
    if (!prune || deg[static_cast<std::size_t>(mu)] == zero) s.eps.push_back(mu);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const auto& da = deg[static_cast<std::size_t>(a)];
        const auto& db = deg[static_cast<std::size_t>(b)];
        const auto& dc = deg[static_cast<std::size_t>(c)];
        if (!prune || da == G.add(db, dc)) s.d.push_back({a, b, c});
        if (!prune || dc == G.add(da, db)) s.c.push_back({a, b, c});
      }
    }
  }
  return s;
}

inline std::vector<std::vector<Degree>> degree_assignments(const SearchSpace& space) {
  const auto& G = space.grading.group();
  std::vector<std::vector<Degree>> out;
  if (!space.degrees.empty()) {
    out.push_back(space.degrees);
  } else {
    const auto elems = G.elements();
    std::vector<std::size_t> pick(static_cast<std::size_t>(space.dim), 0);
    while (true) {
      std::vector<Degree> deg;
      for (auto i : pick) deg.push_back(elems[i]);
      out.push_back(std::move(deg));
      std::size_t pos = pick.size();
      while (pos > 0 && ++pick[pos - 1] == elems.size()) pick[--pos] = 0;
      if (pos == 0) break;
    }
  }
  if (space.require_nonzero_degree) {
    std::erase_if(out, [&](const auto& deg) {
      return std::ranges::all_of(deg, [&](const Degree& d) { return d == G.zero(); });
    });
  }
  return out;
}

/// Advances an odometer of `digits` positions over `base` symbols; false once it wraps.
inline bool next_choice(std::vector<std::size_t>& digits, std::size_t base) {
  std::size_t pos = digits.size();
  while (pos > 0) {
    if (++digits[pos - 1] < base) return true;
    digits[--pos] = 0;
  }
  return false;
}

}  // namespace detail

/// Number of candidates without running anything: (pruned, unpruned).
inline std::pair<std::uint64_t, std::uint64_t> count_candidates(const SearchSpace& space) {
  const auto& G = space.grading.group();
  const std::size_t a = space.alphabet.empty() ? default_alphabet(G.exponent()).size() : space.alphabet.size();
  std::uint64_t pruned = 0, full = 0;
  for (const auto& deg : detail::degree_assignments(space)) {
    const auto s = detail::search_slots(G, deg, space.prune);
    pruned = detail::sat_add(pruned, detail::sat_pow(a, s.eps.size() + s.d.size() + s.c.size()));
    const std::size_t d = deg.size();
    full = detail::sat_add(full, detail::sat_pow(a, d + 2 * d * d * d));
  }
  return {pruned, full};
}

/**
 * Runs the search. Throws InvalidArgument when the space exceeds the cap; the
 * message carries the candidate count. Solutions come back in enumeration
 * order regardless of the thread count.
 */
inline SearchResult run_search(const SearchSpace& space) {
  if (space.dim < 1 || space.dim > 2) throw InvalidArgument("search dimension must be 1 or 2");
  const auto& G = space.grading.group();
  for (const auto& d : space.degrees) G.check(d);
  if (!space.degrees.empty() && static_cast<int>(space.degrees.size()) != space.dim) {
    throw InvalidArgument("search: one degree per basis element is required");
  }
  const std::vector<CycNum> alphabet = space.alphabet.empty() ? default_alphabet(G.exponent()) : space.alphabet;
  if (alphabet.empty()) throw InvalidArgument("search alphabet is empty");

  SearchResult result;
  std::tie(result.candidates, result.unpruned_candidates) = count_candidates(space);
  if (result.candidates > space.cap) {
    throw InvalidArgument("search space has " + std::to_string(result.candidates) + " candidates, above the cap of " +
                          std::to_string(space.cap) + "; narrow the alphabet, fix the degrees or raise --cap");
  }
  result.notes.push_back("solutions are not reduced modulo basis rescaling or permutation; duplicates are counted");

  // Stage 1: every (degrees, eps, d) that is a graded coalgebra with d != 0 if required.
  struct Work {
    AlgebraSpec base;
    detail::Slots slots;
  };
  std::vector<Work> work;
  const auto base_count = alphabet.size();
  for (const auto& deg : detail::degree_assignments(space)) {
    AlgebraSpec base;
    base.grading = space.grading;
    for (int i = 0; i < space.dim; ++i) {
      base.basis.push_back({"x" + std::to_string(i + 1), deg[static_cast<std::size_t>(i)]});
    }
    auto slots = detail::search_slots(G, deg, space.prune);
    std::vector<std::size_t> digits(slots.eps.size() + slots.d.size(), 0);
    do {
      AlgebraSpec s = base;
      std::size_t pos = 0;
      for (int mu : slots.eps) s.set_eps(mu, alphabet[digits[pos++]]);
      for (const auto& idx : slots.d) s.d.set(idx, alphabet[digits[pos++]]);
      if (space.require_delta && s.d.empty()) continue;
      const CheckOptions one{1};
      if (!check_grading(s, one).pass || !check_coalgebra(s, one).pass) continue;
      work.push_back({std::move(s), slots});
    } while (detail::next_choice(digits, base_count));
  }
  result.coalgebras = work.size();

  // Stage 2: brackets, in parallel over coalgebras.
  std::vector<std::vector<AlgebraSpec>> found(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t item = next++; item < work.size(); item = next++) {
      const Work& w = work[item];
      std::vector<std::size_t> digits(w.slots.c.size(), 0);
      do {
        AlgebraSpec s = w.base;
        for (std::size_t i = 0; i < digits.size(); ++i) s.c.set(w.slots.c[i], alphabet[digits[i]]);
        if (satisfies_axioms(s)) found[item].push_back(std::move(s));
      } while (detail::next_choice(digits, base_count));
    }
  };
  const unsigned threads = std::max(1u, space.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& batch : found) {
    for (auto& s : batch) result.solutions.push_back(std::move(s));
  }
  return result;
}

}  // namespace anyonic
