#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anyonic.hpp"

namespace fixtures {

using namespace anyonic;

inline std::string data_path(const std::string& file) { return std::string(ANYONIC_SAMPLE_DATA) + "/" + file; }

inline Json load_json(const std::string& file) {
  std::ifstream in(data_path(file));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline AlgebraSpec matrix(int N, int n, std::vector<int> f) {
  auto p = MatrixTypeParams::anyonic(N, n, f);
  p.labels = N <= 3 ? MatrixLabels::letters : MatrixLabels::indexed;
  return build_matrix_type(p);
}

inline AlgebraSpec l2_n3() { return matrix(2, 3, {0, 1}); }
inline AlgebraSpec m11() { return matrix(2, 2, {0, 1}); }
inline AlgebraSpec l3_n3() { return matrix(3, 3, {0, 1, 2}); }

/// sl2 with basis e, f, h: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline AnsatzParams sl2_params() {
  AnsatzParams p;
  p.names = {"e", "f", "h"};
  const auto G = p.grading.group();
  p.degrees = {G.zero(), G.zero(), G.zero()};
  p.c.set({0, 1, 2}, 1);
  p.c.set({1, 0, 2}, -1);
  p.c.set({2, 0, 0}, 2);
  p.c.set({0, 2, 0}, -2);
  p.c.set({2, 1, 1}, -2);
  p.c.set({1, 2, 1}, 2);
  return p;
}

/// Two-generator super algebra: h even, x odd, [h,x] = x = -[x,h].
inline AnsatzParams super2_params() {
  AnsatzParams p;
  p.grading = Bicharacter::anyonic(2);
  p.names = {"h", "x"};
  p.degrees = {p.grading.group().make(0), p.grading.group().make(1)};
  p.c.set({0, 1, 1}, 1);
  p.c.set({1, 0, 1}, -1);
  return p;
}

struct Example {
  std::string name;
  AlgebraSpec spec;
  std::optional<MonomialOrder> order;
};

/// Every worked example together with the order its rewrite system is built in.
inline std::vector<Example> example_algebras() {
  std::vector<Example> out;
  out.push_back({"L2 n=3", l2_n3(), std::nullopt});
  out.push_back({"M(1|1)", m11(), std::nullopt});
  out.push_back({"L3 n=3", l3_n3(), std::nullopt});
  out.push_back({"L2 n=4 f=(0,1)", matrix(2, 4, {0, 1}), std::nullopt});
  out.push_back({"L2 n=1", matrix(2, 1, {0, 0}), std::nullopt});
  out.push_back({"sl2 ansatz", build_ansatz(sl2_params()), ansatz_order(3)});
  out.push_back({"super ansatz", build_ansatz(super2_params()), ansatz_order(2)});
  return out;
}

inline RewriteSystem rewrite(const Example& ex) {
  const auto names = basis_names(ex.spec);
  return build_rewrite_system(generate_relations(ex.spec), ex.spec.dim(), ex.order, &names);
}

inline RewriteSystem rewrite(const AlgebraSpec& spec) { return rewrite(Example{"", spec, std::nullopt}); }

inline Word random_word(std::mt19937_64& rng, int generators, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> gen(0, generators - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = gen(rng);
  return w;
}

inline CycNum random_cycnum(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> coeffs(static_cast<std::size_t>(euler_phi(order)));
  for (auto& c : coeffs) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return CycNum::from_poly(order, std::move(coeffs));
}

}  // namespace fixtures
