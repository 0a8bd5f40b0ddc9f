// Builds L_{2,f} over Z/3, checks it, and prints the relations of its enveloping algebra.
#include <iostream>

#include "anyonic.hpp"

int main() {
  using namespace anyonic;
  auto params = MatrixTypeParams::anyonic(2, 3, {0, 1});
  params.labels = MatrixLabels::letters;
  const AlgebraSpec spec = build_matrix_type(params);
  std::cout << to_text(verify_all(spec), &spec) << '\n';

  const auto names = basis_names(spec);
  const auto rels = generate_relations(spec);
  const RewriteSystem rs = build_rewrite_system(rels, spec.dim(), std::nullopt, &names);
  for (const auto& line : rule_lines(rs, names)) std::cout << line << '\n';

  const auto q = quotient_by_grouplike(spec, rs, parse_word_poly("a*d - c*b", names, 3));
  std::cout << "\nin the quotient by ad - cb = 1:\n";
  for (const char* w : {"b", "c", "a*d", "d*a", "c*b"}) {
    std::cout << "  " << w << " = " << poly_text(q.system.normal_form(parse_word_poly(w, names, 3)), names) << '\n';
  }
}
