// At n = 2 the matrix algebra L_{2,f} gives the 2x2 super-matrices.
#include <iostream>

#include "anyonic.hpp"

int main() {
  using namespace anyonic;
  auto params = MatrixTypeParams::anyonic(2, 2, {0, 1});
  params.labels = MatrixLabels::letters;
  const AlgebraSpec spec = build_matrix_type(params);
  const auto names = basis_names(spec);
  const RewriteSystem rs = build_rewrite_system(generate_relations(spec), spec.dim(), std::nullopt, &names);
  for (const auto& line : rule_lines(rs, names)) std::cout << line << '\n';
  const auto conf = check_local_confluence(rs, 4);
  std::cout << "confluent up to degree 4: " << (conf.confluent ? "yes" : "no") << '\n';
}
