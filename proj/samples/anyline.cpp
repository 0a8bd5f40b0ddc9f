// Addition on the anyonic line: (t1 + t2)^k for k up to n.
#include <iostream>

#include "anyonic.hpp"

int main(int argc, char** argv) {
  using namespace anyonic;
  const int n = argc > 1 ? std::stoi(argv[1]) : 4;
  const ThetaPoly sum = ThetaPoly::theta(n, 2, 0) + ThetaPoly::theta(n, 2, 1);
  ThetaPoly power = ThetaPoly::one(n, 2);
  for (int k = 1; k <= n; ++k) {
    power = tp_mul(power, sum);
    std::cout << "(t1 + t2)^" << k << " =";
    if (power.is_zero()) std::cout << " 0";
    for (const auto& [e, c] : power.terms()) std::cout << "  [" << c << "] t1^" << e[0] << " t2^" << e[1];
    std::cout << '\n';
  }
}
