#include <catch_amalgamated.hpp>

#include <thread>

#include "properties.hpp"

using namespace anyonic;

namespace {

CycNum z(int m, long long k = 1) { return root_of_unity(m, k); }

// [a choose k]_q from the product formula; only valid where no [j]_q vanishes.
CycNum q_binomial_by_products(int a, int k, const CycNum& q) {
  CycNum num(1), den(1);
  for (int j = 0; j < k; ++j) {
    num *= CycNum(1) - q.pow(a - j);
    den *= CycNum(1) - q.pow(j + 1);
  }
  return num / den;
}

long long binomial(int a, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (a - k + j) / j;
  return r;
}

}  // namespace

TEST_CASE("roots of unity reduce modulo the cyclotomic polynomial") {
  CHECK(z(1, 5).is_one());
  CHECK(z(4, 2) == CycNum(-1));
  CHECK(z(3, 1) + z(3, 2) == CycNum(-1));
  CHECK(z(6, -1) == z(6, 5));
  CHECK(z(12, 3) == z(4, 1));
  CHECK_THROWS_AS(z(0, 1), InvalidArgument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(std::ranges::find(p105, -2) != p105.end());
  for (int m = 1; m <= 30; ++m) {
    int count = 0;
    for (int k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    CHECK(euler_phi(m) == count);
  }
}

TEST_CASE("arith examples") {
  CHECK(arith(CycNum(1) + z(3), CycNum(1) + z(3, 2), ArithOp::mul).is_one());
  CHECK(arith(z(3), z(3), ArithOp::div).is_one());
  const CycNum inv = (CycNum(1) - z(3)).inverse();
  CHECK(inv == (CycNum(2) + z(3)) / CycNum(3));
  CHECK((inv * (CycNum(1) - z(3))).is_one());
  CHECK(arith(z(4), z(6), ArithOp::add).order() == 12);
  CHECK_THROWS_AS(arith(z(3), CycNum(), ArithOp::div), DivisionByZero);
  CHECK_THROWS_AS(CycNum::zero(5).inverse(), DivisionByZero);
}

TEST_CASE("equality goes through the common embedding") {
  CHECK(CycNum(-1) == z(2));
  CHECK(z(2) == z(4, 2));
  CHECK_FALSE(z(3) == z(6));
  CHECK(z(3) == z(6, 2));
  CHECK(CycNum(Rational(1, 2)).embed(12) == CycNum(Rational(1, 2)));
  CHECK(z(5).embed(10).order() == 10);
}

TEST_CASE("pow handles negative exponents") {
  CHECK(z(7).pow(7).is_one());
  CHECK(z(7).pow(-1) == z(7, 6));
  CHECK(CycNum(2).pow(-3) == CycNum(Rational(1, 8)));
  CHECK_THROWS_AS(CycNum().pow(-1), DivisionByZero);
}

TEST_CASE("root_of_unity(m,k)^m = 1") {
  for (int m = 1; m <= 12; ++m) {
    for (int k = 0; k < m; ++k) CHECK(z(m, k).pow(m).is_one());
  }
}

TEST_CASE("q-binomial examples") {
  CHECK(q_binomial(2, 1, z(3)) == CycNum(1) + z(3));
  CHECK(q_binomial(3, 1, z(3)).is_zero());
  const CycNum q = z(5);
  const CycNum expected = CycNum(1) + q + CycNum(2) * q.pow(2) + q.pow(3) + q.pow(4);
  CHECK(q_binomial(4, 2, q) == expected);
  CHECK(q_binomial(4, 2, q) == q_binomial_by_products(4, 2, q));
  CHECK(q_binomial(4, 2, CycNum(2)) == CycNum(35));
  CHECK(q_binomial(4, 2, CycNum(2)) == q_binomial_by_products(4, 2, CycNum(2)));
  CHECK(q_binomial(5, 0, q).is_one());
  CHECK(q_binomial(5, 5, q).is_one());
  CHECK_THROWS_AS(q_binomial(2, 3, q), InvalidArgument);
  CHECK_THROWS_AS(q_binomial(-1, 0, q), InvalidArgument);
}

TEST_CASE("q-binomial agrees with the product formula away from roots of unity") {
  for (const CycNum& q : {CycNum(3), CycNum(Rational(-2, 5)), z(7), z(11, 3)}) {
    for (int a = 0; a <= 6; ++a) {
      for (int k = 0; k <= a; ++k) CHECK(q_binomial(a, k, q) == q_binomial_by_products(a, k, q));
    }
  }
}

TEST_CASE("q-binomial at q = 1 is the ordinary binomial") {
  for (int a = 0; a <= 12; ++a) {
    for (int k = 0; k <= a; ++k) CHECK(q_binomial(a, k, CycNum(1)) == CycNum(static_cast<long>(binomial(a, k))));
  }
}

TEST_CASE("q-binomial vanishes at a primitive n-th root for 0 < k < n") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) CHECK(q_binomial(n, k, z(n)).is_zero());
  }
}

TEST_CASE("q-integers") {
  CHECK(q_integer(0, z(3)).is_zero());
  CHECK(q_integer(1, z(3)).is_one());
  CHECK(q_integer(3, z(3)).is_zero());
  CHECK(q_integer(4, CycNum(1)) == CycNum(4));
}

TEST_CASE("field axioms on random triples") { CHECK(properties::field_axiom_failures(20240601, 2000) == 0); }

TEST_CASE("printing") {
  CHECK(CycNum().to_string() == "0");
  CHECK((CycNum(1) + z(3)).to_string() == "1 + z3");
  CHECK((CycNum(Rational(-1, 3)) * z(5, 2)).to_string() == "-1/3*z5^2");
  const auto c = z(8).to_complex();
  CHECK(c.real() == Catch::Approx(std::sqrt(0.5)));
}

TEST_CASE("the cyclotomic cache is safe under concurrent first use") {
  std::vector<std::jthread> pool;
  std::vector<int> degrees(16);
  for (int t = 0; t < 16; ++t) {
    pool.emplace_back([t, &degrees] { degrees[static_cast<std::size_t>(t)] = euler_phi(200 + t % 4); });
  }
  pool.clear();
  for (int t = 0; t < 16; ++t) CHECK(degrees[static_cast<std::size_t>(t)] == euler_phi(200 + t % 4));
}
