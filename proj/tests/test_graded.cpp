#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace anyonic;

namespace {

// Skewness by brute force over every pair of group elements.
bool skew_all_pairs(const Bicharacter& bi) {
  for (const auto& g : bi.group().elements()) {
    for (const auto& h : bi.group().elements()) {
      if (!(bi(g, h) * bi(h, g)).is_one()) return false;
    }
  }
  return true;
}

// Applies the braiding to positions (i, i+1) of a row of 1-dimensional graded spaces.
struct Strands {
  std::vector<Degree> degrees;
  CycNum phase = 1;
  void cross(const Bicharacter& bi, std::size_t i) {
    phase *= bi(degrees[i], degrees[i + 1]);
    std::swap(degrees[i], degrees[i + 1]);
  }
};

}  // namespace

TEST_CASE("grading groups") {
  GradingGroup G({2, 3});
  CHECK(G.order() == 6);
  CHECK(G.exponent() == 6);
  CHECK(G.make({-1, 4}).coords == std::vector<int>{1, 1});
  CHECK(G.add(G.make({1, 2}), G.make({1, 2})) == G.make({0, 1}));
  CHECK(G.neg(G.make({1, 1})) == G.make({1, 2}));
  CHECK(G.generators().size() == 2);
  for (std::size_t i = 0; i < G.order(); ++i) CHECK(G.index(G.element(i)) == i);
  CHECK_THROWS_AS(G.check(Degree{{0}}), InvalidArgument);
  CHECK_THROWS_AS(G.check(Degree{{2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(GradingGroup({0}), InvalidArgument);
}

TEST_CASE("braiding phase examples") {
  const auto b3 = Bicharacter::anyonic(3);
  const auto& G3 = b3.group();
  CHECK(braiding_phase(b3, G3.make(1), G3.make(1)) == root_of_unity(3, 1));
  CHECK(braiding_phase(Bicharacter::anyonic(2), GradingGroup::cyclic(2).make(1), GradingGroup::cyclic(2).make(1)) ==
        CycNum(-1));
  const auto bi = Bicharacter::from_matrix(GradingGroup({2, 4}), {{1, 1}, {3, 2}});
  for (const auto& h : bi.group().elements()) CHECK(braiding_phase(bi, bi.group().zero(), h).is_one());
  CHECK_THROWS_AS(braiding_phase(b3, Degree{{1, 0}}, G3.make(1)), InvalidArgument);
}

TEST_CASE("anyonic phase is zeta_n^(gh)") {
  for (int n = 1; n <= 8; ++n) {
    const auto bi = Bicharacter::anyonic(n);
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) CHECK(bi(bi.group().make(g), bi.group().make(h)) == root_of_unity(n, g * h));
    }
  }
}

TEST_CASE("is_skew examples and brute-force oracle") {
  CHECK(is_skew(Bicharacter::anyonic(2)));
  CHECK(is_skew(Bicharacter::from_matrix(GradingGroup({3, 3}), {{0, 0}, {0, 0}})));
  CHECK_FALSE(is_skew(Bicharacter::anyonic(3)));
  for (int n = 1; n <= 6; ++n) CHECK(is_skew(Bicharacter::anyonic(n)) == skew_all_pairs(Bicharacter::anyonic(n)));
  // Every 2x2 matrix over Z/2 x Z/3.
  GradingGroup G({2, 3});
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        for (int d = 0; d < 6; ++d) {
          const auto bi = Bicharacter::from_matrix(G, {{a, b}, {c, d}});
          CHECK(is_skew(bi) == skew_all_pairs(bi));
        }
      }
    }
  }
}

TEST_CASE("validate_bicharacter") {
  CHECK(validate_bicharacter(Bicharacter::anyonic(5)).pass);
  CHECK(validate_bicharacter(Bicharacter::from_matrix(GradingGroup({4}), {{0}})).pass);
  CHECK(validate_bicharacter(Bicharacter::from_matrix(GradingGroup({2, 6}), {{1, 3}, {2, 5}})).pass);

  GradingGroup G = GradingGroup::cyclic(3);
  std::vector<CycNum> table;
  for (int g = 0; g < 3; ++g) {
    for (int h = 0; h < 3; ++h) table.push_back(root_of_unity(3, g * h));
  }
  CHECK(validate_bicharacter(Bicharacter::from_table(G, table)).pass);
  table[1 * 3 + 1] = root_of_unity(3, 2);  // claims beta(1,1) = zeta^2
  const auto report = validate_bicharacter(Bicharacter::from_table(G, table));
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.witness.empty());
  CHECK_FALSE(report.failure.empty());
  CHECK_THROWS_AS(Bicharacter::from_table(G, std::vector<CycNum>(4, CycNum(1))), InvalidArgument);
}

TEST_CASE("beta(g,h) beta(-g,h) = 1 for every group of exponent at most 6") {
  const std::vector<std::vector<int>> groups{{1}, {2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 3}, {3, 3}, {2, 6}, {2, 2, 2}};
  std::mt19937_64 rng(7);
  for (const auto& factors : groups) {
    GradingGroup G(factors);
    IntMatrix m(factors.size(), std::vector<long long>(factors.size()));
    for (auto& row : m) {
      for (auto& v : row) v = static_cast<long long>(rng() % 6);
    }
    const auto bi = Bicharacter::from_matrix(G, m);
    REQUIRE(validate_bicharacter(bi).pass);
    for (const auto& g : G.elements()) {
      for (const auto& h : G.elements()) CHECK((bi(g, h) * bi(G.neg(g), h)).is_one());
    }
  }
}

TEST_CASE("diagonal braiding satisfies braid and hexagon relations on 1-dimensional spaces") {
  const auto bi = Bicharacter::from_matrix(GradingGroup({3, 4}), {{1, 2}, {0, 3}});
  const auto& G = bi.group();
  const auto elems = G.elements();
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        Strands left{{a, b, c}}, right{{a, b, c}};
        left.cross(bi, 0), left.cross(bi, 1), left.cross(bi, 0);
        right.cross(bi, 1), right.cross(bi, 0), right.cross(bi, 1);
        CHECK(left.degrees == right.degrees);
        CHECK(left.phase == right.phase);
        // Psi_{V (x) W, U} = (Psi_{V,U} (x) id)(id (x) Psi_{W,U})
        CHECK(bi(G.add(a, b), c) == bi(a, c) * bi(b, c));
        CHECK(bi(a, G.add(b, c)) == bi(a, b) * bi(a, c));
      }
    }
  }
}
