#include <catch_amalgamated.hpp>

#include "properties.hpp"

using namespace anyonic;

namespace {

CycNum z(int m, long long k = 1) { return root_of_unity(m, k); }

std::string parse_error_location(const Json& j) {
  try {
    algebra_from_json(j);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6", "") == Rational(1, 2));
  CHECK(parse_rational("-4", "") == Rational(-4));
  CHECK(parse_rational("+7/2", "") == Rational(7, 2));
  CHECK(rational_string(Rational(-3, 9)) == "-3/9");
  for (const char* bad : {"", "1/", "/2", "1/-2", "abc", "1.5", "1/0", "--1"}) {
    CHECK_THROWS_AS(parse_rational(bad, "here"), ParseError);
  }
}

TEST_CASE("cyclotomic numbers round-trip through JSON") {
  std::mt19937_64 rng(1);
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12, 15}) {
    for (int s = 0; s < 10; ++s) {
      const CycNum x = fixtures::random_cycnum(rng, m);
      const Json j = to_json(x);
      CHECK(cycnum_from_json(j) == x);
      CHECK(cycnum_from_json(parse_json_text(j.dump())) == x);
    }
  }
  CHECK(compact(z(3)) == R"({"order":3,"terms":[[1,"1"]]})");
  CHECK(compact(CycNum()) == R"({"order":1,"terms":[]})");
  CHECK(cycnum_from_json(Json(5)) == CycNum(5));
  CHECK(cycnum_from_json(Json("-2/3")) == CycNum(Rational(-2, 3)));
  // exponents beyond phi(m) are reduced
  CHECK(cycnum_from_json(parse_json_text(R"({"order":3,"terms":[[2,"1"],[0,1]]})")) == CycNum(1) + z(3, 2));
  CHECK(cycnum_from_json(parse_json_text(R"({"order":4})")).is_zero());
}

TEST_CASE("malformed cyclotomic numbers") {
  for (const char* bad : {R"({"terms":[]})", R"({"order":0,"terms":[]})", R"({"order":3,"terms":[[1]]})",
                          R"({"order":3,"terms":[[-1,"1"]]})", R"({"order":3,"terms":[[1,1.5]]})",
                          R"({"order":3,"terms":{}})", R"([1,2])", R"(true)"}) {
    INFO(bad);
    CHECK_THROWS_AS(cycnum_from_json(parse_json_text(bad), "/x"), ParseError);
  }
  try {
    cycnum_from_json(parse_json_text(R"({"order":3,"terms":[[0,"1"],[1,"x"]]})"), "/val");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/val/terms/1");
  }
}

TEST_CASE("malformed JSON text reports a byte offset") {
  try {
    parse_json_text("{\"basis\": [}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where().starts_with("byte "));
  }
}

TEST_CASE("gradings") {
  const auto cyc = bicharacter_from_json(parse_json_text(R"({"group":[5]})"));
  CHECK(cyc.is_anyonic());
  CHECK(cyc(cyc.group().make(1), cyc.group().make(1)) == z(5));

  const auto two = bicharacter_from_json(parse_json_text(R"({"group":[2,4],"bichar":[[1,0],[1,3]]})"));
  CHECK(two.group().factors() == std::vector<int>{2, 4});
  CHECK(bicharacter_from_json(to_json(two)).matrix() == two.matrix());

  Json table = Json::array();
  for (int g = 0; g < 3; ++g) {
    for (int h = 0; h < 3; ++h) table.push_back(to_json(z(3, 2 * g * h)));
  }
  Json good{{"group", {3}}, {"bichar_table", table}};
  const auto tabled = bicharacter_from_json(good);
  CHECK(tabled(tabled.group().make(1), tabled.group().make(2)) == z(3, 4));
  CHECK(bicharacter_from_json(to_json(tabled)).table() == tabled.table());

  Json bad = good;
  bad["bichar_table"][4] = to_json(CycNum(1));
  CHECK_THROWS_AS(bicharacter_from_json(bad), ParseError);

  for (const char* text : {R"({"group":[2,2]})", R"({"group":[]})", R"({"group":[0]})", R"({"group":[2],"bichar":[[1,1]]})",
                           R"({"group":[2],"bichar":[[1]],"bichar_table":[]})", R"({"group":[2],"bichar_table":[1]})",
                           R"([2])"}) {
    INFO(text);
    CHECK_THROWS_AS(bicharacter_from_json(parse_json_text(text)), ParseError);
  }
  CHECK(degree_from_json(GradingGroup({3}), Json(4), "") == Degree{{1}});
  CHECK(degree_from_json(GradingGroup({2, 3}), parse_json_text("[1,-1]"), "") == Degree{{1, 2}});
  CHECK_THROWS_AS(degree_from_json(GradingGroup({2, 3}), Json(1), ""), ParseError);
}

TEST_CASE("algebra specs round-trip") {
  for (const auto& ex : fixtures::example_algebras()) {
    INFO(ex.name);
    const Json j = to_json(ex.spec);
    const AlgebraSpec back = algebra_from_json(parse_json_text(j.dump(2)));
    CHECK(back.dim() == ex.spec.dim());
    CHECK(back.d == ex.spec.d);
    CHECK(back.c == ex.spec.c);
    for (int mu = 0; mu < back.dim(); ++mu) {
      CHECK(back.basis[static_cast<std::size_t>(mu)].name == ex.spec.basis[static_cast<std::size_t>(mu)].name);
      CHECK(back.degree(mu) == ex.spec.degree(mu));
      CHECK(back.epsilon(mu) == ex.spec.epsilon(mu));
    }
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("sample files match the builders") {
  CHECK(to_json(algebra_from_json(fixtures::load_json("l2_n3.json"))) == to_json(fixtures::l2_n3()));
  CHECK(to_json(algebra_from_json(fixtures::load_json("m11.json"))) == to_json(fixtures::m11()));
  CHECK(to_json(algebra_from_json(fixtures::load_json("l3_n3.json"))) == to_json(fixtures::l3_n3()));
  const auto sl2 = ansatz_from_json(fixtures::load_json("sl2.json"));
  CHECK(to_json(build_ansatz(sl2)) == to_json(build_ansatz(fixtures::sl2_params())));
  CHECK(to_json(algebra_from_json(fixtures::load_json("sl2_ansatz.json"))) == to_json(build_ansatz(sl2)));
  const auto super2 = ansatz_from_json(fixtures::load_json("super2.json"));
  CHECK(to_json(build_ansatz(super2)) == to_json(build_ansatz(fixtures::super2_params())));
  CHECK(to_json(algebra_from_json(fixtures::load_json("super2_ansatz.json"))) == to_json(build_ansatz(super2)));
  CHECK_FALSE(verify_all(algebra_from_json(fixtures::load_json("l2_n3_corrupted.json"))).pass());
}

TEST_CASE("ansatz descriptions") {
  const Json j = fixtures::load_json("super2.json");
  const auto overridden = ansatz_from_json(j, Bicharacter::anyonic(4));
  CHECK(overridden.grading.group().factors() == std::vector<int>{4});
  CHECK(overridden.degrees[1] == Degree{{1}});
  CHECK(ansatz_from_json(parse_json_text(R"({"degrees":[0]})")).names.empty());
  for (const char* text : {R"({"degrees":[]})", R"({"names":["a"]})", R"({"degrees":[0],"names":["a","b"]})",
                           R"({"degrees":[0],"c":[{"i":0,"j":0,"k":1,"val":1}]})",
                           R"({"degrees":[0],"c":[{"i":0,"j":0,"k":0}]})", R"([])"}) {
    INFO(text);
    CHECK_THROWS_AS(ansatz_from_json(parse_json_text(text)), ParseError);
  }
}

TEST_CASE("malformed specs name the offending location") {
  Json spec = to_json(fixtures::l2_n3());
  CHECK(parse_error_location(spec) == "<no error>");

  Json bad = spec;
  bad["d"][2]["rho"] = 9;
  CHECK(parse_error_location(bad) == "/d/2/rho");
  bad = spec;
  bad["c"][0].erase("val");
  CHECK(parse_error_location(bad) == "/c/0");
  bad = spec;
  bad["basis"][1]["degree"] = "one";
  CHECK(parse_error_location(bad) == "/basis/1/degree");
  bad = spec;
  bad["basis"] = Json::array();
  CHECK(parse_error_location(bad) == "/basis");
  bad = spec;
  bad["eps"][0]["val"] = parse_json_text(R"({"order":-2})");
  CHECK(parse_error_location(bad) == "/eps/0/val/order");
  bad = spec;
  bad["grading"]["group"] = {3, 3};
  CHECK(parse_error_location(bad).starts_with("/grading"));
  bad = spec;
  bad["basis"][0]["name"] = "b";  // duplicate name
  CHECK(parse_error_location(bad) == "");
  CHECK(parse_error_location(Json::array()) == "");
}

TEST_CASE("reports") {
  const auto good = verify_all(fixtures::l2_n3());
  const Json j = to_json(good);
  CHECK(j["pass"] == true);
  CHECK(j["axioms"].size() == good.results.size());
  const std::string text = to_text(good);
  CHECK(text.find("verdict: anyonic Lie algebra") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  const auto spec = algebra_from_json(fixtures::load_json("l2_n3_corrupted.json"));
  const auto badr = verify_all(spec);
  const Json jb = to_json(badr);
  CHECK(jb["pass"] == false);
  bool witness = false;
  for (const auto& ax : jb["axioms"]) {
    if (ax["pass"] == false && ax["informational"] == false) witness = witness || !ax["witnesses"].empty();
  }
  CHECK(witness);
  const std::string tb = to_text(badr, &spec);
  CHECK(tb.find("FAIL  braided_jacobi") != std::string::npos);
  CHECK(tb.find("verdict: axioms fail") != std::string::npos);
}

TEST_CASE("polynomial and relation text") {
  const auto spec = fixtures::l2_n3();
  const auto names = basis_names(spec);
  CHECK(names == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(word_text({2, 1}, names) == "c·b");
  CHECK(word_text({}, names) == "1");
  const auto rs = fixtures::rewrite(spec);
  CHECK(poly_text(rs.normal_form(Poly::word({2, 1})), names) == R"({"order":3,"terms":[[1,"1"]]}·b·c)");
  CHECK(poly_text(Poly(), names) == "0");
  const auto lines = rule_lines(rs, names);
  CHECK(std::ranges::find(lines, R"(c·b = {"order":3,"terms":[[1,"1"]]}·b·c)") != lines.end());
  CHECK(std::ranges::find(lines, "d·b = 0") != lines.end());
  CHECK(relation_lines(generate_relations(spec), names).size() == 16);
  const Json pj = poly_json(Poly::word({0, 3}) - Poly::word({2, 1}), names);
  CHECK(pj.size() == 2);
}
