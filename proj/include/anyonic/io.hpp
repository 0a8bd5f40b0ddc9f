#pragma once

// JSON and text encodings shared by the command-line tool and the tests.
//
//   CycNum    {"order": m, "terms": [[k, "p/q"], ...]}   (an integer or "p/q" string is also accepted)
//   grading   {"group": [n1, ...], "bichar": [[...], ...]} or "bichar_table": [CycNum, ...]
//   algebra   {"grading": ..., "basis": [{"name", "degree"}], "eps": [...], "d": [...], "c": [...]}

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "anyonic/algebra.hpp"
#include "anyonic/axioms.hpp"
#include "anyonic/constructions.hpp"
#include "anyonic/envelope.hpp"

namespace anyonic {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- CycNum

inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text, const std::string& where) {
  if (text.empty()) throw ParseError(where, "empty rational");
  std::string s = text;
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto digits_ok = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && part[i] == '-') ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  if (!digits_ok(s.substr(0, slash), true) || (slash != std::string::npos && !digits_ok(s.substr(slash + 1), false))) {
    throw ParseError(where, "malformed rational '" + text + "'");
  }
  Rational r;
  r.set_str(s, 10);
  if (r.get_den() == 0) throw ParseError(where, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

inline Json to_json(const CycNum& x) {
  Json terms = Json::array();
  const auto coeffs = x.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) != 0) terms.push_back(Json::array({k, rational_string(coeffs[k])}));
  }
  return Json{{"order", x.order()}, {"terms", terms}};
}

inline CycNum cycnum_from_json(const Json& j, const std::string& where = "") {
  if (j.is_number_integer()) return CycNum(Rational(j.get<long>()));
  if (j.is_string()) return CycNum(parse_rational(j.get<std::string>(), where));
  if (!j.is_object()) throw ParseError(where, "expected a cyclotomic number");
  if (!j.contains("order") || !j["order"].is_number_integer()) throw ParseError(where + "/order", "missing integer order");
  const long long order = j["order"].get<long long>();
  if (order < 1 || order > 100000) throw ParseError(where + "/order", "order must be a positive integer");
  const int m = static_cast<int>(order);
  CycNum sum = CycNum::zero(m);
  if (!j.contains("terms")) return sum;
  if (!j["terms"].is_array()) throw ParseError(where + "/terms", "expected an array");
  std::size_t i = 0;
  for (const auto& term : j["terms"]) {
    const std::string at = where + "/terms/" + std::to_string(i++);
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      throw ParseError(at, "expected [k, \"p/q\"]");
    }
    const long long k = term[0].get<long long>();
    if (k < 0) throw ParseError(at, "exponent must be nonnegative");
    Rational r;
    if (term[1].is_number_integer()) {
      r = Rational(term[1].get<long>());
    } else if (term[1].is_string()) {
      r = parse_rational(term[1].get<std::string>(), at);
    } else {
      throw ParseError(at, "coefficient must be a \"p/q\" string");
    }
    sum += root_of_unity(m, k) * CycNum(r);
  }
  return sum;
}

/// Single-line form used in relation dumps.
inline std::string compact(const CycNum& x) { return to_json(x).dump(); }

// ---------------------------------------------------------------- grading

inline Json to_json(const Degree& d) { return d.coords; }

inline Degree degree_from_json(const GradingGroup& G, const Json& j, const std::string& where) {
  std::vector<long long> coords;
  if (j.is_number_integer()) {
    coords.push_back(j.get<long long>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError(where, "degree entries must be integers");
      coords.push_back(v.get<long long>());
    }
  } else {
    throw ParseError(where, "degree must be an integer or an array of integers");
  }
  if (coords.size() != G.rank()) throw ParseError(where, "degree has the wrong number of coordinates");
  return G.make(coords);
}

inline Json to_json(const Bicharacter& bi) {
  Json j{{"group", bi.group().factors()}};
  if (bi.matrix()) {
    j["bichar"] = *bi.matrix();
  } else {
    Json table = Json::array();
    for (const auto& v : bi.table()) table.push_back(to_json(v));
    j["bichar_table"] = table;
  }
  return j;
}

inline Bicharacter bicharacter_from_json(const Json& j, const std::string& where = "") {
  if (!j.is_object()) throw ParseError(where, "grading must be an object");
  if (!j.contains("group") || !j["group"].is_array() || j["group"].empty()) {
    throw ParseError(where + "/group", "expected a nonempty array of cyclic orders");
  }
  std::vector<int> factors;
  for (const auto& v : j["group"]) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 100000) {
      throw ParseError(where + "/group", "cyclic orders must be positive integers");
    }
    factors.push_back(v.get<int>());
  }
  GradingGroup G(factors);
  if (j.contains("bichar") && j.contains("bichar_table")) {
    throw ParseError(where, "give either bichar or bichar_table, not both");
  }
  if (j.contains("bichar_table")) {
    const auto& t = j["bichar_table"];
    if (!t.is_array() || t.size() != G.order() * G.order()) {
      throw ParseError(where + "/bichar_table", "expected |G|^2 values");
    }
    std::vector<CycNum> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      table.push_back(cycnum_from_json(t[i], where + "/bichar_table/" + std::to_string(i)));
    }
    Bicharacter bi = Bicharacter::from_table(std::move(G), std::move(table));
    if (const auto check = validate_bicharacter(bi); !check.pass) {
      throw ParseError(where + "/bichar_table", "not a bicharacter: " + check.failure);
    }
    return bi;
  }
  if (!j.contains("bichar")) {
    if (factors.size() != 1) throw ParseError(where, "bichar may only be omitted for a cyclic group");
    return Bicharacter::anyonic(factors[0]);
  }
  IntMatrix m;
  const auto& b = j["bichar"];
  if (!b.is_array() || b.size() != factors.size()) throw ParseError(where + "/bichar", "expected a k x k integer matrix");
  for (const auto& row : b) {
    if (!row.is_array() || row.size() != factors.size()) {
      throw ParseError(where + "/bichar", "expected a k x k integer matrix");
    }
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError(where + "/bichar", "matrix entries must be integers");
      r.push_back(v.get<long long>());
    }
    m.push_back(std::move(r));
  }
  return Bicharacter::from_matrix(std::move(G), std::move(m));
}

// ---------------------------------------------------------------- algebra

inline Json to_json(const AlgebraSpec& spec) {
  Json basis = Json::array();
  for (const auto& b : spec.basis) basis.push_back({{"name", b.name}, {"degree", to_json(b.degree)}});
  Json eps = Json::array();
  for (const auto& [mu, v] : spec.eps) eps.push_back({{"mu", mu}, {"val", to_json(v)}});
  auto tensor = [](const SparseTensor3& t) {
    Json out = Json::array();
    for (const auto& [idx, v] : t) {
      out.push_back({{"mu", idx[0]}, {"nu", idx[1]}, {"rho", idx[2]}, {"val", to_json(v)}});
    }
    return out;
  };
  return Json{{"grading", to_json(spec.grading)}, {"basis", basis}, {"eps", eps}, {"d", tensor(spec.d)},
              {"c", tensor(spec.c)}};
}

inline AlgebraSpec algebra_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("", "algebra spec must be a JSON object");
  AlgebraSpec spec;
  spec.grading = j.contains("grading") ? bicharacter_from_json(j["grading"], "/grading") : Bicharacter::anyonic(1);
  const auto& G = spec.group();
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty()) {
    throw ParseError("/basis", "expected a nonempty array");
  }
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    const auto& b = j["basis"][i];
    const std::string at = "/basis/" + std::to_string(i);
    if (!b.is_object() || !b.contains("name") || !b["name"].is_string()) throw ParseError(at, "expected {name, degree}");
    const Degree deg = b.contains("degree") ? degree_from_json(G, b["degree"], at + "/degree") : G.zero();
    spec.basis.push_back({b["name"].get<std::string>(), deg});
  }
  const int dim = spec.dim();
  auto index = [&](const Json& e, const char* key, const std::string& at) {
    if (!e.contains(key) || !e[key].is_number_integer()) throw ParseError(at, std::string("missing integer ") + key);
    const long long v = e[key].get<long long>();
    if (v < 0 || v >= dim) throw ParseError(at + "/" + key, "index out of range");
    return static_cast<int>(v);
  };
  auto entries = [&](const char* key) -> Json {
    if (!j.contains(key)) return Json::array();
    if (!j[key].is_array()) throw ParseError(std::string("/") + key, "expected an array");
    return j[key];
  };
  const Json eps = entries("eps");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const std::string at = "/eps/" + std::to_string(i);
    const int mu = index(eps[i], "mu", at);
    if (!eps[i].contains("val")) throw ParseError(at, "missing val");
    spec.set_eps(mu, spec.epsilon(mu) + cycnum_from_json(eps[i]["val"], at + "/val"));
  }
  for (const char* key : {"d", "c"}) {
    SparseTensor3& t = key[0] == 'd' ? spec.d : spec.c;
    const Json list = entries(key);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = std::string("/") + key + "/" + std::to_string(i);
      const Index3 idx{index(list[i], "mu", at), index(list[i], "nu", at), index(list[i], "rho", at)};
      if (!list[i].contains("val")) throw ParseError(at, "missing val");
      t.add(idx, cycnum_from_json(list[i]["val"], at + "/val"));
    }
  }
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError("", e.what());
  }
  return spec;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

/// Structure constants of g for the ansatz: {"grading"?, "names": [...], "degrees": [...], "c": [{"i","j","k","val"}]}.
/// The grading may be overridden by the caller (make-ansatz --n).
inline AnsatzParams ansatz_from_json(const Json& j, std::optional<Bicharacter> grading = std::nullopt) {
  if (!j.is_object()) throw ParseError("", "g description must be a JSON object");
  AnsatzParams params;
  params.grading = grading ? *grading
                   : j.contains("grading") ? bicharacter_from_json(j["grading"], "/grading")
                                           : Bicharacter::anyonic(1);
  const auto& G = params.grading.group();
  if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].empty()) {
    throw ParseError("/degrees", "expected a nonempty array of degrees");
  }
  for (std::size_t i = 0; i < j["degrees"].size(); ++i) {
    params.degrees.push_back(degree_from_json(G, j["degrees"][i], "/degrees/" + std::to_string(i)));
  }
  if (j.contains("names")) {
    if (!j["names"].is_array() || j["names"].size() != params.degrees.size()) {
      throw ParseError("/names", "expected one name per degree");
    }
    for (const auto& n : j["names"]) {
      if (!n.is_string()) throw ParseError("/names", "names must be strings");
      params.names.push_back(n.get<std::string>());
    }
  }
  const int g = params.g_dim();
  if (j.contains("c")) {
    if (!j["c"].is_array()) throw ParseError("/c", "expected an array");
    for (std::size_t i = 0; i < j["c"].size(); ++i) {
      const auto& e = j["c"][i];
      const std::string at = "/c/" + std::to_string(i);
      Index3 idx{};
      const char* keys[] = {"i", "j", "k"};
      for (int s = 0; s < 3; ++s) {
        if (!e.contains(keys[s]) || !e[keys[s]].is_number_integer()) throw ParseError(at, "missing index");
        const long long v = e[keys[s]].get<long long>();
        if (v < 0 || v >= g) throw ParseError(at + "/" + keys[s], "index out of range");
        idx[static_cast<std::size_t>(s)] = static_cast<int>(v);
      }
      if (!e.contains("val")) throw ParseError(at, "missing val");
      params.c.add(idx, cycnum_from_json(e["val"], at + "/val"));
    }
  }
  return params;
}

// ---------------------------------------------------------------- reports

inline Json to_json(const Witness& w) {
  return Json{{"law", w.law}, {"indices", w.indices}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

inline Json to_json(const AxiomReport& report) {
  Json axioms = Json::array();
  for (const auto& r : report.results) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    axioms.push_back({{"axiom", std::string(axiom_name(r.axiom))},
                      {"pass", r.pass},
                      {"informational", r.informational},
                      {"failures", r.failures},
                      {"witnesses", witnesses},
                      {"notes", r.notes}});
  }
  return Json{{"pass", report.pass()}, {"axioms", axioms}, {"notes", report.notes}};
}

inline std::string index_label(const AlgebraSpec* spec, int i) {
  if (spec && i >= 0 && i < spec->dim()) return spec->basis[static_cast<std::size_t>(i)].name;
  return std::to_string(i);
}

inline std::string to_text(const AxiomReport& report, const AlgebraSpec* spec = nullptr) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << (r.pass ? "PASS" : (r.informational ? "INFO" : "FAIL")) << "  " << axiom_name(r.axiom);
    if (!r.pass) os << "  (" << r.failures << " failing)";
    os << '\n';
    for (const auto& w : r.witnesses) {
      os << "      " << w.law << " at (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << index_label(spec, w.indices[i]);
      os << "): " << w.lhs << " != " << w.rhs << '\n';
    }
    for (const auto& n : r.notes) os << "      note: " << n << '\n';
  }
  for (const auto& n : report.notes) os << "note: " << n << '\n';
  os << (report.pass() ? "verdict: anyonic Lie algebra\n" : "verdict: axioms fail\n");
  return os.str();
}

// ---------------------------------------------------------------- words and relations

inline std::string word_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "·";
    out += detail::generator_label(w[i], &names);
  }
  return out;
}

inline std::string poly_text(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Largest words first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out += " + ";
    first = false;
    if (it->second.is_one()) {
      out += word_text(it->first, names);
    } else {
      out += compact(it->second) + (it->first.empty() ? "" : "·" + word_text(it->first, names));
    }
  }
  return out;
}

inline Json poly_json(const Poly& p, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (int g : w) word.push_back(detail::generator_label(g, &names));
    terms.push_back({{"word", word}, {"coeff", to_json(c)}});
  }
  return terms;
}

/// One line per generated relation: "x[mu]·x[nu] = sum coeff·x[gamma]·x[beta]".
inline std::vector<std::string> relation_lines(std::span<const QuadRelation> rels, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& rel : rels) {
    Poly rhs;
    for (const auto& [pair, c] : rel.rhs) rhs.add({pair.first, pair.second}, c);
    out.push_back(word_text({rel.mu, rel.nu}, names) + " = " + poly_text(rhs, names));
  }
  return out;
}

inline std::vector<std::string> rule_lines(const RewriteSystem& rs, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& [pair, rhs] : rs.rules()) {
    out.push_back(word_text({pair.first, pair.second}, names) + " = " + poly_text(rhs, names));
  }
  return out;
}

inline std::vector<std::string> basis_names(const AlgebraSpec& spec) {
  std::vector<std::string> names;
  for (const auto& b : spec.basis) names.push_back(b.name);
  return names;
}

}  // namespace anyonic
