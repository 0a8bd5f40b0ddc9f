#pragma once

// The `anyonic` command-line tool. Exit codes: 0 success, 1 the algebra or
// computation failed a check, 2 the input could not be used.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anyonic/anyspace.hpp"
#include "anyonic/axioms.hpp"
#include "anyonic/constructions.hpp"
#include "anyonic/envelope.hpp"
#include "anyonic/expr.hpp"
#include "anyonic/io.hpp"
#include "anyonic/search.hpp"

namespace anyonic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
  bool json = false;
  std::string order;
  std::string weights;
  std::string bicharacter;
  int degree_cap = 4;
  bool force = false;
  bool colour = false;
  std::string output;
};

namespace detail {

inline std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Inline JSON if it starts with '{', otherwise a path.
inline Json json_argument(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && value[first] == '{') return parse_json_text(value);
  return parse_json_text(read_text(value));
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what, "expected an integer, got '" + s + "'");
  }
}

/// "0,1,2" for a cyclic group; coordinates separated by ':' otherwise ("0:1,1:0").
inline std::vector<Degree> parse_degrees(const std::string& text, const GradingGroup& G, const std::string& what) {
  std::vector<Degree> out;
  for (const auto& item : split(text, ',')) {
    std::vector<long long> coords;
    for (const auto& c : split(item, ':')) coords.push_back(parse_int(c, what));
    if (coords.size() != G.rank()) throw ParseError(what, "degree '" + item + "' has the wrong number of coordinates");
    out.push_back(G.make(coords));
  }
  return out;
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  AlgebraSpec load_spec(const std::string& path) const {
    Json j = parse_json_text(read_text(path));
    if (!cfg_.bicharacter.empty() && j.is_object()) j["grading"] = json_argument(cfg_.bicharacter);
    return algebra_from_json(j);
  }

  std::optional<MonomialOrder> order_for(const AlgebraSpec& spec) const {
    if (cfg_.order.empty() && cfg_.weights.empty()) return std::nullopt;
    std::vector<int> seq;
    if (cfg_.order.empty()) {
      for (int i = 0; i < spec.dim(); ++i) seq.push_back(i);
    } else {
      for (const auto& name : split(cfg_.order, ',')) {
        if (auto idx = spec.index_of(name)) {
          seq.push_back(*idx);
        } else {
          const long long v = parse_int(name, "--order");
          if (v < 0 || v >= spec.dim()) throw ParseError("--order", "unknown generator '" + name + "'");
          seq.push_back(static_cast<int>(v));
        }
      }
    }
    std::vector<int> weights;
    for (const auto& w : split(cfg_.weights, ',')) weights.push_back(static_cast<int>(parse_int(w, "--weights")));
    try {
      return MonomialOrder::from_sequence(std::move(seq), std::move(weights));
    } catch (const InvalidArgument& e) {
      throw ParseError("--order", e.what());
    }
  }

  void emit(const Json& j) const { out_ << j.dump(2) << '\n'; }

  int verify(const std::string& path) const {
    const AlgebraSpec spec = load_spec(path);
    VerifyOptions opts;
    opts.colour_mode = cfg_.colour;
    const AxiomReport report = verify_all(spec, opts);
    if (cfg_.json) {
      emit(to_json(report));
    } else {
      out_ << to_text(report, &spec);
    }
    return report.pass() ? kExitOk : kExitFail;
  }

  int make_matrix(int N, std::optional<int> n, const std::string& f, const std::string& labels) const {
    MatrixTypeParams params;
    params.N = N;
    if (!cfg_.bicharacter.empty()) {
      params.grading = bicharacter_from_json(json_argument(cfg_.bicharacter), "--bicharacter");
    } else {
      params.grading = Bicharacter::anyonic(n.value_or(1));
    }
    params.f = f.empty() ? std::vector<Degree>(static_cast<std::size_t>(N), params.grading.group().zero())
                         : parse_degrees(f, params.grading.group(), "--f");
    if (static_cast<int>(params.f.size()) != N) throw ParseError("--f", "expected N grading values");
    if (labels == "letters") {
      if (N > 3) throw ParseError("--labels", "letter labels exist only for N <= 3");
      params.labels = MatrixLabels::letters;
    } else if (labels != "indexed") {
      throw ParseError("--labels", "expected 'letters' or 'indexed'");
    }
    params.self_check = false;
    emit(to_json(build_matrix_type(params)));
    return kExitOk;
  }

  int make_ansatz(std::optional<int> n, const std::string& g_file, bool report_only) const {
    std::optional<Bicharacter> grading;
    if (!cfg_.bicharacter.empty()) {
      grading = bicharacter_from_json(json_argument(cfg_.bicharacter), "--bicharacter");
    } else if (n) {
      grading = Bicharacter::anyonic(*n);
    }
    const AnsatzParams params = ansatz_from_json(parse_json_text(read_text(g_file)), grading);
    if (!report_only) {
      emit(to_json(build_ansatz(params)));
      return kExitOk;
    }
    const LiesuperReport r = check_liesuper_reduction(params);
    if (cfg_.json) {
      Json w = Json::array();
      for (const auto& x : r.witnesses) w.push_back(to_json(x));
      emit({{"grading_compatible", r.grading_compatible},
            {"phase_condition", r.phase_condition},
            {"jacobi_condition", r.jacobi_condition},
            {"verify_all", r.verify_all_pass},
            {"consistent", r.consistent()},
            {"witnesses", w},
            {"notes", r.notes}});
    } else {
      out_ << "bracket degree preserving: " << (r.grading_compatible ? "yes" : "no") << '\n'
           << "1 = beta(p(i),p(j))^2:      " << (r.phase_condition ? "holds" : "fails") << '\n'
           << "braided Jacobi on g:        " << (r.jacobi_condition ? "holds" : "fails") << '\n'
           << "full axiom check:           " << (r.verify_all_pass ? "pass" : "fail") << '\n';
      for (const auto& x : r.witnesses) out_ << "  " << x.law << ": " << x.lhs << " != " << x.rhs << '\n';
      for (const auto& note : r.notes) out_ << "note: " << note << '\n';
    }
    return r.verify_all_pass ? kExitOk : kExitFail;
  }

  RewriteSystem rewrite_system(const AlgebraSpec& spec) const {
    const auto rels = generate_relations(spec, {cfg_.force});
    const auto names = basis_names(spec);
    return build_rewrite_system(rels, spec.dim(), order_for(spec), &names);
  }

  bool spec_ok(const AlgebraSpec& spec) const {
    if (cfg_.force) return true;
    const AxiomReport report = verify_all(spec, {{1}, true});
    if (report.pass()) return true;
    err_ << "the algebra fails the axioms; rerun with --force to continue anyway\n" << to_text(report, &spec);
    return false;
  }

  int env(const std::string& path, const std::string& quotient) const {
    const AlgebraSpec spec = load_spec(path);
    if (!spec_ok(spec)) return kExitFail;
    const auto names = basis_names(spec);
    const auto rels = generate_relations(spec, {true});
    const RewriteSystem rs = build_rewrite_system(rels, spec.dim(), order_for(spec), &names);
    const ConfluenceReport conf = check_local_confluence(rs, cfg_.degree_cap);

    std::vector<std::string> zero;
    for (int g : rs.nilpotents()) zero.push_back(word_text({g, g}, names));
    for (const auto& [a, b] : rs.zero_pairs()) zero.push_back(word_text({a, b}, names));
    std::vector<std::string> nil;
    for (int g : rs.nilpotents()) nil.push_back(names[static_cast<std::size_t>(g)]);
    std::vector<std::string> order;
    for (int g : rs.order().sequence()) order.push_back(names[static_cast<std::size_t>(g)]);

    std::optional<QuotientResult> q;
    if (!quotient.empty()) q = quotient_by_grouplike(spec, rs, parse_word_poly(quotient, names, spec.group().exponent()), cfg_.force);

    if (cfg_.json) {
      Json rules = Json::array();
      for (const auto& [pair, rhs] : rs.rules()) {
        rules.push_back({{"lhs", {names[static_cast<std::size_t>(pair.first)], names[static_cast<std::size_t>(pair.second)]}},
                         {"rhs", poly_json(rhs, names)}});
      }
      Json j{{"order", order},
             {"relations", relation_lines(rels, names)},
             {"rules", rules},
             {"zero_products", zero},
             {"nilpotents", nil},
             {"confluence", {{"confluent", conf.confluent}, {"degree_cap", conf.degree_cap},
                             {"words_checked", conf.words_checked}, {"ambiguous_words", conf.ambiguous_words}}}};
      if (!conf.divergences.empty()) {
        const auto& d = conf.divergences.front();
        j["confluence"]["witness"] = {{"word", word_text(d.word, names)},
                                      {"first", poly_text(d.first, names)},
                                      {"second", poly_text(d.second, names)}};
      }
      if (q) j["quotient"] = quotient_json(*q, names);
      emit(j);
    } else {
      out_ << "order: ";
      for (std::size_t i = 0; i < order.size(); ++i) out_ << (i ? " < " : "") << order[i];
      out_ << "\nrelations:\n";
      for (const auto& line : relation_lines(rels, names)) out_ << "  " << line << '\n';
      out_ << "rewrite rules:\n";
      for (const auto& line : rule_lines(rs, names)) out_ << "  " << line << '\n';
      out_ << "zero products:";
      for (const auto& z : zero) out_ << ' ' << z;
      out_ << "\nnilpotent generators:";
      for (const auto& z : nil) out_ << ' ' << z;
      out_ << "\nlocal confluence up to degree " << conf.degree_cap << ": " << (conf.confluent ? "yes" : "NO") << " ("
           << conf.words_checked << " words, " << conf.ambiguous_words << " ambiguous)\n";
      for (const auto& d : conf.divergences) {
        out_ << "  " << word_text(d.word, names) << ": " << poly_text(d.first, names) << " vs "
             << poly_text(d.second, names) << '\n';
      }
      if (q) print_quotient(*q, names);
    }
    return conf.confluent ? kExitOk : kExitFail;
  }

  Json quotient_json(const QuotientResult& q, const std::vector<std::string>& names) const {
    std::vector<std::string> killed;
    for (int g : q.system.killed()) killed.push_back(names[static_cast<std::size_t>(g)]);
    return {{"central", q.central},
            {"grouplike", q.grouplike},
            {"killed", killed},
            {"substitution", {{"lhs", word_text(q.system.lead(), names)}, {"rhs", poly_text(q.system.lead_rhs(), names)}}},
            {"notes", q.notes}};
  }

  void print_quotient(const QuotientResult& q, const std::vector<std::string>& names) const {
    out_ << "quotient: central " << (q.central ? "yes" : "no") << ", grouplike " << (q.grouplike ? "yes" : "no")
         << "\n  set to zero:";
    for (int g : q.system.killed()) out_ << ' ' << names[static_cast<std::size_t>(g)];
    out_ << "\n  " << word_text(q.system.lead(), names) << " -> " << poly_text(q.system.lead_rhs(), names) << '\n';
    for (const auto& note : q.notes) out_ << "  note: " << note << '\n';
  }

  int nf(const std::string& path, const std::string& text, const std::string& quotient) const {
    const AlgebraSpec spec = load_spec(path);
    if (!spec_ok(spec)) return kExitFail;
    const auto names = basis_names(spec);
    const int n = spec.group().exponent();
    const Poly input = parse_word_poly(text, names, n);
    const RewriteSystem rs = rewrite_system(spec);
    Poly result;
    if (quotient.empty()) {
      result = rs.normal_form(input);
    } else {
      result = quotient_by_grouplike(spec, rs, parse_word_poly(quotient, names, n), cfg_.force).system.normal_form(input);
    }
    if (cfg_.json) {
      emit({{"input", poly_json(input, names)}, {"normal_form", poly_json(result, names)}});
    } else {
      out_ << poly_text(result, names) << '\n';
    }
    return kExitOk;
  }

  int anyspace(int n, int vars, const std::string& action, const std::string& expr) const {
    if (n < 1) throw ParseError("--n", "n must be positive");
    const ThetaPoly p = parse_theta(expr, n, vars);
    auto need_one_slot = [&] {
      if (p.vars() != 1) throw ParseError(action, "this operation takes an expression in t1 only");
    };
    if (action == "expand") return print_theta(p);
    if (action == "coproduct") return need_one_slot(), print_theta(coproduct(p));
    if (action == "antipode") return need_one_slot(), print_theta(antipode(p));
    if (action == "derivative") return need_one_slot(), print_theta(braided_derivative(p));
    if (action == "integral") return need_one_slot(), print_scalar(braided_integral(p));
    if (action == "counit") return print_scalar(counit(p));
    throw ParseError(action, "unknown anyspace action; use expand, coproduct, antipode, derivative, integral or counit");
  }

  int print_theta(const ThetaPoly& p) const {
    if (cfg_.json) {
      Json terms = Json::array();
      for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_json(c)}});
      emit({{"n", p.n()}, {"vars", p.vars()}, {"terms", terms}});
      return kExitOk;
    }
    if (p.is_zero()) out_ << "0\n";
    for (const auto& [e, c] : p.terms()) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "·";
        mono += "t" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      out_ << (mono.empty() ? "1" : mono) << "  " << compact(c) << '\n';
    }
    return kExitOk;
  }

  int print_scalar(const CycNum& c) const {
    out_ << (cfg_.json ? to_json(c).dump(2) : compact(c)) << '\n';
    return kExitOk;
  }

  struct SearchArgs {
    int dim = 1;
    std::optional<int> n;
    std::string alphabet;
    std::string degrees;
    bool require_delta = false;
    bool nonzero_degree = false;
    bool no_prune = false;
    std::uint64_t cap = 10'000'000;
    unsigned threads = 1;
  };

  int search(const SearchArgs& a) const {
    SearchSpace space;
    space.dim = a.dim;
    if (a.dim < 1 || a.dim > 2) throw ParseError("--dim", "dimension must be 1 or 2");
    space.grading = !cfg_.bicharacter.empty()
                        ? bicharacter_from_json(json_argument(cfg_.bicharacter), "--bicharacter")
                        : Bicharacter::anyonic(a.n.value_or(1));
    const auto& G = space.grading.group();
    if (!a.degrees.empty()) space.degrees = parse_degrees(a.degrees, G, "--degrees");
    if (!space.degrees.empty() && static_cast<int>(space.degrees.size()) != a.dim) {
      throw ParseError("--degrees", "expected one degree per basis element");
    }
    for (const auto& item : split(a.alphabet, ',')) {
      const Poly scalar = parse_word_poly(item, {}, G.exponent());
      space.alphabet.push_back(scalar.coeff({}));
    }
    if (!a.alphabet.empty() && space.alphabet.empty()) throw ParseError("--alphabet", "empty alphabet");
    space.require_delta = a.require_delta;
    space.require_nonzero_degree = a.nonzero_degree;
    space.prune = !a.no_prune;
    space.cap = a.cap;
    space.threads = a.threads;

    const auto [count, full] = count_candidates(space);
    if (count > space.cap) {
      err_ << "search space has " << count << " candidates, above the cap of " << space.cap
           << "; narrow the alphabet, fix --degrees or raise --cap\n";
      return kExitInput;
    }
    if (!cfg_.json) out_ << "candidates: " << count << " (" << full << " before degree pruning)\n" << std::flush;
    const SearchResult result = run_search(space);
    if (cfg_.json) {
      Json sols = Json::array();
      for (const auto& s : result.solutions) sols.push_back(to_json(s));
      emit({{"candidates", result.candidates},
            {"unpruned_candidates", result.unpruned_candidates},
            {"coalgebras", result.coalgebras},
            {"solutions", sols},
            {"count", result.solutions.size()},
            {"notes", result.notes}});
    } else {
      for (std::size_t i = 0; i < result.solutions.size(); ++i) {
        out_ << "solution " << i + 1 << ": " << to_json(result.solutions[i]).dump() << '\n';
      }
      out_ << "found " << result.solutions.size() << " solution(s) among " << result.coalgebras
           << " graded coalgebras\n";
      for (const auto& note : result.notes) out_ << "note: " << note << '\n';
    }
    return kExitOk;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with anyonic Lie algebras", "anyonic"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--order", cfg.order, "Generator order for rewriting, smallest first (names or indices)");
  app.add_option("--weights", cfg.weights, "Generator weights for the monomial order, in --order sequence");
  app.add_option("--bicharacter", cfg.bicharacter, "Grading as inline JSON or a file, replacing Z/n");
  app.add_option("--degree-cap", cfg.degree_cap, "Word length for the confluence check")->check(CLI::Range(3, 12));
  app.add_flag("--force", cfg.force, "Continue even if the algebra fails its axioms");
  app.add_flag("--colour", cfg.colour, "Colour mode: warn when the bicharacter is not skew");
  app.add_option("-o,--output", cfg.output, "Write output to a file instead of standard output");

  std::string path, word, quotient, g_file, f, labels = "indexed", action, expr;
  std::optional<int> n;
  int N = 1, vars = 0;
  bool report = false;
  detail::Session::SearchArgs search;

  auto* verify = app.add_subcommand("verify", "Check the axioms of an algebra file");
  verify->add_option("file", path, "Algebra JSON ('-' for stdin)")->required();

  auto* matrix = app.add_subcommand("make-matrix", "Emit the matrix-type algebra L_{N,f}");
  matrix->add_option("--N", N, "Matrix size")->required()->check(CLI::Range(1, 8));
  matrix->add_option("--n", n, "Order of the cyclic grading")->check(CLI::Range(1, 1000));
  matrix->add_option("--f", f, "Grading values f(1),...,f(N)");
  matrix->add_option("--labels", labels, "indexed (x[m,k]) or letters (a, b, c, d for N = 2)");

  auto* ansatz = app.add_subcommand("make-ansatz", "Emit C + g from the structure constants of g");
  ansatz->add_option("--n", n, "Order of the cyclic grading")->check(CLI::Range(1, 1000));
  ansatz->add_option("--g-file", g_file, "JSON description of g")->required();
  ansatz->add_flag("--report", report, "Compare the reduced conditions on g with the full axiom check");

  auto* env = app.add_subcommand("env", "Relations of the enveloping algebra and their rewrite system");
  env->add_option("file", path, "Algebra JSON")->required();
  env->add_option("--quotient", quotient, "Central grouplike element to set equal to 1");

  auto* nf = app.add_subcommand("nf", "Normal form of an element of the enveloping algebra");
  nf->add_option("file", path, "Algebra JSON")->required();
  nf->add_option("word", word, "Element such as \"d*c*b\" or \"a d - c b\"")->required();
  nf->add_option("--quotient", quotient, "Central grouplike element to set equal to 1");

  auto* any = app.add_subcommand("anyspace", "Computations on C[theta]/theta^n and its tensor powers");
  any->add_option("--n", n, "theta^n = 0")->required()->check(CLI::Range(1, 64));
  any->add_option("--vars", vars, "Number of slots (default: largest t<k> used)")->check(CLI::Range(0, 16));
  any->add_option("action", action, "expand, coproduct, antipode, derivative, integral or counit")->required();
  any->add_option("expr", expr, "Expression in z and t1..tm")->required();

  auto* srch = app.add_subcommand("search", "Exhaustive search for small anyonic Lie algebras");
  srch->add_option("--dim", search.dim, "Dimension (1 or 2)");
  srch->add_option("--n", search.n, "Order of the cyclic grading")->check(CLI::Range(1, 64));
  srch->add_option("--alphabet", search.alphabet, "Coefficients such as \"0,1,-1,z\"");
  srch->add_option("--degrees", search.degrees, "Fix the degrees of the basis");
  srch->add_flag("--require-delta", search.require_delta, "Only coproducts with d != 0");
  srch->add_flag("--nonzero-degree", search.nonzero_degree, "Some basis element has nonzero degree");
  srch->add_flag("--no-prune", search.no_prune, "Also enumerate entries that violate degree additivity");
  srch->add_option("--cap", search.cap, "Refuse spaces with more candidates than this");
  srch->add_option("--threads", search.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kExitInput;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;
  const detail::Session session(cfg, sink, err);

  try {
    if (*verify) return session.verify(path);
    if (*matrix) return session.make_matrix(N, n, f, labels);
    if (*ansatz) return session.make_ansatz(n, g_file, report);
    if (*env) return session.env(path, quotient);
    if (*nf) return session.nf(path, word, quotient);
    if (*any) return session.anyspace(*n, vars, action, expr);
    if (*srch) return session.search(search);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedShape& e) {
    err << "unsupported relation shape: " << e.what() << '\n';
    return kExitFail;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInput;
}

}  // namespace anyonic::cli
