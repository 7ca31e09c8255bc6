#include "qcoord/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "qcoord/cli/expression.hpp"
#include "qcoord/frobenius.hpp"
#include "qcoord/qsln.hpp"
#include "qcoord/skeinconst.hpp"

namespace qcoord::cli {

std::string rational_json(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

Json scalar_json(const LaurentScalar& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, rational_json(c)}));
  return Json{{"terms", terms}};
}

Json scalar_json(const CyclotomicScalar& s) {
  Json residue = Json::array();
  for (const auto& c : s.residue().coeffs()) residue.push_back(rational_json(c));
  return Json{{"m", s.order()}, {"residue", residue}};
}

Json monomial_json(int n, const NcMonomial& m) {
  Json out = Json::array();
  for (std::size_t k = 0; k < m.degree(); ++k) {
    GeneratorId g = generator_id(n, m[k]);
    out.push_back(Json::array({g.row, g.col}));
  }
  return out;
}

Json report_json(const CheckReport& report, Json parameters, Json data) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      ++failed;
      if (!c.lhs.empty() || !c.rhs.empty()) {
        entry["lhs"] = c.lhs;
        entry["rhs"] = c.rhs;
      }
    }
    if (c.deviation) entry["deviation"] = *c.deviation;
    if (c.tolerance) entry["tolerance"] = *c.tolerance;
    checks.push_back(std::move(entry));
  }
  Json out{{"suite", report.suite},
           {"parameters", std::move(parameters)},
           {"passed", report.passed()},
           {"total", report.checks.size()},
           {"failed", failed},
           {"checks", std::move(checks)}};
  if (!data.is_null()) out["data"] = std::move(data);
  return out;
}

WebDescription parse_web(const Json& doc, int n) {
  if (!doc.is_object()) throw std::invalid_argument("web description must be a JSON object");
  std::vector<GroupoidGenerator> gens;
  for (const auto& g : doc.value("generators", Json::array())) {
    if (g.is_string()) {
      gens.push_back({g.get<std::string>(), "*", "*"});
    } else if (g.is_object()) {
      gens.push_back({g.at("name").get<std::string>(), g.value("source", "*"), g.value("target", "*")});
    } else {
      throw std::invalid_argument("generator entries must be names or objects");
    }
  }
  WebDescription out{GroupoidPresentation(std::move(gens)), {}};
  auto spin_of = [](const Json& j) {
    int spin = j.value("spin", 0);
    if (spin != 0 && spin != 1) throw std::invalid_argument("spin must be 0 or 1");
    return spin;
  };
  for (const auto& a : doc.value("arcs", Json::array())) {
    StatedArc arc;
    arc.word = out.presentation.parse(a.at("word").get<std::string>());
    arc.state_out = a.at("i").get<int>();
    arc.state_in = a.at("j").get<int>();
    if (arc.state_out < 1 || arc.state_out > n || arc.state_in < 1 || arc.state_in > n)
      throw std::invalid_argument("arc state outside 1.." + std::to_string(n));
    arc.spin = spin_of(a);
    out.web.arcs.push_back(std::move(arc));
  }
  for (const auto& k : doc.value("knots", Json::array())) {
    StatedKnot knot;
    knot.word = out.presentation.parse(k.at("word").get<std::string>());
    if (!out.presentation.is_loop(knot.word)) throw std::invalid_argument("knot word '" + knot.word.to_string() + "' is not a loop");
    knot.spin = spin_of(k);
    out.web.knots.push_back(std::move(knot));
  }
  return out;
}

namespace {

const std::vector<std::string> kSuites{"hopf", "constants", "permsum", "frobenius", "classical", "detexp", "cap"};

struct Options {
  int n = 2;
  int m = 3;
  std::uint64_t seed = 1;
  int trials = 100;
  int degree = 2;
  int max_k = 6;
  bool json = false;
  bool verbose = false;
  std::string ring = "laurent";
  std::string algebra = "mq";
  std::string web;
  std::string expression;
  std::string suite;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteResult {
  CheckReport report;
  Json parameters;
  Json data;
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

SuiteResult run_hopf(const Options& o) {
  return {check_hopf_axioms(o.n), Json{{"n", o.n}}, nullptr};
}

SuiteResult run_constants(const Options& o) {
  CheckReport report;
  report.suite = "constants";
  ConstantTable table = constants(o.n);
  LaurentScalar prod(1L);
  for (const auto& c : table.c) prod *= c;
  report.add("prod_i c_i = t^(n/2)", prod == table.t_half, prod.to_string(), table.t_half.to_string());
  for (int i = 1; i <= o.n; ++i) {
    LaurentScalar p = table.c_at(i) * table.c_at(dual_state(o.n, i));
    report.add("c_" + std::to_string(i) + " c_" + std::to_string(dual_state(o.n, i)) + " = t", p == table.t,
               p.to_string(), table.t.to_string());
  }
  for (int i = 1; i <= o.n; ++i)
    for (int j = 1; j <= o.n; ++j) {
      HeightExchangeCoeffs h = height_exchange_coeffs(o.n, i, j);
      std::string label = "height exchange (" + std::to_string(i) + "," + std::to_string(j) + ") at v=1";
      Rational lead = h.lead.at_one();
      bool cross_zero = true;
      std::string cross_text;
      for (const auto& [k, c] : h.cross) {
        if (c.at_one() != 0) cross_zero = false;
        cross_text += (cross_text.empty() ? "" : ", ") + std::to_string(k) + ": " + to_string(c.at_one());
      }
      report.add(label + ": lead = 1", lead == 1, to_string(lead), "1");
      report.add(label + ": cross terms = 0", cross_zero, cross_text, "0");
    }
  Json c_json = Json::array(), c_text = Json::array();
  for (const auto& c : table.c) {
    c_json.push_back(scalar_json(c));
    c_text.push_back(c.to_string());
  }
  Json data{{"c", c_json},           {"c_text", c_text},
            {"t", scalar_json(table.t)}, {"t_half", scalar_json(table.t_half)},
            {"a", scalar_json(table.a)}, {"d_n", table.d_n}};
  return {std::move(report), Json{{"n", o.n}}, std::move(data)};
}

SuiteResult run_permsum(const Options& o) {
  CheckReport report;
  report.suite = "permsum";
  for (int k = 1; k <= o.max_k; ++k) {
    LaurentScalar lhs = permutation_length_sum(k, o.n);
    LaurentScalar rhs = q_number(k, QNumberKind::factorial, o.n) * q_power(o.n, k * (k - 1) / 2);
    report.add("k=" + std::to_string(k) + ": sum q^(2 l(sigma)) = [k]! q^(k(k-1)/2)", lhs == rhs, lhs.to_string(),
               rhs.to_string());
  }
  return {std::move(report), Json{{"n", o.n}, {"max_k", o.max_k}}, nullptr};
}

SuiteResult run_frobenius(const Options& o) {
  if (o.m < 1 || std::gcd(o.m, 2 * o.n) != 1)
    throw UsageError("frobenius needs gcd(m, 2n) = 1; got m = " + std::to_string(o.m) + ", n = " + std::to_string(o.n));
  RootOfUnityContext ctx(o.n, o.m);
  CheckReport report = check_power_identities(ctx);
  InjectivityResult inj = check_injectivity_on_basis(ctx, o.degree);
  report.add("injective on basis monomials of degree <= " + std::to_string(o.degree), inj.injective, inj.failure, "");
  SpanningCount count = spanning_set_count(o.n, o.m);
  report.add("spanning count formula = enumeration", count.agrees(), count.formula.get_str(),
             count.enumerated ? count.enumerated->get_str() : "");
  Json data{{"basis_monomials_checked", inj.inputs}, {"spanning_count", count.formula.get_str()}};
  return {std::move(report), Json{{"n", o.n}, {"m", o.m}, {"degree", o.degree}}, std::move(data)};
}

SuiteResult run_classical(const Options& o) {
  CheckReport report = check_stated_matrix_identities(o.n, o.seed, o.trials);
  CheckReport knots = check_knot_conjugation(o.n, o.seed, o.trials);
  report.checks.insert(report.checks.end(), knots.checks.begin(), knots.checks.end());
  Json data = nullptr;
  if (!o.web.empty()) {
    std::ifstream in(o.web);
    if (!in) throw UsageError("cannot open web file '" + o.web + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("web file is not valid JSON: ") + e.what());
    }
    WebDescription desc = parse_web(doc, o.n);
    Representation rep = Representation::random(desc.presentation, o.n, o.seed);
    Complex value = eval_web(desc.web, rep);
    StatedWebClassical reversed = desc.web;
    std::reverse(reversed.arcs.begin(), reversed.arcs.end());
    std::reverse(reversed.knots.begin(), reversed.knots.end());
    report.add_numeric("web value independent of component order", relative_deviation(eval_web(reversed, rep), value),
                       1e-9);
    Json arcs = Json::array(), knot_values = Json::array();
    for (const auto& a : desc.web.arcs) arcs.push_back(complex_json(eval_arc(a, rep)));
    for (const auto& k : desc.web.knots) knot_values.push_back(complex_json(eval_knot(k, rep)));
    data = Json{{"web_value", complex_json(value)}, {"arc_values", arcs}, {"knot_values", knot_values}};
  }
  return {std::move(report), Json{{"n", o.n}, {"seed", o.seed}, {"trials", o.trials}}, std::move(data)};
}

SuiteResult run_detexp(const Options& o) {
  return {check_det_expansion(o.n, o.seed, o.trials), Json{{"n", o.n}, {"seed", o.seed}, {"trials", o.trials}}, nullptr};
}

SuiteResult run_cap(const Options& o) {
  return {check_cap_resolution(o.n, o.seed, o.trials), Json{{"n", o.n}, {"seed", o.seed}, {"trials", o.trials}},
          nullptr};
}

SuiteResult run_count(const Options& o) {
  CheckReport report;
  report.suite = "count";
  SpanningCount count = spanning_set_count(o.n, o.m);
  report.add("formula = enumeration", count.agrees(), count.formula.get_str(),
             count.enumerated ? count.enumerated->get_str() : "");
  Json data{{"formula", count.formula.get_str()},
            {"enumerated", count.enumerated ? Json(count.enumerated->get_str()) : Json(nullptr)}};
  return {std::move(report), Json{{"n", o.n}, {"m", o.m}}, std::move(data)};
}

SuiteResult run_suite(const std::string& name, const Options& o) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (name == "hopf") return run_hopf(o);
  if (name == "constants") return run_constants(o);
  if (name == "permsum") return run_permsum(o);
  if (name == "frobenius") return run_frobenius(o);
  if (name == "classical") return run_classical(o);
  if (name == "detexp") return run_detexp(o);
  if (name == "cap") return run_cap(o);
  if (name == "count") return run_count(o);
  throw UsageError("unknown suite '" + name + "'");
}

void print_text(const SuiteResult& r, const Options& o, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& c : r.report.checks) passed += c.passed ? 1 : 0;
  std::string params;
  for (const auto& [k, v] : r.parameters.items()) params += (params.empty() ? "" : ", ") + k + "=" + v.dump();
  out << r.report.suite << " (" << params << "): " << (r.report.passed() ? "PASS" : "FAIL") << "  " << passed << "/"
      << r.report.checks.size() << "\n";
  for (const auto& c : r.report.checks) {
    if (c.passed && !o.verbose) continue;
    out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (c.deviation) out << "  [deviation " << *c.deviation << ", tolerance " << *c.tolerance << "]";
    out << "\n";
    if (!c.passed && (!c.lhs.empty() || !c.rhs.empty())) out << "    lhs: " << c.lhs << "\n    rhs: " << c.rhs << "\n";
  }
  if (!r.data.is_null() && o.verbose) out << "  data: " << r.data.dump() << "\n";
}

int emit_suites(const std::string& command, const std::vector<SuiteResult>& results, const Options& o,
                std::ostream& out) {
  bool all = true;
  for (const auto& r : results) all = all && r.report.passed();
  if (o.json) {
    Json suites = Json::array();
    for (const auto& r : results) suites.push_back(report_json(r.report, r.parameters, r.data));
    out << Json{{"command", command}, {"passed", all}, {"suites", suites}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) print_text(r, o, out);
    if (results.size() > 1) out << (all ? "all suites passed" : "some suites failed") << "\n";
  }
  return all ? exit_pass : exit_failure;
}

template <class S>
Json polynomial_terms(int n, const NcPolynomial<S>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"monomial", monomial_json(n, m)}, {"coefficient", scalar_json(c)}});
  return terms;
}

template <class S, class Alg>
std::pair<std::string, Json> normalize_in(const Expr& e, int n, const Alg& alg) {
  std::function<S(const LaurentScalar&)> embed = [&alg](const LaurentScalar& x) { return alg.base().scalar(x); };
  std::function<NcPolynomial<S>(const NcPolynomial<S>&)> reduce = [&alg](const NcPolynomial<S>& p) {
    return alg.normal_form(p);
  };
  NcPolynomial<S> result = alg.normal_form(evaluate<S>(e, n, embed, reduce));
  return {result.to_string(n), polynomial_terms(n, result)};
}

/// Wraps QMatrixAlgebra so it exposes base().scalar like SlnAlgebra.
template <class S>
struct MqView {
  const QMatrixAlgebra<S>& alg;
  const QMatrixAlgebra<S>& base() const { return alg; }
  NcPolynomial<S> normal_form(const NcPolynomial<S>& p) const { return alg.normal_form(p); }
};

int run_normalize(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  ExprPtr e = parse_expression(o.expression, o.n);
  std::string text;
  Json terms;
  Json result{{"input", print_expression(*e)}, {"n", o.n}, {"ring", o.ring}, {"algebra", o.algebra}};
  if (o.algebra != "mq" && o.algebra != "sln") throw UsageError("--algebra must be mq or sln");
  if (e->mentions(Expr::Kind::commuting)) {
    CommutativeSlnPoly p = classical_normal_form(evaluate_commutative(*e, o.n));
    result["algebra"] = "classical";
    text = p.to_string();
    terms = Json::array();
    for (const auto& [m, c] : p.terms())
      terms.push_back(Json{{"monomial", monomial_json(o.n, m.monomial())}, {"coefficient", rational_json(c)}});
  } else if (o.ring == "laurent") {
    if (o.algebra == "mq") {
      QMatrixAlgebra<LaurentScalar> alg = build_algebra(o.n);
      std::tie(text, terms) = normalize_in<LaurentScalar>(*e, o.n, MqView<LaurentScalar>{alg});
    } else {
      SlnAlgebra<LaurentScalar> alg = build_sln(o.n);
      std::tie(text, terms) = normalize_in<LaurentScalar>(*e, o.n, alg);
    }
  } else if (o.ring.rfind("cyclotomic:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(o.ring.substr(11));
    } catch (const std::exception&) {
      throw UsageError("bad ring '" + o.ring + "'");
    }
    if (m < 1) throw UsageError("cyclotomic order must be >= 1");
    if (o.algebra == "mq") {
      QMatrixAlgebra<CyclotomicScalar> alg = build_algebra_at_root(o.n, m);
      std::tie(text, terms) = normalize_in<CyclotomicScalar>(*e, o.n, MqView<CyclotomicScalar>{alg});
    } else {
      SlnAlgebra<CyclotomicScalar> alg = build_sln_at_root(o.n, m);
      std::tie(text, terms) = normalize_in<CyclotomicScalar>(*e, o.n, alg);
    }
  } else {
    throw UsageError("--ring must be laurent or cyclotomic:<m>");
  }
  result["normal_form"] = text;
  result["terms"] = terms;
  if (o.json) {
    out << Json{{"command", "normalize"}, {"passed", true}, {"suites", Json::array()}, {"result", result}}.dump(2)
        << "\n";
  } else {
    out << text << "\n";
  }
  return exit_pass;
}

int run_basis(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.degree < 0) throw UsageError("basis needs --n >= 1 and --degree >= 0");
  std::vector<ExponentMatrix> basis = basis_monomials(o.n, o.degree);
  if (o.json) {
    Json matrices = Json::array();
    for (const auto& e : basis) {
      Json rows = Json::array();
      for (int i = 1; i <= o.n; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= o.n; ++j) row.push_back(e.at(i, j));
        rows.push_back(row);
      }
      matrices.push_back(rows);
    }
    Json result{{"n", o.n}, {"degree", o.degree}, {"count", basis.size()}, {"matrices", matrices}};
    out << Json{{"command", "basis"}, {"passed", true}, {"suites", Json::array()}, {"result", result}}.dump(2) << "\n";
  } else {
    out << basis.size() << " basis monomials of degree <= " << o.degree << "\n";
    for (const auto& e : basis) out << "  " << e.to_string() << "  " << e.monomial().to_string(o.n) << "\n";
  }
  return exit_pass;
}

void add_common(CLI::App* sub, Options& o, bool numeric) {
  sub->add_option("--n", o.n, "rank")->capture_default_str();
  sub->add_flag("--json", o.json, "emit the JSON report");
  sub->add_flag("--verbose", o.verbose, "list passing identities too");
  if (numeric) {
    sub->add_option("--m", o.m, "root of unity order")->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", o.trials, "Monte-Carlo trials")->capture_default_str();
    sub->add_option("--degree", o.degree, "degree bound for injectivity")->capture_default_str();
    sub->add_option("--max-k", o.max_k, "largest k for the permutation sum")->capture_default_str();
    sub->add_option("--web", o.web, "web description JSON for the classical suite");
  }
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in O_q(M(n)) and O_q(SLn)", "qcoord"};
  app.require_subcommand(1);

  auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
  normalize->add_option("expression", o.expression, "e.g. \"u[1,1]*u[2,2] - q*u[1,2]*u[2,1]\"")->required();
  add_common(normalize, o, false);
  normalize->add_option("--ring", o.ring, "laurent or cyclotomic:<m>")->capture_default_str();
  normalize->add_option("--algebra", o.algebra, "mq or sln")->capture_default_str();

  auto* check = app.add_subcommand("check", "run one identity suite");
  check->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  add_common(check, o, true);

  std::vector<std::pair<std::string, CLI::App*>> aliases;
  for (const auto& name : kSuites) {
    auto* alias = app.add_subcommand(name, "same as: check " + name);
    add_common(alias, o, true);
    aliases.emplace_back(name, alias);
  }

  auto* basis = app.add_subcommand("basis", "list O_q(SLn) basis exponent matrices");
  add_common(basis, o, false);
  basis->add_option("--degree", o.degree, "total degree bound")->capture_default_str();

  auto* count = app.add_subcommand("count", "spanning-set count over the Frobenius image");
  add_common(count, o, true);

  auto* report = app.add_subcommand("report", "run every suite");
  add_common(report, o, true);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "qcoord: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*normalize) return run_normalize(o, out);
    if (*basis) return run_basis(o, out);
    if (*check) return emit_suites("check", {run_suite(o.suite, o)}, o, out);
    for (const auto& [name, alias] : aliases)
      if (*alias) return emit_suites(name, {run_suite(name, o)}, o, out);
    if (*count) return emit_suites("count", {run_suite("count", o)}, o, out);
    if (*report) {
      std::vector<SuiteResult> results;
      for (const auto& name : kSuites) {
        if (name == "frobenius" && std::gcd(o.m, 2 * o.n) != 1) continue;
        results.push_back(run_suite(name, o));
      }
      results.push_back(run_suite("count", o));
      return emit_suites("report", results, o, out);
    }
  } catch (const ParseError& e) {
    err << "qcoord: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    err << "qcoord: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "qcoord: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "qcoord: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "qcoord: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace qcoord::cli
