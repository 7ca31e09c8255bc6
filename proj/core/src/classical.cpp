#include "qcoord/classical.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcoord/permutation.hpp"

namespace qcoord {

namespace {

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }
int d_n(int n) { return sign_of(n - 1); }
int bar(int n, int i) { return n + 1 - i; }

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

void check_state(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("state " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::string random_word_text(std::mt19937_64& rng, const std::vector<std::string>& names, int max_length) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::bernoulli_distribution invert(0.5);
  std::string text;
  for (int k = length(rng); k > 0; --k) {
    if (!text.empty()) text += " ";
    text += names[pick(rng)];
    if (invert(rng)) text += "^-1";
  }
  return text;
}

}  // namespace

ComplexMatrix matrix_A(int n) {
  check_rank(n);
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) a(i - 1, bar(n, i) - 1) = static_cast<double>(sign_of(i + 1));
  return a;
}

ComplexMatrix random_sln(int n, std::uint64_t seed) {
  check_rank(n);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng = stream(seed, 0x5e1f, attempt);
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double re = gauss(rng);
        double im = gauss(rng);
        m(i, j) = Complex(re, im);
      }
    Complex det = m.determinant();
    if (std::abs(det) < 1e-6) continue;
    m /= std::pow(det, 1.0 / n);
    if (std::abs(m.determinant() - 1.0) < 1e-12) return m;
  }
}

double relative_deviation(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double relative_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  double worst = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) worst = std::max(worst, relative_deviation(a(i, j), b(i, j)));
  return worst;
}

GroupoidWord GroupoidWord::inverse() const {
  GroupoidWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->generator, -it->exponent});
  return w;
}

std::string GroupoidWord::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += " ";
    out += l.generator;
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

GroupoidWord operator*(const GroupoidWord& a, const GroupoidWord& b) {
  GroupoidWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

GroupoidPresentation::GroupoidPresentation(std::vector<GroupoidGenerator> generators)
    : generators_(std::move(generators)) {
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw std::invalid_argument("empty generator name");
    if (g.name.find_first_of(" \t^") != std::string::npos)
      throw std::invalid_argument("generator name '" + g.name + "' contains whitespace or '^'");
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
  }
}

GroupoidPresentation GroupoidPresentation::free_group(const std::vector<std::string>& names) {
  std::vector<GroupoidGenerator> gens;
  for (const auto& name : names) gens.push_back({name, "*", "*"});
  return GroupoidPresentation(std::move(gens));
}

const GroupoidGenerator& GroupoidPresentation::generator(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string GroupoidPresentation::source_of(const GroupoidLetter& l) const {
  const auto& g = generator(l.generator);
  return l.exponent == 1 ? g.source : g.target;
}

std::string GroupoidPresentation::target_of(const GroupoidLetter& l) const {
  const auto& g = generator(l.generator);
  return l.exponent == 1 ? g.target : g.source;
}

GroupoidWord GroupoidPresentation::parse(const std::string& text) const {
  GroupoidWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string token = text.substr(start, pos - start);
    if (token == "1") continue;
    GroupoidLetter letter;
    std::size_t caret = token.find('^');
    letter.generator = token.substr(0, caret);
    if (caret != std::string::npos) {
      std::string exp = token.substr(caret + 1);
      if (exp == "-1") {
        letter.exponent = -1;
      } else if (exp != "1") {
        throw std::invalid_argument("bad exponent '" + exp + "' at position " + std::to_string(start + caret + 1));
      }
    }
    try {
      generator(letter.generator);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " at position " + std::to_string(start));
    }
    if (!w.letters.empty() && target_of(letter) != source_of(w.letters.back()))
      throw std::invalid_argument("letters are not composable at position " + std::to_string(start));
    w.letters.push_back(std::move(letter));
  }
  return w;
}

bool GroupoidPresentation::composable(const GroupoidWord& w) const {
  for (std::size_t k = 0; k + 1 < w.letters.size(); ++k)
    if (target_of(w.letters[k + 1]) != source_of(w.letters[k])) return false;
  return true;
}

bool GroupoidPresentation::is_loop(const GroupoidWord& w) const {
  if (!composable(w)) return false;
  if (w.letters.empty()) return true;
  return source_of(w.letters.back()) == target_of(w.letters.front());
}

Representation::Representation(int n, std::map<std::string, ComplexMatrix> assignment, std::uint64_t seed)
    : n_(n), seed_(seed), assignment_(std::move(assignment)) {
  check_rank(n);
  for (const auto& [name, m] : assignment_) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix for '" + name + "' is not n x n");
    if (std::abs(m.determinant() - 1.0) >= 1e-12)
      throw std::invalid_argument("matrix for '" + name + "' is not in SL(n)");
  }
}

Representation Representation::random(const GroupoidPresentation& presentation, int n, std::uint64_t seed) {
  std::map<std::string, ComplexMatrix> assignment;
  std::uint64_t k = 0;
  for (const auto& g : presentation.generators()) {
    std::mt19937_64 rng = stream(seed, 0x9e9, k++);
    assignment.emplace(g.name, random_sln(n, rng()));
  }
  return Representation(n, std::move(assignment), seed);
}

ComplexMatrix Representation::evaluate(const GroupoidWord& w) const {
  ComplexMatrix out = ComplexMatrix::Identity(n_, n_);
  for (const auto& l : w.letters) {
    auto it = assignment_.find(l.generator);
    if (it == assignment_.end()) throw std::invalid_argument("no matrix assigned to '" + l.generator + "'");
    out = l.exponent == 1 ? ComplexMatrix(out * it->second) : ComplexMatrix(out * it->second.inverse());
  }
  return out;
}

ComplexMatrix stated_matrix(const ComplexMatrix& rho) {
  const int n = static_cast<int>(rho.rows());
  ComplexMatrix a_rho = matrix_A(n) * rho;
  ComplexMatrix t(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t(i - 1, j - 1) = a_rho(bar(n, i) - 1, bar(n, j) - 1);
  return t;
}

Complex eval_arc(const StatedArc& arc, const Representation& rep) {
  const int n = rep.rank();
  check_state(n, arc.state_out);
  check_state(n, arc.state_in);
  if (arc.spin != 0 && arc.spin != 1) throw std::invalid_argument("spin must be 0 or 1");
  ComplexMatrix a_rho = matrix_A(n) * rep.evaluate(arc.word);
  Complex value = a_rho(bar(n, arc.state_out) - 1, bar(n, arc.state_in) - 1);
  return arc.spin ? value * static_cast<double>(d_n(n)) : value;
}

Complex eval_knot(const StatedKnot& knot, const Representation& rep) {
  if (knot.spin != 0 && knot.spin != 1) throw std::invalid_argument("spin must be 0 or 1");
  Complex value = rep.evaluate(knot.word).trace();
  return knot.spin ? value * static_cast<double>(d_n(rep.rank())) : value;
}

Complex eval_web(const StatedWebClassical& web, const Representation& rep) {
  Complex value = 1.0;
  for (const auto& arc : web.arcs) value *= eval_arc(arc, rep);
  for (const auto& knot : web.knots) value *= eval_knot(knot, rep);
  return value;
}

CheckReport check_stated_matrix_identities(int n, std::uint64_t seed, int trials) {
  check_rank(n);
  const double tol = 1e-9;
  const ComplexMatrix a = matrix_A(n);
  const std::vector<std::string> names{"a", "b"};
  GroupoidPresentation group = GroupoidPresentation::free_group(names);
  double worst_product = 0, worst_det = 0, worst_identity = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = stream(seed, 0x52, static_cast<std::uint64_t>(trial));
    Representation rep = Representation::random(group, n, rng());
    GroupoidWord alpha = group.parse(random_word_text(rng, names, 4));
    GroupoidWord beta = group.parse(random_word_text(rng, names, 4));
    GroupoidWord eta = group.parse(random_word_text(rng, names, 4));

    ComplexMatrix lhs = a * stated_matrix(rep.evaluate(beta * alpha));
    ComplexMatrix rhs = a * stated_matrix(rep.evaluate(beta)) * a * stated_matrix(rep.evaluate(alpha));
    worst_product = std::max(worst_product, relative_deviation(lhs, rhs));
    worst_det = std::max(worst_det, relative_deviation(stated_matrix(rep.evaluate(eta)).determinant(), 1.0));
    ComplexMatrix identity = stated_matrix(rep.evaluate(GroupoidWord{}));
    worst_identity = std::max(worst_identity, relative_deviation(identity, static_cast<double>(d_n(n)) * a));
  }
  CheckReport report;
  report.suite = "classical";
  report.add_numeric("A T(b*a) = A T(b) A T(a)", worst_product, tol);
  report.add_numeric("det T(w) = 1", worst_det, tol);
  report.add_numeric("T(1) = d_n A", worst_identity, tol);
  return report;
}

namespace {

/// sum_sigma sgn(sigma) prod_t entry(sigma(t), t).
template <class Entry>
Complex leibniz(int n, Entry&& entry) {
  Complex total = 0.0;
  Permutation sigma(n);
  do {
    Complex term = static_cast<double>(sigma.sign());
    for (int t = 1; t <= n; ++t) term *= entry(sigma(t), t);
    total += term;
  } while (sigma.next());
  return total;
}

}  // namespace

CheckReport check_det_expansion(int n, std::uint64_t seed, int trials) {
  check_rank(n);
  const double tol = 1e-8;
  const double reversal = static_cast<double>(sign_of(n * (n - 1) / 2));
  const ComplexMatrix a = matrix_A(n);
  double worst_sink = 0, worst_sink_move = 0, worst_source = 0, worst_source_move = 0, worst_box = 0, worst_leibniz = 0;

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = stream(seed, 0xde7, static_cast<std::uint64_t>(trial));
    std::uniform_int_distribution<int> state(1, n);
    std::vector<int> u(static_cast<std::size_t>(n + 1)), v(static_cast<std::size_t>(n + 1));
    std::vector<ComplexMatrix> x(static_cast<std::size_t>(n + 1)), y(static_cast<std::size_t>(n + 1));
    for (int t = 1; t <= n; ++t) {
      u[static_cast<std::size_t>(t)] = state(rng);
      v[static_cast<std::size_t>(t)] = state(rng);
      x[static_cast<std::size_t>(t)] = random_sln(n, rng());
      y[static_cast<std::size_t>(t)] = random_sln(n, rng());
    }
    ComplexMatrix g = random_sln(n, rng()), h = random_sln(n, rng());
    auto at = [](auto& vec, int t) -> auto& { return vec[static_cast<std::size_t>(t)]; };

    // A sink: arcs X_t ending in states u_t.
    auto sink_sum = [&](const ComplexMatrix& left) {
      return leibniz(n, [&](int s, int t) {
        ComplexMatrix ax = a * left * at(x, t);
        return ax(bar(n, s) - 1, bar(n, at(u, t)) - 1);
      });
    };
    ComplexMatrix columns(n, n);
    for (int t = 1; t <= n; ++t) columns.col(t - 1) = at(x, t).col(bar(n, at(u, t)) - 1);
    Complex sink = sink_sum(ComplexMatrix::Identity(n, n));
    worst_sink = std::max(worst_sink, relative_deviation(sink, reversal * columns.determinant()));
    worst_sink_move = std::max(worst_sink_move, relative_deviation(sink_sum(g), sink));

    // A source: arcs Y_t starting in states v_t.
    auto source_sum = [&](const ComplexMatrix& right) {
      return leibniz(n, [&](int s, int t) {
        ComplexMatrix ay = a * at(y, t) * right;
        return ay(bar(n, at(v, t)) - 1, bar(n, s) - 1);
      });
    };
    ComplexMatrix rows(n, n);
    for (int t = 1; t <= n; ++t) rows.row(t - 1) = (a * at(y, t)).row(bar(n, at(v, t)) - 1);
    Complex source = source_sum(ComplexMatrix::Identity(n, n));
    worst_source = std::max(worst_source, relative_deviation(source, reversal * rows.determinant()));
    worst_source_move = std::max(worst_source_move, relative_deviation(source_sum(h), source));

    // The box: rows listed from n down to 1 against columns 1..n.
    ComplexMatrix reversed_rows = rows.colwise().reverse();
    ComplexMatrix box(n, n);
    for (int s = 1; s <= n; ++s)
      for (int t = 1; t <= n; ++t)
        box(s - 1, t - 1) = (a * at(y, s) * at(x, t))(bar(n, at(v, s)) - 1, bar(n, at(u, t)) - 1);
    Complex expanded = leibniz(n, [&](int s, int t) { return box(s - 1, t - 1); });
    worst_leibniz = std::max(worst_leibniz, relative_deviation(expanded, box.determinant()));
    worst_box = std::max(worst_box,
                         relative_deviation(reversed_rows.determinant() * columns.determinant(), reversal * expanded));
  }

  CheckReport report;
  report.suite = "detexp";
  report.add_numeric("sink expansion = signed column determinant", worst_sink, tol);
  report.add_numeric("sink expansion independent of the dragging path", worst_sink_move, tol);
  report.add_numeric("source expansion = signed row determinant", worst_source, tol);
  report.add_numeric("source expansion independent of the dragging path", worst_source_move, tol);
  report.add_numeric("box expansion = det of the stacked entries", worst_leibniz, tol);
  report.add_numeric("det(rows) det(columns) = signed box expansion", worst_box, tol);
  return report;
}

CheckReport check_cap_resolution(int n, std::uint64_t seed, int trials) {
  check_rank(n);
  const double tol = 1e-9;
  const ComplexMatrix a = matrix_A(n);
  CheckReport report;
  report.suite = "cap";

  Representation trivial(n, {}, seed);
  double worst_cap = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Complex value = eval_arc(StatedArc{GroupoidWord{}, j, i, 1}, trivial);
      double expected = bar(n, j) == i ? static_cast<double>(sign_of(n - i)) : 0.0;
      worst_cap = std::max(worst_cap, relative_deviation(value, expected));
      worst_cap = std::max(worst_cap, relative_deviation(a(bar(n, i) - 1, bar(n, j) - 1), expected));
    }
  report.add_numeric("cap value = delta(n+1-j, i) (-1)^(n-i)", worst_cap, tol);

  double worst_cup = 0, worst_loop = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = stream(seed, 0xca9, static_cast<std::uint64_t>(trial));
    ComplexMatrix first = random_sln(n, rng()), second = random_sln(n, rng());
    ComplexMatrix a2 = a * second, a1 = a * first, joined = a * second * first;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        Complex sum = 0.0;
        for (int i = 1; i <= n; ++i)
          sum += static_cast<double>(sign_of(i + 1)) * a2(bar(n, u) - 1, bar(n, i) - 1) * a1(i - 1, bar(n, v) - 1);
        worst_cup = std::max(worst_cup, relative_deviation(sum, joined(bar(n, u) - 1, bar(n, v) - 1)));
      }
    Complex loop = 0.0;
    for (int i = 1; i <= n; ++i) loop += static_cast<double>(sign_of(i + 1)) * a1(i - 1, bar(n, i) - 1);
    worst_loop = std::max(worst_loop, relative_deviation(loop, first.trace()));
  }
  report.add_numeric("cup resolution collapses to the composed arc", worst_cup, tol);
  report.add_numeric("closed cup resolution = trace", worst_loop, tol);
  return report;
}

CheckReport check_knot_conjugation(int n, std::uint64_t seed, int trials) {
  check_rank(n);
  const double tol = 1e-9;
  const std::vector<std::string> names{"a", "b", "c"};
  GroupoidPresentation group = GroupoidPresentation::free_group(names);
  double worst = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = stream(seed, 0xc0, static_cast<std::uint64_t>(trial));
    Representation rep = Representation::random(group, n, rng());
    GroupoidWord loop = group.parse(random_word_text(rng, names, 5));
    GroupoidWord conjugator = group.parse(random_word_text(rng, names, 3));
    int spin = static_cast<int>(rng() % 2);
    Complex plain = eval_knot({loop, spin}, rep);
    Complex conjugated = eval_knot({conjugator * loop * conjugator.inverse(), spin}, rep);
    worst = std::max(worst, relative_deviation(conjugated, plain));
  }
  CheckReport report;
  report.suite = "knot";
  report.add_numeric("Trace rho(g w g^-1) = Trace rho(w)", worst, tol);
  return report;
}

}  // namespace qcoord
