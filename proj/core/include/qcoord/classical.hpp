#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcoord/report.hpp"

namespace qcoord {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// A_ij = (-1)^{i+1} when j = n + 1 - i, else 0. det A = 1 and A^2 = d_n I.
ComplexMatrix matrix_A(int n);

/// Gaussian matrix divided by a principal n-th root of its determinant.
/// Deterministic in the seed; near-singular draws are redrawn.
ComplexMatrix random_sln(int n, std::uint64_t seed);

/// max over entries of |a - b| / max(1, |b|).
double relative_deviation(const ComplexMatrix& a, const ComplexMatrix& b);
double relative_deviation(Complex a, Complex b);

struct GroupoidGenerator {
  std::string name;
  std::string source = "*";
  std::string target = "*";
};

struct GroupoidLetter {
  std::string generator;
  int exponent = 1;  ///< +1 or -1
  friend bool operator==(const GroupoidLetter&, const GroupoidLetter&) = default;
};

/// Product a * b * ... read right to left as a path: the rightmost letter is
/// traversed first.
struct GroupoidWord {
  std::vector<GroupoidLetter> letters;

  bool is_identity() const { return letters.empty(); }
  GroupoidWord inverse() const;
  /// "a b^-1 a", or "1" for the identity.
  std::string to_string() const;
  friend GroupoidWord operator*(const GroupoidWord& a, const GroupoidWord& b);
  friend bool operator==(const GroupoidWord&, const GroupoidWord&) = default;
};

/// A finitely generated free groupoid.
class GroupoidPresentation {
 public:
  GroupoidPresentation() = default;
  /// Throws std::invalid_argument on duplicate or empty names.
  explicit GroupoidPresentation(std::vector<GroupoidGenerator> generators);
  /// All generators are loops at a single base point.
  static GroupoidPresentation free_group(const std::vector<std::string>& names);

  const std::vector<GroupoidGenerator>& generators() const { return generators_; }
  /// Throws std::invalid_argument for an unknown name.
  const GroupoidGenerator& generator(const std::string& name) const;

  /// Parses whitespace-separated letters "g" or "g^-1" ("1" or "" is the
  /// identity). Throws std::invalid_argument naming the offending position, an
  /// unknown generator, or a non-composable pair.
  GroupoidWord parse(const std::string& text) const;

  bool composable(const GroupoidWord& w) const;
  /// True iff w is composable and starts where it ends.
  bool is_loop(const GroupoidWord& w) const;

 private:
  std::string source_of(const GroupoidLetter& l) const;
  std::string target_of(const GroupoidLetter& l) const;

  std::vector<GroupoidGenerator> generators_;
};

/// SL(n, C) matrices assigned to generators.
class Representation {
 public:
  /// Throws std::invalid_argument if some matrix is not n x n or |det - 1| >= 1e-12.
  Representation(int n, std::map<std::string, ComplexMatrix> assignment, std::uint64_t seed = 0);
  /// Independent random_sln draws for every generator.
  static Representation random(const GroupoidPresentation& presentation, int n, std::uint64_t seed);

  int rank() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  const std::map<std::string, ComplexMatrix>& assignment() const { return assignment_; }

  /// Ordered product of the letter matrices. Throws std::invalid_argument for an unknown generator.
  ComplexMatrix evaluate(const GroupoidWord& w) const;

 private:
  int n_;
  std::uint64_t seed_;
  std::map<std::string, ComplexMatrix> assignment_;
};

struct StatedArc {
  GroupoidWord word;
  int state_out = 1;
  int state_in = 1;
  int spin = 0;  ///< 0 or 1
};

struct StatedKnot {
  GroupoidWord word;
  int spin = 0;
};

struct StatedWebClassical {
  std::vector<StatedArc> arcs;
  std::vector<StatedKnot> knots;
};

/// d_n^spin [A rho(word)]_{n+1-i, n+1-j} for states (i, j) = (state_out, state_in).
Complex eval_arc(const StatedArc& arc, const Representation& rep);
/// d_n^spin Trace rho(word).
Complex eval_knot(const StatedKnot& knot, const Representation& rep);
/// Product over arcs and knots.
Complex eval_web(const StatedWebClassical& web, const Representation& rep);

/// T(w)_ij = [A rho(w)]_{n+1-i, n+1-j}.
ComplexMatrix stated_matrix(const ComplexMatrix& rho);

/// Per trial on a rank-two free group: A T(b*a) = A T(b) A T(a), det T(w) = 1,
/// T(1) = d_n A. Reports the worst deviation of each at 1e-9.
CheckReport check_stated_matrix_identities(int n, std::uint64_t seed, int trials = 100);

/// Independence of how a sink or source is removed, and the product of
/// determinants for the box relation, at 1e-8.
CheckReport check_det_expansion(int n, std::uint64_t seed, int trials = 100);

/// Cap values against their closed form, the cup sum collapsing through A^2,
/// and its closed-loop version against the trace, at 1e-9.
CheckReport check_cap_resolution(int n, std::uint64_t seed, int trials = 100);

/// Trace rho(g w g^-1) = Trace rho(w) on random words, at 1e-9.
CheckReport check_knot_conjugation(int n, std::uint64_t seed, int trials = 100);

}  // namespace qcoord
