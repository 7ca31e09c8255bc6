#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcoord/classical.hpp"
#include "qcoord/cyclotomic.hpp"
#include "qcoord/laurent.hpp"
#include "qcoord/ncalg.hpp"
#include "qcoord/report.hpp"

namespace qcoord::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

/// Runs one invocation; argv excludes the program name. Output goes to `out`,
/// diagnostics to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// "num/den", denominator always present.
std::string rational_json(const Rational& r);
Json scalar_json(const LaurentScalar& s);
Json scalar_json(const CyclotomicScalar& s);
/// [[i,j],...]
Json monomial_json(int n, const NcMonomial& m);
Json report_json(const CheckReport& report, Json parameters, Json data = nullptr);

/// A web description: {"generators": [...], "arcs": [{word,i,j,spin}], "knots": [{word,spin}]}.
/// Generators are names (loops at one base point) or {name, source, target}.
struct WebDescription {
  GroupoidPresentation presentation;
  StatedWebClassical web;
};

/// Throws std::invalid_argument on malformed input.
WebDescription parse_web(const Json& doc, int n);

}  // namespace qcoord::cli
