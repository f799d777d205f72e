#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gerbes/error.hpp"
#include "gerbes/obstruction.hpp"

namespace gerbes {

struct ETerm {
  std::array<std::size_t, 3> indices{};  // 1-based, strictly increasing
  Rational coeff;
  friend bool operator==(const ETerm&, const ETerm&) = default;
};

struct BTerm {
  std::array<std::size_t, 2> indices{};  // 1-based, strictly increasing
  Rational coeff;
  friend bool operator==(const BTerm&, const BTerm&) = default;
};

/// A problem file: the torus, the gerbe data, named vectors and the subgroup case.
struct ProblemFile {
  std::size_t n = 0;
  QMatrix J;
  std::vector<ETerm> E;
  std::vector<BTerm> B;
  std::map<std::string, QVector> vectors;
  SubgroupCase subgroup_case = SubgroupCase::Integral;

  Torus torus() const;
  GerbeData gerbe() const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b) {
    return a.n == b.n && a.J == b.J && a.E == b.E && a.B == b.B && a.vectors == b.vectors &&
           a.subgroup_case == b.subgroup_case;
  }
};

/// Parses and validates a problem document. Errors name the offending field,
/// e.g. "E[1].indices". Throws Error with MalformedProblem, MalformedRational,
/// NonIncreasingIndices, BadDimensions, NotAComplexStructure or
/// TypeConditionFailed.
ProblemFile parse_problem(std::string_view text);
std::string render_problem(const ProblemFile& p);
ProblemFile load_problem(const std::string& path);

/// The built-in problems behind `example`: "first-obstruction" (E = 2 e123),
/// "second-obstruction" (E = 4 e123) and "k-group" (E = e123), all on the
/// standard n = 2 torus.
ProblemFile example_problem(std::string_view name);

struct CommandArgs {
  std::optional<SubgroupCase> subgroup_case;  // overrides the problem's case
  std::vector<std::string> w;                 // vector names or inline "1/2,0,0,0"
  std::vector<std::string> generators;
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  std::string name;
};

struct Report {
  nlohmann::ordered_json document;
  std::string summary;
  int exit_status = 0;  // 0 computed, 1 nonvanishing or failed identity, 2 input error
};

inline constexpr std::array<std::string_view, 11> kCommands = {
    "check-torus", "check-type", "translate",  "membership",   "tau-verify", "xi",
    "obstruction1", "obstruction2", "theta-table", "gerbal-class", "example"};

/// Runs one command. `problem` may be empty only for `example`. Throws Error;
/// use error_report to turn it into an exit-2 report.
Report run_command(std::string_view cmd, const std::optional<ProblemFile>& problem, const CommandArgs& args);
Report error_report(const Error& e);

}  // namespace gerbes
