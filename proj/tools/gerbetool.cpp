// gerbetool: batch front end for the gerbes library.
//
//   gerbetool <command> [problem.json] [--case integral|oneone] [--w NAME|1/2,0,0,0]...
//             [--generators a,b,...] [--samples N] [--seed S] [--name EXAMPLE]
//
// The JSON report goes to stdout and a short summary to stderr. Exit status is
// 0 when the computation succeeded, 1 when it found a nonvanishing obstruction
// or a failed identity, 2 on input errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gerbes/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for gerbes on complex tori"};
  std::string command;
  std::string problem_path;
  std::string case_text;
  gerbes::CommandArgs args;

  std::string command_list;
  for (auto c : gerbes::kCommands) command_list += std::string(command_list.empty() ? "" : ", ") + std::string(c);

  app.add_option("command", command, "One of: " + command_list)->required();
  app.add_option("problem", problem_path, "Problem file (JSON)");
  app.add_option("--case", case_text, "Subgroup case, overriding the problem file")
      ->check(CLI::IsMember({"integral", "oneone"}));
  app.add_option("--w", args.w, "Vector name or inline comma-separated rationals (repeatable)");
  app.add_option("--generators", args.generators, "Subgroup generators")->delimiter(',');
  app.add_option("--samples", args.samples, "Extra random pairs for tau-verify")->capture_default_str();
  app.add_option("--seed", args.seed, "Seed for the random pairs")->capture_default_str();
  app.add_option("--name", args.name, "Example name: first-obstruction, second-obstruction, k-group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  gerbes::Report report;
  try {
    if (!case_text.empty()) args.subgroup_case = gerbes::parse_subgroup_case(case_text);
    std::optional<gerbes::ProblemFile> problem;
    if (!problem_path.empty()) problem = gerbes::load_problem(problem_path);
    report = gerbes::run_command(command, problem, args);
  } catch (const gerbes::Error& e) {
    report = gerbes::error_report(e);
  }

  std::cout << report.document.dump(2) << '\n';
  if (!report.summary.empty()) {
    std::cerr << report.summary;
    if (report.summary.back() != '\n') std::cerr << '\n';
  }
  return report.exit_status;
}
