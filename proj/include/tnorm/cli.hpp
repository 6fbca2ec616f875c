/*   Copyright 2026 The tnorm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tnorm/error.hpp"
#include "tnorm/io.hpp"
#include "tnorm/madm.hpp"
#include "tnorm/power.hpp"
#include "tnorm/verify.hpp"

namespace tnorm::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,   ///< parse or validation error
  kInfeasible = 3,     ///< weight LP infeasible or unbounded
  kDomainError = 4,    ///< numeric domain error
};

namespace detail {

inline void print_suite(const verify::SuiteResult& suite, std::ostream& out) {
  for (const auto& line : suite.lines) {
    std::ostringstream dev;
    dev << std::scientific << std::setprecision(3) << line.max_deviation;
    out << suite.name << "  " << line.subject << "  max_dev=" << dev.str()
        << "  " << line.detail << "  " << (line.ok ? "ok" : "FAIL") << '\n';
  }
}

inline std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw 0;
    } catch (...) {
      throw ParseError("invalid lambda value '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("empty lambda list");
  return out;
}

}  // namespace detail

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`; nothing is written to `out` when a
/// command fails.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Continuous t-norm powers, intuitionistic fuzzy aggregation "
               "and decision making", "tnorm"};
  app.require_subcommand(1);

  std::string tnorm_literal;
  double u = 0.0;
  double t = 1.0;
  auto* power = app.add_subcommand("power", "Print u_T^(t) and u_S^(t)");
  power->add_option("--tnorm", tnorm_literal, "t-norm literal")->required();
  power->add_option("--u", u, "base in [0,1]")->required();
  power->add_option("--t", t, "exponent >= 0")->required();

  std::string problem_path;
  std::string format = "text";
  std::string override_literal;
  int precision = 4;
  auto* solve = app.add_subcommand("solve", "Rank the alternatives of a problem file");
  solve->add_option("problem", problem_path, "problem file")->required();
  solve->add_option("--format", format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json", "structured"}));
  solve->add_option("--tnorm", override_literal, "override the file's t-norm");
  solve->add_option("--precision", precision, "decimal places")
      ->check(CLI::Range(0, 17));

  std::string pair = "product,einstein";
  double step = 0.01;
  std::string lambdas_text;
  int sweep_precision = 6;
  auto* sweep = app.add_subcommand(
      "sweep", "L-values over ordinal sums (<0,l,A>, <l,1,B>) as CSV");
  sweep->add_option("problem", problem_path, "problem file")->required();
  sweep->add_option("--pair", pair, "families A,B");
  sweep->add_option("--step", step, "grid step for l in (0,1)");
  sweep->add_option("--lambdas", lambdas_text, "explicit comma-separated l values");
  sweep->add_option("--precision", sweep_precision, "decimal places")
      ->check(CLI::Range(0, 17));

  std::string scope = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suites");
  verify_cmd->add_option("scope", scope, "all | power | stability | lp")
      ->check(CLI::IsMember({"all", "power", "stability", "lp"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    std::string result;
    int status = kSuccess;
    if (*power) {
      const TNormSpec spec = io::parse_tnorm(tnorm_literal);
      result = "power_t: " + io::format_fixed(power_t(spec, u, t), 6) + "\n" +
               "power_s: " + io::format_fixed(power_s(spec, u, t), 6) + "\n";
    } else if (*solve) {
      DecisionProblem problem = io::load_problem(problem_path);
      if (!override_literal.empty()) problem.tnorm = io::parse_tnorm(override_literal);
      const RankingResult ranking = tnorm::rank(problem);
      result = io::format_report(problem, ranking, io::parse_report_format(format),
                                 precision);
    } else if (*sweep) {
      const DecisionProblem problem = io::load_problem(problem_path);
      const auto comma = pair.find(',');
      if (comma == std::string::npos) {
        throw ParseError("--pair expects two families separated by ','");
      }
      const GeneratorFamily lower = io::parse_family(pair.substr(0, comma));
      const GeneratorFamily upper = io::parse_family(pair.substr(comma + 1));
      const std::vector<double> lambdas = lambdas_text.empty()
                                              ? io::lambda_grid(step)
                                              : detail::parse_lambda_list(lambdas_text);
      const auto values = io::lambda_sweep(problem, lower, upper, lambdas);
      result = io::format_sweep_csv(problem, lambdas, values, sweep_precision);
    } else if (*verify_cmd) {
      std::ostringstream report;
      bool ok = true;
      auto run_suite = [&](const verify::SuiteResult& suite) {
        detail::print_suite(suite, report);
        ok = ok && suite.ok();
      };
      if (scope == "all" || scope == "power") run_suite(verify::power_suite());
      if (scope == "all" || scope == "stability") run_suite(verify::stability_suite());
      if (scope == "all" || scope == "lp") run_suite(verify::lp_suite());
      result = report.str();
      status = ok ? kSuccess : kVerificationFailed;
    }
    out << result;
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const UnboundedError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace tnorm::cli
