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

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tnorm/error.hpp"
#include "tnorm/oracle.hpp"
#include "tnorm/power.hpp"
#include "tnorm/simplex.hpp"

namespace tnorm::verify {

struct SuiteLine {
  std::string subject;
  double max_deviation = 0.0;
  std::string detail;
  bool ok = true;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteLine> lines;

  bool ok() const {
    for (const auto& l : lines) {
      if (!l.ok) return false;
    }
    return true;
  }
};

inline constexpr double kPowerTolerance = 1e-8;
inline constexpr double kStabilityTolerance = 1e-9;
inline constexpr double kLpTolerance = 1e-9;

/// Closed-form powers against the rational-power oracle over
/// u in {0, 0.05, ..., 1} and q/p in {1/4, 1/3, 1/2, 2/3, 3/2, 2, 3}.
inline SuiteResult power_suite() {
  static constexpr std::array<std::array<std::uint64_t, 2>, 7> exponents{
      {{1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 2}, {2, 1}, {3, 1}}};
  SuiteResult res{"power", {}};
  for (const auto& entry : oracle::shipped_catalogue()) {
    SuiteLine line{entry.name, 0.0, "", true};
    std::array<double, 3> witness{};
    for (int i = 0; i <= 20; ++i) {
      const double u = i / 20.0;
      for (const auto& [q, p] : exponents) {
        const double t = static_cast<double>(q) / static_cast<double>(p);
        const double dev = std::abs(power_t(entry.spec, u, t) -
                                    oracle::rational_power_oracle(entry.spec, u, q, p));
        if (dev > line.max_deviation) {
          line.max_deviation = dev;
          witness = {u, static_cast<double>(q), static_cast<double>(p)};
        }
      }
    }
    line.ok = line.max_deviation <= kPowerTolerance;
    line.detail = "worst at u=" + std::to_string(witness[0]) + " q/p=" +
                  std::to_string(static_cast<int>(witness[1])) + "/" +
                  std::to_string(static_cast<int>(witness[2]));
    res.lines.push_back(std::move(line));
  }
  return res;
}

/// Stability scans on a 21x21 grid with t in {0.5, 1, 2, 3}; a spec passes
/// when the scan verdict matches is_power_stable.
inline SuiteResult stability_suite() {
  static constexpr std::array<double, 4> ts{0.5, 1.0, 2.0, 3.0};
  SuiteResult res{"stability", {}};
  for (const auto& entry : oracle::shipped_catalogue()) {
    const auto rep = oracle::stability_scan(entry.spec, 21, ts);
    const bool scan_stable = rep.max_abs_deviation <= kStabilityTolerance;
    const bool predicate = is_power_stable(entry.spec);
    SuiteLine line{entry.name, rep.max_abs_deviation, "", scan_stable == predicate};
    line.detail = std::string(scan_stable ? "stable" : "unstable") +
                  " witness=(" + std::to_string(rep.witness[0]) + "," +
                  std::to_string(rep.witness[1]) + "," +
                  std::to_string(rep.witness[2]) + ")" +
                  (predicate == scan_stable ? "" : " disagrees with is_power_stable");
    res.lines.push_back(std::move(line));
  }
  return res;
}

/// Random feasible programs with 1-4 variables and up to 8 constraints,
/// simplex against vertex enumeration. Deterministic for a given seed.
inline SuiteResult lp_suite(int programs = 300, std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  SuiteResult res{"lp", {}};
  SuiteLine line{"random programs", 0.0, "", true};
  int infeasible_agree = 0;
  for (int k = 0; k < programs; ++k) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = rng() % 9;
    // Interior point of the simplex that every constraint admits with slack.
    std::vector<double> x0(n);
    double total = 0.0;
    for (double& v : x0) total += (v = 0.1 + unit(rng));
    for (double& v : x0) v /= total;
    const bool allow_infeasible = k % 10 == 9;

    std::vector<double> c(n);
    for (double& v : c) v = coef(rng);
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < m; ++i) {
      LinearConstraint con;
      con.coeffs.resize(n);
      double at = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        con.coeffs[j] = coef(rng);
        at += con.coeffs[j] * x0[j];
      }
      const double slack = 0.01 + 0.5 * unit(rng);
      con.relation = rng() % 2 ? Relation::less_equal : Relation::greater_equal;
      const double shift = allow_infeasible ? -slack : slack;
      con.rhs = con.relation == Relation::less_equal ? at + shift : at - shift;
      con.name = "c" + std::to_string(i + 1);
      cons.push_back(std::move(con));
    }

    bool simplex_infeasible = false;
    bool oracle_infeasible = false;
    LpSolution a;
    LpSolution b;
    try {
      a = lp_solve(c, cons, true, true);
    } catch (const InfeasibleError&) {
      simplex_infeasible = true;
    }
    try {
      b = oracle::lp_vertex_enumeration(c, cons);
    } catch (const InfeasibleError&) {
      oracle_infeasible = true;
    }
    if (simplex_infeasible != oracle_infeasible) {
      line.ok = false;
      line.detail = "program " + std::to_string(k) + ": feasibility verdicts differ";
      break;
    }
    if (simplex_infeasible) {
      ++infeasible_agree;
      continue;
    }
    const double gap = std::abs(a.objective - b.objective);
    line.max_deviation = std::max(line.max_deviation, gap);
    if (gap > kLpTolerance) {
      line.ok = false;
      line.detail = "program " + std::to_string(k) + ": objective gap";
      break;
    }
  }
  if (line.ok) {
    line.detail = std::to_string(programs) + " programs, " +
                  std::to_string(infeasible_agree) + " agreed infeasible";
  }
  res.lines.push_back(std::move(line));
  return res;
}

}  // namespace tnorm::verify
