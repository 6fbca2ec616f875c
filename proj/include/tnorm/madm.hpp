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

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "tnorm/aggregation.hpp"
#include "tnorm/error.hpp"
#include "tnorm/ifv.hpp"
#include "tnorm/power.hpp"
#include "tnorm/simplex.hpp"
#include "tnorm/tnorm_spec.hpp"

namespace tnorm {

enum class AttributeKind { benefit, cost };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::benefit;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Either a fixed weight vector or linear constraints on the weights, from
/// which the weights are determined by linear programming.
using WeightModel = std::variant<std::vector<LinearConstraint>, WeightVector>;

/// Alternatives x attributes matrix of IFV ratings plus the weight model and
/// the t-norm used for aggregation.
struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<Attribute> attributes;
  std::vector<std::vector<IFV>> matrix;
  WeightModel weights;
  TNormSpec tnorm = TNormSpec::product();

  std::size_t rows() const { return alternatives.size(); }
  std::size_t cols() const { return attributes.size(); }

  /// Throws ValidationError on mismatched dimensions.
  void validate() const {
    if (alternatives.empty()) throw ValidationError("no alternatives");
    if (attributes.empty()) throw ValidationError("no attributes");
    if (matrix.size() != rows()) {
      throw ValidationError("matrix has " + std::to_string(matrix.size()) +
                            " rows, expected " + std::to_string(rows()));
    }
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (matrix[r].size() != cols()) {
        throw ValidationError("matrix row " + std::to_string(r + 1) + " has " +
                              std::to_string(matrix[r].size()) +
                              " cells, expected " + std::to_string(cols()));
      }
    }
    if (const auto* fixed = std::get_if<WeightVector>(&weights)) {
      if (fixed->size() != cols()) {
        throw ValidationError("weight vector has " +
                              std::to_string(fixed->size()) +
                              " entries, expected " + std::to_string(cols()));
      }
    } else {
      for (const auto& c : std::get<std::vector<LinearConstraint>>(weights)) {
        if (c.coeffs.size() != cols()) {
          throw ValidationError("constraint '" + c.name + "' has " +
                                std::to_string(c.coeffs.size()) +
                                " coefficients, expected " +
                                std::to_string(cols()));
        }
      }
    }
  }

  friend bool operator==(const DecisionProblem&,
                         const DecisionProblem&) = default;
};

/// Complements every cost column and marks it benefit, so applying it twice
/// is the same as applying it once.
inline DecisionProblem normalize(DecisionProblem problem) {
  problem.validate();
  for (std::size_t j = 0; j < problem.cols(); ++j) {
    if (problem.attributes[j].kind != AttributeKind::cost) continue;
    for (auto& row : problem.matrix) row[j] = complement(row[j]);
    problem.attributes[j].kind = AttributeKind::benefit;
  }
  return problem;
}

/// L-value of every cell.
inline std::vector<std::vector<double>> l_matrix(const DecisionProblem& problem) {
  std::vector<std::vector<double>> out;
  out.reserve(problem.rows());
  for (const auto& row : problem.matrix) {
    std::vector<double> lrow;
    lrow.reserve(row.size());
    for (const auto& cell : row) lrow.push_back(l_value(cell));
    out.push_back(std::move(lrow));
  }
  return out;
}

struct WeightSolution {
  /// One weight per attribute; LP solutions may contain zeros.
  std::vector<double> weights;
  /// Column sums of the L-matrix (empty for a fixed weight model).
  std::vector<double> objective;
  bool unique = true;
};

namespace detail {

// LP vertices carry rounding noise; snap it so weights are exact zeros or
// strictly positive.
inline void snap_weights(std::vector<double>& w) {
  for (double& v : w) {
    if (std::abs(v) <= 1e-12) v = 0.0;
    if (std::abs(v - 1.0) <= 1e-12) v = 1.0;
  }
}

}  // namespace detail

/// Weights maximizing sum_j w_j * sum_l L(cell_lj) under the constraint
/// model, with sum(w) = 1 and w >= 0. Fixed models are returned unchanged.
/// `problem` must already be normalized.
inline WeightSolution solve_weights(const DecisionProblem& problem) {
  problem.validate();
  WeightSolution out;
  if (const auto* fixed = std::get_if<WeightVector>(&problem.weights)) {
    out.weights.assign(fixed->values().begin(), fixed->values().end());
    return out;
  }
  const auto lm = l_matrix(problem);
  out.objective.assign(problem.cols(), 0.0);
  for (const auto& row : lm) {
    for (std::size_t j = 0; j < row.size(); ++j) out.objective[j] += row[j];
  }
  const auto& constraints = std::get<std::vector<LinearConstraint>>(problem.weights);
  LpSolution sol = lp_solve(out.objective, constraints, true, true);
  detail::snap_weights(sol.x);
  out.weights = std::move(sol.x);
  out.unique = sol.unique;
  return out;
}

inline std::vector<double> optimal_weights(const DecisionProblem& problem) {
  return solve_weights(problem).weights;
}

struct RankedAlternative {
  std::string name;
  IFV aggregate;
  double l_value = 0.0;
  /// 1 is best.
  int rank = 0;
};

struct RankingResult {
  /// In input order.
  std::vector<RankedAlternative> alternatives;
  std::vector<double> weights_used;
  bool weights_unique = true;
  /// Set when the t-norm is not power stable; the operators are still
  /// well defined but several distributive laws fail for it.
  bool stability_caveat = false;

  /// Alternative indices from best to worst.
  std::vector<std::size_t> order() const {
    std::vector<std::size_t> idx(alternatives.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      idx[static_cast<std::size_t>(alternatives[i].rank - 1)] = i;
    }
    return idx;
  }
};

/// IFMWAG aggregate of one normalized row. Attributes with weight 0 are left
/// out, since the aggregation operators require weights in (0, 1].
inline IFV aggregate_row(const TNormSpec& spec, std::span<const double> weights,
                         std::span<const IFV> row) {
  std::vector<double> w;
  std::vector<IFV> cells;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (weights[j] > 0.0) {
      w.push_back(weights[j]);
      cells.push_back(row[j]);
    }
  }
  return ifmwag(spec, WeightVector(std::move(w)), cells);
}

/// Full pipeline: normalize, determine weights, aggregate each alternative
/// with IFMWAG and rank by L-value (ties: higher accuracy, then input order).
inline RankingResult rank(const DecisionProblem& input) {
  const DecisionProblem problem = normalize(input);
  const WeightSolution ws = solve_weights(problem);

  RankingResult result;
  result.weights_used = ws.weights;
  result.weights_unique = ws.unique;
  result.stability_caveat = !is_power_stable(problem.tnorm);
  for (std::size_t i = 0; i < problem.rows(); ++i) {
    const IFV agg = aggregate_row(problem.tnorm, ws.weights, problem.matrix[i]);
    result.alternatives.push_back({problem.alternatives[i], agg, l_value(agg), 0});
  }

  std::vector<std::size_t> idx(problem.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto& alts = result.alternatives;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (alts[x].l_value != alts[y].l_value) {
      return alts[x].l_value > alts[y].l_value;
    }
    const double ax = alts[x].aggregate.mu() + alts[x].aggregate.nu();
    const double ay = alts[y].aggregate.mu() + alts[y].aggregate.nu();
    if (ax != ay) return ax > ay;
    return x < y;
  });
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    result.alternatives[idx[pos]].rank = static_cast<int>(pos + 1);
  }
  return result;
}

}  // namespace tnorm
