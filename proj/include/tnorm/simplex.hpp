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
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "tnorm/error.hpp"

namespace tnorm {

enum class Relation { less_equal, greater_equal, equal };

/// coeffs . x  (<=|>=|=)  rhs
struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
  std::string name;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  /// False when some nonbasic column has a zero reduced cost at the optimum,
  /// i.e. other optimal vertices may exist.
  bool unique = true;
};

inline constexpr double kPivotTolerance = 1e-9;

namespace detail {

// Dense simplex tableau. Row `rows()` is the objective row; the last column
// is the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars)
      : rows_(rows), cols_(vars + 1), data_((rows + 1) * (vars + 1), 0.0),
        basis_(rows, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t vars() const { return cols_ - 1; }
  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& rhs(std::size_t r) { return at(r, cols_ - 1); }
  double& obj(std::size_t c) { return at(rows_, c); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c < cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  void remove_row(std::size_t r) {
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Rebuilds the objective row for maximizing cost . x over the current basis.
  void set_objective(std::span<const double> cost) {
    for (std::size_t c = 0; c < cols_; ++c) obj(c) = 0.0;
    for (std::size_t j = 0; j < cost.size(); ++j) obj(j) = -cost[j];
    for (std::size_t r = 0; r < rows_; ++r) {
      const double f = obj(basis_[r]);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) obj(c) -= f * at(r, c);
    }
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    const std::size_t limit = 50'000;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj(j) < -kPivotTolerance) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kPivotTolerance) continue;
        const double ratio = rhs(r) / a;
        const bool better = leave == rows_ || ratio < best - kPivotTolerance;
        const bool tie_wins = leave < rows_ &&
                              std::abs(ratio - best) <= kPivotTolerance &&
                              basis_[r] < basis_[leave];
        if (better || tie_wins) {
          best = std::min(best, ratio);
          leave = r;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
    throw Error("simplex iteration limit exceeded");
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Maximizes c . x subject to `constraints`, optionally x >= 0 and
/// sum(x) = 1, with a two-phase dense simplex using Bland's rule.
///
/// Throws InfeasibleError or UnboundedError.
inline LpSolution lp_solve(std::span<const double> c,
                           std::span<const LinearConstraint> constraints,
                           bool nonneg = true, bool sum_to_one = true) {
  const std::size_t n = c.size();
  if (n == 0) throw ValidationError("linear program has no variables");

  // Free variables are split as x = x+ - x-.
  const std::size_t structural = nonneg ? n : 2 * n;
  struct Row {
    std::vector<double> coeffs;
    Relation relation;
    double rhs;
  };
  std::vector<Row> rows;
  auto add_row = [&](std::span<const double> coeffs, Relation rel, double rhs) {
    Row row{std::vector<double>(structural, 0.0), rel, rhs};
    for (std::size_t j = 0; j < n; ++j) {
      row.coeffs[j] = coeffs[j];
      if (!nonneg) row.coeffs[n + j] = -coeffs[j];
    }
    if (row.rhs < 0.0) {
      for (double& v : row.coeffs) v = -v;
      row.rhs = -row.rhs;
      if (rel == Relation::less_equal) row.relation = Relation::greater_equal;
      else if (rel == Relation::greater_equal) row.relation = Relation::less_equal;
    }
    rows.push_back(std::move(row));
  };
  for (const auto& con : constraints) {
    if (con.coeffs.size() != n) {
      throw ValidationError("constraint '" + con.name + "' has " +
                            std::to_string(con.coeffs.size()) +
                            " coefficients, expected " + std::to_string(n));
    }
    add_row(con.coeffs, con.relation, con.rhs);
  }
  if (sum_to_one) {
    const std::vector<double> ones(n, 1.0);
    add_row(ones, Relation::equal, 1.0);
  }

  const std::size_t m = rows.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::equal) ++slack_count;
    if (row.relation != Relation::less_equal) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  detail::Tableau tab(m, first_artificial + artificial_count);

  std::size_t slack = structural;
  std::size_t artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < structural; ++j) tab.at(r, j) = rows[r].coeffs[j];
    tab.rhs(r) = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::less_equal:
        tab.at(r, slack) = 1.0;
        tab.basis()[r] = slack++;
        break;
      case Relation::greater_equal:
        tab.at(r, slack++) = -1.0;
        tab.at(r, artificial) = 1.0;
        tab.basis()[r] = artificial++;
        break;
      case Relation::equal:
        tab.at(r, artificial) = 1.0;
        tab.basis()[r] = artificial++;
        break;
    }
  }

  if (artificial_count > 0) {
    std::vector<double> phase1(tab.vars(), 0.0);
    for (std::size_t j = first_artificial; j < tab.vars(); ++j) phase1[j] = -1.0;
    tab.set_objective(phase1);
    tab.optimize(tab.vars());
    if (tab.obj(tab.vars()) < -kPivotTolerance * std::max<double>(1.0, m)) {
      throw InfeasibleError("linear program is infeasible");
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < tab.rows();) {
      if (tab.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (std::abs(tab.at(r, j)) > kPivotTolerance) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        tab.remove_row(r);
      } else {
        tab.pivot(r, col);
        ++r;
      }
    }
  }

  std::vector<double> cost(first_artificial, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = c[j];
    if (!nonneg) cost[n + j] = -c[j];
  }
  tab.set_objective(cost);
  if (!tab.optimize(first_artificial)) {
    throw UnboundedError("linear program is unbounded");
  }

  std::vector<double> values(first_artificial, 0.0);
  std::vector<bool> basic(first_artificial, false);
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const std::size_t b = tab.basis()[r];
    if (b < first_artificial) {
      values[b] = tab.rhs(r);
      basic[b] = true;
    }
  }

  LpSolution sol;
  sol.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double v = nonneg ? values[j] : values[j] - values[n + j];
    if (nonneg && v < 0.0 && v > -kPivotTolerance) v = 0.0;
    sol.x[j] = v;
    sol.objective += c[j] * v;
  }
  for (std::size_t j = 0; j < first_artificial; ++j) {
    const bool partner_basic =
        !nonneg && basic[j < n ? j + n : (j < 2 * n ? j - n : j)];
    if (!basic[j] && !partner_basic &&
        std::abs(tab.obj(j)) <= kPivotTolerance) {
      sol.unique = false;
      break;
    }
  }
  return sol;
}

}  // namespace tnorm
