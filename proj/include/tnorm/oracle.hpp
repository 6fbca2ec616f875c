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

// Brute-force reference computations for checking the closed-form paths.
// The definitional powers (roots, rational and real powers) are rebuilt from
// tnorm_eval alone and never call power_t.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tnorm/aggregation.hpp"
#include "tnorm/error.hpp"
#include "tnorm/ifv.hpp"
#include "tnorm/power.hpp"
#include "tnorm/simplex.hpp"
#include "tnorm/tnorm_spec.hpp"

namespace tnorm::oracle {

/// Largest deviation found by a scan and where it occurred.
struct ScanReport {
  double max_abs_deviation = 0.0;
  /// (u, v, t) for stability scans, (u, t1, t2) for semigroup scans.
  std::array<double, 3> witness{0.0, 0.0, 0.0};
  std::size_t samples = 0;
};

/// u^(1/n) = sup{ v in [0,1] : v^(n) < u }, by 60 bisection steps on the
/// nondecreasing map v -> T(v, ..., v). Returns the lower endpoint.
inline double nth_root_bisect(const TNormSpec& spec, double u, std::uint64_t n) {
  if (n == 0) throw DomainError("root order must be >= 1");
  u = clamp_unit(u, "root argument");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  // Idempotents are their own roots.
  if (iterate_power(spec, u, n) == u) return u;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (iterate_power(spec, mid, n) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// u^(q/p) = (u^(1/p))^(q).
inline double rational_power_oracle(const TNormSpec& spec, double u,
                                    std::uint64_t q, std::uint64_t p) {
  if (p == 0) throw DomainError("rational exponent needs p >= 1");
  return iterate_power(spec, nth_root_bisect(spec, u, p), q);
}

/// inf{ u^(r) : r rational, r <= t }, estimated over dyadic r_k = floor(t 2^k)
/// / 2^k for k = 0..depth. Since u^(r) is nonincreasing in r the estimate
/// approaches u^(t) from above.
inline double real_power_oracle(const TNormSpec& spec, double u, double t,
                                int depth) {
  if (!(t > 0.0) || std::isinf(t)) throw DomainError("exponent must be > 0");
  if (depth < 0 || depth > 40) throw DomainError("depth must be in [0, 40]");
  double best = 1.0;  // r = 0
  for (int k = 0; k <= depth; ++k) {
    const std::uint64_t p = std::uint64_t{1} << k;
    const auto q = static_cast<std::uint64_t>(std::floor(t * static_cast<double>(p)));
    if (q == 0) continue;
    best = std::min(best, rational_power_oracle(spec, u, q, p));
  }
  return best;
}

namespace detail {

inline std::vector<double> unit_grid(int n) {
  if (n < 2) throw DomainError("grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  return g;
}

// Near-ties go to the witness closest to the diagonal u = v, then the one
// scanned first.
inline void record(ScanReport& rep, double dev, std::array<double, 3> at,
                   bool prefer_diagonal) {
  const double tie = 1e-12;
  const bool first = rep.samples++ == 0;
  const bool larger = dev > rep.max_abs_deviation + tie;
  const bool nearer_diagonal =
      prefer_diagonal && dev >= rep.max_abs_deviation - tie &&
      std::abs(at[0] - at[1]) < std::abs(rep.witness[0] - rep.witness[1]);
  if (first || larger || nearer_diagonal) {
    rep.max_abs_deviation = first ? dev : std::max(rep.max_abs_deviation, dev);
    rep.witness = at;
  }
}

}  // namespace detail

/// Max over a grid_n x grid_n grid and `ts` of
/// |(T(u,v))^(t) - T(u^(t), v^(t))|.
inline ScanReport stability_scan(const TNormSpec& spec, int grid_n,
                                 std::span<const double> ts) {
  const auto grid = detail::unit_grid(grid_n);
  ScanReport rep;
  for (double t : ts) {
    for (double u : grid) {
      for (double v : grid) {
        const double lhs = power_t(spec, tnorm_eval(spec, u, v), t);
        const double rhs =
            tnorm_eval(spec, power_t(spec, u, t), power_t(spec, v, t));
        detail::record(rep, std::abs(lhs - rhs), {u, v, t}, true);
      }
    }
  }
  return rep;
}

/// Exponents used by semigroup_scan for t1 and t2.
inline constexpr std::array<double, 7> kSemigroupExponents{0.1, 0.25, 0.5, 1.0,
                                                           1.5, 2.0,  3.0};

/// Max over a u-grid and exponent pairs of |T(u^(t1), u^(t2)) - u^(t1+t2)|.
inline ScanReport semigroup_scan(const TNormSpec& spec, int grid_n) {
  const auto grid = detail::unit_grid(grid_n);
  ScanReport rep;
  for (double u : grid) {
    for (double t1 : kSemigroupExponents) {
      for (double t2 : kSemigroupExponents) {
        const double lhs =
            tnorm_eval(spec, power_t(spec, u, t1), power_t(spec, u, t2));
        const double rhs = power_t(spec, u, t1 + t2);
        detail::record(rep, std::abs(lhs - rhs), {u, t1, t2}, false);
      }
    }
  }
  return rep;
}

/// IFWA as the explicit (+)_T fold of the scalar multiples w_i gamma_i.
inline IFV ifwa_fold(const TNormSpec& spec, const WeightVector& w,
                     std::span<const IFV> gs) {
  if (gs.size() != w.size() || gs.empty()) {
    throw ValidationError("aggregation needs one weight per argument");
  }
  IFV acc = scalar_mul(spec, w[0], gs[0]);
  for (std::size_t i = 1; i < gs.size(); ++i) {
    acc = oplus(spec, acc, scalar_mul(spec, w[i], gs[i]));
  }
  return acc;
}

/// IFWG as the explicit (x)_T fold of the powers gamma_i^(w_i).
inline IFV ifwg_fold(const TNormSpec& spec, const WeightVector& w,
                     std::span<const IFV> gs) {
  if (gs.size() != w.size() || gs.empty()) {
    throw ValidationError("aggregation needs one weight per argument");
  }
  IFV acc = ifv_power(spec, w[0], gs[0]);
  for (std::size_t i = 1; i < gs.size(); ++i) {
    acc = otimes(spec, acc, ifv_power(spec, w[i], gs[i]));
  }
  return acc;
}

namespace detail {

// Solves the square system m x = b by Gaussian elimination with partial
// pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_square(
    std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-12) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

}  // namespace detail

/// Maximum of c . x over x >= 0, sum(x) = 1 and `constraints`, by
/// enumerating every vertex (every choice of n active constraints) of the
/// feasible polytope. Throws InfeasibleError if no vertex is feasible.
/// Exponential in the number of constraints; meant for tiny programs.
inline LpSolution lp_vertex_enumeration(std::span<const double> c,
                                        std::span<const LinearConstraint> constraints) {
  const std::size_t n = c.size();
  // Row set: user constraints, x_j >= 0, sum(x) = 1.
  std::vector<LinearConstraint> all(constraints.begin(), constraints.end());
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint nonneg;
    nonneg.coeffs.assign(n, 0.0);
    nonneg.coeffs[j] = 1.0;
    nonneg.relation = Relation::greater_equal;
    all.push_back(std::move(nonneg));
  }
  LinearConstraint sum;
  sum.coeffs.assign(n, 1.0);
  sum.relation = Relation::equal;
  sum.rhs = 1.0;
  all.push_back(sum);

  const double tol = 1e-9;
  auto feasible = [&](const std::vector<double>& x) {
    for (const auto& con : all) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += con.coeffs[j] * x[j];
      switch (con.relation) {
        case Relation::less_equal:
          if (lhs > con.rhs + tol) return false;
          break;
        case Relation::greater_equal:
          if (lhs < con.rhs - tol) return false;
          break;
        case Relation::equal:
          if (std::abs(lhs - con.rhs) > tol) return false;
          break;
      }
    }
    return true;
  };

  std::optional<LpSolution> best;
  std::vector<std::size_t> pick(n);
  // Enumerate n-subsets of `all` in lexicographic order.
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  if (all.size() < n) throw InfeasibleError("too few constraints for a vertex");
  while (true) {
    std::vector<std::vector<double>> m;
    std::vector<double> b;
    for (std::size_t k : pick) {
      m.push_back(all[k].coeffs);
      b.push_back(all[k].rhs);
    }
    if (auto x = detail::solve_square(std::move(m), std::move(b))) {
      if (feasible(*x)) {
        double obj = 0.0;
        for (std::size_t j = 0; j < n; ++j) obj += c[j] * (*x)[j];
        if (!best || obj > best->objective) best = LpSolution{*x, obj, true};
      }
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == all.size() - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  if (!best) throw InfeasibleError("no feasible vertex");
  return *best;
}

struct CatalogueEntry {
  std::string name;
  TNormSpec spec;
};

/// The t-norms exercised by the verification suites.
inline std::vector<CatalogueEntry> shipped_catalogue() {
  const auto P = GeneratorFamily::product();
  const auto E = GeneratorFamily::einstein();
  return {
      {"min", TNormSpec::minimum()},
      {"product", TNormSpec::product()},
      {"lukasiewicz", TNormSpec::lukasiewicz()},
      {"hamacher:0", TNormSpec::archimedean(GeneratorFamily::hamacher(0.0))},
      {"hamacher:1", TNormSpec::archimedean(GeneratorFamily::hamacher(1.0))},
      {"hamacher:2", TNormSpec::archimedean(GeneratorFamily::hamacher(2.0))},
      {"hamacher:5", TNormSpec::archimedean(GeneratorFamily::hamacher(5.0))},
      {"aczel-alsina:1",
       TNormSpec::archimedean(GeneratorFamily::aczel_alsina(1.0))},
      {"aczel-alsina:2",
       TNormSpec::archimedean(GeneratorFamily::aczel_alsina(2.0))},
      {"ordinal[(0,0.5,product),(0.5,1,hamacher:2)]",
       TNormSpec::ordinal_sum({{0.0, 0.5, P}, {0.5, 1.0, E}})},
      {"ordinal[(0,0.5,hamacher:2),(0.5,1,product)]",
       TNormSpec::ordinal_sum({{0.0, 0.5, E}, {0.5, 1.0, P}})},
  };
}

}  // namespace tnorm::oracle
