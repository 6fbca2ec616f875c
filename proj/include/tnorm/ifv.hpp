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
#include <compare>
#include <ostream>

#include "tnorm/error.hpp"
#include "tnorm/power.hpp"
#include "tnorm/tnorm_spec.hpp"

namespace tnorm {

/// Intuitionistic fuzzy value <mu, nu> with mu + nu <= 1.
///
/// Components within kUnitSlack of [0,1] are clamped, and a sum overshooting
/// 1 by at most kUnitSlack is rescaled onto mu + nu = 1. The rescaling is
/// symmetric in (mu, nu), so IFV(a, b) and IFV(b, a) stay complements.
class IFV {
 public:
  IFV() = default;

  IFV(double mu, double nu) {
    mu = clamp_unit(mu, "membership degree");
    nu = clamp_unit(nu, "non-membership degree");
    const double sum = mu + nu;
    if (sum > 1.0 + kUnitSlack) {
      throw DomainError("mu+nu exceeds 1");
    }
    if (sum > 1.0) {
      mu /= sum;
      nu /= sum;
    }
    mu_ = mu;
    nu_ = nu;
  }

  /// <1, 0>
  static IFV top() { return IFV(1.0, 0.0); }
  /// <0, 1>
  static IFV bottom() { return IFV(0.0, 1.0); }

  double mu() const { return mu_; }
  double nu() const { return nu_; }
  double hesitancy() const { return 1.0 - (mu_ + nu_); }

  friend bool operator==(const IFV&, const IFV&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IFV& a) {
    return os << '<' << a.mu_ << ", " << a.nu_ << '>';
  }

 private:
  double mu_ = 0.0;
  double nu_ = 1.0;
};

struct IfvMetrics {
  double score;
  double accuracy;
  double hesitancy;
  double l_value;
};

/// L(a) = (1 - nu) / ((1 - mu) + (1 - nu)), the closeness to <1, 0>.
inline double l_value(const IFV& a) {
  return (1.0 - a.nu()) / ((1.0 - a.mu()) + (1.0 - a.nu()));
}

inline IfvMetrics metrics(const IFV& a) {
  return {a.mu() - a.nu(), a.mu() + a.nu(), a.hesitancy(), l_value(a)};
}

inline IFV complement(const IFV& a) { return IFV(a.nu(), a.mu()); }

inline IFV ifv_union(const IFV& a, const IFV& b) {
  return IFV(std::max(a.mu(), b.mu()), std::min(a.nu(), b.nu()));
}

inline IFV ifv_intersection(const IFV& a, const IFV& b) {
  return IFV(std::min(a.mu(), b.mu()), std::max(a.nu(), b.nu()));
}

/// a (+)_T b = <S(mu_a, mu_b), T(nu_a, nu_b)>
inline IFV oplus(const TNormSpec& spec, const IFV& a, const IFV& b) {
  return IFV(tconorm_eval(spec, a.mu(), b.mu()), tnorm_eval(spec, a.nu(), b.nu()));
}

/// a (x)_T b = <T(mu_a, mu_b), S(nu_a, nu_b)>
inline IFV otimes(const TNormSpec& spec, const IFV& a, const IFV& b) {
  return IFV(tnorm_eval(spec, a.mu(), b.mu()), tconorm_eval(spec, a.nu(), b.nu()));
}

namespace detail {

inline void check_positive_scalar(double lambda) {
  if (!(lambda > 0.0) || std::isinf(lambda)) {
    throw DomainError("IFV scalar must be finite and > 0");
  }
}

}  // namespace detail

/// lambda_T a = <mu_S^(lambda), nu_T^(lambda)>
inline IFV scalar_mul(const TNormSpec& spec, double lambda, const IFV& a) {
  detail::check_positive_scalar(lambda);
  return IFV(power_s(spec, a.mu(), lambda), power_t(spec, a.nu(), lambda));
}

/// a^(lambda_T) = <mu_T^(lambda), nu_S^(lambda)>
inline IFV ifv_power(const TNormSpec& spec, double lambda, const IFV& a) {
  detail::check_positive_scalar(lambda);
  return IFV(power_t(spec, a.mu(), lambda), power_s(spec, a.nu(), lambda));
}

enum class IfvOrder {
  xu,  ///< score, then accuracy
  zx,  ///< L-value, then accuracy
};

/// Total order on IFVs. Equal only when both keys tie, which forces equal
/// components.
inline std::strong_ordering compare(IfvOrder order, const IFV& a, const IFV& b) {
  const double pa = order == IfvOrder::xu ? a.mu() - a.nu() : l_value(a);
  const double pb = order == IfvOrder::xu ? b.mu() - b.nu() : l_value(b);
  if (pa < pb) return std::strong_ordering::less;
  if (pa > pb) return std::strong_ordering::greater;
  const double aa = a.mu() + a.nu();
  const double ab = b.mu() + b.nu();
  if (aa < ab) return std::strong_ordering::less;
  if (aa > ab) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace tnorm
