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

#include <cmath>
#include <cstdint>

#include "tnorm/error.hpp"
#include "tnorm/tnorm_spec.hpp"

namespace tnorm {

namespace detail {

inline double checked_exponent(double t) {
  if (std::isnan(t) || std::isinf(t) || t < 0.0) {
    throw DomainError("power exponent must be finite and >= 0");
  }
  return t;
}

}  // namespace detail

/// Real-exponent power u_T^(t) of `u` under the t-norm `spec`.
///
/// Closed forms per structure:
///   minimum       u (every point is idempotent)
///   archimedean   G^(-1)(min{t * G(u), G(0)})
///   ordinal sum   a + (e - a) * w^(t) for u inside (a, e), where w is u
///                 rescaled to [0, 1] and w^(t) is the summand's power;
///                 u itself outside every open summand interval.
/// 0^(t) = 0 for t > 0, and u^(0) = 1 for every u including 0.
inline double power_t(const TNormSpec& spec, double u, double t) {
  u = clamp_unit(u, "power base");
  t = detail::checked_exponent(t);
  if (t == 0.0) return 1.0;
  if (u == 0.0 || u == 1.0 || t == 1.0) return u;
  if (spec.is_minimum()) return u;
  if (spec.is_archimedean()) {
    const auto& f = spec.family();
    return gen_pseudo_inverse(f, t * gen_eval(f, u));
  }
  const Summand* s = detail::summand_containing(spec, u);
  if (s == nullptr) return u;
  const double width = s->e - s->a;
  const double inner =
      gen_pseudo_inverse(s->family, t * gen_eval(s->family, (u - s->a) / width));
  return std::clamp(s->a + width * inner, s->a, s->e);
}

/// Dual power u_S^(t) = 1 - (1 - u)_T^(t).
inline double power_s(const TNormSpec& spec, double u, double t) {
  u = clamp_unit(u, "power base");
  return 1.0 - power_t(spec, 1.0 - u, t);
}

/// True for the minimum, strict t-norms and ordinal sums of strict t-norms:
/// exactly the continuous t-norms with (T(u,v))^(t) = T(u^(t), v^(t)).
inline bool is_power_stable(const TNormSpec& spec) {
  const Classification c = classify(spec);
  return c.is_min || c.is_strict || c.is_ordinal_sum_of_strict;
}

/// n-fold self-composition T(u, ..., u); 1 for n = 0.
///
/// Uses square-and-multiply, which is exact up to rounding because T is
/// associative and commutative.
inline double iterate_power(const TNormSpec& spec, double u, std::uint64_t n) {
  u = clamp_unit(u, "power base");
  double result = 1.0;
  double square = u;
  while (n > 0) {
    if (n & 1u) result = tnorm_eval(spec, result, square);
    n >>= 1u;
    if (n > 0) square = tnorm_eval(spec, square, square);
  }
  return result;
}

}  // namespace tnorm
