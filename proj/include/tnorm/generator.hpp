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
#include <string>

#include "tnorm/error.hpp"
#include "tnorm/ext_real.hpp"

namespace tnorm {

enum class FamilyKind { product, lukasiewicz, hamacher, aczel_alsina };

/// A parametric family of continuous Archimedean t-norms, described by an
/// additive generator G: [0,1] -> [0,+inf] with a closed-form inverse.
///
///   product        G(u) = -ln u
///   lukasiewicz    G(u) = 1 - u
///   hamacher(l)    G(u) = (1-u)/u              for l = 0
///                  G(u) = ln((l + (1-l)u)/u)   for l > 0
///   aczel_alsina(l) G(u) = (-ln u)^l           for l > 0
class GeneratorFamily {
 public:
  static GeneratorFamily product() { return {FamilyKind::product, 0.0}; }
  static GeneratorFamily lukasiewicz() {
    return {FamilyKind::lukasiewicz, 0.0};
  }
  static GeneratorFamily hamacher(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
      throw ValidationError("hamacher parameter must be finite and >= 0");
    }
    return {FamilyKind::hamacher, lambda};
  }
  /// Hamacher with parameter 2.
  static GeneratorFamily einstein() { return hamacher(2.0); }
  static GeneratorFamily aczel_alsina(double lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
      throw ValidationError("aczel-alsina parameter must be finite and > 0");
    }
    return {FamilyKind::aczel_alsina, lambda};
  }

  FamilyKind kind() const { return kind_; }
  /// Family parameter; 0 for the parameterless families.
  double parameter() const { return lambda_; }

  /// G(0): finite only for the nilpotent Lukasiewicz family.
  ExtReal at_zero() const {
    return kind_ == FamilyKind::lukasiewicz ? ExtReal(1.0) : ExtReal::infinity();
  }

  bool is_strict() const { return at_zero().is_infinite(); }

  friend bool operator==(const GeneratorFamily&,
                         const GeneratorFamily&) = default;

 private:
  GeneratorFamily(FamilyKind kind, double lambda)
      : kind_(kind), lambda_(lambda) {}

  FamilyKind kind_;
  double lambda_;
};

/// G(u). Inputs within kUnitSlack of [0,1] are clamped.
inline ExtReal gen_eval(const GeneratorFamily& family, double u) {
  u = clamp_unit(u, "generator argument");
  if (u == 1.0) return ExtReal{};
  if (u == 0.0) return family.at_zero();
  switch (family.kind()) {
    case FamilyKind::product:
      return ExtReal(-std::log(u));
    case FamilyKind::lukasiewicz:
      return ExtReal(1.0 - u);
    case FamilyKind::hamacher: {
      const double ratio = (1.0 - u) / u;
      if (family.parameter() == 0.0) return ExtReal(ratio);
      // (l + (1-l)u)/u = 1 + l(1-u)/u
      return ExtReal(std::log1p(family.parameter() * ratio));
    }
    case FamilyKind::aczel_alsina:
      return ExtReal(std::pow(-std::log(u), family.parameter()));
  }
  return ExtReal{};
}

/// G^(-1)(min{y, G(0)}), always in [0,1].
inline double gen_pseudo_inverse(const GeneratorFamily& family, ExtReal y) {
  if (y.is_infinite()) return 0.0;
  const double v = y.finite_value();
  if (v == 0.0) return 1.0;
  switch (family.kind()) {
    case FamilyKind::product:
      return std::exp(-v);
    case FamilyKind::lukasiewicz:
      return v >= 1.0 ? 0.0 : 1.0 - v;
    case FamilyKind::hamacher: {
      const double lambda = family.parameter();
      if (lambda == 0.0) return 1.0 / (1.0 + v);
      return lambda / (std::expm1(v) + lambda);
    }
    case FamilyKind::aczel_alsina:
      return std::exp(-std::pow(v, 1.0 / family.parameter()));
  }
  return 0.0;
}

}  // namespace tnorm
