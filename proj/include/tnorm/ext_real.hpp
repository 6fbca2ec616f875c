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
#include <compare>
#include <limits>

#include "tnorm/error.hpp"

namespace tnorm {

/// A value in [0, +inf]: the codomain of additive generators.
///
/// Infinity is an explicit state rather than a floating-point infinity, so
/// that `t * inf` and `x + inf` are defined operations. The product `0 * inf`
/// is taken to be 0.
class ExtReal {
 public:
  constexpr ExtReal() = default;

  /// Throws DomainError for negative or NaN values; +inf maps to infinity().
  explicit ExtReal(double value) {
    if (std::isnan(value) || value < 0.0) {
      throw DomainError("extended real must be nonnegative");
    }
    if (std::isinf(value)) {
      infinite_ = true;
    } else {
      value_ = value;
    }
  }

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; 0 for infinity. Check is_infinite() first.
  constexpr double finite_value() const { return value_; }

  double to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend constexpr ExtReal operator+(ExtReal x, ExtReal y) {
    if (x.infinite_ || y.infinite_) return infinity();
    ExtReal r;
    r.value_ = x.value_ + y.value_;
    return r;
  }

  /// Scaling by t >= 0.
  friend ExtReal operator*(double t, ExtReal x) {
    if (std::isnan(t) || t < 0.0) {
      throw DomainError("extended real scale factor must be nonnegative");
    }
    if (t == 0.0) return ExtReal{};
    if (x.infinite_ || std::isinf(t)) return infinity();
    ExtReal r;
    r.value_ = t * x.value_;
    return r;
  }

  friend ExtReal operator*(ExtReal x, double t) { return t * x; }

  friend constexpr bool operator==(ExtReal x, ExtReal y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
  }

  friend constexpr std::partial_ordering operator<=>(ExtReal x, ExtReal y) {
    if (x.infinite_ || y.infinite_) {
      return static_cast<int>(x.infinite_) <=> static_cast<int>(y.infinite_);
    }
    return x.value_ <=> y.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline ExtReal min(ExtReal x, ExtReal y) { return (y < x) ? y : x; }

}  // namespace tnorm
