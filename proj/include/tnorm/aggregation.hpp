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
#include <numeric>
#include <span>
#include <vector>

#include "tnorm/error.hpp"
#include "tnorm/ifv.hpp"
#include "tnorm/power.hpp"
#include "tnorm/tnorm_spec.hpp"

namespace tnorm {

/// Weights in (0, 1] summing to 1 (within 1e-9).
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  explicit WeightVector(std::vector<double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) throw ValidationError("weight vector is empty");
    for (double w : weights_) {
      if (!(w > 0.0 && w <= 1.0)) {
        throw ValidationError("weights must lie in (0,1]");
      }
    }
    const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance) {
      throw ValidationError("weights must sum to 1");
    }
  }

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

namespace detail {

inline void check_lengths(const WeightVector& w, std::span<const IFV> gs) {
  if (gs.size() != w.size()) {
    throw ValidationError("aggregation needs one weight per argument");
  }
}

}  // namespace detail

/// IF weighted average induced by T:
/// < S(mu_1_S^(w_1), ..., mu_n_S^(w_n)), T(nu_1_T^(w_1), ..., nu_n_T^(w_n)) >
inline IFV ifwa(const TNormSpec& spec, const WeightVector& w,
                std::span<const IFV> gs) {
  detail::check_lengths(w, gs);
  std::vector<double> mus(gs.size());
  std::vector<double> nus(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    mus[i] = power_s(spec, gs[i].mu(), w[i]);
    nus[i] = power_t(spec, gs[i].nu(), w[i]);
  }
  return IFV(tconorm_eval_many(spec, mus), tnorm_eval_many(spec, nus));
}

/// IF weighted geometric operator induced by T:
/// < T(mu_1_T^(w_1), ...), S(nu_1_S^(w_1), ...) >
inline IFV ifwg(const TNormSpec& spec, const WeightVector& w,
                std::span<const IFV> gs) {
  detail::check_lengths(w, gs);
  std::vector<double> mus(gs.size());
  std::vector<double> nus(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    mus[i] = power_t(spec, gs[i].mu(), w[i]);
    nus[i] = power_s(spec, gs[i].nu(), w[i]);
  }
  return IFV(tnorm_eval_many(spec, mus), tconorm_eval_many(spec, nus));
}

/// Componentwise mean of ifwa and ifwg. Unlike either operand alone, the
/// result is <0, 1> only when every mu is 0, and <1, 0> only when every
/// mu is 1.
inline IFV ifmwag(const TNormSpec& spec, const WeightVector& w,
                  std::span<const IFV> gs) {
  const IFV a = ifwa(spec, w, gs);
  const IFV g = ifwg(spec, w, gs);
  return IFV((a.mu() + g.mu()) / 2.0, (a.nu() + g.nu()) / 2.0);
}

}  // namespace tnorm
