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
#include <stdexcept>
#include <string>

namespace tnorm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input: wrong lengths, bad summands, bad weights.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (t-norm literals, problem files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// Slack allowed outside [0, 1] before an input is rejected instead of clamped.
inline constexpr double kUnitSlack = 1e-9;

/// Clamps `x` into [0, 1] when it is within kUnitSlack of the interval,
/// otherwise throws DomainError naming `what`.
inline double clamp_unit(double x, const char* what) {
  if (std::isnan(x) || x < -kUnitSlack || x > 1.0 + kUnitSlack) {
    throw DomainError(std::string(what) + " must lie in [0,1], got " +
                      std::to_string(x));
  }
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace tnorm
