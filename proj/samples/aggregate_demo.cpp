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

// Aggregates four ratings with IFWA, IFWG and IFMWAG under a few t-norms.

#include <iomanip>
#include <iostream>
#include <vector>

#include "tnorm/io.hpp"
#include "tnorm/tnorm.hpp"

int main() {
  using namespace tnorm;
  const std::vector<IFV> ratings{{0.1, 0.7}, {0.4, 0.3}, {0.6, 0.1}, {0.2, 0.5}};
  const WeightVector w({0.2, 0.3, 0.1, 0.4});

  const std::vector<TNormSpec> specs{
      TNormSpec::product(),
      TNormSpec::einstein(),
      io::parse_tnorm("ordinal[(0,0.5,product),(0.5,1,einstein)]"),
      TNormSpec::lukasiewicz(),
  };

  std::cout << std::fixed << std::setprecision(4);
  for (const auto& spec : specs) {
    const IFV a = ifwa(spec, w, ratings);
    const IFV g = ifwg(spec, w, ratings);
    const IFV m = ifmwag(spec, w, ratings);
    std::cout << io::format_tnorm(spec) << (is_power_stable(spec) ? "" : " (not power stable)")
              << "\n  IFWA   " << a << "\n  IFWG   " << g << "\n  IFMWAG " << m
              << "  L=" << l_value(m) << '\n';
  }
}
