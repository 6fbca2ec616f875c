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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "test_support.hpp"
#include "tnorm/io.hpp"
#include "tnorm/tnorm.hpp"

using namespace tnorm;
using Catch::Matchers::WithinAbs;

namespace {

double gap(const IFV& a, const IFV& b) {
  return std::max(std::abs(a.mu() - b.mu()), std::abs(a.nu() - b.nu()));
}

}  // namespace

TEST_CASE("IFV construction", "[ifv]") {
  const IFV a(0.3, 0.5);
  CHECK(a.mu() == 0.3);
  CHECK(a.nu() == 0.5);
  CHECK_THAT(a.hesitancy(), WithinAbs(0.2, 1e-15));
  CHECK(IFV() == IFV::bottom());
  CHECK(IFV::top() == IFV(1.0, 0.0));
  CHECK(IFV::bottom() == IFV(0.0, 1.0));

  const IFV over(0.6, 0.4 + 5e-10);
  CHECK(over.mu() + over.nu() <= 1.0);
  CHECK_THAT(over.mu(), WithinAbs(0.6, 1e-9));
  CHECK_THROWS_AS(IFV(0.7, 0.5), DomainError);
  CHECK_THROWS_AS(IFV(-0.1, 0.5), DomainError);
  CHECK_THROWS_AS(IFV(0.1, 1.2), DomainError);

  std::ostringstream os;
  os << IFV(0.25, 0.5);
  CHECK(os.str() == "<0.25, 0.5>");
}

TEST_CASE("metrics examples", "[ifv]") {
  CHECK_THAT(l_value(IFV(0.5, 0.4)), WithinAbs(0.6 / 1.1, 1e-15));
  const auto top = metrics(IFV::top());
  CHECK(top.score == 1.0);
  CHECK(top.accuracy == 1.0);
  CHECK(top.hesitancy == 0.0);
  CHECK(top.l_value == 1.0);
  CHECK_THAT(l_value(IFV(0.6951, 0.1272)), WithinAbs(0.7411, 5e-5));
  CHECK(l_value(IFV::bottom()) == 0.0);
}

TEST_CASE("metrics ranges", "[ifv][property]") {
  testing::Gen gen(21);
  for (int i = 0; i < 20000; ++i) {
    const IFV a = gen.ifv();
    const auto m = metrics(a);
    REQUIRE(m.score >= -1.0);
    REQUIRE(m.score <= 1.0);
    REQUIRE(m.accuracy >= 0.0);
    REQUIRE(m.accuracy <= 1.0);
    REQUIRE(m.hesitancy == 1.0 - m.accuracy);
    REQUIRE(m.l_value >= 0.0);
    REQUIRE(m.l_value <= 1.0);
    REQUIRE(std::abs(m.l_value - (1.0 - a.nu()) / (1.0 + a.hesitancy())) <= 1e-15);
  }
}

TEST_CASE("complement, union and intersection", "[ifv]") {
  CHECK(complement(IFV(0.2, 0.5)) == IFV(0.5, 0.2));
  CHECK(complement(IFV(0.3, 0.3)) == IFV(0.3, 0.3));
  CHECK(complement(complement(IFV(0.7, 0.1))) == IFV(0.7, 0.1));
  const IFV a(0.2, 0.6);
  const IFV b(0.5, 0.3);
  CHECK(ifv_union(a, b) == IFV(0.5, 0.3));
  CHECK(ifv_intersection(a, b) == IFV(0.2, 0.6));
  CHECK(ifv_union(a, a) == a);
  CHECK(ifv_intersection(b, b) == b);
}

TEST_CASE("oplus and otimes examples", "[ifv]") {
  const IFV r = oplus(TNormSpec::product(), IFV(0.4, 0.5), IFV(0.3, 0.2));
  CHECK_THAT(r.mu(), WithinAbs(0.58, 1e-15));
  CHECK_THAT(r.nu(), WithinAbs(0.10, 1e-15));

  testing::Gen gen(22);
  for (int i = 0; i < 2000; ++i) {
    const IFV a = gen.ifv();
    const IFV b = gen.ifv();
    REQUIRE(otimes(TNormSpec::minimum(), a, b) == ifv_intersection(a, b));
    REQUIRE(oplus(TNormSpec::minimum(), a, b) == ifv_union(a, b));
    const TNormSpec spec = gen.spec();
    REQUIRE(gap(oplus(spec, a, IFV::bottom()), a) <= 1e-15);
    REQUIRE(gap(otimes(spec, a, IFV::top()), a) <= 1e-15);
  }
}

TEST_CASE("scalar_mul and ifv_power examples", "[ifv]") {
  const IFV s = scalar_mul(TNormSpec::product(), 0.6, IFV(0.5, 0.4));
  CHECK_THAT(s.mu(), WithinAbs(1.0 - std::pow(0.5, 0.6), 1e-15));
  CHECK_THAT(s.nu(), WithinAbs(std::pow(0.4, 0.6), 1e-15));

  const IFV p = ifv_power(TNormSpec::product(), 2.0, IFV(0.6, 0.3));
  CHECK_THAT(p.mu(), WithinAbs(0.36, 1e-15));
  CHECK_THAT(p.nu(), WithinAbs(0.51, 1e-15));

  const IFV a(0.35, 0.4);
  for (const auto& entry : oracle::shipped_catalogue()) {
    INFO(entry.name);
    for (double lambda : {0.3, 1.0, 2.5}) {
      CHECK(scalar_mul(entry.spec, lambda, IFV::top()) == IFV::top());
      CHECK(scalar_mul(entry.spec, lambda, IFV::bottom()) == IFV::bottom());
      CHECK(ifv_power(entry.spec, lambda, IFV::top()) == IFV::top());
      CHECK(ifv_power(entry.spec, lambda, IFV::bottom()) == IFV::bottom());
    }
    CHECK(gap(scalar_mul(entry.spec, 1.0, a), a) <= 1e-15);
    CHECK(gap(ifv_power(entry.spec, 1.0, a), a) <= 1e-15);
  }
  CHECK(ifv_power(TNormSpec::minimum(), 5.0, a) == a);
  CHECK_THROWS_AS(scalar_mul(TNormSpec::product(), 0.0, a), DomainError);
  CHECK_THROWS_AS(ifv_power(TNormSpec::product(), -1.0, a), DomainError);
}

TEST_CASE("compare examples", "[ifv][order]") {
  const IFV alpha(0.5, 0.4);
  const IFV beta(0.51, 0.41);
  CHECK(compare(IfvOrder::zx, alpha, beta) == std::strong_ordering::less);
  const IFV sa = scalar_mul(TNormSpec::product(), 0.6, alpha);
  const IFV sb = scalar_mul(TNormSpec::product(), 0.6, beta);
  CHECK(compare(IfvOrder::zx, sa, sb) == std::strong_ordering::greater);
  CHECK_THAT(l_value(sa), WithinAbs(0.3906, 5e-5));
  CHECK_THAT(l_value(sb), WithinAbs(0.3886, 5e-5));

  // Equal score; the larger accuracy is the greater value.
  CHECK(compare(IfvOrder::xu, IFV(0.5, 0.5), IFV(0.3, 0.3)) == std::strong_ordering::greater);
  CHECK(compare(IfvOrder::xu, IFV(0.3, 0.3), IFV(0.5, 0.5)) == std::strong_ordering::less);
  CHECK(compare(IfvOrder::xu, IFV(0.6, 0.1), IFV(0.3, 0.1)) == std::strong_ordering::greater);
  CHECK(compare(IfvOrder::zx, IFV(0.3, 0.2), IFV(0.3, 0.2)) == std::strong_ordering::equal);
}

TEST_CASE("compare orders are total orders", "[ifv][order][property]") {
  testing::Gen gen(23);
  for (const IfvOrder order : {IfvOrder::xu, IfvOrder::zx}) {
    for (int i = 0; i < 20000; ++i) {
      const IFV a = gen.ifv();
      const IFV b = gen.index(8) == 0 ? a : gen.ifv();
      const IFV c = gen.ifv();
      const auto ab = compare(order, a, b);
      REQUIRE(compare(order, b, a) == 0 <=> ab);
      if (ab == std::strong_ordering::equal) REQUIRE(a == b);
      if (ab != std::strong_ordering::greater &&
          compare(order, b, c) != std::strong_ordering::greater) {
        REQUIRE(compare(order, a, c) != std::strong_ordering::greater);
      }
    }
  }
}

TEST_CASE("closure of the four laws", "[ifv][property]") {
  testing::Gen gen(24);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const TNormSpec spec = gen.spec();
    const IFV a = gen.ifv();
    const IFV b = gen.ifv();
    const double lambda = gen.range(1e-3, 8.0);
    for (const IFV& r : {oplus(spec, a, b), otimes(spec, a, b), scalar_mul(spec, lambda, a),
                         ifv_power(spec, lambda, a)}) {
      worst = std::max(worst, r.mu() + r.nu() - 1.0);
      REQUIRE(r.mu() >= 0.0);
      REQUIRE(r.nu() >= 0.0);
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("De Morgan symmetry is exact", "[ifv][property]") {
  testing::Gen gen(25);
  for (int i = 0; i < 20000; ++i) {
    const TNormSpec spec = gen.spec();
    const IFV a = gen.ifv();
    const IFV b = gen.ifv();
    REQUIRE(complement(oplus(spec, a, b)) == otimes(spec, complement(a), complement(b)));
    REQUIRE(complement(otimes(spec, a, b)) == oplus(spec, complement(a), complement(b)));
    const double lambda = gen.range(0.01, 5.0);
    REQUIRE(ifv_power(spec, lambda, a) ==
            complement(scalar_mul(spec, lambda, complement(a))));
  }
}

TEST_CASE("oplus and otimes are commutative and associative", "[ifv][property]") {
  testing::Gen gen(26);
  for (int i = 0; i < 20000; ++i) {
    const TNormSpec spec = gen.spec();
    const IFV a = gen.ifv();
    const IFV b = gen.ifv();
    const IFV c = gen.ifv();
    REQUIRE(gap(oplus(spec, a, b), oplus(spec, b, a)) <= 1e-12);
    REQUIRE(gap(otimes(spec, a, b), otimes(spec, b, a)) <= 1e-12);
    REQUIRE(gap(oplus(spec, oplus(spec, a, b), c), oplus(spec, a, oplus(spec, b, c))) <=
            1e-12);
    REQUIRE(gap(otimes(spec, otimes(spec, a, b), c), otimes(spec, a, otimes(spec, b, c))) <=
            1e-12);
  }
}

TEST_CASE("scalar sums hold for every continuous t-norm", "[ifv][property]") {
  testing::Gen gen(27);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const TNormSpec spec = gen.spec();
    const IFV a = gen.ifv();
    const double xi = gen.range(0.01, 3.0);
    const double zeta = gen.range(0.01, 3.0);
    worst = std::max(worst, gap(oplus(spec, scalar_mul(spec, xi, a), scalar_mul(spec, zeta, a)),
                                scalar_mul(spec, xi + zeta, a)));
    worst = std::max(worst, gap(otimes(spec, ifv_power(spec, xi, a), ifv_power(spec, zeta, a)),
                                ifv_power(spec, xi + zeta, a)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("distributive laws hold for power stable t-norms", "[ifv][property]") {
  testing::Gen gen(28);
  double worst = 0.0;
  int stable = 0;
  for (int i = 0; i < 20000; ++i) {
    const TNormSpec spec = gen.spec();
    if (!is_power_stable(spec)) continue;
    ++stable;
    const IFV a = gen.ifv();
    const IFV b = gen.ifv();
    const double lambda = gen.range(0.05, 3.0);
    const double xi = gen.range(0.05, 3.0);
    worst = std::max(worst, gap(scalar_mul(spec, lambda, oplus(spec, a, b)),
                                oplus(spec, scalar_mul(spec, lambda, a),
                                      scalar_mul(spec, lambda, b))));
    worst = std::max(worst, gap(ifv_power(spec, lambda, otimes(spec, a, b)),
                                otimes(spec, ifv_power(spec, lambda, a),
                                       ifv_power(spec, lambda, b))));
    worst = std::max(worst, gap(ifv_power(spec, xi, ifv_power(spec, lambda, a)),
                                ifv_power(spec, lambda * xi, a)));
    worst = std::max(worst, gap(scalar_mul(spec, xi, scalar_mul(spec, lambda, a)),
                                scalar_mul(spec, lambda * xi, a)));
  }
  CHECK(stable > 10000);
  CHECK(worst <= 1e-10);
}

TEST_CASE("distributive laws fail for Lukasiewicz", "[ifv]") {
  const auto luk = TNormSpec::lukasiewicz();
  const IFV a(0.5, 0.5);
  // Scalar of a scalar: nu goes 0.5 -> 0 -> 0, against 0.5 for the product exponent.
  CHECK(gap(scalar_mul(luk, 0.5, scalar_mul(luk, 2.0, a)), scalar_mul(luk, 1.0, a)) >= 0.4);
  // Scalar over a sum: the nu parts are T(0.5,0.5)^(1/2) = 0 against T(0.75,0.75) = 0.5.
  CHECK(gap(scalar_mul(luk, 0.5, oplus(luk, a, a)),
            oplus(luk, scalar_mul(luk, 0.5, a), scalar_mul(luk, 0.5, a))) >= 0.4);
}

TEST_CASE("aczel-alsina below one is associative away from summand endpoints", "[ifv][property]") {
  testing::Gen gen(27);
  for (int i = 0; i < 20000; ++i) {
    const TNormSpec spec = TNormSpec::archimedean(GeneratorFamily::aczel_alsina(gen.range(0.2, 1.0)));
    const IFV a = gen.ifv();
    const IFV b = gen.ifv();
    const IFV c = gen.ifv();
    REQUIRE(gap(oplus(spec, oplus(spec, a, b), c), oplus(spec, a, oplus(spec, b, c))) <=
            1e-12);
    REQUIRE(gap(otimes(spec, otimes(spec, a, b), c), otimes(spec, a, otimes(spec, b, c))) <=
            1e-12);
  }
}
