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
#include <limits>
#include <vector>

#include "test_support.hpp"
#include "tnorm/io.hpp"
#include "tnorm/tnorm.hpp"

using namespace tnorm;
using Catch::Approx;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<GeneratorFamily> all_families() {
  return {GeneratorFamily::product(),      GeneratorFamily::lukasiewicz(),
          GeneratorFamily::hamacher(0.0),  GeneratorFamily::hamacher(0.5),
          GeneratorFamily::hamacher(2.0),  GeneratorFamily::hamacher(7.0),
          GeneratorFamily::aczel_alsina(0.5), GeneratorFamily::aczel_alsina(1.0),
          GeneratorFamily::aczel_alsina(3.0)};
}

}  // namespace

TEST_CASE("ExtReal arithmetic", "[ext_real]") {
  const ExtReal inf = ExtReal::infinity();
  CHECK((ExtReal(2.0) + inf).is_infinite());
  CHECK((3.0 * inf).is_infinite());
  CHECK((0.0 * inf) == ExtReal(0.0));
  CHECK((ExtReal(1.5) + ExtReal(2.0)).finite_value() == 3.5);
  CHECK(ExtReal(std::numeric_limits<double>::infinity()).is_infinite());
  CHECK(ExtReal(1.0) < inf);
  CHECK(min(ExtReal(4.0), inf) == ExtReal(4.0));
  CHECK_THROWS_AS(ExtReal(-1.0), DomainError);
  CHECK_THROWS_AS(ExtReal(std::nan("")), DomainError);
}

TEST_CASE("generator families", "[generator]") {
  CHECK_THROWS_AS(GeneratorFamily::hamacher(-0.1), ValidationError);
  CHECK_THROWS_AS(GeneratorFamily::aczel_alsina(0.0), ValidationError);
  CHECK_THROWS_AS(GeneratorFamily::hamacher(std::numeric_limits<double>::infinity()),
                  ValidationError);
  CHECK(GeneratorFamily::einstein() == GeneratorFamily::hamacher(2.0));

  CHECK(GeneratorFamily::product().at_zero().is_infinite());
  CHECK(GeneratorFamily::lukasiewicz().at_zero() == ExtReal(1.0));
  CHECK(GeneratorFamily::hamacher(0.0).at_zero().is_infinite());
  CHECK(GeneratorFamily::hamacher(3.0).at_zero().is_infinite());
  CHECK(GeneratorFamily::aczel_alsina(2.0).at_zero().is_infinite());
  CHECK_FALSE(GeneratorFamily::lukasiewicz().is_strict());
  CHECK(GeneratorFamily::product().is_strict());
}

TEST_CASE("gen_eval examples", "[generator]") {
  CHECK(gen_eval(GeneratorFamily::lukasiewicz(), 0.5).to_double() == Approx(0.5));
  CHECK(gen_eval(GeneratorFamily::product(), 1.0) == ExtReal(0.0));
  CHECK(gen_eval(GeneratorFamily::hamacher(0.0), 0.25).to_double() == Approx(3.0));
  CHECK_THAT(gen_eval(GeneratorFamily::hamacher(2.0), 0.5).to_double(),
             WithinAbs(std::log(3.0), 1e-15));
  CHECK_THAT(gen_eval(GeneratorFamily::aczel_alsina(2.0), 0.5).to_double(),
             WithinAbs(std::log(2.0) * std::log(2.0), 1e-15));
  CHECK_THROWS_AS(gen_eval(GeneratorFamily::product(), 1.5), DomainError);
  CHECK_THROWS_AS(gen_eval(GeneratorFamily::product(), -0.01), DomainError);
}

TEST_CASE("gen_eval endpoints and monotonicity", "[generator]") {
  for (const auto& f : all_families()) {
    INFO(io::format_family(f));
    CHECK(gen_eval(f, 1.0) == ExtReal(0.0));
    CHECK(gen_eval(f, 0.0) == f.at_zero());
    double prev = gen_eval(f, 0.001).to_double();
    for (int i = 2; i <= 1000; ++i) {
      const double cur = gen_eval(f, i / 1000.0).to_double();
      REQUIRE(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("gen_pseudo_inverse examples", "[generator]") {
  CHECK(gen_pseudo_inverse(GeneratorFamily::lukasiewicz(), ExtReal(0.25)) == Approx(0.75));
  CHECK(gen_pseudo_inverse(GeneratorFamily::lukasiewicz(), ExtReal(2.0)) == 0.0);
  CHECK_THAT(gen_pseudo_inverse(GeneratorFamily::product(), ExtReal(std::log(2.0))),
             WithinAbs(0.5, 1e-15));
  for (const auto& f : all_families()) {
    INFO(io::format_family(f));
    CHECK(gen_pseudo_inverse(f, ExtReal(0.0)) == 1.0);
    CHECK(gen_pseudo_inverse(f, ExtReal::infinity()) == 0.0);
    CHECK(gen_pseudo_inverse(f, f.at_zero()) == 0.0);
  }
}

TEST_CASE("pseudo-inverse undoes the generator on (0,1]", "[generator][property]") {
  testing::Gen gen(11);
  for (const auto& f : all_families()) {
    INFO(io::format_family(f));
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double u = i == 0 ? 1.0 : gen.range(1e-6, 1.0);
      worst = std::max(worst, std::abs(gen_pseudo_inverse(f, gen_eval(f, u)) - u));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("ordinal sum construction", "[tnorm_spec]") {
  const auto s = TNormSpec::ordinal_sum(
      {{0.5, 1.0, GeneratorFamily::einstein()}, {0.0, 0.5, GeneratorFamily::product()}});
  REQUIRE(s.summands().size() == 2);
  CHECK(s.summands()[0].a == 0.0);
  CHECK(s.summands()[1].a == 0.5);
  CHECK(s == io::parse_tnorm(testing::kCase1));

  CHECK(TNormSpec::ordinal_sum({{0.0, 1.0, GeneratorFamily::lukasiewicz()}}) ==
        TNormSpec::lukasiewicz());
  CHECK_THROWS_AS(TNormSpec::ordinal_sum({}), ValidationError);
  CHECK_THROWS_AS(TNormSpec::ordinal_sum({{0.6, 0.4, GeneratorFamily::product()}}),
                  ValidationError);
  CHECK_THROWS_AS(TNormSpec::ordinal_sum({{0.0, 0.6, GeneratorFamily::product()},
                                          {0.5, 1.0, GeneratorFamily::product()}}),
                  ValidationError);
  CHECK_THROWS_AS(TNormSpec::ordinal_sum({{-0.1, 0.5, GeneratorFamily::product()}}),
                  ValidationError);
}

TEST_CASE("tnorm_eval examples", "[tnorm_eval]") {
  CHECK(tnorm_eval(TNormSpec::lukasiewicz(), 0.5, 0.5) == 0.0);
  for (const auto& entry : oracle::shipped_catalogue()) {
    CHECK(tnorm_eval(entry.spec, 0.37, 1.0) == 0.37);
    CHECK(tconorm_eval(entry.spec, 0.9, 0.0) == Approx(0.9).margin(1e-15));
  }
  const double a = 0.8736;
  const double b = 0.8906;
  CHECK_THAT(tnorm_eval(TNormSpec::einstein(), a, b),
             WithinAbs(a * b / (1.0 + (1.0 - a) * (1.0 - b)), 1e-14));
  CHECK_THAT(tnorm_eval(TNormSpec::einstein(), a, b), WithinAbs(0.767416, 1e-6));
  CHECK_THAT(tconorm_eval(TNormSpec::product(), 0.3, 0.4), WithinAbs(0.58, 1e-15));
  CHECK(tconorm_eval(TNormSpec::minimum(), 0.2, 0.7) == 0.7);
  CHECK(tnorm_eval(TNormSpec::minimum(), 0.2, 0.7) == 0.2);
  CHECK_THROWS_AS(tnorm_eval(TNormSpec::product(), 1.2, 0.5), DomainError);
  CHECK_THROWS_AS(tconorm_eval(TNormSpec::product(), 0.5, -0.2), DomainError);
  // Within the clamp slack.
  CHECK(tnorm_eval(TNormSpec::product(), 1.0 + 1e-10, 0.5) == 0.5);
}

TEST_CASE("tnorm_eval_many examples", "[tnorm_eval]") {
  const std::vector<double> prod_terms{std::pow(0.7, 0.2), std::pow(0.3, 0.3),
                                       std::pow(0.1, 0.1), std::pow(0.5, 0.4)};
  CHECK_THAT(tnorm_eval_many(TNormSpec::product(), prod_terms), WithinAbs(0.3906, 5e-5));
  const std::vector<double> one{0.42};
  for (const auto& entry : oracle::shipped_catalogue()) {
    CHECK(tnorm_eval_many(entry.spec, one) == 0.42);
  }
  const std::vector<double> ord_terms{0.9163, 0.4368, 0.4453, 0.5};
  // Both middle terms sit in the lower summand: Einstein-scaled there, then min.
  CHECK_THAT(tnorm_eval_many(io::parse_tnorm(testing::kCase2), ord_terms),
             WithinAbs(0.383708, 1e-6));
  CHECK_THAT(tnorm_eval_many(io::parse_tnorm(testing::kCase2), ord_terms),
             WithinAbs(0.3837, 5e-5));
  CHECK_THAT(tnorm_eval_many(io::parse_tnorm(testing::kCase1), ord_terms),
             WithinAbs(0.5 * 0.8736 * 0.8906, 1e-15));
  CHECK_THROWS_AS(tnorm_eval_many(TNormSpec::product(), std::vector<double>{}),
                  ValidationError);
  CHECK_THROWS_AS(tconorm_eval_many(TNormSpec::product(), std::vector<double>{}),
                  ValidationError);
}

TEST_CASE("ordinal sum is min off the summand squares", "[tnorm_eval][property]") {
  const auto spec = TNormSpec::ordinal_sum({{0.1, 0.4, GeneratorFamily::lukasiewicz()},
                                            {0.6, 0.9, GeneratorFamily::product()}});
  testing::Gen gen(3);
  for (int i = 0; i < 20000; ++i) {
    const double u = gen.unit_or_edge();
    const double v = gen.unit_or_edge();
    const bool same = (0.1 < u && u < 0.4 && 0.1 < v && v < 0.4) ||
                      (0.6 < u && u < 0.9 && 0.6 < v && v < 0.9);
    if (!same) REQUIRE(tnorm_eval(spec, u, v) == std::min(u, v));
  }
  // Summand endpoints are idempotent.
  for (double x : {0.1, 0.4, 0.6, 0.9}) CHECK(tnorm_eval(spec, x, x) == x);
  // Inside a nilpotent summand the scaled zero is the left endpoint.
  CHECK(tnorm_eval(spec, 0.25, 0.25) == Approx(0.1));
}

TEST_CASE("t-norm axioms on random samples", "[tnorm_eval][property]") {
  testing::Gen gen(2024);
  for (int s = 0; s < 60; ++s) {
    const TNormSpec spec = gen.spec();
    INFO(io::format_tnorm(spec));
    double assoc = 0.0;
    double comm = 0.0;
    double mono = 0.0;
    double neutral = 0.0;
    for (int i = 0; i < 3000; ++i) {
      const double x = gen.unit_or_edge();
      const double y = gen.unit_or_edge();
      const double z = gen.unit_or_edge();
      const double txy = tnorm_eval(spec, x, y);
      REQUIRE(txy >= 0.0);
      REQUIRE(txy <= 1.0);
      comm = std::max(comm, std::abs(txy - tnorm_eval(spec, y, x)));
      assoc = std::max(assoc, std::abs(tnorm_eval(spec, txy, z) -
                                       tnorm_eval(spec, x, tnorm_eval(spec, y, z))));
      const double hi = std::max(y, z);
      const double lo = std::min(y, z);
      mono = std::max(mono, tnorm_eval(spec, x, lo) - tnorm_eval(spec, x, hi));
      neutral = std::max(neutral, std::abs(tnorm_eval(spec, x, 1.0) - x));
    }
    CHECK(comm <= 1e-12);
    CHECK(assoc <= 1e-12);
    CHECK(mono <= 1e-12);
    CHECK(neutral == 0.0);
  }
}

TEST_CASE("t-conorm duality round trip", "[tconorm][property]") {
  testing::Gen gen(77);
  for (int s = 0; s < 40; ++s) {
    const TNormSpec spec = gen.spec();
    INFO(io::format_tnorm(spec));
    for (int i = 0; i < 2000; ++i) {
      const double u = gen.unit_or_edge();
      const double v = gen.unit_or_edge();
      REQUIRE(std::abs(1.0 - tconorm_eval(spec, 1.0 - u, 1.0 - v) -
                       tnorm_eval(spec, u, v)) <= 1e-15);
      REQUIRE(tconorm_eval(spec, u, 0.0) == Approx(u).margin(1e-15));
    }
  }
}

TEST_CASE("tnorm_eval_many is permutation invariant", "[tnorm_eval][property]") {
  testing::Gen gen(5);
  for (int s = 0; s < 300; ++s) {
    const TNormSpec spec = gen.spec();
    std::vector<double> xs(2 + gen.index(5));
    for (double& x : xs) x = gen.unit_or_edge();
    const double base = tnorm_eval_many(spec, xs);
    std::shuffle(xs.begin(), xs.end(), gen.engine());
    REQUIRE(std::abs(tnorm_eval_many(spec, xs) - base) <= 1e-12);
  }
}

TEST_CASE("classify", "[classify]") {
  CHECK(classify(TNormSpec::minimum()) == Classification{true, false, false, false, false});
  CHECK(classify(TNormSpec::lukasiewicz()) ==
        Classification{false, false, true, false, false});
  CHECK(classify(TNormSpec::product()).is_strict);
  CHECK(classify(io::parse_tnorm(testing::kCase1)) ==
        Classification{false, false, false, true, true});
  const auto mixed = TNormSpec::ordinal_sum({{0.0, 0.3, GeneratorFamily::lukasiewicz()},
                                             {0.5, 1.0, GeneratorFamily::product()}});
  CHECK(classify(mixed) == Classification{false, false, false, true, false});

  for (const auto& f : all_families()) {
    const auto c = classify(TNormSpec::archimedean(f));
    CHECK(c.is_strict == f.at_zero().is_infinite());
    CHECK(c.is_nilpotent == !c.is_strict);
    CHECK_FALSE(c.is_min);
    CHECK_FALSE(c.is_ordinal_sum);
  }
}
