/*
 * Copyright 2026 The hsalias Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hsalias/design.hpp"
#include "hsalias/error.hpp"
#include "hsalias/quadrature.hpp"
#include "support/generators.hpp"

using namespace hsalias;
using hsalias::testing::for_all;
using hsalias::testing::Gen;

namespace {

double area_oracle(int d) {
  // |S^d| by the recursion |S^d| = 2 pi |S^{d-2}| / (d - 1), |S^0| = 2, |S^1| = 2 pi
  double a = (d % 2 == 0) ? 2.0 : 2.0 * std::numbers::pi;
  for (int k = (d % 2 == 0) ? 2 : 3; k <= d; k += 2)
    a *= 2.0 * std::numbers::pi / (k - 1);
  return a;
}

double total_measure(const SphericalDesign &des) {
  double s = 0.0;
  for (const WeightedPoint &p : flatten(des))
    s += p.weight * p.f;
  return s;
}

} // namespace

TEST_SUITE("design") {

TEST_CASE("S^3 example design") {
  SphericalDesign des = uniform_design(3, {2, 2}, 1);
  CHECK(des.size() == 8);
  REQUIRE(des.polar.size() == 2);
  const double pi = std::numbers::pi;
  CHECK(des.polar[0].alpha == 1.0);
  CHECK(des.polar[1].alpha == 0.5);
  // theta stored in descending order (ascending cosines)
  CHECK(des.polar[0].theta[0] == doctest::Approx(2 * pi / 3).epsilon(1e-15));
  CHECK(des.polar[0].theta[1] == doctest::Approx(pi / 3).epsilon(1e-15));
  CHECK(des.polar[1].theta[1] == doctest::Approx(std::acos(1 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(des.polar[1].theta[0] == doctest::Approx(std::acos(-1 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(des.azimuth.angles[0] == 0.0);
  CHECK(des.azimuth.angles[1] == doctest::Approx(pi));
}

TEST_CASE("two-sphere design is Gauss-Legendre by trapezoid") {
  SphericalDesign des = uniform_design(2, {4}, 4);
  CHECK(des.polar[0].alpha == 0.5);
  const double t[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                      0.8611363115940526};
  const double w[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                      0.3478548451374538};
  for (int k = 0; k < 4; ++k) {
    CHECK(des.polar[0].nodes[k] == doctest::Approx(t[k]).epsilon(1e-15));
    CHECK(des.polar[0].weights[k] * des.polar[0].sin_at(k) == doctest::Approx(w[k]).epsilon(1e-14));
  }
  CHECK(des.size() == 32);
}

TEST_CASE("one-point rules sit on the equator") {
  SphericalDesign des = uniform_design(3, {1, 1}, 1);
  for (const PolarRule &p : des.polar) {
    REQUIRE(p.size() == 1);
    CHECK(p.theta[0] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  }
  CHECK(des.size() == 2);
}

TEST_CASE("measure_f") {
  const double pi = std::numbers::pi;
  CHECK(measure_f({pi / 2, pi / 2, pi / 2}, 4) == doctest::Approx(1.0));
  CHECK(measure_f({0.0, pi / 3}, 3) == doctest::Approx(0.0));
  CHECK(std::abs(measure_f({pi / 4, pi}, 3)) <= 1e-15);
  CHECK(measure_f({pi / 3, pi / 4}, 3) == doctest::Approx(0.75 * std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("flattened designs integrate constants") {
  CHECK(total_measure(uniform_design(2, {2}, 1)) == doctest::Approx(4 * std::numbers::pi).epsilon(1e-14));
  CHECK(total_measure(uniform_design(3, {2, 2}, 1)) ==
        doctest::Approx(2 * std::numbers::pi * std::numbers::pi).epsilon(1e-14));
  CHECK(flatten(uniform_design(3, {4, 4}, 2)).size() == 64);
  for (int d = 2; d <= 5; ++d)
    CHECK(sphere_area(d) == doctest::Approx(area_oracle(d)).epsilon(1e-15));

  for_all(60, 31, [](Gen &g) {
    int d = g.integer(2, 5);
    auto Q = g.Q(d, 1, 8);
    int M = g.integer(1, 8);
    SphericalDesign des = uniform_design(d, Q, M);
    CHECK(flatten(des).size() == des.size());
    CHECK(total_measure(des) == doctest::Approx(area_oracle(d)).epsilon(1e-10));
  });
}

TEST_CASE("design symmetry is bit-exact") {
  for_all(60, 32, [](Gen &g) {
    int d = g.integer(2, 5);
    SphericalDesign des = uniform_design(d, g.Q(d, 1, 16), g.integer(1, 5));
    for (const PolarRule &p : des.polar) {
      int Q = p.size();
      for (int k = 0; k < Q; ++k) {
        CHECK(p.theta[k] == std::numbers::pi - p.theta[Q - 1 - k]);
        CHECK(p.weights[k] == p.weights[Q - 1 - k]);
        CHECK(p.nodes[k] == -p.nodes[Q - 1 - k]);
        CHECK(std::isfinite(p.weights[k]));
        CHECK(p.weights[k] > 0.0);
      }
    }
  });
}

TEST_CASE("per-coordinate weights carry the Gegenbauer mass") {
  for_all(40, 33, [](Gen &g) {
    int d = g.integer(2, 5);
    SphericalDesign des = uniform_design(d, g.Q(d, 1, 12), 1);
    for (const PolarRule &p : des.polar) {
      double s = 0.0;
      for (int k = 0; k < p.size(); ++k)
        s += p.weights[k] * std::pow(p.sin_at(k), d - p.j);
      CHECK(s == doctest::Approx(gegenbauer_mass(0.5 * (d - p.j))).epsilon(1e-13));
    }
  });
}

TEST_CASE("invalid designs are rejected") {
  CHECK_THROWS_AS(uniform_design(1, {}, 1), InvalidArgument);
  CHECK_THROWS_AS(uniform_design(3, {2}, 1), InvalidArgument);
  CHECK_THROWS_AS(uniform_design(3, {2, 0}, 1), InvalidArgument);
  CHECK_THROWS_AS(uniform_design(3, {2, 2}, 0), InvalidArgument);
}

TEST_CASE("corrupted designs fail the invariant check") {
  SphericalDesign des = uniform_design(3, {4, 4}, 2);
  des.polar[0].weights[0] *= 1.0 + 1e-15;
  CHECK_THROWS(check_design_invariants(des));
}

}
