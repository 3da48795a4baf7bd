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

#include "hsalias/design.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hsalias/error.hpp"
#include "hsalias/specfun.hpp"

namespace hsalias {

double SpherePoint::cos_at(std::size_t j) const {
  return j < cos_theta.size() ? cos_theta[j] : std::cos(theta[j]);
}

double SpherePoint::sin_at(std::size_t j) const {
  if (j < cos_theta.size()) {
    double t = cos_theta[j];
    return std::sqrt((1.0 - t) * (1.0 + t));
  }
  return std::sin(theta[j]);
}

double PolarRule::sin_at(int k) const {
  double t = nodes[k];
  return std::sqrt((1.0 - t) * (1.0 + t));
}

std::size_t SphericalDesign::size() const {
  std::size_t n = 2 * static_cast<std::size_t>(M);
  for (int q : Q)
    n *= static_cast<std::size_t>(q);
  return n;
}

SphericalDesign uniform_design(int d, const std::vector<int> &Q, int M) {
  if (d < 2)
    throw InvalidArgument("uniform_design: d must be at least 2");
  if (static_cast<int>(Q.size()) != d - 1)
    throw InvalidArgument("uniform_design: Q must have d-1 entries");
  for (int q : Q)
    if (q < 1)
      throw InvalidArgument("uniform_design: every Q_j must be positive");
  if (M < 1)
    throw InvalidArgument("uniform_design: M must be positive");

  SphericalDesign des;
  des.d = d;
  des.Q = Q;
  des.M = M;
  des.azimuth = trapezoid_phi(M);
  for (int j = 1; j <= d - 1; ++j) {
    PolarRule pr;
    pr.j = j;
    pr.alpha = 0.5 * (d - j);
    Rule1D rule = gauss_gegenbauer(Q[j - 1], pr.alpha);
    const int n = rule.size();
    const double mass = rule.mass();
    pr.nodes = rule.nodes;
    pr.theta.assign(n, 0.0);
    pr.weights.assign(n, 0.0);
    // theta on the t < 0 half by arccos, mirrored so pi - theta is exact
    for (int k = 0; k < n / 2; ++k) {
      double th = std::acos(pr.nodes[k]);
      pr.theta[k] = th;
      pr.theta[n - 1 - k] = std::numbers::pi - th;
    }
    if (n % 2 == 1)
      pr.theta[n / 2] = std::numbers::pi / 2;
    for (int k = 0; k < n; ++k)
      pr.weights[k] = mass * rule.weights[k] / std::pow(pr.sin_at(k), d - j);
    des.polar.push_back(std::move(pr));
  }
  check_design_invariants(des);
  return des;
}

double measure_f(const std::vector<double> &theta, int d) {
  double f = 1.0;
  for (int j = 1; j <= d - 1; ++j)
    f *= std::pow(std::sin(theta[j - 1]), d - j);
  return f;
}

std::vector<WeightedPoint> flatten(const SphericalDesign &des) {
  const int d = des.d;
  std::vector<WeightedPoint> out;
  out.reserve(des.size());
  std::vector<int> k(d - 1, 0);
  const int nphi = static_cast<int>(des.azimuth.angles.size());
  while (true) {
    WeightedPoint base;
    base.x.theta.resize(d - 1);
    base.x.cos_theta.resize(d - 1);
    double w = 1.0, f = 1.0;
    for (int j = 1; j <= d - 1; ++j) {
      const PolarRule &pr = des.polar[j - 1];
      int kk = k[j - 1];
      base.x.theta[j - 1] = pr.theta[kk];
      base.x.cos_theta[j - 1] = pr.nodes[kk];
      w *= pr.weights[kk];
      f *= std::pow(pr.sin_at(kk), d - j);
    }
    for (int q = 0; q < nphi; ++q) {
      WeightedPoint p = base;
      p.x.phi = des.azimuth.angles[q];
      p.weight = w * des.azimuth.weight;
      p.f = f;
      out.push_back(std::move(p));
    }
    int j = d - 2;
    while (j >= 0 && ++k[j] == des.Q[j]) {
      k[j] = 0;
      --j;
    }
    if (j < 0)
      break;
  }
  return out;
}

double sphere_area(int d) {
  double a = 0.5 * (d + 1);
  return 2.0 * std::exp(a * std::log(std::numbers::pi) - log_gamma(a));
}

void check_design_invariants(const SphericalDesign &des) {
  auto fail = [](const std::string &msg) { throw NumericalError("design invariant: " + msg); };
  if (des.polar.size() != des.Q.size())
    fail("coordinate count");
  for (const PolarRule &pr : des.polar) {
    const int n = pr.size();
    const int expo = des.d - pr.j;
    if (n != des.Q[pr.j - 1])
      fail("node count of coordinate " + std::to_string(pr.j));
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      if (!(pr.theta[k] > 0.0 && pr.theta[k] < std::numbers::pi))
        fail("polar angle outside (0, pi)");
      if (!(pr.weights[k] > 0.0) || !std::isfinite(pr.weights[k]))
        fail("non-positive or non-finite weight");
      if (pr.theta[k] != std::numbers::pi - pr.theta[n - 1 - k])
        fail("angle symmetry at coordinate " + std::to_string(pr.j));
      if (pr.weights[k] != pr.weights[n - 1 - k])
        fail("weight symmetry at coordinate " + std::to_string(pr.j));
      sum += pr.weights[k] * std::pow(pr.sin_at(k), expo);
    }
    double mass = gegenbauer_mass(pr.alpha);
    if (std::fabs(sum - mass) > 1e-13 * mass)
      fail("weighted measure of coordinate " + std::to_string(pr.j));
  }
  if (static_cast<int>(des.azimuth.angles.size()) != 2 * des.M)
    fail("azimuth count");
}

} // namespace hsalias
