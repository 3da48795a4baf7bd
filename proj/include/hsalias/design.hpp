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

#ifndef HSALIAS_DESIGN_HPP
#define HSALIAS_DESIGN_HPP

#include <cstddef>
#include <vector>

#include "hsalias/quadrature.hpp"

namespace hsalias {

// A point (theta^(1..d-1), phi) of S^d. `cos_theta` is an optional cache of
// the polar cosines; when empty, cosines are taken from `theta`.
struct SpherePoint {
  std::vector<double> theta;
  double phi = 0.0;
  std::vector<double> cos_theta;

  double cos_at(std::size_t j) const;
  double sin_at(std::size_t j) const;
};

// Polar coordinate j (1-based) of a separable design.
struct PolarRule {
  int j = 1;
  double alpha = 0.5;          // (d - j) / 2
  std::vector<double> nodes;   // cos theta_k, ascending
  std::vector<double> theta;   // arccos(nodes), descending
  std::vector<double> weights; // w_k = mass * omega_k / sin^(d-j) theta_k

  int size() const { return static_cast<int>(nodes.size()); }
  double sin_at(int k) const;
};

struct SphericalDesign {
  int d = 2;
  std::vector<int> Q; // Q_0 .. Q_{d-2}
  int M = 1;
  std::vector<PolarRule> polar; // j = 1 .. d-1
  AzimuthRule azimuth;

  std::size_t size() const;
};

struct WeightedPoint {
  SpherePoint x;
  double weight = 0.0; // product of per-coordinate weights
  double f = 0.0;      // measure_f(theta)
};

SphericalDesign uniform_design(int d, const std::vector<int> &Q, int M);

double measure_f(const std::vector<double> &theta, int d);

std::vector<WeightedPoint> flatten(const SphericalDesign &design);

// 2 pi^((d+1)/2) / Gamma((d+1)/2)
double sphere_area(int d);

// Throws NumericalError naming the first violated design invariant.
void check_design_invariants(const SphericalDesign &design);

} // namespace hsalias

#endif
