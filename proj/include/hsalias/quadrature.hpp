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

#ifndef HSALIAS_QUADRATURE_HPP
#define HSALIAS_QUADRATURE_HPP

#include <vector>

namespace hsalias {

// r-point Gauss-Gegenbauer rule for the weight (1 - t^2)^(alpha - 1/2).
// Weights are normalised to sum to one; multiply by mass() for the raw rule.
struct Rule1D {
  double alpha = 0.5;
  std::vector<double> nodes;   // ascending, t_k = -t_{r-1-k}
  std::vector<double> weights; // positive, symmetric, sum 1

  int size() const { return static_cast<int>(nodes.size()); }
  double mass() const;
};

struct AzimuthRule {
  int M = 1;
  std::vector<double> angles; // q * pi / M, q = 0..2M-1
  double weight = 0.0;        // pi / M
};

Rule1D gauss_gegenbauer(int r, double alpha);
AzimuthRule trapezoid_phi(int M);

// Integral of (1 - t^2)^(alpha - 1/2) over [-1, 1].
double gegenbauer_mass(double alpha);

// Integral of (1 - t^2)^(alpha - 1/2) t^p over [-1, 1] (zero for odd p).
double gegenbauer_moment(double alpha, int p);

// Same integrand with |t|^p; the scale used to normalise moment errors.
double gegenbauer_abs_moment(double alpha, int p);

// max_{p <= p_max} |mass * sum w t^p - moment_p| / abs_moment_p
double rule_exactness_error(const Rule1D &rule, int p_max);

// Weights from the derivative formula w_k ~ 1 / ((1 - t_k^2) C_r'(t_k)^2),
// normalised to sum 1. Independent of the eigenvector route.
std::vector<double> gegenbauer_weights_by_derivative(const std::vector<double> &nodes,
                                                     double alpha);

} // namespace hsalias

#endif
