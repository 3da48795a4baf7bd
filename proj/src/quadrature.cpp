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

#include "hsalias/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "golub_welsch.hpp"
#include "hsalias/error.hpp"
#include "hsalias/specfun.hpp"

namespace hsalias {

double gegenbauer_mass(double alpha) {
  return std::exp(0.5 * std::log(std::numbers::pi) + log_gamma(alpha + 0.5) -
                  log_gamma(alpha + 1.0));
}

double gegenbauer_abs_moment(double alpha, int p) {
  // B((p+1)/2, alpha + 1/2)
  return std::exp(log_gamma(0.5 * (p + 1)) + log_gamma(alpha + 0.5) -
                  log_gamma(0.5 * (p + 1) + alpha + 0.5));
}

double gegenbauer_moment(double alpha, int p) {
  if (p % 2 == 1)
    return 0.0;
  return gegenbauer_abs_moment(alpha, p);
}

double Rule1D::mass() const { return gegenbauer_mass(alpha); }

Rule1D gauss_gegenbauer(int r, double alpha) {
  if (r < 1)
    throw InvalidArgument("gauss_gegenbauer: need at least one node");
  if (!(alpha > 0.0))
    throw InvalidArgument("gauss_gegenbauer: parameter must be positive");
  Rule1D rule;
  rule.alpha = alpha;
  detail::golub_welsch(r, alpha, rule.nodes, &rule.weights);
  for (double w : rule.weights)
    if (!(w > 0.0))
      throw NumericalError("gauss_gegenbauer: non-positive weight");
  return rule;
}

AzimuthRule trapezoid_phi(int M) {
  if (M < 1)
    throw InvalidArgument("trapezoid_phi: M must be positive");
  AzimuthRule az;
  az.M = M;
  az.weight = std::numbers::pi / M;
  az.angles.resize(2 * M);
  for (int q = 0; q < 2 * M; ++q)
    az.angles[q] = q * std::numbers::pi / M;
  return az;
}

double rule_exactness_error(const Rule1D &rule, int p_max) {
  const double mass = rule.mass();
  double worst = 0.0;
  for (int p = 0; p <= p_max; ++p) {
    double sum = 0.0;
    for (int k = 0; k < rule.size(); ++k)
      sum += rule.weights[k] * std::pow(rule.nodes[k], p);
    double err = std::fabs(mass * sum - gegenbauer_moment(rule.alpha, p)) /
                 gegenbauer_abs_moment(rule.alpha, p);
    worst = std::max(worst, err);
  }
  return worst;
}

std::vector<double> gegenbauer_weights_by_derivative(const std::vector<double> &nodes,
                                                     double alpha) {
  const int r = static_cast<int>(nodes.size());
  std::vector<double> w(r);
  double sum = 0.0;
  for (int k = 0; k < r; ++k) {
    double t = nodes[k];
    double dp = gegenbauer_derivative(r, alpha, t);
    w[k] = 1.0 / ((1.0 - t) * (1.0 + t) * dp * dp);
    sum += w[k];
  }
  for (double &x : w)
    x /= sum;
  return w;
}

} // namespace hsalias
