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

#include "hsalias/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "golub_welsch.hpp"
#include "hsalias/error.hpp"

namespace hsalias {

double gegenbauer_raw(int n, double alpha, double t) {
  if (n == 0)
    return 1.0;
  double c0 = 1.0;
  double c1 = 2.0 * alpha * t;
  for (int k = 2; k <= n; ++k) {
    double c2 = (2.0 * (k + alpha - 1.0) * t * c1 - (k + 2.0 * alpha - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double gegenbauer_eval(const GegenbauerSpec &spec, double t) {
  if (spec.degree < 0)
    throw InvalidArgument("gegenbauer_eval: negative degree");
  if (!(spec.alpha > 0.0))
    throw InvalidArgument("gegenbauer_eval: parameter must be positive");
  if (!(std::fabs(t) <= 1.0))
    throw InvalidArgument("gegenbauer_eval: argument outside [-1, 1]");
  return gegenbauer_raw(spec.degree, spec.alpha, t);
}

double gegenbauer_derivative(int n, double alpha, double t) {
  if (n == 0)
    return 0.0;
  return 2.0 * alpha * gegenbauer_raw(n - 1, alpha + 1.0, t);
}

namespace detail {

void golub_welsch(int n, double alpha, std::vector<double> &nodes,
                  std::vector<double> *weights) {
  nodes.assign(n, 0.0);
  if (weights)
    weights->assign(n, 0.0);
  if (n == 1) {
    if (weights)
      (*weights)[0] = 1.0;
    return;
  }

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) {
    double kk = k;
    sub(k - 1) = std::sqrt(kk * (kk + 2.0 * alpha - 1.0) /
                           (4.0 * (kk + alpha) * (kk + alpha - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub,
                            weights ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("gegenbauer zeros: tridiagonal eigensolver failed");

  // eigenvalues are ascending
  for (int k = 0; k < n; ++k) {
    double t = es.eigenvalues()(k);
    double step = gegenbauer_raw(n, alpha, t) / gegenbauer_derivative(n, alpha, t);
    if (!std::isfinite(step) || std::fabs(step) > 1e-6)
      throw NumericalError("gegenbauer zeros: Newton polish did not converge (n=" +
                           std::to_string(n) + ")");
    nodes[k] = t - step;
  }
  for (int k = 0; k < n / 2; ++k) {
    double a = 0.5 * (nodes[n - 1 - k] - nodes[k]);
    nodes[k] = -a;
    nodes[n - 1 - k] = a;
  }
  if (n % 2 == 1)
    nodes[n / 2] = 0.0;
  for (int k = 1; k < n; ++k)
    if (!(nodes[k] > nodes[k - 1]))
      throw NumericalError("gegenbauer zeros: roots not strictly increasing");

  if (weights) {
    std::vector<double> &w = *weights;
    for (int k = 0; k < n; ++k) {
      double v = es.eigenvectors()(0, k);
      w[k] = v * v;
    }
    for (int k = 0; k < n / 2; ++k) {
      double a = 0.5 * (w[k] + w[n - 1 - k]);
      w[k] = a;
      w[n - 1 - k] = a;
    }
    double sum = 0.0;
    for (int k = 0; k < n / 2; ++k)
      sum += 2.0 * w[k];
    if (n % 2 == 1)
      sum += w[n / 2];
    for (double &x : w)
      x /= sum;
  }
}

} // namespace detail

std::vector<double> gegenbauer_zeros(const GegenbauerSpec &spec) {
  if (spec.degree < 1)
    throw InvalidArgument("gegenbauer_zeros: degree must be at least 1");
  if (!(spec.alpha > 0.0))
    throw InvalidArgument("gegenbauer_zeros: parameter must be positive");
  std::vector<double> nodes;
  detail::golub_welsch(spec.degree, spec.alpha, nodes, nullptr);
  return nodes;
}

double log_gamma(double x) {
  if (!(x > 0.0))
    throw InvalidArgument("log_gamma: argument must be positive");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_norm_h(int m_prev, int m, int j, int d) {
  if (d < 2 || j < 1 || j > d - 1)
    throw InvalidArgument("norm_h: coordinate index out of range");
  if (m < 0 || m_prev < m)
    throw InvalidArgument("norm_h: requires m_prev >= m >= 0");
  const int dj = d - j;
  const double half = 0.5 * dj;
  double lg = (2.0 * m + dj - 2.0) * std::numbers::ln2 + log_gamma(m_prev - m + 1.0) +
              std::log(2.0 * m_prev + dj) + 2.0 * log_gamma(m + half) -
              std::log(std::numbers::pi) - log_gamma(m_prev + m + dj + 0.0);
  return 0.5 * lg;
}

double norm_h(int m_prev, int m, int j, int d) { return std::exp(log_norm_h(m_prev, m, j, d)); }

} // namespace hsalias
