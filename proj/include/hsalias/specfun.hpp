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

#ifndef HSALIAS_SPECFUN_HPP
#define HSALIAS_SPECFUN_HPP

#include <vector>

namespace hsalias {

struct GegenbauerSpec {
  int degree = 0;
  double alpha = 1.0;
};

// C_n^alpha(t) by the three-term recurrence. Rejects alpha <= 0, n < 0, |t| > 1.
double gegenbauer_eval(const GegenbauerSpec &spec, double t);

// Same recurrence without argument checks; used in inner loops.
double gegenbauer_raw(int n, double alpha, double t);

// d/dt C_n^alpha(t) = 2 alpha C_{n-1}^{alpha+1}(t).
double gegenbauer_derivative(int n, double alpha, double t);

// Zeros of C_n^alpha in ascending order, exactly symmetric about 0.
std::vector<double> gegenbauer_zeros(const GegenbauerSpec &spec);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// log of the harmonic normalising constant h_{m_prev, m; j} on S^d.
double log_norm_h(int m_prev, int m, int j, int d);
double norm_h(int m_prev, int m, int j, int d);

} // namespace hsalias

#endif
