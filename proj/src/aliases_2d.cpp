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

// Two-sphere aliasing computed from associated Legendre functions and a
// Gauss-Legendre rule, without going through the hyperspherical machinery.

#include <cmath>
#include <cstdlib>

#include "hsalias/aliasing.hpp"
#include "hsalias/error.hpp"
#include "hsalias/quadrature.hpp"
#include "hsalias/specfun.hpp"

namespace hsalias {

double legendre_P(int ell, int m, double t) {
  if (m < 0 || m > ell)
    throw InvalidArgument("legendre_P: need 0 <= m <= ell");
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i)
    pmm *= (2.0 * i - 1.0) * s;
  if (ell == m)
    return pmm;
  double p1 = t * (2.0 * m + 1.0) * pmm;
  double p0 = pmm;
  for (int l = m + 2; l <= ell; ++l) {
    double p2 = (t * (2.0 * l - 1.0) * p1 - (l + m - 1.0) * p0) / (l - m);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double zeta_2d(int ell, int m) {
  if (m < 0 || m > ell)
    throw InvalidArgument("zeta_2d: need 0 <= m <= ell");
  return std::sqrt((2.0 * ell + 1.0) / 2.0 *
                   std::exp(log_gamma(ell - m + 1.0) - log_gamma(ell + m + 1.0)));
}

std::vector<AliasRecord> aliases_2d(int ell, int m, int Q, int M, int s_max, double zero_tol) {
  if (ell < 0 || std::abs(m) > ell)
    throw InvalidArgument("aliases_2d: need |m| <= ell");
  if (Q < 1 || M < 1)
    throw InvalidArgument("aliases_2d: Q and M must be positive");
  Rule1D rule = gauss_gegenbauer(Q, 0.5);
  const double mass = rule.mass();
  const int am = std::abs(m);

  std::vector<AliasRecord> out;
  const int s_lo = -(ell / 2);
  for (int s = s_lo; s <= s_max; ++s) {
    const int lp = ell + 2 * s;
    const bool a_branch = s <= Q - ell - 1;
    // |m + 2 r M| <= lp
    for (int r = -(lp + m) / (2 * M) - 1; r <= (lp - m) / (2 * M) + 1; ++r) {
      const int mp = m + 2 * r * M;
      if (std::abs(mp) > lp)
        continue;
      if (a_branch && r == 0)
        continue;
      if (s == 0 && r == 0)
        continue;
      const int amp = std::abs(mp);
      double I = 0.0;
      for (int k = 0; k < rule.size(); ++k) {
        double t = rule.nodes[k];
        I += mass * rule.weights[k] * legendre_P(ell, am, t) * legendre_P(lp, amp, t);
      }
      double eta = zeta_2d(ell, am) * zeta_2d(lp, amp) * I;
      if (!(std::fabs(eta) > zero_tol))
        continue;
      AliasRecord rec;
      rec.source = HarmonicIndex{ell, {m}};
      rec.target = HarmonicIndex{lp, {mp}};
      rec.s0 = s;
      rec.r = r;
      rec.intensity = eta;
      rec.distance = 2.0 * std::sqrt(static_cast<double>(s) * s + static_cast<double>(r) * M * r * M);
      rec.levels = a_branch ? "A" : "B";
      rec.location = a_branch ? LocationClass::secondary : LocationClass::primary;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

} // namespace hsalias
