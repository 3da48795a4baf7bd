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

#include "hsalias/harmonics.hpp"

#include <climits>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "hsalias/error.hpp"
#include "hsalias/specfun.hpp"

namespace hsalias {

int HarmonicIndex::polar_order(int j) const {
  int v = order(j);
  return v < 0 ? -v : v;
}

bool is_valid_index(const HarmonicIndex &idx, int d) {
  if (d < 2 || idx.dim() != d || idx.ell < 0)
    return false;
  int prev = idx.ell;
  for (int j = 1; j <= d - 1; ++j) {
    int v = idx.m[j - 1];
    if (j < d - 1 && v < 0)
      return false;
    if (std::abs(v) > prev)
      return false;
    prev = v;
  }
  return true;
}

void require_valid_index(const HarmonicIndex &idx, int d, const char *what) {
  if (!is_valid_index(idx, d))
    throw InvalidArgument(std::string(what) + ": invalid harmonic index " + to_string(idx) +
                          " for d=" + std::to_string(d));
}

std::string to_string(const HarmonicIndex &idx) {
  std::ostringstream os;
  os << '(' << idx.ell;
  for (int v : idx.m)
    os << ',' << v;
  os << ')';
  return os.str();
}

std::vector<HarmonicIndex> index_set(int ell, int d) {
  if (ell < 0 || d < 2)
    throw InvalidArgument("index_set: need ell >= 0 and d >= 2");
  std::vector<HarmonicIndex> out;
  HarmonicIndex cur;
  cur.ell = ell;
  cur.m.assign(d - 1, 0);
  auto rec = [&](auto &&self, int j, int prev) -> void {
    if (j == d) {
      out.push_back(cur);
      return;
    }
    int lo = (j == d - 1) ? -prev : 0;
    for (int v = lo; v <= prev; ++v) {
      cur.m[j - 1] = v;
      self(self, j + 1, std::abs(v));
    }
  };
  rec(rec, 1, ell);
  return out;
}

long long multiplicity(int ell, int d) {
  if (ell < 0 || d < 2)
    throw InvalidArgument("multiplicity: need ell >= 0 and d >= 2");
  // (2 ell + d - 1) * binom(ell + d - 2, d - 2) / (d - 1)
  const __int128 limit = static_cast<__int128>(1) << 120;
  __int128 c = 1;
  for (int i = 1; i <= d - 2; ++i) {
    c = c * (ell + i) / i;
    if (c > limit)
      throw InvalidArgument("multiplicity: result exceeds the integer range");
  }
  __int128 v = c * (2 * static_cast<__int128>(ell) + d - 1);
  if (v % (d - 1) != 0)
    throw NumericalError("multiplicity: inexact division");
  v /= (d - 1);
  if (v > LLONG_MAX)
    throw InvalidArgument("multiplicity: result exceeds the integer range");
  return static_cast<long long>(v);
}

double eval_Y_polar(const HarmonicIndex &idx, const SpherePoint &x, int d) {
  require_valid_index(idx, d, "eval_Y");
  double logmag = 0.0;
  int sign = 1;
  for (int j = 1; j <= d - 1; ++j) {
    const int mp = idx.polar_order(j - 1);
    const int m = idx.polar_order(j);
    const double t = x.cos_at(j - 1);
    const double s = x.sin_at(j - 1);
    double c = gegenbauer_raw(mp - m, m + 0.5 * (d - j), t);
    if (c == 0.0 || (m > 0 && s == 0.0))
      return 0.0;
    if (c < 0.0)
      sign = -sign;
    logmag += log_norm_h(mp, m, j, d) + std::log(std::fabs(c));
    if (m > 0)
      logmag += m * std::log(s);
  }
  return sign * std::exp(logmag);
}

std::complex<double> eval_Y(const HarmonicIndex &idx, const SpherePoint &x, int d) {
  double p = eval_Y_polar(idx, x, d) / std::sqrt(2.0 * std::numbers::pi);
  double ang = idx.order(d - 1) * x.phi;
  return {p * std::cos(ang), p * std::sin(ang)};
}

std::vector<double> embed(const SpherePoint &x, int d) {
  std::vector<double> v(d + 1);
  double sprod = 1.0;
  for (int j = 1; j <= d - 1; ++j) {
    v[j - 1] = sprod * x.cos_at(j - 1);
    sprod *= x.sin_at(j - 1);
  }
  v[d - 1] = sprod * std::cos(x.phi);
  v[d] = sprod * std::sin(x.phi);
  return v;
}

double kernel_K(int ell, const SpherePoint &x, const SpherePoint &y, int d) {
  if (ell < 0)
    throw InvalidArgument("kernel_K: negative degree");
  std::vector<double> a = embed(x, d), b = embed(y, d);
  double ip = 0.0;
  for (int i = 0; i <= d; ++i)
    ip += a[i] * b[i];
  ip = std::fmax(-1.0, std::fmin(1.0, ip));
  // Gegenbauer factor taken relative to its value at 1, so that K(x,x) = Xi_d(l)/|S^d|.
  const double half = 0.5 * (d + 1);
  double logc = std::log(2.0 * ell + d - 1) - std::log(d - 1.0) + log_gamma(half) -
                std::log(2.0) - half * std::log(std::numbers::pi);
  return std::exp(logc) * gegenbauer_raw(ell, 0.5 * (d - 1), ip);
}

} // namespace hsalias
