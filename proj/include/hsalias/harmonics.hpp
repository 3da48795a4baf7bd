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

#ifndef HSALIAS_HARMONICS_HPP
#define HSALIAS_HARMONICS_HPP

#include <complex>
#include <compare>
#include <string>
#include <vector>

#include "hsalias/design.hpp"

namespace hsalias {

// Degree ell and order chain m_1 >= ... >= m_{d-2} >= |m_{d-1}|.
struct HarmonicIndex {
  int ell = 0;
  std::vector<int> m;

  int dim() const { return static_cast<int>(m.size()) + 1; }
  // m_0 = ell, m_j for j >= 1; the last order is returned signed
  int order(int j) const { return j == 0 ? ell : m[j - 1]; }
  // order used inside the polar product (|m_{d-1}| for the last one)
  int polar_order(int j) const;

  auto operator<=>(const HarmonicIndex &) const = default;
  bool operator==(const HarmonicIndex &) const = default;
};

bool is_valid_index(const HarmonicIndex &idx, int d);
void require_valid_index(const HarmonicIndex &idx, int d, const char *what);

// "(ell,m1,...,m_{d-1})"
std::string to_string(const HarmonicIndex &idx);

std::vector<HarmonicIndex> index_set(int ell, int d);

long long multiplicity(int ell, int d);

std::complex<double> eval_Y(const HarmonicIndex &idx, const SpherePoint &x, int d);

// Real polar part of Y times sqrt(2 pi); eval_Y = polar * e^{i m_{d-1} phi} / sqrt(2 pi).
double eval_Y_polar(const HarmonicIndex &idx, const SpherePoint &x, int d);

double kernel_K(int ell, const SpherePoint &x, const SpherePoint &y, int d);

std::vector<double> embed(const SpherePoint &x, int d);

} // namespace hsalias

#endif
