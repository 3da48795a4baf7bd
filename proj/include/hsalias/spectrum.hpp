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

#ifndef HSALIAS_SPECTRUM_HPP
#define HSALIAS_SPECTRUM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "hsalias/aliasing.hpp"
#include "hsalias/design.hpp"
#include "hsalias/harmonics.hpp"

namespace hsalias {

struct PowerSpectrum {
  std::vector<double> values; // C_0 .. C_L
  int band_limit = -1;        // P_L, or -1 when not declared
};

struct FoldingEntry {
  int ell_target = 0;
  double lambda = 0.0;
};

struct FoldingRow {
  int ell = 0;
  std::vector<FoldingEntry> entries; // ascending ell_target
};

struct FoldingMatrix {
  int d = 2;
  std::vector<int> Q;
  int M = 1;
  int ell_max = 0;
  int s0_max = 0;
  int ell_target_max = -1; // -1: no cap beyond s0_max
  IndexRule rule = IndexRule::complete;
  std::vector<FoldingRow> rows;
};

struct FieldRealization {
  int d = 2;
  int L0 = 0;
  std::uint64_t seed = 0;
  std::vector<HarmonicIndex> index;
  std::vector<std::complex<double>> coeffs;
};

using CoefficientMap = std::map<HarmonicIndex, std::complex<double>>;

double v_fold(const HarmonicIndex &src, int s0, const SphericalDesign &design,
              IndexRule rule = IndexRule::complete);

FoldingMatrix lambda_matrix(int ell_max, int s0_max, const SphericalDesign &design,
                            int ell_target_max = -1, IndexRule rule = IndexRule::complete);

PowerSpectrum fold_spectrum(const FoldingMatrix &matrix, const PowerSpectrum &C);

double covariance(const PowerSpectrum &C, const SpherePoint &x, const SpherePoint &y, int d);

// Child seed for replica k of a run seeded with `master`.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t k);

FieldRealization synthesize_field(const PowerSpectrum &C, int L0, int d, std::uint64_t seed);

std::vector<std::complex<double>> sample_field(const FieldRealization &field,
                                               const SphericalDesign &design);

CoefficientMap aliased_coeffs(const std::vector<std::complex<double>> &samples,
                              const SphericalDesign &design, int ell_max);

std::complex<double> reconstruct(const std::vector<std::complex<double>> &samples,
                                 const SphericalDesign &design, int L, const SpherePoint &x);

// Xi_d(ell)^{-1} sum_m |a_{ell,m}|^2 for every degree present.
std::vector<double> estimate_spectrum(const CoefficientMap &coeffs, int d);

std::complex<double> eval_field(const FieldRealization &field, const SpherePoint &x);

struct SampleSize {
  int Q = 0;
  int M = 0;
  long long N = 0;
  long long bound = 0; // 2 L0^d
  bool satisfied = false;
};

SampleSize check_sample_size(int L0, int d);

struct BandReport {
  int L0 = 0;
  int L = 0;
  std::uint64_t seed = 0;
  double max_coeff_error = 0.0;     // max |a~ - a| over ell <= L0
  double max_recon_error = 0.0;     // max |T_rec(x) - T(x)| at random points
  double max_prediction_gap = 0.0;  // max |a~ - sum_t tau(src, t) a_t|
  int n_points = 0;
};

// Unit spectrum up to L0, design as given, reconstruction with bandwidth L.
BandReport verify_band(const SphericalDesign &design, int L0, int L, std::uint64_t seed,
                       int n_points);

struct MonteCarloResult {
  std::vector<double> mean;      // per degree
  std::vector<double> std_error; // per degree
  int replicas = 0;
};

MonteCarloResult monte_carlo_spectrum(const PowerSpectrum &C, const SphericalDesign &design,
                                      int ell_max, int replicas, std::uint64_t master_seed);

SpherePoint random_point(int d, std::uint64_t seed);

} // namespace hsalias

#endif
