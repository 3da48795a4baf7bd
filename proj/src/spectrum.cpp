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

#include "hsalias/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hsalias/error.hpp"

namespace hsalias {

namespace {

double v_fold_with(SeparableTau &st, const HarmonicIndex &src, int s0,
                   const SphericalDesign &des, IndexRule rule) {
  AliasIndexSets sets = alias_index_sets(src, des.Q, des.M, s0, rule);
  double acc = 0.0;
  for (const ZTuple &z : sets.Z) {
    double e = st.eta(src, alias_target(src, s0, z, des.M));
    acc += e * e;
  }
  return acc;
}

std::vector<HarmonicIndex> indices_upto(int L, int d) {
  std::vector<HarmonicIndex> out;
  for (int l = 0; l <= L; ++l)
    for (HarmonicIndex &h : index_set(l, d))
      out.push_back(std::move(h));
  return out;
}

} // namespace

double v_fold(const HarmonicIndex &src, int s0, const SphericalDesign &des, IndexRule rule) {
  SeparableTau st(des);
  return v_fold_with(st, src, s0, des, rule);
}

FoldingMatrix lambda_matrix(int ell_max, int s0_max, const SphericalDesign &des,
                            int ell_target_max, IndexRule rule) {
  if (ell_max < 0)
    throw InvalidArgument("lambda_matrix: ell_max must be non-negative");
  if (s0_max < 0)
    throw InvalidArgument("lambda_matrix: s0_max must be non-negative");
  FoldingMatrix fm;
  fm.d = des.d;
  fm.Q = des.Q;
  fm.M = des.M;
  fm.ell_max = ell_max;
  fm.s0_max = s0_max;
  fm.ell_target_max = ell_target_max;
  fm.rule = rule;
  SeparableTau st(des);
  for (int l = 0; l <= ell_max; ++l) {
    FoldingRow row;
    row.ell = l;
    std::vector<HarmonicIndex> ms = index_set(l, des.d);
    const double xi = static_cast<double>(multiplicity(l, des.d));
    for (int s0 = -(l / 2); s0 <= s0_max; ++s0) {
      const int lt = l + 2 * s0;
      if (ell_target_max >= 0 && lt > ell_target_max)
        break;
      double acc = 0.0;
      for (const HarmonicIndex &src : ms)
        acc += v_fold_with(st, src, s0, des, rule);
      row.entries.push_back({lt, acc / xi});
    }
    fm.rows.push_back(std::move(row));
  }
  return fm;
}

PowerSpectrum fold_spectrum(const FoldingMatrix &fm, const PowerSpectrum &C) {
  PowerSpectrum out;
  out.values.assign(fm.rows.size(), 0.0);
  for (double c : C.values)
    if (!(c >= 0.0))
      throw InvalidArgument("fold_spectrum: spectrum values must be non-negative");
  for (std::size_t i = 0; i < fm.rows.size(); ++i) {
    double acc = 0.0;
    for (const FoldingEntry &e : fm.rows[i].entries) {
      if (e.ell_target < static_cast<int>(C.values.size()))
        acc += e.lambda * C.values[e.ell_target];
      else if (C.band_limit < 0 || e.ell_target <= C.band_limit)
        throw InvalidArgument("fold_spectrum: spectrum too short (needs degree " +
                              std::to_string(e.ell_target) + ")");
    }
    out.values[i] = acc;
  }
  return out;
}

double covariance(const PowerSpectrum &C, const SpherePoint &x, const SpherePoint &y, int d) {
  double acc = 0.0;
  for (std::size_t l = 0; l < C.values.size(); ++l)
    if (C.values[l] != 0.0)
      acc += C.values[l] * kernel_K(static_cast<int>(l), x, y, d);
  return acc;
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

FieldRealization synthesize_field(const PowerSpectrum &C, int L0, int d, std::uint64_t seed) {
  if (L0 < 0 || L0 >= static_cast<int>(C.values.size()))
    throw InvalidArgument("synthesize_field: L0 exceeds the spectrum length");
  FieldRealization f;
  f.d = d;
  f.L0 = L0;
  f.seed = seed;
  f.index = indices_upto(L0, d);
  f.coeffs.resize(f.index.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t i = 0; i < f.index.size(); ++i) {
    double c = C.values[f.index[i].ell];
    if (!(c >= 0.0))
      throw InvalidArgument("synthesize_field: negative spectrum value");
    double sd = std::sqrt(0.5 * c);
    double re = g(rng), im = g(rng);
    f.coeffs[i] = c == 0.0 ? std::complex<double>(0.0, 0.0)
                           : std::complex<double>(sd * re, sd * im);
  }
  return f;
}

std::complex<double> eval_field(const FieldRealization &field, const SpherePoint &x) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < field.index.size(); ++i)
    if (field.coeffs[i] != 0.0)
      acc += field.coeffs[i] * eval_Y(field.index[i], x, field.d);
  return acc;
}

std::vector<std::complex<double>> sample_field(const FieldRealization &field,
                                               const SphericalDesign &des) {
  if (field.d != des.d)
    throw InvalidArgument("sample_field: dimension mismatch");
  std::vector<WeightedPoint> pts = flatten(des);
  std::vector<std::complex<double>> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    out[i] = eval_field(field, pts[i].x);
  return out;
}

CoefficientMap aliased_coeffs(const std::vector<std::complex<double>> &samples,
                              const SphericalDesign &des, int ell_max) {
  std::vector<WeightedPoint> pts = flatten(des);
  if (samples.size() != pts.size())
    throw InvalidArgument("aliased_coeffs: sample count does not match the design");
  CoefficientMap out;
  for (int l = 0; l <= ell_max; ++l) {
    for (const HarmonicIndex &h : index_set(l, des.d)) {
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        acc += pts[i].weight * pts[i].f * samples[i] * std::conj(eval_Y(h, pts[i].x, des.d));
      out.emplace(h, acc);
    }
  }
  return out;
}

std::complex<double> reconstruct(const std::vector<std::complex<double>> &samples,
                                 const SphericalDesign &des, int L, const SpherePoint &x) {
  std::vector<WeightedPoint> pts = flatten(des);
  if (samples.size() != pts.size())
    throw InvalidArgument("reconstruct: sample count does not match the design");
  if (L < 0)
    throw InvalidArgument("reconstruct: negative bandwidth");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double k = 0.0;
    for (int l = 0; l <= L; ++l)
      k += kernel_K(l, x, pts[i].x, des.d);
    acc += pts[i].weight * pts[i].f * samples[i] * k;
  }
  return acc;
}

std::vector<double> estimate_spectrum(const CoefficientMap &coeffs, int d) {
  int lmax = -1;
  for (const auto &kv : coeffs)
    lmax = std::max(lmax, kv.first.ell);
  std::vector<double> sum(lmax + 1, 0.0);
  std::vector<long long> count(lmax + 1, 0);
  for (const auto &kv : coeffs) {
    require_valid_index(kv.first, d, "estimate_spectrum");
    sum[kv.first.ell] += std::norm(kv.second);
    ++count[kv.first.ell];
  }
  for (int l = 0; l <= lmax; ++l) {
    long long xi = multiplicity(l, d);
    if (count[l] != xi)
      throw InvalidArgument("estimate_spectrum: degree " + std::to_string(l) +
                            " is incomplete");
    sum[l] /= static_cast<double>(xi);
  }
  return sum;
}

SampleSize check_sample_size(int L0, int d) {
  if (L0 < 1)
    throw InvalidArgument("check_sample_size: L0 must be at least 1");
  if (d < 2)
    throw InvalidArgument("check_sample_size: d must be at least 2");
  SampleSize s;
  s.Q = L0 + 1;
  s.M = L0 + 1;
  s.N = 2LL * s.M;
  s.bound = 2;
  for (int j = 0; j < d - 1; ++j)
    s.N *= s.Q;
  for (int j = 0; j < d; ++j)
    s.bound *= L0;
  s.satisfied = s.N >= s.bound;
  return s;
}

SpherePoint random_point(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(d + 1);
  for (double &x : v)
    x = g(rng);
  SpherePoint p;
  p.theta.resize(d - 1);
  for (int j = 0; j < d - 1; ++j) {
    double tail = 0.0;
    for (int i = j + 1; i <= d; ++i)
      tail += v[i] * v[i];
    p.theta[j] = std::atan2(std::sqrt(tail), v[j]);
  }
  double phi = std::atan2(v[d], v[d - 1]);
  p.phi = phi < 0.0 ? phi + 2.0 * std::numbers::pi : phi;
  return p;
}

BandReport verify_band(const SphericalDesign &des, int L0, int L, std::uint64_t seed,
                       int n_points) {
  if (L0 < 0 || L < 0 || n_points < 0)
    throw InvalidArgument("verify_band: negative size");
  PowerSpectrum C;
  C.values.assign(L0 + 1, 1.0);
  C.band_limit = L0;
  FieldRealization field = synthesize_field(C, L0, des.d, child_seed(seed, 0));
  std::vector<std::complex<double>> samples = sample_field(field, des);
  CoefficientMap at = aliased_coeffs(samples, des, L0);

  BandReport rep;
  rep.L0 = L0;
  rep.L = L;
  rep.seed = seed;
  rep.n_points = n_points;
  SeparableTau st(des);
  for (std::size_t i = 0; i < field.index.size(); ++i) {
    const HarmonicIndex &h = field.index[i];
    std::complex<double> got = at.at(h);
    rep.max_coeff_error = std::max(rep.max_coeff_error, std::abs(got - field.coeffs[i]));
    std::complex<double> pred = 0.0;
    for (std::size_t k = 0; k < field.index.size(); ++k)
      pred += st.tau(h, field.index[k]) * field.coeffs[k];
    rep.max_prediction_gap = std::max(rep.max_prediction_gap, std::abs(got - pred));
  }
  for (int p = 0; p < n_points; ++p) {
    SpherePoint x = random_point(des.d, child_seed(seed, 1000 + p));
    std::complex<double> rec = reconstruct(samples, des, L, x);
    rep.max_recon_error = std::max(rep.max_recon_error, std::abs(rec - eval_field(field, x)));
  }
  return rep;
}

MonteCarloResult monte_carlo_spectrum(const PowerSpectrum &C, const SphericalDesign &des,
                                      int ell_max, int replicas, std::uint64_t master_seed) {
  if (replicas < 2)
    throw InvalidArgument("monte_carlo_spectrum: need at least two replicas");
  const int d = des.d;
  const int L0 = static_cast<int>(C.values.size()) - 1;
  std::vector<WeightedPoint> pts = flatten(des);
  std::vector<HarmonicIndex> syn = indices_upto(L0, d);
  std::vector<HarmonicIndex> est = indices_upto(ell_max, d);
  const std::size_t n = pts.size();

  std::vector<std::complex<double>> ysyn(n * syn.size()), yest(n * est.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < syn.size(); ++k)
      ysyn[i * syn.size() + k] = eval_Y(syn[k], pts[i].x, d);
    for (std::size_t k = 0; k < est.size(); ++k)
      yest[i * est.size() + k] =
          pts[i].weight * pts[i].f * std::conj(eval_Y(est[k], pts[i].x, d));
  }

  std::vector<std::vector<double>> per(ell_max + 1, std::vector<double>(replicas, 0.0));
  std::vector<std::complex<double>> T(n);
  for (int rep = 0; rep < replicas; ++rep) {
    FieldRealization f = synthesize_field(C, L0, d, child_seed(master_seed, rep));
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < syn.size(); ++k)
        acc += f.coeffs[k] * ysyn[i * syn.size() + k];
      T[i] = acc;
    }
    for (std::size_t k = 0; k < est.size(); ++k) {
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        acc += T[i] * yest[i * est.size() + k];
      per[est[k].ell][rep] += std::norm(acc);
    }
  }

  MonteCarloResult res;
  res.replicas = replicas;
  res.mean.assign(ell_max + 1, 0.0);
  res.std_error.assign(ell_max + 1, 0.0);
  for (int l = 0; l <= ell_max; ++l) {
    const double xi = static_cast<double>(multiplicity(l, d));
    double m = 0.0;
    for (double &v : per[l]) {
      v /= xi;
      m += v;
    }
    m /= replicas;
    double var = 0.0;
    for (double v : per[l])
      var += (v - m) * (v - m);
    var /= (replicas - 1);
    res.mean[l] = m;
    res.std_error[l] = std::sqrt(var / replicas);
  }
  return res;
}

} // namespace hsalias
