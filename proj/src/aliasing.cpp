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

#include "hsalias/aliasing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "hsalias/error.hpp"
#include "hsalias/specfun.hpp"

namespace hsalias {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

void require_params(const HarmonicIndex &src, const std::vector<int> &Q, int M) {
  const int d = src.dim();
  require_valid_index(src, d, "aliasing");
  if (static_cast<int>(Q.size()) != d - 1)
    throw InvalidArgument("aliasing: Q must have d-1 entries");
  for (int q : Q)
    if (q < 1)
      throw InvalidArgument("aliasing: every Q_j must be positive");
  if (M < 1)
    throw InvalidArgument("aliasing: M must be positive");
}

} // namespace

const char *to_string(IndexRule r) { return r == IndexRule::complete ? "complete" : "literal"; }

const char *to_string(LocationClass c) {
  return c == LocationClass::primary ? "primary" : "secondary";
}

IndexRule parse_index_rule(const std::string &s) {
  if (s == "complete")
    return IndexRule::complete;
  if (s == "literal")
    return IndexRule::literal;
  throw InvalidArgument("unknown index rule '" + s + "' (expected complete or literal)");
}

LocationClass parse_location_class(const std::string &s) {
  if (s == "primary")
    return LocationClass::primary;
  if (s == "secondary")
    return LocationClass::secondary;
  throw ParseError("unknown location class '" + s + "'");
}

IntRange H_range(int m_j, int prev_target) {
  return {ceil_div(-m_j, 2), floor_div(static_cast<long long>(prev_target) - m_j, 2)};
}

IntRange R_range(int m_last, int prev_target, int M) {
  return {ceil_div(-(static_cast<long long>(prev_target) + m_last), 2LL * M),
          floor_div(static_cast<long long>(prev_target) - m_last, 2LL * M)};
}

IntRange A_range(const HarmonicIndex &src, const std::vector<int> &Q, int level) {
  const int mj = src.order(level);
  return {ceil_div(-mj, 2), static_cast<long long>(Q[level]) - mj - 1};
}

IntRange B_range(const HarmonicIndex &src, const std::vector<int> &Q, int level,
                 int prev_offset) {
  const int mj = src.order(level);
  if (level == 0)
    return {std::max<long long>(Q[0] - mj, ceil_div(-mj, 2)), LLONG_MAX};
  const int prev_t = src.order(level - 1) + 2 * prev_offset;
  IntRange h = H_range(mj, prev_t);
  return {std::max<long long>(static_cast<long long>(Q[level]) - mj, h.lo), h.hi};
}

std::string location_levels(const HarmonicIndex &src, const std::vector<int> &Q, int s0,
                            const std::vector<int> &s) {
  std::string out;
  const int d = src.dim();
  for (int level = 0; level <= d - 2; ++level) {
    int sj = level == 0 ? s0 : s[level - 1];
    out += A_range(src, Q, level).contains(sj) ? 'A' : 'B';
  }
  return out;
}

AliasIndexSets alias_index_sets(const HarmonicIndex &src, const std::vector<int> &Q, int M,
                                int s0, IndexRule rule) {
  require_params(src, Q, M);
  const int d = src.dim();
  AliasIndexSets sets;
  sets.rule = rule;
  sets.s0 = s0;
  sets.D0_lo = ceil_div(-src.ell, 2);
  if (s0 < sets.D0_lo)
    throw InvalidArgument("alias_index_sets: s0 below -ell/2");
  sets.A0 = A_range(src, Q, 0);
  sets.B0 = B_range(src, Q, 0, 0);
  sets.s0_in_A0 = sets.A0.contains(s0);

  ZTuple cur;
  cur.s.assign(d - 2, 0);
  // level j chooses s_j (j <= d-2) or r (j == d-1)
  auto rec = [&](auto &&self, int j, int prev_t, bool prev_in_A, int prev_s) -> void {
    const bool exclude_zero = prev_in_A && (rule == IndexRule::literal || prev_s != 0);
    if (j == d - 1) {
      const int m_last = src.order(d - 1);
      IntRange R = R_range(m_last, prev_t, M);
      for (long long r = R.lo; r <= R.hi; ++r) {
        if (exclude_zero && r == 0)
          continue;
        if (rule == IndexRule::literal && d >= 3 && cur.s[d - 3] < r * M)
          continue;
        cur.r = static_cast<int>(r);
        sets.Z.push_back(cur);
      }
      return;
    }
    const int mj = src.order(j);
    IntRange H = H_range(mj, prev_t);
    for (long long sj = H.lo; sj <= H.hi; ++sj) {
      if (exclude_zero && sj == 0)
        continue;
      if (rule == IndexRule::literal && j >= 2 && cur.s[j - 2] < sj)
        continue;
      cur.s[j - 1] = static_cast<int>(sj);
      const bool in_A = sj <= static_cast<long long>(Q[j]) - mj - 1;
      self(self, j + 1, mj + 2 * static_cast<int>(sj), in_A, static_cast<int>(sj));
    }
  };
  rec(rec, 1, src.ell + 2 * s0, sets.s0_in_A0, s0);
  return sets;
}

HarmonicIndex alias_target(const HarmonicIndex &src, int s0, const ZTuple &z, int M) {
  const int d = src.dim();
  HarmonicIndex t;
  t.ell = src.ell + 2 * s0;
  t.m.resize(d - 1);
  for (int j = 1; j <= d - 2; ++j)
    t.m[j - 1] = src.m[j - 1] + 2 * z.s[j - 1];
  t.m[d - 2] = src.m[d - 2] + 2 * z.r * M;
  return t;
}

std::complex<double> tau_direct(const std::vector<WeightedPoint> &pts, int d,
                                const HarmonicIndex &src, const HarmonicIndex &tgt) {
  require_valid_index(src, d, "tau_direct");
  require_valid_index(tgt, d, "tau_direct");
  std::complex<double> acc = 0.0;
  for (const WeightedPoint &p : pts)
    acc += p.weight * p.f * eval_Y(tgt, p.x, d) * std::conj(eval_Y(src, p.x, d));
  return acc;
}

std::complex<double> tau_direct(const SphericalDesign &design, const HarmonicIndex &src,
                                const HarmonicIndex &tgt) {
  return tau_direct(flatten(design), design.d, src, tgt);
}

std::complex<double> factor_J(int m_last, int m_last_target, int M) {
  if (M < 1)
    throw InvalidArgument("factor_J: M must be positive");
  long long diff = static_cast<long long>(m_last_target) - m_last;
  return (diff % (2LL * M) == 0) ? 2.0 * std::numbers::pi : 0.0;
}

std::complex<double> factor_J_sum(int m_last, int m_last_target, const AzimuthRule &az) {
  std::complex<double> acc = 0.0;
  const double diff = static_cast<double>(m_last_target) - m_last;
  for (double phi : az.angles)
    acc += az.weight * std::complex<double>(std::cos(diff * phi), std::sin(diff * phi));
  return acc;
}

double factor_I(int j, int m_prev, int m, int m_prev_t, int m_t, const SphericalDesign &des) {
  const int d = des.d;
  if (j < 1 || j > d - 1)
    throw InvalidArgument("factor_I: coordinate out of range");
  if (j == d - 1) {
    m = std::abs(m);
    m_t = std::abs(m_t);
  }
  if (m < 0 || m_t < 0 || m_prev < m || m_prev_t < m_t)
    throw InvalidArgument("factor_I: illegal order pair");
  const PolarRule &pr = des.polar[j - 1];
  const double a = 0.5 * (d - j);
  const int expo = m + m_t + d - j;
  double acc = 0.0;
  for (int k = 0; k < pr.size(); ++k) {
    const double t = pr.nodes[k];
    acc += pr.weights[k] * std::pow(pr.sin_at(k), expo) * gegenbauer_raw(m_prev - m, m + a, t) *
           gegenbauer_raw(m_prev_t - m_t, m_t + a, t);
  }
  return acc;
}

double factor_I_exact(int j, int m_prev, int m, int d) {
  if (j < 1 || j > d - 1 || m < 0 || m_prev < m)
    throw InvalidArgument("factor_I_exact: illegal arguments");
  const double a = 0.5 * (d - j);
  double lg = std::log(std::numbers::pi) + (1.0 - 2.0 * (m + a)) * std::numbers::ln2 +
              log_gamma(m_prev + m + d - j + 0.0) - log_gamma(m_prev - m + 1.0) -
              std::log(m_prev + a) - 2.0 * log_gamma(m + a);
  return std::exp(lg);
}

SeparableTau::SeparableTau(const SphericalDesign &design) : des_(design) {}

double SeparableTau::I(int j, int mp, int m, int mpt, int mt) {
  std::vector<int> key{j, mp, m, mpt, mt};
  auto it = cache_.find(key);
  if (it != cache_.end())
    return it->second;
  double v = factor_I(j, mp, m, mpt, mt, des_);
  cache_.emplace(std::move(key), v);
  return v;
}

double SeparableTau::eta(const HarmonicIndex &src, const HarmonicIndex &tgt) {
  const int d = des_.d;
  require_valid_index(src, d, "eta");
  require_valid_index(tgt, d, "eta");
  double prod = 1.0;
  for (int j = 1; j <= d - 1; ++j) {
    const int mp = src.polar_order(j - 1), m = src.polar_order(j);
    const int mpt = tgt.polar_order(j - 1), mt = tgt.polar_order(j);
    // parity annihilation is exact for symmetric rules; skip the sum
    if ((mp + mpt - m - mt) % 2 != 0)
      return 0.0;
    prod *= norm_h(mp, m, j, d) * norm_h(mpt, mt, j, d) * I(j, mp, m, mpt, mt);
    if (prod == 0.0)
      return 0.0;
  }
  return prod;
}

std::complex<double> SeparableTau::tau(const HarmonicIndex &src, const HarmonicIndex &tgt) {
  const int d = des_.d;
  std::complex<double> J = factor_J(src.order(d - 1), tgt.order(d - 1), des_.M);
  if (J == 0.0) {
    require_valid_index(src, d, "tau_separable");
    require_valid_index(tgt, d, "tau_separable");
    return 0.0;
  }
  return eta(src, tgt) * J / (2.0 * std::numbers::pi);
}

std::complex<double> tau_separable(const SphericalDesign &design, const HarmonicIndex &src,
                                   const HarmonicIndex &tgt) {
  SeparableTau st(design);
  return st.tau(src, tgt);
}

double eta(const HarmonicIndex &src, int s0, const std::vector<int> &s,
           const SphericalDesign &design) {
  const int d = design.d;
  if (static_cast<int>(s.size()) != d - 1)
    throw InvalidArgument("eta: offset list must have d-1 entries");
  HarmonicIndex tgt;
  tgt.ell = src.ell + 2 * s0;
  tgt.m.resize(d - 1);
  for (int j = 1; j <= d - 1; ++j)
    tgt.m[j - 1] = src.order(j) + 2 * s[j - 1];
  require_valid_index(tgt, d, "eta target");
  SeparableTau st(design);
  return st.eta(src, tgt);
}

LocationClass classify_location(const AliasRecord &rec, const std::vector<int> &Q, int) {
  std::string lv = location_levels(rec.source, Q, rec.s0, rec.s);
  return lv.find('A') == std::string::npos ? LocationClass::primary : LocationClass::secondary;
}

double alias_distance(const AliasRecord &rec) {
  double acc = 0.0;
  double dl = rec.target.ell - rec.source.ell;
  acc += dl * dl;
  for (std::size_t j = 0; j < rec.source.m.size(); ++j) {
    double dm = rec.target.m[j] - rec.source.m[j];
    acc += dm * dm;
  }
  return std::sqrt(acc);
}

AliasReport enumerate_aliases(const HarmonicIndex &src, const SphericalDesign &design,
                              int s0_max, const AliasOptions &opt) {
  const int d = design.d;
  require_valid_index(src, d, "enumerate_aliases");
  if (s0_max < 0)
    throw InvalidArgument("enumerate_aliases: s0_max must be non-negative");
  AliasReport rep;
  rep.source = src;
  rep.d = d;
  rep.Q = design.Q;
  rep.M = design.M;
  rep.s0_max = s0_max;
  rep.rule = opt.rule;
  rep.zero_tol = opt.zero_tol;
  SeparableTau st(design);
  rep.self_intensity = st.eta(src, src);

  const int s0_lo = static_cast<int>(ceil_div(-src.ell, 2));
  for (int s0 = s0_lo; s0 <= s0_max; ++s0) {
    AliasIndexSets sets = alias_index_sets(src, design.Q, design.M, s0, opt.rule);
    for (const ZTuple &z : sets.Z) {
      HarmonicIndex tgt = alias_target(src, s0, z, design.M);
      if (tgt == src)
        continue;
      double e = st.eta(src, tgt);
      if (!(std::fabs(e) > opt.zero_tol))
        continue;
      AliasRecord rec;
      rec.source = src;
      rec.target = std::move(tgt);
      rec.s0 = s0;
      rec.s = z.s;
      rec.r = z.r;
      rec.intensity = e;
      rec.distance = alias_distance(rec);
      rec.levels = location_levels(src, design.Q, s0, z.s);
      rec.location = classify_location(rec, design.Q, design.M);
      rep.aliases.push_back(std::move(rec));
    }
  }
  return rep;
}

std::map<HarmonicIndex, std::complex<double>>
brute_force_aliases(const SphericalDesign &design, const HarmonicIndex &src,
                    int ell_target_max, double tol) {
  const int d = design.d;
  require_valid_index(src, d, "brute_force_aliases");
  std::vector<WeightedPoint> pts = flatten(design);
  std::vector<std::complex<double>> ws(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    ws[i] = pts[i].weight * pts[i].f * std::conj(eval_Y(src, pts[i].x, d));
  std::map<HarmonicIndex, std::complex<double>> out;
  for (int lp = 0; lp <= ell_target_max; ++lp) {
    for (const HarmonicIndex &t : index_set(lp, d)) {
      if (t == src)
        continue;
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        acc += eval_Y(t, pts[i].x, d) * ws[i];
      if (std::abs(acc) > tol)
        out.emplace(t, acc);
    }
  }
  return out;
}

OracleComparison oracle_check(const AliasReport &rep, const SphericalDesign &design,
                              double oracle_tol, double intensity_tol) {
  OracleComparison cmp;
  auto brute = brute_force_aliases(design, rep.source, rep.source.ell + 2 * rep.s0_max, oracle_tol);
  cmp.oracle_count = brute.size();
  std::set<HarmonicIndex> enumerated;
  for (const AliasRecord &rec : rep.aliases) {
    auto it = brute.find(rec.target);
    if (it != brute.end()) {
      double diff = std::abs(it->second - rec.intensity);
      cmp.max_intensity_diff = std::max(cmp.max_intensity_diff, diff);
      if (diff > intensity_tol)
        cmp.intensity_mismatch.push_back(rec.target);
    }
    if (std::fabs(rec.intensity) > oracle_tol) {
      enumerated.insert(rec.target);
      if (it == brute.end())
        cmp.unexpected.push_back(rec.target);
    }
  }
  cmp.enumerated_count = enumerated.size();
  for (const auto &kv : brute)
    if (!enumerated.count(kv.first))
      cmp.missing.push_back(kv.first);
  return cmp;
}

} // namespace hsalias
