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

#ifndef HSALIAS_ALIASING_HPP
#define HSALIAS_ALIASING_HPP

#include <climits>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hsalias/design.hpp"
#include "hsalias/harmonics.hpp"

namespace hsalias {

// Which index sets drive the enumeration.
//  complete: s_j = 0 is excluded only after a nonzero s_{j-1} in A_{j-1};
//            no ordering constraint between the offsets.
//  literal:  s_j = 0 is excluded whenever s_{j-1} is in A_{j-1}, and the
//            offsets must satisfy s_1 >= ... >= s_{d-2} >= r M.
enum class IndexRule { complete, literal };

enum class LocationClass { primary, secondary };

const char *to_string(IndexRule r);
const char *to_string(LocationClass c);
IndexRule parse_index_rule(const std::string &s);
LocationClass parse_location_class(const std::string &s);

struct IntRange {
  long long lo = 0;
  long long hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(long long v) const { return v >= lo && v <= hi; }
};

// s_j with 0 <= m_j + 2 s_j <= prev_target
IntRange H_range(int m_j, int prev_target);
// r with |m_last + 2 r M| <= prev_target
IntRange R_range(int m_last, int prev_target, int M);
// A_0 / B_0 for level 0 and A_j / B_j for 1 <= level <= d-2. B_j is
// bounded above by H at that level; B_0 is unbounded (hi = LLONG_MAX).
IntRange A_range(const HarmonicIndex &src, const std::vector<int> &Q, int level);
IntRange B_range(const HarmonicIndex &src, const std::vector<int> &Q, int level,
                 int prev_offset);

struct ZTuple {
  std::vector<int> s; // s_1 .. s_{d-2}
  int r = 0;
  auto operator<=>(const ZTuple &) const = default;
  bool operator==(const ZTuple &) const = default;
};

struct AliasIndexSets {
  IndexRule rule = IndexRule::complete;
  int s0 = 0;
  long long D0_lo = 0;
  IntRange A0;
  IntRange B0;
  bool s0_in_A0 = false;
  std::vector<ZTuple> Z; // lexicographic in (s_1, ..., r)
};

AliasIndexSets alias_index_sets(const HarmonicIndex &src, const std::vector<int> &Q, int M,
                                int s0, IndexRule rule = IndexRule::complete);

HarmonicIndex alias_target(const HarmonicIndex &src, int s0, const ZTuple &z, int M);

struct AliasRecord {
  HarmonicIndex source;
  HarmonicIndex target;
  int s0 = 0;
  std::vector<int> s; // s_1 .. s_{d-2}
  int r = 0;
  double intensity = 0.0;
  double distance = 0.0;
  LocationClass location = LocationClass::secondary;
  std::string levels; // 'A' or 'B' for s_0 .. s_{d-2}
};

struct AliasOptions {
  IndexRule rule = IndexRule::complete;
  double zero_tol = 1e-12;
};

struct AliasReport {
  HarmonicIndex source;
  int d = 2;
  std::vector<int> Q;
  int M = 1;
  int s0_max = 0;
  IndexRule rule = IndexRule::complete;
  double zero_tol = 1e-12;
  double self_intensity = 0.0; // tau(src, src)
  std::vector<AliasRecord> aliases;
};

// tau over an explicit point set
std::complex<double> tau_direct(const std::vector<WeightedPoint> &pts, int d,
                                const HarmonicIndex &src, const HarmonicIndex &tgt);
std::complex<double> tau_direct(const SphericalDesign &design, const HarmonicIndex &src,
                                const HarmonicIndex &tgt);

std::complex<double> factor_J(int m_last, int m_last_target, int M);
std::complex<double> factor_J_sum(int m_last, int m_last_target, const AzimuthRule &az);

double factor_I(int j, int m_prev, int m, int m_prev_t, int m_t, const SphericalDesign &design);

// closed form of the exact one-dimensional integral for equal chains
double factor_I_exact(int j, int m_prev, int m, int d);

std::complex<double> tau_separable(const SphericalDesign &design, const HarmonicIndex &src,
                                   const HarmonicIndex &tgt);

// s = (s_1, ..., s_{d-1}) with s_{d-1} the raw last offset (r M)
double eta(const HarmonicIndex &src, int s0, const std::vector<int> &s,
           const SphericalDesign &design);

// Memoised separable evaluation for repeated use on one design.
class SeparableTau {
public:
  explicit SeparableTau(const SphericalDesign &design);
  double eta(const HarmonicIndex &src, const HarmonicIndex &tgt);
  std::complex<double> tau(const HarmonicIndex &src, const HarmonicIndex &tgt);

private:
  double I(int j, int mp, int m, int mpt, int mt);
  const SphericalDesign &des_;
  std::map<std::vector<int>, double> cache_;
};

AliasReport enumerate_aliases(const HarmonicIndex &src, const SphericalDesign &design,
                              int s0_max, const AliasOptions &opt = {});

LocationClass classify_location(const AliasRecord &rec, const std::vector<int> &Q, int M);
std::string location_levels(const HarmonicIndex &src, const std::vector<int> &Q, int s0,
                            const std::vector<int> &s);

double alias_distance(const AliasRecord &rec);

// Targets with |tau| > tol among all indices of degree <= ell_target_max.
std::map<HarmonicIndex, std::complex<double>>
brute_force_aliases(const SphericalDesign &design, const HarmonicIndex &src,
                    int ell_target_max, double tol);

struct OracleComparison {
  std::vector<HarmonicIndex> missing;    // oracle nonzero, not enumerated
  std::vector<HarmonicIndex> unexpected; // enumerated, oracle zero
  std::vector<HarmonicIndex> intensity_mismatch;
  double max_intensity_diff = 0.0;
  std::size_t oracle_count = 0;
  std::size_t enumerated_count = 0;
  bool ok() const { return missing.empty() && unexpected.empty() && intensity_mismatch.empty(); }
};

// Compares an alias report with the brute-force scan restricted to targets of
// degree <= ell + 2 s0_max.
OracleComparison oracle_check(const AliasReport &report, const SphericalDesign &design,
                              double oracle_tol = 1e-8, double intensity_tol = 1e-8);

// Independent two-sphere computation via associated Legendre functions.
std::vector<AliasRecord> aliases_2d(int ell, int m, int Q, int M, int s_max,
                                    double zero_tol = 1e-12);

double legendre_P(int ell, int m, double t); // no Condon-Shortley phase, m >= 0
double zeta_2d(int ell, int m);

} // namespace hsalias

#endif
