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

// Acceptance checks. Prints one PASS/FAIL line per criterion followed by
// indented diagnostics. `--criterion N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hsalias/aliasing.hpp"
#include "hsalias/design.hpp"
#include "hsalias/harmonics.hpp"
#include "hsalias/quadrature.hpp"
#include "hsalias/reference.hpp"
#include "hsalias/serialize.hpp"
#include "hsalias/spectrum.hpp"

using namespace hsalias;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char *f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string qstr(const std::vector<int> &Q) {
  std::string s;
  for (std::size_t i = 0; i < Q.size(); ++i)
    s += (i ? "," : "") + std::to_string(Q[i]);
  return s;
}

// 1. Gauss-Gegenbauer exactness
Outcome quadrature_exactness() {
  auto t0 = Clock::now();
  double worst = 0.0;
  std::string where;
  int rules = 0;
  for (int d = 2; d <= 5; ++d)
    for (int j = 1; j <= d - 1; ++j)
      for (int r = 1; r <= 32; ++r) {
        double a = 0.5 * (d - j);
        double e = rule_exactness_error(gauss_gegenbauer(r, a), 2 * r - 1);
        ++rules;
        if (e > worst) {
          worst = e;
          where = fmt("d=%d j=%d r=%d", d, j, r);
        }
      }
  double dt = seconds_since(t0);
  Outcome o;
  o.pass = worst <= 1e-12 && dt < 5.0;
  o.summary = fmt("max relative moment error %.3g over %d rules (tol 1e-12), %.2fs (limit 5s)",
                  worst, rules, dt);
  o.notes.push_back("worst case " + where);
  return o;
}

// 2. bit-exact node and weight symmetry
Outcome sampling_symmetry() {
  std::mt19937_64 rng(2);
  int designs = 0;
  long long checked = 0, broken = 0;
  auto check = [&](int d, const std::vector<int> &Q, int M) {
    SphericalDesign des = uniform_design(d, Q, M);
    ++designs;
    for (const PolarRule &p : des.polar) {
      int n = p.size();
      for (int k = 0; k < n; ++k) {
        ++checked;
        if (p.theta[k] != std::numbers::pi - p.theta[n - 1 - k] ||
            p.weights[k] != p.weights[n - 1 - k])
          ++broken;
      }
    }
  };
  for (int d = 2; d <= 3; ++d)
    for (int q = 1; q <= 40; ++q)
      check(d, std::vector<int>(d - 1, q), 1);
  std::uniform_int_distribution<int> qd(1, 24);
  for (int i = 0; i < 200; ++i) {
    int d = 2 + i % 4;
    std::vector<int> Q(d - 1);
    for (int &x : Q)
      x = qd(rng);
    check(d, Q, 1 + i % 5);
  }
  Outcome o;
  o.pass = broken == 0;
  o.summary = fmt("%lld node/weight pairs in %d designs, %lld asymmetric", checked, designs, broken);
  return o;
}

// 3. discrete orthonormality sweep
struct GramStats {
  long long pairs_literal = 0, fail_literal = 0;
  long long pairs_exact = 0, fail_exact = 0;
  double worst_literal = 0.0, worst_exact = 0.0;
  std::string first_failure;
};

GramStats gram_sweep(int d, const std::vector<int> &Q, int M) {
  GramStats st;
  SphericalDesign des = uniform_design(d, Q, M);
  SeparableTau tau(des);
  const int lmax = 2 * Q[0];
  const int qmin = *std::min_element(Q.begin(), Q.end());
  // only pairs sharing the parity of every order and the last order mod 2M
  // can be nonzero; the others vanish through the azimuth or parity factor
  std::map<std::vector<int>, std::vector<HarmonicIndex>> groups;
  long long total = 0;
  for (int l = 0; l <= lmax; ++l)
    for (HarmonicIndex &h : index_set(l, d)) {
      std::vector<int> key;
      for (int j = 0; j < d - 1; ++j)
        key.push_back(((h.order(j) % 2) + 2) % 2);
      key.push_back(((h.m.back() % (2 * M)) + 2 * M) % (2 * M));
      groups[key].push_back(std::move(h));
      ++total;
    }
  for (auto &[key, hs] : groups)
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = a; b < hs.size(); ++b) {
        int ls = hs[a].ell + hs[b].ell;
        if (ls > lmax)
          continue;
        double dev = std::abs(tau.tau(hs[a], hs[b]) - (a == b ? 1.0 : 0.0));
        ++st.pairs_literal;
        st.worst_literal = std::max(st.worst_literal, dev);
        if (dev > 1e-10) {
          ++st.fail_literal;
          if (st.first_failure.empty())
            st.first_failure = fmt("d=%d Q=%s M=%d: %s x %s deviates by %.3g", d, qstr(Q).c_str(),
                                   M, to_string(hs[a]).c_str(), to_string(hs[b]).c_str(), dev);
        }
        if (ls <= 2 * qmin - 1 && ls < 2 * M) {
          ++st.pairs_exact;
          st.worst_exact = std::max(st.worst_exact, dev);
          if (dev > 1e-10)
            ++st.fail_exact;
        }
      }
  return st;
}

Outcome orthonormality() {
  auto t0 = Clock::now();
  std::vector<std::tuple<int, std::vector<int>, int>> jobs;
  for (int q0 = 1; q0 <= 8; ++q0)
    for (int M = 1; M <= 8; ++M) {
      jobs.push_back({2, {q0}, M});
      for (int q1 = 1; q1 <= 8; ++q1)
        jobs.push_back({3, {q0, q1}, M});
    }
  int d4 = 0;
  for (int q0 = 1; q0 <= 4; ++q0)
    for (int q1 = 1; q1 <= 4; ++q1)
      for (int q2 = 1; q2 <= 4; ++q2)
        for (int M = 1; M <= 8; M *= 2) {
          jobs.push_back({4, {q0, q1, q2}, M});
          ++d4;
        }
  std::vector<std::future<GramStats>> fut;
  const unsigned width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<GramStats> res(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += width) {
    fut.clear();
    for (std::size_t i = start; i < std::min(jobs.size(), start + width); ++i)
      fut.push_back(std::async(std::launch::async, [&jobs, i] {
        auto &[d, Q, M] = jobs[i];
        return gram_sweep(d, Q, M);
      }));
    for (std::size_t i = 0; i < fut.size(); ++i)
      res[start + i] = fut[i].get();
  }
  GramStats all;
  std::map<int, std::pair<long long, long long>> by_d;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const GramStats &s = res[i];
    all.pairs_literal += s.pairs_literal;
    all.fail_literal += s.fail_literal;
    all.pairs_exact += s.pairs_exact;
    all.fail_exact += s.fail_exact;
    all.worst_literal = std::max(all.worst_literal, s.worst_literal);
    all.worst_exact = std::max(all.worst_exact, s.worst_exact);
    if (all.first_failure.empty())
      all.first_failure = s.first_failure;
    auto &bd = by_d[std::get<0>(jobs[i])];
    bd.first += s.pairs_literal;
    bd.second += s.fail_literal;
  }
  double dt = seconds_since(t0);
  Outcome o;
  o.pass = all.fail_literal == 0 && dt < 30.0;
  o.summary = fmt("l+l' <= 2Q_0: %lld of %lld Gram entries deviate > 1e-10 (max %.3g), %.1fs (limit 30s)",
                  all.fail_literal, all.pairs_literal, all.worst_literal, dt);
  for (auto &[d, c] : by_d)
    o.notes.push_back(fmt("d=%d: %lld failing of %lld", d, c.second, c.first));
  o.notes.push_back(fmt("swept %zu designs: d=2,3 with Q_j <= 8, M <= 8; d=4 with Q_j <= 4, M in {1,2,4,8} (%d designs)",
                        jobs.size(), d4));
  if (!all.first_failure.empty())
    o.notes.push_back("first failure: " + all.first_failure);
  o.notes.push_back(fmt("within the rule's exactness (l+l' <= 2 min Q_j - 1 and l+l' < 2M): "
                        "%lld of %lld deviate (max %.3g)",
                        all.fail_exact, all.pairs_exact, all.worst_exact));
  return o;
}

// 4. separable against direct tau
Outcome factorization() {
  double worst = 0.0;
  long long pairs = 0;
  auto run = [&](const SphericalDesign &des, const std::vector<HarmonicIndex> &a,
                 const std::vector<HarmonicIndex> &b, bool all_pairs) {
    auto pts = flatten(des);
    if (all_pairs) {
      for (const auto &s : a)
        for (const auto &t : b) {
          worst = std::max(worst, std::abs(tau_separable(des, s, t) - tau_direct(pts, des.d, s, t)));
          ++pairs;
        }
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst,
                         std::abs(tau_separable(des, a[i], b[i]) - tau_direct(pts, des.d, a[i], b[i])));
        ++pairs;
      }
    }
  };
  for (int d = 2; d <= 3; ++d) {
    std::vector<HarmonicIndex> idx;
    for (int l = 0; l <= 6; ++l)
      for (auto &h : index_set(l, d))
        idx.push_back(h);
    std::vector<std::pair<std::vector<int>, int>> designs =
        d == 2 ? std::vector<std::pair<std::vector<int>, int>>{{{1}, 1}, {{3}, 2}, {{5}, 4}, {{7}, 3}}
               : std::vector<std::pair<std::vector<int>, int>>{{{2, 2}, 1}, {{4, 3}, 2}, {{3, 5}, 3}};
    for (auto &[Q, M] : designs)
      run(uniform_design(d, Q, M), idx, idx, true);
  }
  std::mt19937_64 rng(4);
  std::vector<HarmonicIndex> a, b;
  auto random_index = [&](int d) {
    int l = std::uniform_int_distribution<int>(0, 6)(rng);
    auto set = index_set(l, d);
    return set[std::uniform_int_distribution<std::size_t>(0, set.size() - 1)(rng)];
  };
  for (int i = 0; i < 200; ++i) {
    a.push_back(random_index(4));
    b.push_back(random_index(4));
  }
  run(uniform_design(4, {3, 3, 2}, 2), a, b, false);
  Outcome o;
  o.pass = worst <= 1e-10;
  o.summary = fmt("max |tau_separable - tau_direct| = %.3g over %lld pairs (tol 1e-10)", worst, pairs);
  o.notes.push_back("exhaustive l,l' <= 6 on 4 designs (d=2) and 3 designs (d=3); 200 random pairs on d=4");
  return o;
}

// 5 and 11 share the enumerations
struct EnumRun {
  std::vector<int> Q;
  int M;
  HarmonicIndex src;
  AliasReport rep;
};

std::vector<EnumRun> &oracle_runs() {
  static std::vector<EnumRun> runs;
  if (runs.empty())
    for (auto Q : {std::vector<int>{2, 2}, std::vector<int>{4, 4}})
      for (int M : {1, 2, 4}) {
        SphericalDesign des = uniform_design(3, Q, M);
        for (int l = 0; l <= 2; ++l)
          for (const auto &src : index_set(l, 3))
            runs.push_back({Q, M, src, enumerate_aliases(src, des, (10 - l) / 2)});
      }
  return runs;
}

Outcome oracle_equivalence() {
  auto t0 = Clock::now();
  auto &runs = oracle_runs();
  long long missing = 0, unexpected = 0, mismatch = 0, oracle_total = 0;
  double worst = 0.0;
  std::vector<std::string> notes;
  for (const EnumRun &r : runs) {
    SphericalDesign des = uniform_design(3, r.Q, r.M);
    auto brute = brute_force_aliases(des, r.src, 10, 1e-8);
    std::map<HarmonicIndex, double> enumerated;
    for (const auto &a : r.rep.aliases)
      if (std::abs(a.intensity) > 1e-8)
        enumerated[a.target] = a.intensity;
    oracle_total += static_cast<long long>(brute.size());
    for (const auto &[t, tau] : brute) {
      auto it = enumerated.find(t);
      if (it == enumerated.end()) {
        ++missing;
        if (notes.size() < 5)
          notes.push_back(fmt("missing %s for src %s, Q=%s M=%d", to_string(t).c_str(),
                              to_string(r.src).c_str(), qstr(r.Q).c_str(), r.M));
        continue;
      }
      double diff = std::abs(tau - it->second);
      worst = std::max(worst, diff);
      if (diff > 1e-8)
        ++mismatch;
    }
    for (const auto &[t, eta] : enumerated)
      if (!brute.count(t)) {
        ++unexpected;
        if (notes.size() < 5)
          notes.push_back(fmt("unexpected %s for src %s", to_string(t).c_str(), to_string(r.src).c_str()));
      }
  }
  double dt = seconds_since(t0);
  Outcome o;
  o.pass = missing == 0 && unexpected == 0 && mismatch == 0 && dt < 60.0;
  o.summary = fmt("%zu sources x designs, %lld nonzero targets: %lld missing, %lld unexpected, "
                  "%lld intensity mismatches (max diff %.3g), %.1fs (limit 60s)",
                  runs.size(), oracle_total, missing, unexpected, mismatch, worst, dt);
  o.notes = notes;
  o.notes.push_back("targets with l' <= 10, |tau| > 1e-8; index sets use the complete rule");
  // the literal reading of the index sets, for the record
  long long lit_missing = 0;
  for (const EnumRun &r : runs) {
    SphericalDesign des = uniform_design(3, r.Q, r.M);
    AliasReport lit = enumerate_aliases(r.src, des, (10 - r.src.ell) / 2, AliasOptions{IndexRule::literal});
    lit_missing += static_cast<long long>(oracle_check(lit, des).missing.size());
  }
  o.notes.push_back(fmt("literal index-set reading: %lld oracle targets missing", lit_missing));
  return o;
}

// 6. printed tables
std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome table_reproduction() {
  auto blocks = parse_reference(read_file(std::string(HSA_TEST_DATA_DIR) + "/printed_tables.txt"));
  auto checks = compare_reference(blocks, IndexRule::complete);
  Outcome o;
  const BlockCheck &first = checks.at(0);
  o.pass = first.matches_enumeration;
  o.summary = fmt("Q=2, M=1 block for a_{0,0,0}, s0=1..4: %s (%zu printed only, %zu computed only)",
                  first.matches_enumeration ? "reproduced exactly" : "differs from the printed table",
                  first.printed_only.size(), first.enumeration_only.size());
  std::istringstream rep(render_reference_report(checks));
  std::string line;
  while (std::getline(rep, line))
    o.notes.push_back(line);
  SphericalDesign des = uniform_design(3, {2, 2}, 1);
  std::istringstream tab(alias_report_to_table(enumerate_aliases({0, {0, 0}}, des, 4)));
  o.notes.push_back("computed table:");
  while (std::getline(tab, line))
    o.notes.push_back("  " + line);
  auto lit = compare_reference(blocks, IndexRule::literal);
  o.notes.push_back(fmt("literal index-set reading: Q=2, M=1 block %s",
                        lit.at(0).matches_enumeration ? "matches" : "also differs"));
  return o;
}

// 7. band-limited exactness
Outcome band_exactness() {
  auto t0 = Clock::now();
  SphericalDesign des = uniform_design(3, {4, 4}, 4);
  double coeff = 0.0, recon = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    BandReport r = verify_band(des, 3, 3, seed, 100);
    coeff = std::max(coeff, r.max_coeff_error);
    recon = std::max(recon, r.max_recon_error);
  }
  double dt = seconds_since(t0);
  Outcome o;
  o.pass = coeff <= 1e-10 && recon <= 1e-9 && dt < 10.0;
  o.summary = fmt("d=3 L0=3 Q=4,4 M=4, 10 seeds: max |a~ - a| = %.3g (tol 1e-10), "
                  "reconstruction %.3g at 100 points (tol 1e-9), %.2fs (limit 10s)",
                  coeff, recon, dt);
  return o;
}

// 8. unit folding rows for band-limited spectra
Outcome unit_rows() {
  double worst_off = 0.0, worst_diag = 0.0;
  int rows = 0;
  for (int d = 2; d <= 4; ++d)
    for (int PL = 1; PL <= (d == 4 ? 3 : 5); ++PL)
      for (int extra = 1; extra <= 2; ++extra) {
        int Q = PL + extra;
        SphericalDesign des = uniform_design(d, std::vector<int>(d - 1, Q), Q);
        FoldingMatrix fm = lambda_matrix(PL, PL, des, PL);
        for (const auto &row : fm.rows) {
          ++rows;
          for (const auto &e : row.entries) {
            if (e.ell_target == row.ell)
              worst_diag = std::max(worst_diag, std::abs(e.lambda - 1.0));
            else
              worst_off = std::max(worst_off, std::abs(e.lambda));
          }
        }
      }
  Outcome o;
  o.pass = worst_off <= 1e-12 && worst_diag <= 1e-12;
  o.summary = fmt("%d rows (d=2..4, Q=M=P_L+1, P_L+2, targets <= P_L): max off-diagonal %.3g, "
                  "max |diagonal - 1| %.3g (tol 1e-12)",
                  rows, worst_off, worst_diag);
  return o;
}

// 9. Monte Carlo folded spectrum
Outcome monte_carlo() {
  auto t0 = Clock::now();
  SphericalDesign des = uniform_design(3, {2, 2}, 1);
  PowerSpectrum C{{1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4}, 6};
  PowerSpectrum pred = fold_spectrum(lambda_matrix(2, 3, des, 6), C);
  MonteCarloResult mc = monte_carlo_spectrum(C, des, 2, 2000, 20240901);
  double dt = seconds_since(t0);
  Outcome o;
  o.pass = dt < 60.0;
  double worst = 0.0;
  for (int l = 0; l <= 2; ++l) {
    double z = std::abs(mc.mean[l] - pred.values[l]) / mc.std_error[l];
    worst = std::max(worst, z);
    if (z > 3.0)
      o.pass = false;
    o.notes.push_back(fmt("l=%d: predicted %.6f, empirical %.6f +- %.6f (%.2f SE)", l, pred.values[l],
                          mc.mean[l], mc.std_error[l], z));
  }
  o.summary = fmt("2000 replicas, d=3 Q=2,2 M=1, C supported on l <= 6: worst %.2f standard errors "
                  "(limit 3), %.1fs (limit 60s)",
                  worst, dt);
  return o;
}

// 10. two-sphere formula
Outcome two_sphere() {
  std::mt19937_64 rng(10);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int agree = 0;
  double worst = 0.0;
  std::vector<std::string> notes;
  for (int i = 0; i < 20; ++i) {
    int l = uni(0, 8), m = uni(-l, l), Q = uni(1, 6), M = uni(1, 6), smax = uni(1, 6);
    auto two = aliases_2d(l, m, Q, M, smax);
    auto gen = enumerate_aliases({l, {m}}, uniform_design(2, {Q}, M), smax).aliases;
    bool same = two.size() == gen.size();
    for (std::size_t k = 0; same && k < two.size(); ++k) {
      same = two[k].target == gen[k].target;
      double diff = std::abs(two[k].intensity - gen[k].intensity);
      worst = std::max(worst, diff);
      same = same && diff <= 1e-10;
    }
    if (same)
      ++agree;
    else
      notes.push_back(fmt("differs: l=%d m=%d Q=%d M=%d s_max=%d", l, m, Q, M, smax));
  }
  Outcome o;
  o.pass = agree == 20;
  o.summary = fmt("%d of 20 random (l, m, Q, M) agree, max intensity diff %.3g", agree, worst);
  o.notes = notes;
  return o;
}

// 11. distances
Outcome distances() {
  auto &runs = oracle_runs();
  long long total = 0, small = 0;
  double dmin = 1e300;
  std::vector<std::string> notes;
  for (const EnumRun &r : runs)
    for (const auto &a : r.rep.aliases) {
      ++total;
      dmin = std::min(dmin, a.distance);
      if (a.distance <= 2.0) {
        ++small;
        if (notes.size() < 4)
          notes.push_back(fmt("distance %.3g: %s -> %s (Q=%s M=%d, s0=%d s1=%d r=%d)", a.distance,
                              to_string(a.source).c_str(), to_string(a.target).c_str(),
                              qstr(r.Q).c_str(), r.M, a.s0, a.s[0], a.r));
      }
    }
  Outcome o;
  o.pass = small == 0;
  o.summary = fmt("%lld of %lld enumerated aliases at distance <= 2 (min %.3g)", small, total, dmin);
  o.notes = notes;
  // informational: the 2Q bound under non-increasing Q and M > Q_0
  for (auto Q : {std::vector<int>{2, 2}, std::vector<int>{3, 2}, std::vector<int>{4, 4}}) {
    int M = Q[0] + 1;
    SphericalDesign des = uniform_design(3, Q, M);
    double lo = 1e300;
    long long below = 0, n = 0;
    for (int l = 0; l <= 2; ++l)
      for (const auto &src : index_set(l, 3))
        for (const auto &a : enumerate_aliases(src, des, 4).aliases) {
          ++n;
          lo = std::min(lo, a.distance);
          if (a.distance < 2.0 * Q[0])
            ++below;
        }
    o.notes.push_back(fmt("bound D >= 2Q (informational), Q=%s M=%d: min distance %.3g vs 2Q_0 = %d; "
                          "%lld of %lld below 2Q_0",
                          qstr(Q).c_str(), M, lo, 2 * Q[0], below, n));
  }
  return o;
}

struct Criterion {
  int id;
  const char *name;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
  std::vector<Criterion> all = {
      {1, "quadrature exactness", quadrature_exactness},
      {2, "sampling symmetry", sampling_symmetry},
      {3, "discrete orthonormality", orthonormality},
      {4, "factorization oracle", factorization},
      {5, "alias enumeration vs brute force", oracle_equivalence},
      {6, "table reproduction", table_reproduction},
      {7, "band-limited exactness", band_exactness},
      {8, "band-limited folding rows", unit_rows},
      {9, "Monte Carlo folded spectrum", monte_carlo},
      {10, "two-sphere cross-check", two_sphere},
      {11, "alias distances", distances},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  int failed = 0;
  for (const Criterion &c : all) {
    if (only && c.id != only)
      continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str());
    for (const auto &n : o.notes)
      std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass)
      ++failed;
  }
  return failed ? 1 : 0;
}
