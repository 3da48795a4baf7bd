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

#include "hsalias/hsalias.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numbers>
#include <sstream>
#include <string>

#include "hsalias/aliasing.hpp"
#include "hsalias/design.hpp"
#include "hsalias/error.hpp"
#include "hsalias/reference.hpp"
#include "hsalias/serialize.hpp"
#include "hsalias/spectrum.hpp"

struct hsa_design {
  hsalias::SphericalDesign d;
};

struct hsa_alias_report {
  hsalias::AliasReport r;
};

struct hsa_folding {
  hsalias::FoldingMatrix f;
};

namespace {

thread_local std::string g_last_error;

template <typename F> hsa_status guarded(F &&fn) {
  try {
    fn();
    g_last_error.clear();
    return HSA_OK;
  } catch (const hsalias::InvalidArgument &e) {
    g_last_error = e.what();
    return HSA_ERR_INVALID_ARGUMENT;
  } catch (const hsalias::NumericalError &e) {
    g_last_error = e.what();
    return HSA_ERR_NUMERICAL;
  } catch (const hsalias::ParseError &e) {
    g_last_error = e.what();
    return HSA_ERR_PARSE;
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return HSA_ERR_INTERNAL;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return HSA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HSA_ERR_INTERNAL;
  }
}

hsa_status null_arg(const char *what) {
  g_last_error = std::string("null argument: ") + what;
  return HSA_ERR_NULL;
}

char *copy_string(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p)
    throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hsalias::IndexRule to_rule(hsa_rule r) {
  switch (r) {
  case HSA_RULE_COMPLETE:
    return hsalias::IndexRule::complete;
  case HSA_RULE_LITERAL:
    return hsalias::IndexRule::literal;
  }
  throw hsalias::InvalidArgument("unknown index rule");
}

hsalias::HarmonicIndex make_index(int d, int ell, const int *m) {
  hsalias::HarmonicIndex h;
  h.ell = ell;
  h.m.assign(m, m + (d - 1));
  return h;
}

} // namespace

extern "C" {

const char *hsa_last_error(void) { return g_last_error.c_str(); }

const char *hsa_status_string(hsa_status status) {
  switch (status) {
  case HSA_OK:
    return "ok";
  case HSA_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case HSA_ERR_NUMERICAL:
    return "numerical failure";
  case HSA_ERR_PARSE:
    return "parse error";
  case HSA_ERR_IO:
    return "i/o error";
  case HSA_ERR_INTERNAL:
    return "internal error";
  case HSA_ERR_NULL:
    return "null argument";
  }
  return "unknown status";
}

void hsa_string_free(char *s) { std::free(s); }
void hsa_doubles_free(double *p) { std::free(p); }

hsa_status hsa_design_create(int d, const int *Q, size_t nQ, int M, hsa_design **out) {
  if (!out)
    return null_arg("out");
  *out = nullptr;
  if (!Q && nQ > 0)
    return null_arg("Q");
  return guarded([&] {
    std::vector<int> q(Q, Q + nQ);
    *out = new hsa_design{hsalias::uniform_design(d, q, M)};
  });
}

hsa_status hsa_design_from_json(const char *json, hsa_design **out) {
  if (!out)
    return null_arg("out");
  *out = nullptr;
  if (!json)
    return null_arg("json");
  return guarded([&] { *out = new hsa_design{hsalias::design_from_json(json)}; });
}

hsa_status hsa_design_to_json(const hsa_design *design, int indent, char **out) {
  if (!design || !out)
    return null_arg("design/out");
  *out = nullptr;
  return guarded([&] { *out = copy_string(hsalias::design_to_json(design->d, indent)); });
}

hsa_status hsa_design_get_info(const hsa_design *design, hsa_design_info *info) {
  if (!design || !info)
    return null_arg("design/info");
  return guarded([&] {
    const hsalias::SphericalDesign &d = design->d;
    info->d = d.d;
    info->M = d.M;
    info->N = d.size();
    double total = 0.0;
    for (const hsalias::WeightedPoint &p : hsalias::flatten(d))
      total += p.weight * p.f;
    info->weighted_measure = total;
    info->surface_area = hsalias::sphere_area(d.d);
    double gap = 0.0;
    for (const hsalias::PolarRule &pr : d.polar) {
      const int n = pr.size();
      for (int k = 0; k < n; ++k) {
        gap = std::fmax(gap, std::fabs(pr.theta[k] - (std::numbers::pi - pr.theta[n - 1 - k])));
        gap = std::fmax(gap, std::fabs(pr.weights[k] - pr.weights[n - 1 - k]));
      }
    }
    info->max_symmetry_gap = gap;
  });
}

void hsa_design_free(hsa_design *design) { delete design; }

hsa_status hsa_tau(const hsa_design *design, int ell, const int *m, int ell_t, const int *m_t,
                   hsa_tau_method method, double *re, double *im) {
  if (!design || !m || !m_t || !re || !im)
    return null_arg("design/m/m_t/re/im");
  return guarded([&] {
    const int d = design->d.d;
    hsalias::HarmonicIndex a = make_index(d, ell, m), b = make_index(d, ell_t, m_t);
    std::complex<double> t;
    if (method == HSA_TAU_DIRECT)
      t = hsalias::tau_direct(design->d, a, b);
    else if (method == HSA_TAU_SEPARABLE)
      t = hsalias::tau_separable(design->d, a, b);
    else
      throw hsalias::InvalidArgument("unknown tau method");
    *re = t.real();
    *im = t.imag();
  });
}

hsa_status hsa_aliases_enumerate(const hsa_design *design, int ell, const int *m,
                                 const hsa_alias_options *opt, hsa_alias_report **out) {
  if (!out)
    return null_arg("out");
  *out = nullptr;
  if (!design || !m || !opt)
    return null_arg("design/m/opt");
  return guarded([&] {
    hsalias::AliasOptions o;
    o.rule = to_rule(opt->rule);
    if (opt->zero_tol > 0.0)
      o.zero_tol = opt->zero_tol;
    hsalias::HarmonicIndex src = make_index(design->d.d, ell, m);
    *out = new hsa_alias_report{hsalias::enumerate_aliases(src, design->d, opt->s0_max, o)};
  });
}

hsa_status hsa_alias_report_from_json(const char *json, hsa_alias_report **out) {
  if (!out)
    return null_arg("out");
  *out = nullptr;
  if (!json)
    return null_arg("json");
  return guarded([&] { *out = new hsa_alias_report{hsalias::alias_report_from_json(json)}; });
}

size_t hsa_alias_report_size(const hsa_alias_report *rep) {
  return rep ? rep->r.aliases.size() : 0;
}

double hsa_alias_report_self_intensity(const hsa_alias_report *rep) {
  return rep ? rep->r.self_intensity : 0.0;
}

hsa_status hsa_alias_report_get(const hsa_alias_report *rep, size_t i, hsa_alias_record *rec) {
  if (!rep || !rec)
    return null_arg("report/record");
  if (i >= rep->r.aliases.size()) {
    g_last_error = "alias index out of range";
    return HSA_ERR_INVALID_ARGUMENT;
  }
  const hsalias::AliasRecord &a = rep->r.aliases[i];
  rec->ell = a.target.ell;
  rec->m = a.target.m.data();
  rec->s0 = a.s0;
  rec->s = a.s.data();
  rec->r = a.r;
  rec->intensity = a.intensity;
  rec->distance = a.distance;
  rec->primary = a.location == hsalias::LocationClass::primary ? 1 : 0;
  rec->levels = a.levels.c_str();
  g_last_error.clear();
  return HSA_OK;
}

hsa_status hsa_alias_report_format(const hsa_alias_report *rep, hsa_format fmt, char **out) {
  if (!rep || !out)
    return null_arg("report/out");
  *out = nullptr;
  return guarded([&] {
    switch (fmt) {
    case HSA_FORMAT_JSON:
      *out = copy_string(hsalias::alias_report_to_json(rep->r, 2));
      return;
    case HSA_FORMAT_CSV:
      *out = copy_string(hsalias::alias_report_to_csv(rep->r));
      return;
    case HSA_FORMAT_TABLE:
      *out = copy_string(hsalias::alias_report_to_table(rep->r));
      return;
    case HSA_FORMAT_COORDS:
      *out = copy_string(hsalias::alias_report_to_coords(rep->r));
      return;
    }
    throw hsalias::InvalidArgument("unknown output format");
  });
}

hsa_status hsa_alias_oracle_check(const hsa_alias_report *rep, const hsa_design *design,
                                  double oracle_tol, double intensity_tol,
                                  hsa_oracle_result *res, char **details) {
  if (!rep || !design || !res)
    return null_arg("report/design/result");
  if (details)
    *details = nullptr;
  return guarded([&] {
    if (rep->r.d != design->d.d || rep->r.Q != design->d.Q || rep->r.M != design->d.M)
      throw hsalias::InvalidArgument("oracle check: report and design parameters differ");
    hsalias::OracleComparison c =
        hsalias::oracle_check(rep->r, design->d, oracle_tol, intensity_tol);
    res->oracle_count = c.oracle_count;
    res->enumerated_count = c.enumerated_count;
    res->missing = c.missing.size();
    res->unexpected = c.unexpected.size();
    res->intensity_mismatch = c.intensity_mismatch.size();
    res->max_intensity_diff = c.max_intensity_diff;
    res->ok = c.ok() ? 1 : 0;
    if (details) {
      std::ostringstream os;
      for (const auto &h : c.missing)
        os << "missing " << hsalias::format_index(h) << '\n';
      for (const auto &h : c.unexpected)
        os << "unexpected " << hsalias::format_index(h) << '\n';
      for (const auto &h : c.intensity_mismatch)
        os << "intensity " << hsalias::format_index(h) << '\n';
      *details = copy_string(os.str());
    }
  });
}

void hsa_alias_report_free(hsa_alias_report *rep) { delete rep; }

hsa_status hsa_folding_create(const hsa_design *design, int ell_max, int s0_max,
                              int ell_target_max, hsa_rule rule, hsa_folding **out) {
  if (!out)
    return null_arg("out");
  *out = nullptr;
  if (!design)
    return null_arg("design");
  return guarded([&] {
    *out = new hsa_folding{
        hsalias::lambda_matrix(ell_max, s0_max, design->d, ell_target_max, to_rule(rule))};
  });
}

hsa_status hsa_folding_from_json(const char *json, hsa_folding **out) {
  if (!out)
    return null_arg("out");
  *out = nullptr;
  if (!json)
    return null_arg("json");
  return guarded([&] { *out = new hsa_folding{hsalias::folding_from_json(json)}; });
}

hsa_status hsa_folding_lambda(const hsa_folding *fm, int ell, int ell_target, double *lambda) {
  if (!fm || !lambda)
    return null_arg("folding/lambda");
  return guarded([&] {
    *lambda = 0.0;
    for (const hsalias::FoldingRow &r : fm->f.rows)
      if (r.ell == ell)
        for (const hsalias::FoldingEntry &e : r.entries)
          if (e.ell_target == ell_target)
            *lambda = e.lambda;
  });
}

hsa_status hsa_folding_apply(const hsa_folding *fm, const double *C, size_t n_C, int band_limit,
                             double *out, size_t n_out) {
  if (!fm || !out || (!C && n_C > 0))
    return null_arg("folding/C/out");
  return guarded([&] {
    if (n_out != fm->f.rows.size())
      throw hsalias::InvalidArgument("folding apply: output length must be ell_max + 1");
    hsalias::PowerSpectrum s;
    s.values.assign(C, C + n_C);
    s.band_limit = band_limit;
    hsalias::PowerSpectrum r = hsalias::fold_spectrum(fm->f, s);
    for (size_t i = 0; i < n_out; ++i)
      out[i] = r.values[i];
  });
}

hsa_status hsa_folding_format(const hsa_folding *fm, hsa_format fmt, const double *C,
                              size_t n_C, const double *folded, size_t n_folded, char **out) {
  if (!fm || !out)
    return null_arg("folding/out");
  *out = nullptr;
  return guarded([&] {
    hsalias::PowerSpectrum c, f;
    if (C)
      c.values.assign(C, C + n_C);
    if (folded)
      f.values.assign(folded, folded + n_folded);
    const hsalias::PowerSpectrum *pc = C ? &c : nullptr;
    const hsalias::PowerSpectrum *pf = folded ? &f : nullptr;
    if (fmt == HSA_FORMAT_JSON)
      *out = copy_string(hsalias::folding_to_json(fm->f, pc, pf, 2));
    else if (fmt == HSA_FORMAT_CSV || fmt == HSA_FORMAT_TABLE)
      *out = copy_string(hsalias::folding_to_csv(fm->f, pc, pf));
    else
      throw hsalias::InvalidArgument("unsupported format for folding output");
  });
}

void hsa_folding_free(hsa_folding *fm) { delete fm; }

hsa_status hsa_spectrum_parse(const char *text, double **values, size_t *n, int *band_limit) {
  if (!text || !values || !n)
    return null_arg("text/values/n");
  *values = nullptr;
  *n = 0;
  return guarded([&] {
    hsalias::PowerSpectrum s = hsalias::parse_spectrum(text);
    double *p = static_cast<double *>(std::malloc(s.values.size() * sizeof(double)));
    if (!p)
      throw std::bad_alloc();
    std::memcpy(p, s.values.data(), s.values.size() * sizeof(double));
    *values = p;
    *n = s.values.size();
    if (band_limit)
      *band_limit = s.band_limit;
  });
}

hsa_status hsa_verify_band(const hsa_design *design, int L0, int L, uint64_t seed, int n_points,
                           hsa_band_result *res) {
  if (!design || !res)
    return null_arg("design/result");
  return guarded([&] {
    hsalias::BandReport r = hsalias::verify_band(design->d, L0, L, seed, n_points);
    res->max_coeff_error = r.max_coeff_error;
    res->max_recon_error = r.max_recon_error;
    res->max_prediction_gap = r.max_prediction_gap;
  });
}

hsa_status hsa_check_sample_size(int L0, int d, hsa_sample_size *res) {
  if (!res)
    return null_arg("result");
  return guarded([&] {
    hsalias::SampleSize s = hsalias::check_sample_size(L0, d);
    res->Q = s.Q;
    res->M = s.M;
    res->N = s.N;
    res->bound = s.bound;
    res->satisfied = s.satisfied ? 1 : 0;
  });
}

hsa_status hsa_reference_compare(const char *reference_text, hsa_rule rule, double oracle_tol,
                                 char **report, int *all_match) {
  if (!reference_text || !report || !all_match)
    return null_arg("reference/report/all_match");
  *report = nullptr;
  return guarded([&] {
    auto blocks = hsalias::parse_reference(reference_text);
    auto checks = hsalias::compare_reference(blocks, to_rule(rule),
                                             oracle_tol > 0.0 ? oracle_tol : 1e-8);
    bool ok = true;
    for (const auto &c : checks)
      if (c.M_used == c.block.M)
        ok = ok && c.matches_oracle && c.matches_enumeration && c.discrepancies() == 0;
    *all_match = ok ? 1 : 0;
    *report = copy_string(hsalias::render_reference_report(checks));
  });
}

} // extern "C"
