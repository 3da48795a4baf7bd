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

#ifndef HSALIAS_H
#define HSALIAS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HSA_BUILDING_LIBRARY)
#define HSA_API __declspec(dllexport)
#else
#define HSA_API __declspec(dllimport)
#endif
#else
#define HSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hsa_status {
  HSA_OK = 0,
  HSA_ERR_INVALID_ARGUMENT = 1,
  HSA_ERR_NUMERICAL = 2,
  HSA_ERR_PARSE = 3,
  HSA_ERR_IO = 4,
  HSA_ERR_INTERNAL = 5,
  HSA_ERR_NULL = 6
} hsa_status;

typedef enum hsa_format {
  HSA_FORMAT_JSON = 0,
  HSA_FORMAT_CSV = 1,
  HSA_FORMAT_TABLE = 2,
  HSA_FORMAT_COORDS = 3
} hsa_format;

typedef enum hsa_rule { HSA_RULE_COMPLETE = 0, HSA_RULE_LITERAL = 1 } hsa_rule;

typedef enum hsa_tau_method { HSA_TAU_DIRECT = 0, HSA_TAU_SEPARABLE = 1 } hsa_tau_method;

typedef struct hsa_design hsa_design;
typedef struct hsa_alias_report hsa_alias_report;
typedef struct hsa_folding hsa_folding;

/* Message of the last failed call on this thread ("" if none). */
HSA_API const char *hsa_last_error(void);
HSA_API const char *hsa_status_string(hsa_status status);

/* Strings and arrays returned through out-parameters are owned by the caller. */
HSA_API void hsa_string_free(char *s);
HSA_API void hsa_doubles_free(double *p);

/* ---- designs ---- */

typedef struct hsa_design_info {
  int d;
  int M;
  size_t N;
  double weighted_measure; /* sum_i w_i f(theta_i) */
  double surface_area;     /* |S^d| */
  double max_symmetry_gap; /* 0 when the design is exactly symmetric */
} hsa_design_info;

HSA_API hsa_status hsa_design_create(int d, const int *Q, size_t nQ, int M, hsa_design **out);
HSA_API hsa_status hsa_design_from_json(const char *json, hsa_design **out);
HSA_API hsa_status hsa_design_to_json(const hsa_design *design, int indent, char **out);
HSA_API hsa_status hsa_design_get_info(const hsa_design *design, hsa_design_info *info);
HSA_API void hsa_design_free(hsa_design *design);

/* ---- aliasing ---- */

/* m and m_t hold d-1 orders each. */
HSA_API hsa_status hsa_tau(const hsa_design *design, int ell, const int *m, int ell_t,
                           const int *m_t, hsa_tau_method method, double *re, double *im);

typedef struct hsa_alias_options {
  int s0_max;
  hsa_rule rule;
  double zero_tol; /* <= 0 selects 1e-12 */
} hsa_alias_options;

typedef struct hsa_alias_record {
  int ell;
  const int *m;  /* d-1 entries, owned by the report */
  int s0;
  const int *s;  /* d-2 entries, owned by the report */
  int r;
  double intensity;
  double distance;
  int primary;   /* 1 primary, 0 secondary */
  const char *levels;
} hsa_alias_record;

HSA_API hsa_status hsa_aliases_enumerate(const hsa_design *design, int ell, const int *m,
                                         const hsa_alias_options *opt, hsa_alias_report **out);
HSA_API hsa_status hsa_alias_report_from_json(const char *json, hsa_alias_report **out);
HSA_API size_t hsa_alias_report_size(const hsa_alias_report *rep);
HSA_API double hsa_alias_report_self_intensity(const hsa_alias_report *rep);
HSA_API hsa_status hsa_alias_report_get(const hsa_alias_report *rep, size_t i,
                                        hsa_alias_record *rec);
HSA_API hsa_status hsa_alias_report_format(const hsa_alias_report *rep, hsa_format fmt,
                                           char **out);

typedef struct hsa_oracle_result {
  size_t oracle_count;
  size_t enumerated_count;
  size_t missing;
  size_t unexpected;
  size_t intensity_mismatch;
  double max_intensity_diff;
  int ok;
} hsa_oracle_result;

/* Brute-force tau scan over all targets of degree <= ell + 2 s0_max.
   `details` (optional) receives a text listing of the mismatches. */
HSA_API hsa_status hsa_alias_oracle_check(const hsa_alias_report *rep, const hsa_design *design,
                                          double oracle_tol, double intensity_tol,
                                          hsa_oracle_result *res, char **details);
HSA_API void hsa_alias_report_free(hsa_alias_report *rep);

/* ---- spectrum folding ---- */

/* ell_target_max < 0: no cap beyond s0_max. */
HSA_API hsa_status hsa_folding_create(const hsa_design *design, int ell_max, int s0_max,
                                      int ell_target_max, hsa_rule rule, hsa_folding **out);
HSA_API hsa_status hsa_folding_from_json(const char *json, hsa_folding **out);
HSA_API hsa_status hsa_folding_lambda(const hsa_folding *fm, int ell, int ell_target,
                                      double *lambda);
/* C has n_C values; out receives ell_max + 1 values. band_limit < 0: none. */
HSA_API hsa_status hsa_folding_apply(const hsa_folding *fm, const double *C, size_t n_C,
                                     int band_limit, double *out, size_t n_out);
/* C and folded may be NULL; when given they are echoed in the output. */
HSA_API hsa_status hsa_folding_format(const hsa_folding *fm, hsa_format fmt, const double *C,
                                      size_t n_C, const double *folded, size_t n_folded,
                                      char **out);
HSA_API void hsa_folding_free(hsa_folding *fm);

HSA_API hsa_status hsa_spectrum_parse(const char *text, double **values, size_t *n,
                                      int *band_limit);

/* ---- band-limited verification ---- */

typedef struct hsa_band_result {
  double max_coeff_error;
  double max_recon_error;
  double max_prediction_gap;
} hsa_band_result;

HSA_API hsa_status hsa_verify_band(const hsa_design *design, int L0, int L, uint64_t seed,
                                   int n_points, hsa_band_result *res);

typedef struct hsa_sample_size {
  int Q;
  int M;
  long long N;
  long long bound;
  int satisfied;
} hsa_sample_size;

HSA_API hsa_status hsa_check_sample_size(int L0, int d, hsa_sample_size *res);

/* ---- printed table comparison ---- */

/* `all_match` is set to 1 iff every block agrees with the oracle and the
   enumeration under its header parameters. */
HSA_API hsa_status hsa_reference_compare(const char *reference_text, hsa_rule rule,
                                         double oracle_tol, char **report, int *all_match);

#ifdef __cplusplus
}
#endif

#endif
