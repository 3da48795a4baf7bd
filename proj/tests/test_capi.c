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

/* Exercises the shared library through its C interface only. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hsalias/hsalias.h"

static int failures = 0;

#define EXPECT(cond)                                                                               \
  do {                                                                                             \
    if (!(cond)) {                                                                                 \
      fprintf(stderr, "%s:%d: expectation failed: %s (last error: %s)\n", __FILE__, __LINE__,      \
              #cond, hsa_last_error());                                                            \
      ++failures;                                                                                  \
    }                                                                                              \
  } while (0)

static void test_design(void) {
  int Q[2] = {2, 2};
  hsa_design *des = NULL;
  hsa_design_info info;
  char *js = NULL;
  hsa_design *back = NULL;
  char *js2 = NULL;

  EXPECT(hsa_design_create(3, Q, 2, 1, &des) == HSA_OK);
  EXPECT(hsa_design_get_info(des, &info) == HSA_OK);
  EXPECT(info.N == 8);
  EXPECT(info.d == 3);
  EXPECT(fabs(info.weighted_measure - info.surface_area) <= 1e-12 * info.surface_area);
  EXPECT(info.max_symmetry_gap == 0.0);

  EXPECT(hsa_design_to_json(des, -1, &js) == HSA_OK);
  EXPECT(hsa_design_from_json(js, &back) == HSA_OK);
  EXPECT(hsa_design_to_json(back, -1, &js2) == HSA_OK);
  EXPECT(js && js2 && strcmp(js, js2) == 0);
  hsa_string_free(js);
  hsa_string_free(js2);
  hsa_design_free(back);
  hsa_design_free(des);

  des = NULL;
  EXPECT(hsa_design_create(3, Q, 1, 1, &des) == HSA_ERR_INVALID_ARGUMENT);
  EXPECT(des == NULL);
  EXPECT(strlen(hsa_last_error()) > 0);
  EXPECT(hsa_design_create(3, Q, 2, 0, &des) == HSA_ERR_INVALID_ARGUMENT);
  EXPECT(hsa_design_create(3, NULL, 2, 1, &des) == HSA_ERR_NULL);
  EXPECT(hsa_design_create(3, Q, 2, 1, NULL) == HSA_ERR_NULL);
  EXPECT(hsa_design_from_json("{not json", &des) == HSA_ERR_PARSE);
  EXPECT(strcmp(hsa_status_string(HSA_OK), "ok") == 0);
  hsa_design_free(NULL);
  hsa_string_free(NULL);
}

static void test_aliases(void) {
  int Q[2] = {2, 2};
  int zero[2] = {0, 0};
  int t[2] = {2, 2};
  int bad[2] = {3, 0};
  hsa_design *des = NULL;
  hsa_alias_options opt;
  hsa_alias_report *rep = NULL;
  hsa_alias_record rec;
  hsa_oracle_result res;
  char *text = NULL;
  hsa_alias_report *back = NULL;
  double re = 0, im = 0, re2 = 0, im2 = 0;
  size_t i;

  EXPECT(hsa_design_create(3, Q, 2, 1, &des) == HSA_OK);
  EXPECT(hsa_tau(des, 0, zero, 2, t, HSA_TAU_DIRECT, &re, &im) == HSA_OK);
  EXPECT(hsa_tau(des, 0, zero, 2, t, HSA_TAU_SEPARABLE, &re2, &im2) == HSA_OK);
  EXPECT(fabs(re - re2) <= 1e-12 && fabs(im - im2) <= 1e-12);
  EXPECT(fabs(re) > 0.1);
  EXPECT(hsa_tau(des, 0, zero, 2, bad, HSA_TAU_DIRECT, &re, &im) == HSA_ERR_INVALID_ARGUMENT);

  opt.s0_max = 1;
  opt.rule = HSA_RULE_COMPLETE;
  opt.zero_tol = 0.0;
  EXPECT(hsa_aliases_enumerate(des, 0, zero, &opt, &rep) == HSA_OK);
  EXPECT(hsa_alias_report_size(rep) == 2);
  EXPECT(fabs(hsa_alias_report_self_intensity(rep) - 1.0) <= 1e-14);
  for (i = 0; i < hsa_alias_report_size(rep); ++i) {
    EXPECT(hsa_alias_report_get(rep, i, &rec) == HSA_OK);
    EXPECT(rec.ell == 2);
    EXPECT(rec.m[0] == 2);
    EXPECT(rec.m[1] == (i == 0 ? -2 : 2));
    EXPECT(rec.s0 == 1);
    EXPECT(rec.s[0] == 1);
    EXPECT(rec.primary == 0);
    EXPECT(strcmp(rec.levels, "AA") == 0);
    EXPECT(fabs(rec.distance - 2.0 * sqrt(3.0)) <= 1e-14);
  }
  EXPECT(hsa_alias_report_get(rep, 2, &rec) == HSA_ERR_INVALID_ARGUMENT);

  EXPECT(hsa_alias_oracle_check(rep, des, 1e-8, 1e-8, &res, NULL) == HSA_OK);
  EXPECT(res.ok == 1);
  EXPECT(res.oracle_count == 2);

  EXPECT(hsa_alias_report_format(rep, HSA_FORMAT_JSON, &text) == HSA_OK);
  EXPECT(hsa_alias_report_from_json(text, &back) == HSA_OK);
  EXPECT(hsa_alias_report_size(back) == 2);
  hsa_string_free(text);
  hsa_alias_report_free(back);

  EXPECT(hsa_alias_report_format(rep, HSA_FORMAT_TABLE, &text) == HSA_OK);
  EXPECT(strstr(text, "a_{2,2,-2} a_{2,2,2}") != NULL);
  hsa_string_free(text);
  hsa_alias_report_free(rep);

  EXPECT(hsa_aliases_enumerate(des, 0, bad, &opt, &rep) == HSA_ERR_INVALID_ARGUMENT);
  hsa_design_free(des);
}

static void test_folding(void) {
  int Q[2] = {3, 3};
  hsa_design *des = NULL;
  hsa_folding *fm = NULL;
  double C[4] = {1.0, 0.5, 0.25, 0.125};
  double out[3];
  double lam = -1;
  double *vals = NULL;
  size_t n = 0;
  int band = 0;
  char *text = NULL;
  hsa_folding *back = NULL;

  EXPECT(hsa_design_create(3, Q, 2, 3, &des) == HSA_OK);
  EXPECT(hsa_folding_create(des, 2, 3, 3, HSA_RULE_COMPLETE, &fm) == HSA_OK);
  EXPECT(hsa_folding_lambda(fm, 1, 1, &lam) == HSA_OK);
  EXPECT(fabs(lam - 1.0) <= 1e-12);
  EXPECT(hsa_folding_apply(fm, C, 4, 3, out, 3) == HSA_OK);
  EXPECT(fabs(out[0] - 1.0) <= 1e-12 && fabs(out[2] - 0.25) <= 1e-12);
  EXPECT(hsa_folding_apply(fm, C, 4, 3, out, 2) == HSA_ERR_INVALID_ARGUMENT);
  EXPECT(hsa_folding_format(fm, HSA_FORMAT_JSON, C, 4, out, 3, &text) == HSA_OK);
  EXPECT(hsa_folding_from_json(text, &back) == HSA_OK);
  hsa_string_free(text);
  hsa_folding_free(back);
  hsa_folding_free(fm);
  hsa_design_free(des);

  EXPECT(hsa_spectrum_parse("{\"C\": [1, 2, 3], \"band_limit\": 2}", &vals, &n, &band) == HSA_OK);
  EXPECT(n == 3 && vals[2] == 3.0 && band == 2);
  hsa_doubles_free(vals);
  EXPECT(hsa_spectrum_parse("1 x", &vals, &n, &band) == HSA_ERR_PARSE);
}

static void test_band(void) {
  int Q[2] = {4, 4};
  hsa_design *des = NULL;
  hsa_band_result r;
  hsa_sample_size s;

  EXPECT(hsa_design_create(3, Q, 2, 4, &des) == HSA_OK);
  EXPECT(hsa_verify_band(des, 3, 3, 7, 20, &r) == HSA_OK);
  EXPECT(r.max_coeff_error <= 1e-10);
  EXPECT(r.max_recon_error <= 1e-9);
  hsa_design_free(des);

  EXPECT(hsa_check_sample_size(3, 3, &s) == HSA_OK);
  EXPECT(s.N == 128 && s.bound == 54 && s.satisfied == 1);
  EXPECT(hsa_check_sample_size(0, 3, &s) == HSA_ERR_INVALID_ARGUMENT);
}

static void test_reference(void) {
  const char *good = "block ok source=0,0,0 Q=2,2 M=1 s0=1..1\n1 A0,A1 2,2,-2 2,2,2\n";
  const char *bad = "block bad source=0,0,0 Q=2,2 M=1 s0=1..1\n1 A0,A1 2,2,2\n";
  char *report = NULL;
  int all = -1;
  EXPECT(hsa_reference_compare(good, HSA_RULE_COMPLETE, 1e-8, &report, &all) == HSA_OK);
  EXPECT(all == 1);
  hsa_string_free(report);
  EXPECT(hsa_reference_compare(bad, HSA_RULE_COMPLETE, 1e-8, &report, &all) == HSA_OK);
  EXPECT(all == 0);
  EXPECT(strstr(report, "missing") != NULL);
  hsa_string_free(report);
  EXPECT(hsa_reference_compare("garbage", HSA_RULE_COMPLETE, 1e-8, &report, &all) ==
         HSA_ERR_PARSE);
}

int main(void) {
  test_design();
  test_aliases();
  test_folding();
  test_band();
  test_reference();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
