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

// hsalias command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
// 3 internal/numerical failure.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsalias/hsalias.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Failure {
  int code;
  std::string message;
};

void check(hsa_status st, const char *what) {
  if (st == HSA_OK)
    return;
  int code = (st == HSA_ERR_NUMERICAL || st == HSA_ERR_INTERNAL) ? kExitInternal : kExitUsage;
  throw Failure{code, std::string(what) + ": " + hsa_status_string(st) + ": " + hsa_last_error()};
}

struct CString {
  char *p = nullptr;
  ~CString() { hsa_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct DesignHandle {
  hsa_design *p = nullptr;
  ~DesignHandle() { hsa_design_free(p); }
};

struct ReportHandle {
  hsa_alias_report *p = nullptr;
  ~ReportHandle() { hsa_alias_report_free(p); }
};

struct FoldingHandle {
  hsa_folding *p = nullptr;
  ~FoldingHandle() { hsa_folding_free(p); }
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{kExitUsage, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to stdout, or to `path` via a temporary file and rename.
void emit(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Failure{kExitUsage, "cannot write '" + tmp + "'"};
    out << text;
    if (!out)
      throw Failure{kExitUsage, "write failed for '" + tmp + "'"};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw Failure{kExitUsage, "cannot rename to '" + path + "': " + ec.message()};
}

struct DesignArgs {
  int d = 0;
  std::vector<int> Q;
  int M = 0;
};

void add_design_options(CLI::App *cmd, DesignArgs &a, bool required = true) {
  auto *od = cmd->add_option("--d", a.d, "sphere dimension (>= 2)");
  auto *oq = cmd->add_option("--Q", a.Q, "polar node counts Q_0,...,Q_{d-2}")->delimiter(',');
  auto *om = cmd->add_option("--M", a.M, "azimuth half-count (2M angles)");
  if (required) {
    od->required();
    oq->required();
    om->required();
  }
}

void make_design(const DesignArgs &a, DesignHandle &h) {
  if (static_cast<int>(a.Q.size()) != a.d - 1)
    throw Failure{kExitUsage, "--Q needs d-1 = " + std::to_string(a.d - 1) + " entries"};
  check(hsa_design_create(a.d, a.Q.data(), a.Q.size(), a.M, &h.p), "design");
}

hsa_rule parse_rule(const std::string &s) {
  return s == "literal" ? HSA_RULE_LITERAL : HSA_RULE_COMPLETE;
}

std::vector<int> require_orders(const std::vector<int> &m, int d, const char *flag) {
  if (static_cast<int>(m.size()) != d - 1)
    throw Failure{kExitUsage, std::string(flag) + " needs d-1 = " + std::to_string(d - 1) +
                                  " entries"};
  return m;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Replaces `--config FILE` with the file's key=value pairs as `--key=value`
// flags. Keys already given on the command line win.
std::vector<std::string> expand_config(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> out;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw Failure{kExitUsage, "--config needs a file"};
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty())
    return out;
  auto given = [&](const std::string &key) {
    for (const std::string &a : out)
      if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0)
        return true;
    return false;
  };
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    auto trim = [](std::string t) {
      const char *ws = " \t\r";
      t.erase(0, t.find_first_not_of(ws));
      t.erase(t.find_last_not_of(ws) + 1);
      return t;
    };
    line = trim(line);
    if (line.empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Failure{kExitUsage, path + ":" + std::to_string(lineno) + ": expected key=value"};
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0)
      key.erase(0, 2);
    if (key.empty())
      throw Failure{kExitUsage, path + ":" + std::to_string(lineno) + ": empty key"};
    if (given(key))
      continue;
    if (value == "true")
      out.push_back("--" + key);
    else if (value != "false")
      out.push_back("--" + key + "=" + value);
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Aliasing analysis for Gauss-Gegenbauer sampling on S^d", "hsalias"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "output file (default stdout)");

  // design
  DesignArgs des_a;
  std::string des_format = "json";
  auto *c_design = app.add_subcommand("design", "build and serialise a uniform design");
  add_design_options(c_design, des_a);
  c_design->add_option("--format", des_format, "json")->check(CLI::IsMember({"json"}));
  c_design->add_option("--out", out_path, "output file");

  // tau
  DesignArgs tau_a;
  int tau_ell = 0, tau_ell_t = 0;
  std::vector<int> tau_m, tau_m_t;
  std::string tau_method = "both";
  auto *c_tau = app.add_subcommand("tau", "evaluate the aliasing function for one pair");
  add_design_options(c_tau, tau_a);
  c_tau->add_option("--ell", tau_ell, "source degree")->required();
  c_tau->add_option("--m", tau_m, "source orders m_1,...,m_{d-1}")->delimiter(',')->required();
  c_tau->add_option("--ell-t", tau_ell_t, "target degree")->required();
  c_tau->add_option("--m-t", tau_m_t, "target orders")->delimiter(',')->required();
  c_tau->add_option("--method", tau_method, "direct | separable | both")
      ->check(CLI::IsMember({"direct", "separable", "both"}));
  c_tau->add_option("--out", out_path, "output file");

  // aliases
  DesignArgs al_a;
  int al_ell = 0, al_s0_max = 4;
  std::vector<int> al_m;
  std::string al_format = "json", al_rule = "complete";
  double al_tol = 1e-12, al_oracle_tol = 1e-8;
  bool al_oracle = false;
  auto *c_al = app.add_subcommand("aliases", "enumerate the aliases of one coefficient");
  add_design_options(c_al, al_a);
  c_al->add_option("--ell", al_ell, "source degree")->required();
  c_al->add_option("--m", al_m, "source orders m_1,...,m_{d-1}")->delimiter(',')->required();
  c_al->add_option("--s0-max", al_s0_max, "largest s_0 enumerated")->check(CLI::NonNegativeNumber);
  c_al->add_option("--format", al_format, "json | csv | table | coords")
      ->check(CLI::IsMember({"json", "csv", "table", "coords"}));
  c_al->add_option("--rule", al_rule, "complete | literal")
      ->check(CLI::IsMember({"complete", "literal"}));
  c_al->add_option("--tol", al_tol, "intensity threshold below which an alias is dropped")
      ->check(CLI::PositiveNumber);
  c_al->add_option("--oracle-tol", al_oracle_tol, "|tau| threshold for the brute-force scan")
      ->check(CLI::PositiveNumber);
  c_al->add_flag("--oracle", al_oracle, "cross-check against a brute-force tau scan");
  c_al->add_option("--out", out_path, "output file");

  // fold
  DesignArgs fo_a;
  int fo_ell_max = 4, fo_s0_max = 4, fo_ell_target_max = -1;
  std::string fo_spectrum, fo_format = "json", fo_rule = "complete";
  auto *c_fold = app.add_subcommand("fold", "power-spectrum folding matrix");
  add_design_options(c_fold, fo_a);
  c_fold->add_option("--ell-max", fo_ell_max, "largest source degree")->check(CLI::NonNegativeNumber);
  c_fold->add_option("--s0-max", fo_s0_max, "largest s_0")->check(CLI::NonNegativeNumber);
  c_fold->add_option("--ell-target-max", fo_ell_target_max, "cap on ell + 2 s_0 (-1: none)");
  c_fold->add_option("--spectrum", fo_spectrum, "spectrum file (JSON or numbers)");
  c_fold->add_option("--format", fo_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  c_fold->add_option("--rule", fo_rule, "complete | literal")
      ->check(CLI::IsMember({"complete", "literal"}));
  c_fold->add_option("--out", out_path, "output file");

  // verify
  DesignArgs ve_a;
  int ve_L0 = -1, ve_L = -1, ve_points = 100;
  std::uint64_t ve_seed = 1;
  double ve_tol = 1e-10, ve_tol_rec = 1e-9;
  bool ve_check_n = false;
  auto *c_verify = app.add_subcommand("verify", "band-limited exactness check");
  add_design_options(c_verify, ve_a, false);
  c_verify->add_option("--L0", ve_L0, "field bandwidth")->required();
  c_verify->add_option("--L", ve_L, "reconstruction bandwidth (default L0)");
  c_verify->add_option("--seed", ve_seed, "random seed");
  c_verify->add_option("--points", ve_points, "random evaluation points")
      ->check(CLI::NonNegativeNumber);
  c_verify->add_option("--tol", ve_tol, "tolerance on max |a~ - a|");
  c_verify->add_option("--tol-recon", ve_tol_rec, "tolerance on the reconstruction error");
  c_verify->add_flag("--check-N", ve_check_n, "only report the sample-size bound");
  c_verify->add_option("--out", out_path, "output file");

  // compare
  std::string cmp_ref, cmp_rule = "complete";
  double cmp_tol = 1e-8;
  auto *c_cmp = app.add_subcommand("compare", "diff printed alias tables against the oracle");
  c_cmp->add_option("--reference", cmp_ref, "reference table file")->required();
  c_cmp->add_option("--rule", cmp_rule, "complete | literal")
      ->check(CLI::IsMember({"complete", "literal"}));
  c_cmp->add_option("--oracle-tol", cmp_tol, "|tau| threshold")->check(CLI::PositiveNumber);
  c_cmp->add_option("--out", out_path, "output file");

  app.footer("--config FILE reads flat key=value pairs mirroring the flags of the subcommand.");

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_design->parsed()) {
      DesignHandle h;
      make_design(des_a, h);
      CString js;
      check(hsa_design_to_json(h.p, 2, &js.p), "design");
      hsa_design_info info{};
      check(hsa_design_get_info(h.p, &info), "design");
      emit(out_path, js.str());
      std::cerr << "N = " << info.N << ", weighted measure = " << fmt(info.weighted_measure)
                << ", surface area = " << fmt(info.surface_area) << ", relative gap = "
                << fmt(std::abs(info.weighted_measure - info.surface_area) / info.surface_area)
                << ", symmetry gap = " << fmt(info.max_symmetry_gap) << '\n';
      return kExitOk;
    }

    if (c_tau->parsed()) {
      DesignHandle h;
      make_design(tau_a, h);
      auto m = require_orders(tau_m, tau_a.d, "--m");
      auto mt = require_orders(tau_m_t, tau_a.d, "--m-t");
      std::ostringstream os;
      os.precision(17);
      if (tau_method != "separable") {
        double re, im;
        check(hsa_tau(h.p, tau_ell, m.data(), tau_ell_t, mt.data(), HSA_TAU_DIRECT, &re, &im),
              "tau");
        os << "direct " << re << ' ' << im << '\n';
      }
      if (tau_method != "direct") {
        double re, im;
        check(hsa_tau(h.p, tau_ell, m.data(), tau_ell_t, mt.data(), HSA_TAU_SEPARABLE, &re, &im),
              "tau");
        os << "separable " << re << ' ' << im << '\n';
      }
      emit(out_path, os.str());
      return kExitOk;
    }

    if (c_al->parsed()) {
      DesignHandle h;
      make_design(al_a, h);
      auto m = require_orders(al_m, al_a.d, "--m");
      hsa_alias_options opt{al_s0_max, parse_rule(al_rule), al_tol};
      ReportHandle rep;
      check(hsa_aliases_enumerate(h.p, al_ell, m.data(), &opt, &rep.p), "aliases");
      hsa_format f = al_format == "csv"      ? HSA_FORMAT_CSV
                     : al_format == "table"  ? HSA_FORMAT_TABLE
                     : al_format == "coords" ? HSA_FORMAT_COORDS
                                             : HSA_FORMAT_JSON;
      CString text;
      check(hsa_alias_report_format(rep.p, f, &text.p), "aliases");
      emit(out_path, text.str());
      if (al_oracle) {
        hsa_oracle_result res{};
        CString details;
        check(hsa_alias_oracle_check(rep.p, h.p, al_oracle_tol, al_oracle_tol, &res, &details.p),
              "oracle");
        std::cerr << "oracle: " << res.oracle_count << " nonzero targets, "
                  << res.enumerated_count << " enumerated, " << res.missing << " missing, "
                  << res.unexpected << " unexpected, " << res.intensity_mismatch
                  << " intensity mismatches (max diff " << fmt(res.max_intensity_diff) << ")\n"
                  << details.str();
        return res.ok ? kExitOk : kExitVerify;
      }
      return kExitOk;
    }

    if (c_fold->parsed()) {
      DesignHandle h;
      make_design(fo_a, h);
      FoldingHandle fm;
      check(hsa_folding_create(h.p, fo_ell_max, fo_s0_max, fo_ell_target_max, parse_rule(fo_rule),
                               &fm.p),
            "fold");
      hsa_format f = fo_format == "csv" ? HSA_FORMAT_CSV : HSA_FORMAT_JSON;
      CString text;
      if (!fo_spectrum.empty()) {
        std::string raw = read_file(fo_spectrum);
        double *vals = nullptr;
        size_t n = 0;
        int band = -1;
        check(hsa_spectrum_parse(raw.c_str(), &vals, &n, &band), "spectrum");
        std::unique_ptr<double, void (*)(double *)> guard(vals, hsa_doubles_free);
        std::vector<double> folded(fo_ell_max + 1);
        check(hsa_folding_apply(fm.p, vals, n, band, folded.data(), folded.size()), "fold");
        check(hsa_folding_format(fm.p, f, vals, n, folded.data(), folded.size(), &text.p),
              "fold");
      } else {
        check(hsa_folding_format(fm.p, f, nullptr, 0, nullptr, 0, &text.p), "fold");
      }
      emit(out_path, text.str());
      return kExitOk;
    }

    if (c_verify->parsed()) {
      if (ve_check_n) {
        if (ve_a.d < 2)
          throw Failure{kExitUsage, "--check-N needs --d"};
        hsa_sample_size s{};
        check(hsa_check_sample_size(ve_L0, ve_a.d, &s), "sample size");
        std::ostringstream os;
        os << "L0 = " << ve_L0 << ", d = " << ve_a.d << ": Q = " << s.Q << ", M = " << s.M
           << ", N = " << s.N << (s.satisfied ? " >= " : " < ") << s.bound << " = 2 L0^d\n";
        emit(out_path, os.str());
        return s.satisfied ? kExitOk : kExitVerify;
      }
      if (ve_a.d < 2 || ve_a.Q.empty() || ve_a.M < 1)
        throw Failure{kExitUsage, "verify needs --d, --Q and --M"};
      DesignHandle h;
      make_design(ve_a, h);
      const int L = ve_L < 0 ? ve_L0 : ve_L;
      hsa_band_result r{};
      check(hsa_verify_band(h.p, ve_L0, L, ve_seed, ve_points, &r), "verify");
      const bool ok = r.max_coeff_error <= ve_tol && r.max_recon_error <= ve_tol_rec;
      std::ostringstream os;
      os << "max |a~ - a| = " << fmt(r.max_coeff_error) << " (tol " << fmt(ve_tol) << ")\n"
         << "max reconstruction error = " << fmt(r.max_recon_error) << " at " << ve_points
         << " points, L = " << L << " (tol " << fmt(ve_tol_rec) << ")\n"
         << "max |a~ - sum tau a| = " << fmt(r.max_prediction_gap) << '\n'
         << (ok ? "PASS" : "FAIL") << '\n';
      emit(out_path, os.str());
      return ok ? kExitOk : kExitVerify;
    }

    if (c_cmp->parsed()) {
      std::string ref = read_file(cmp_ref);
      CString report;
      int all = 0;
      check(hsa_reference_compare(ref.c_str(), parse_rule(cmp_rule), cmp_tol, &report.p, &all),
            "compare");
      emit(out_path, report.str());
      return all ? kExitOk : kExitVerify;
    }
  } catch (const Failure &f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
