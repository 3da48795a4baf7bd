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

#include "hsalias/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "hsalias/error.hpp"
#include "json.hpp"

namespace hsalias {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string &text, const char *what) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <typename T> T get_field(const json &j, const char *key, const char *what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    throw ParseError(std::string(what) + ": bad value for '" + key + "': " + e.what());
  }
}

std::string dump(const json &j, int indent) { return j.dump(indent) + "\n"; }

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json index_json(const HarmonicIndex &h) { return json{{"ell", h.ell}, {"m", h.m}}; }

} // namespace

std::string format_index(const HarmonicIndex &idx) {
  std::ostringstream os;
  os << "a_{" << idx.ell;
  for (int v : idx.m)
    os << ',' << v;
  os << '}';
  return os.str();
}

std::string column_label(const std::string &levels) {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i)
      out += ',';
    out += levels[i];
    out += std::to_string(i);
  }
  return out;
}

std::string design_to_json(const SphericalDesign &des, int indent) {
  json j;
  j["d"] = des.d;
  j["Q"] = des.Q;
  j["M"] = des.M;
  json theta = json::array(), w = json::array(), nodes = json::array();
  for (const PolarRule &pr : des.polar) {
    theta.push_back(pr.theta);
    w.push_back(pr.weights);
    nodes.push_back(pr.nodes);
  }
  j["theta"] = theta;
  j["w_theta"] = w;
  j["phi"] = des.azimuth.angles;
  j["w_phi"] = des.azimuth.weight;
  j["nodes"] = nodes;
  return dump(j, indent);
}

SphericalDesign design_from_json(const std::string &text) {
  const char *what = "design";
  json j = parse_or_throw(text, what);
  SphericalDesign des;
  des.d = get_field<int>(j, "d", what);
  des.Q = get_field<std::vector<int>>(j, "Q", what);
  des.M = get_field<int>(j, "M", what);
  if (des.d < 2 || static_cast<int>(des.Q.size()) != des.d - 1 || des.M < 1)
    throw ParseError("design: inconsistent d, Q, M");
  auto theta = get_field<std::vector<std::vector<double>>>(j, "theta", what);
  auto w = get_field<std::vector<std::vector<double>>>(j, "w_theta", what);
  std::vector<std::vector<double>> nodes;
  if (j.contains("nodes"))
    nodes = get_field<std::vector<std::vector<double>>>(j, "nodes", what);
  if (static_cast<int>(theta.size()) != des.d - 1 || w.size() != theta.size() ||
      (!nodes.empty() && nodes.size() != theta.size()))
    throw ParseError("design: per-coordinate arrays must have d-1 entries");
  for (int jj = 1; jj <= des.d - 1; ++jj) {
    PolarRule pr;
    pr.j = jj;
    pr.alpha = 0.5 * (des.d - jj);
    pr.theta = theta[jj - 1];
    pr.weights = w[jj - 1];
    if (static_cast<int>(pr.theta.size()) != des.Q[jj - 1] || pr.weights.size() != pr.theta.size())
      throw ParseError("design: coordinate " + std::to_string(jj) + " has wrong length");
    if (!nodes.empty()) {
      pr.nodes = nodes[jj - 1];
      if (pr.nodes.size() != pr.theta.size())
        throw ParseError("design: node list of coordinate " + std::to_string(jj) +
                         " has wrong length");
    } else {
      for (double th : pr.theta)
        pr.nodes.push_back(std::cos(th));
    }
    des.polar.push_back(std::move(pr));
  }
  des.azimuth.M = des.M;
  des.azimuth.angles = get_field<std::vector<double>>(j, "phi", what);
  des.azimuth.weight = get_field<double>(j, "w_phi", what);
  try {
    check_design_invariants(des);
  } catch (const NumericalError &e) {
    throw ParseError(std::string("design: ") + e.what());
  }
  return des;
}

std::string alias_report_to_json(const AliasReport &rep, int indent) {
  json j;
  j["source"] = index_json(rep.source);
  j["design"] = json{{"d", rep.d}, {"Q", rep.Q}, {"M", rep.M}};
  j["s0_max"] = rep.s0_max;
  j["rule"] = to_string(rep.rule);
  j["zero_tol"] = rep.zero_tol;
  j["self_intensity"] = rep.self_intensity;
  j["truncation"] = json{{"s0_min", -(rep.source.ell / 2)}, {"s0_max", rep.s0_max}};
  json arr = json::array();
  for (const AliasRecord &a : rep.aliases) {
    arr.push_back(json{{"ell", a.target.ell},
                       {"m", a.target.m},
                       {"s0", a.s0},
                       {"s", a.s},
                       {"r", a.r},
                       {"intensity", a.intensity},
                       {"distance", a.distance},
                       {"class", to_string(a.location)},
                       {"levels", a.levels}});
  }
  j["aliases"] = arr;
  return dump(j, indent);
}

AliasReport alias_report_from_json(const std::string &text) {
  const char *what = "alias report";
  json j = parse_or_throw(text, what);
  AliasReport rep;
  json src = get_field<json>(j, "source", what);
  rep.source.ell = get_field<int>(src, "ell", what);
  rep.source.m = get_field<std::vector<int>>(src, "m", what);
  json des = get_field<json>(j, "design", what);
  rep.d = get_field<int>(des, "d", what);
  rep.Q = get_field<std::vector<int>>(des, "Q", what);
  rep.M = get_field<int>(des, "M", what);
  rep.s0_max = get_field<int>(j, "s0_max", what);
  if (j.contains("rule"))
    rep.rule = parse_index_rule(get_field<std::string>(j, "rule", what));
  if (j.contains("zero_tol"))
    rep.zero_tol = get_field<double>(j, "zero_tol", what);
  if (j.contains("self_intensity"))
    rep.self_intensity = get_field<double>(j, "self_intensity", what);
  if (!is_valid_index(rep.source, rep.d))
    throw ParseError("alias report: invalid source index");
  for (const json &a : get_field<json>(j, "aliases", what)) {
    AliasRecord r;
    r.source = rep.source;
    r.target.ell = get_field<int>(a, "ell", what);
    r.target.m = get_field<std::vector<int>>(a, "m", what);
    r.s0 = get_field<int>(a, "s0", what);
    r.s = get_field<std::vector<int>>(a, "s", what);
    r.r = get_field<int>(a, "r", what);
    r.intensity = get_field<double>(a, "intensity", what);
    r.distance = get_field<double>(a, "distance", what);
    r.location = parse_location_class(get_field<std::string>(a, "class", what));
    if (a.contains("levels"))
      r.levels = get_field<std::string>(a, "levels", what);
    if (!is_valid_index(r.target, rep.d))
      throw ParseError("alias report: invalid target index");
    rep.aliases.push_back(std::move(r));
  }
  return rep;
}

std::string alias_report_to_csv(const AliasReport &rep) {
  std::ostringstream os;
  const int d = rep.d;
  os << "ell";
  for (int j = 1; j <= d - 1; ++j)
    os << ",m" << j;
  os << ",s0";
  for (int j = 1; j <= d - 2; ++j)
    os << ",s" << j;
  os << ",r,intensity,distance,class,levels\n";
  for (const AliasRecord &a : rep.aliases) {
    os << a.target.ell;
    for (int v : a.target.m)
      os << ',' << v;
    os << ',' << a.s0;
    for (int v : a.s)
      os << ',' << v;
    os << ',' << a.r << ',' << fmt_double(a.intensity) << ',' << fmt_double(a.distance) << ','
       << to_string(a.location) << ',' << a.levels << '\n';
  }
  return os.str();
}

std::string alias_report_to_coords(const AliasReport &rep) {
  std::ostringstream os;
  os << "ell";
  for (int j = 1; j <= rep.d - 1; ++j)
    os << ",m" << j;
  os << '\n';
  for (const AliasRecord &a : rep.aliases) {
    os << a.target.ell;
    for (int v : a.target.m)
      os << ',' << v;
    os << '\n';
  }
  return os.str();
}

std::string alias_report_to_table(const AliasReport &rep) {
  const int d = rep.d;
  // canonical columns: all-A, then B on a growing prefix, then anything else seen
  std::vector<std::string> cols;
  for (int nb = 0; nb <= d - 1; ++nb)
    cols.push_back(std::string(nb, 'B') + std::string(d - 1 - nb, 'A'));
  for (const AliasRecord &a : rep.aliases)
    if (std::find(cols.begin(), cols.end(), a.levels) == cols.end())
      cols.push_back(a.levels);

  std::map<std::pair<int, std::string>, std::vector<std::string>> cells;
  for (const AliasRecord &a : rep.aliases)
    cells[{a.s0, a.levels}].push_back(format_index(a.target));

  std::ostringstream os;
  os << "# aliases of " << format_index(rep.source) << ": d=" << d << " Q=";
  for (std::size_t i = 0; i < rep.Q.size(); ++i)
    os << (i ? "," : "") << rep.Q[i];
  os << " M=" << rep.M << " rule=" << to_string(rep.rule) << " s0_max=" << rep.s0_max << '\n';
  os << "s0";
  for (const std::string &c : cols)
    os << " | " << column_label(c);
  os << '\n';
  for (int s0 = -(rep.source.ell / 2); s0 <= rep.s0_max; ++s0) {
    bool any = false;
    for (const std::string &c : cols)
      any = any || cells.count({s0, c});
    if (s0 <= 0 && !any)
      continue;
    os << s0;
    for (const std::string &c : cols) {
      auto it = cells.find({s0, c});
      os << " |";
      if (it == cells.end()) {
        os << " -";
      } else {
        for (const std::string &e : it->second)
          os << ' ' << e;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string folding_to_json(const FoldingMatrix &fm, const PowerSpectrum *C,
                            const PowerSpectrum *folded, int indent) {
  json j;
  j["ell_max"] = fm.ell_max;
  j["s0_max"] = fm.s0_max;
  j["design"] = json{{"d", fm.d}, {"Q", fm.Q}, {"M", fm.M}};
  j["rule"] = to_string(fm.rule);
  j["truncation"] = json{{"s0_max", fm.s0_max}, {"ell_target_max", fm.ell_target_max}};
  json rows = json::array();
  for (const FoldingRow &r : fm.rows) {
    json ents = json::array();
    for (const FoldingEntry &e : r.entries)
      ents.push_back(json{{"ell_target", e.ell_target}, {"lambda", e.lambda}});
    rows.push_back(json{{"ell", r.ell}, {"entries", ents}});
  }
  j["rows"] = rows;
  if (C)
    j["C"] = C->values;
  if (folded)
    j["C_folded"] = folded->values;
  return dump(j, indent);
}

FoldingMatrix folding_from_json(const std::string &text) {
  const char *what = "folding matrix";
  json j = parse_or_throw(text, what);
  FoldingMatrix fm;
  fm.ell_max = get_field<int>(j, "ell_max", what);
  fm.s0_max = get_field<int>(j, "s0_max", what);
  if (j.contains("design")) {
    json des = j.at("design");
    fm.d = get_field<int>(des, "d", what);
    fm.Q = get_field<std::vector<int>>(des, "Q", what);
    fm.M = get_field<int>(des, "M", what);
  }
  if (j.contains("rule"))
    fm.rule = parse_index_rule(get_field<std::string>(j, "rule", what));
  if (j.contains("truncation"))
    fm.ell_target_max = get_field<int>(j.at("truncation"), "ell_target_max", what);
  for (const json &r : get_field<json>(j, "rows", what)) {
    FoldingRow row;
    row.ell = get_field<int>(r, "ell", what);
    for (const json &e : get_field<json>(r, "entries", what))
      row.entries.push_back({get_field<int>(e, "ell_target", what), get_field<double>(e, "lambda", what)});
    fm.rows.push_back(std::move(row));
  }
  return fm;
}

std::string folding_to_csv(const FoldingMatrix &fm, const PowerSpectrum *C,
                           const PowerSpectrum *folded) {
  std::ostringstream os;
  os << "ell,ell_target,lambda\n";
  for (const FoldingRow &r : fm.rows)
    for (const FoldingEntry &e : r.entries)
      os << r.ell << ',' << e.ell_target << ',' << fmt_double(e.lambda) << '\n';
  if (folded) {
    os << "\nell,C,C_folded\n";
    for (std::size_t l = 0; l < folded->values.size(); ++l) {
      os << l << ',';
      if (C && l < C->values.size())
        os << fmt_double(C->values[l]);
      os << ',' << fmt_double(folded->values[l]) << '\n';
    }
  }
  return os.str();
}

PowerSpectrum parse_spectrum(const std::string &text) {
  PowerSpectrum C;
  std::size_t p = text.find_first_not_of(" \t\r\n");
  if (p == std::string::npos)
    throw ParseError("spectrum: empty input");
  if (text[p] == '[' || text[p] == '{') {
    json j = parse_or_throw(text, "spectrum");
    try {
      if (j.is_array()) {
        C.values = j.get<std::vector<double>>();
      } else {
        const char *key = j.contains("C") ? "C" : "values";
        C.values = get_field<std::vector<double>>(j, key, "spectrum");
        if (j.contains("band_limit"))
          C.band_limit = get_field<int>(j, "band_limit", "spectrum");
      }
    } catch (const json::exception &e) {
      throw ParseError(std::string("spectrum: ") + e.what());
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos)
        line.resize(hash);
      for (char &c : line)
        if (c == ',' || c == ';')
          c = ' ';
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        std::size_t used = 0;
        double v;
        try {
          v = std::stod(tok, &used);
        } catch (const std::exception &) {
          throw ParseError("spectrum: bad number '" + tok + "'");
        }
        if (used != tok.size())
          throw ParseError("spectrum: bad number '" + tok + "'");
        C.values.push_back(v);
      }
    }
  }
  if (C.values.empty())
    throw ParseError("spectrum: no values");
  for (double v : C.values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ParseError("spectrum: values must be finite and non-negative");
  return C;
}

} // namespace hsalias
