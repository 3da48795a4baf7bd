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

#include "hsalias/reference.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hsalias/design.hpp"
#include "hsalias/error.hpp"
#include "hsalias/serialize.hpp"

namespace hsalias {

namespace {

std::vector<int> parse_int_list(const std::string &s, const std::string &ctx) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      throw ParseError("reference: bad integer '" + tok + "' in " + ctx);
    }
    if (used != tok.size())
      throw ParseError("reference: bad integer '" + tok + "' in " + ctx);
    out.push_back(v);
  }
  if (out.empty())
    throw ParseError("reference: empty list in " + ctx);
  return out;
}

std::string parse_levels(const std::string &label) {
  std::string out;
  std::stringstream ss(label);
  std::string tok;
  int expect = 0;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'B') ||
        tok.substr(1) != std::to_string(expect))
      throw ParseError("reference: bad column label '" + label + "'");
    out += tok[0];
    ++expect;
  }
  return out;
}

HarmonicIndex to_index(const std::vector<int> &v) {
  HarmonicIndex h;
  h.ell = v[0];
  h.m.assign(v.begin() + 1, v.end());
  return h;
}

using Key = std::tuple<int, std::string, HarmonicIndex>;

} // namespace

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::confirmed:
    return "confirmed";
  case Verdict::misplaced:
    return "misplaced";
  case Verdict::spurious:
    return "spurious";
  case Verdict::missing:
    return "missing";
  }
  return "?";
}

std::size_t BlockCheck::discrepancies() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const EntryCheck &c) {
    return c.verdict != Verdict::confirmed;
  }));
}

std::vector<ReferenceBlock> parse_reference(const std::string &text) {
  std::vector<ReferenceBlock> blocks;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head))
      continue;
    const std::string ctx = "line " + std::to_string(lineno);
    if (head == "block") {
      ReferenceBlock b;
      if (!(ls >> b.label))
        throw ParseError("reference: block without label at " + ctx);
      b.source = HarmonicIndex{0, {}};
      bool haveQ = false, haveM = false, haveSrc = false, haveCap = false;
      std::string kv;
      while (ls >> kv) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
          throw ParseError("reference: expected key=value at " + ctx);
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "source") {
          b.source = to_index(parse_int_list(v, ctx));
          haveSrc = true;
        } else if (k == "Q") {
          b.Q = parse_int_list(v, ctx);
          haveQ = true;
        } else if (k == "M") {
          b.M = parse_int_list(v, ctx).at(0);
          haveM = true;
        } else if (k == "caption_M") {
          b.caption_M = parse_int_list(v, ctx).at(0);
          haveCap = true;
        } else if (k == "s0") {
          std::size_t dots = v.find("..");
          if (dots == std::string::npos)
            throw ParseError("reference: s0 range must be lo..hi at " + ctx);
          b.s0_min = parse_int_list(v.substr(0, dots), ctx).at(0);
          b.s0_max = parse_int_list(v.substr(dots + 2), ctx).at(0);
        } else {
          throw ParseError("reference: unknown key '" + k + "' at " + ctx);
        }
      }
      if (!haveQ || !haveM || !haveSrc)
        throw ParseError("reference: block needs source, Q and M at " + ctx);
      if (!haveCap)
        b.caption_M = b.M;
      if (!is_valid_index(b.source, static_cast<int>(b.Q.size()) + 1))
        throw ParseError("reference: invalid source index at " + ctx);
      blocks.push_back(std::move(b));
      continue;
    }
    if (blocks.empty())
      throw ParseError("reference: entry before any block at " + ctx);
    ReferenceBlock &b = blocks.back();
    int s0 = parse_int_list(head, ctx).at(0);
    std::string label;
    if (!(ls >> label))
      throw ParseError("reference: missing column label at " + ctx);
    std::string lv = parse_levels(label);
    std::string tgt;
    while (ls >> tgt) {
      HarmonicIndex h = to_index(parse_int_list(tgt, ctx));
      if (!is_valid_index(h, static_cast<int>(b.Q.size()) + 1))
        throw ParseError("reference: invalid target " + tgt + " at " + ctx);
      b.entries.push_back({s0, lv, h});
    }
  }
  return blocks;
}

std::vector<BlockCheck> compare_reference(const std::vector<ReferenceBlock> &blocks,
                                          IndexRule rule, double oracle_tol) {
  std::vector<BlockCheck> out;
  for (const ReferenceBlock &b : blocks) {
    std::vector<int> Ms{b.M};
    if (b.caption_M != b.M)
      Ms.push_back(b.caption_M);
    const int d = static_cast<int>(b.Q.size()) + 1;
    for (int M : Ms) {
      BlockCheck bc;
      bc.block = b;
      bc.M_used = M;
      bc.rule = rule;
      SphericalDesign des = uniform_design(d, b.Q, M);
      AliasReport rep = enumerate_aliases(b.source, des, b.s0_max, AliasOptions{rule, 1e-12});
      const int lo = b.source.ell + 2 * b.s0_min, hi = b.source.ell + 2 * b.s0_max;
      auto brute = brute_force_aliases(des, b.source, hi, oracle_tol);
      std::map<HarmonicIndex, double> oracle;
      for (const auto &kv : brute)
        if (kv.first.ell >= lo)
          oracle.emplace(kv.first, std::abs(kv.second));

      std::set<Key> enumerated, printed;
      for (const AliasRecord &a : rep.aliases)
        if (a.s0 >= b.s0_min && a.s0 <= b.s0_max && std::fabs(a.intensity) > oracle_tol)
          enumerated.insert({a.s0, a.levels, a.target});
      for (const ReferenceEntry &e : b.entries)
        printed.insert({e.s0, e.levels, e.target});

      std::set<HarmonicIndex> printed_targets;
      for (const ReferenceEntry &e : b.entries) {
        printed_targets.insert(e.target);
        EntryCheck c;
        c.entry = e;
        auto it = oracle.find(e.target);
        std::vector<int> s;
        for (std::size_t j = 0; j + 1 < e.target.m.size(); ++j)
          s.push_back((e.target.m[j] - b.source.m[j]) / 2);
        const int s0_true = (e.target.ell - b.source.ell) / 2;
        c.computed_levels = location_levels(b.source, b.Q, s0_true, s);
        if (it == oracle.end()) {
          c.verdict = Verdict::spurious;
          c.oracle_tau = std::abs(tau_direct(des, b.source, e.target));
        } else {
          c.oracle_tau = it->second;
          c.verdict = (s0_true == e.s0 && c.computed_levels == e.levels) ? Verdict::confirmed
                                                                          : Verdict::misplaced;
        }
        bc.checks.push_back(std::move(c));
      }
      for (const auto &kv : oracle) {
        if (printed_targets.count(kv.first))
          continue;
        EntryCheck c;
        const HarmonicIndex &t = kv.first;
        std::vector<int> s;
        for (std::size_t j = 0; j + 1 < t.m.size(); ++j)
          s.push_back((t.m[j] - b.source.m[j]) / 2);
        c.entry = {(t.ell - b.source.ell) / 2, "", t};
        c.computed_levels = location_levels(b.source, b.Q, c.entry.s0, s);
        c.verdict = Verdict::missing;
        c.oracle_tau = kv.second;
        bc.checks.push_back(std::move(c));
      }
      for (const Key &k : enumerated)
        if (!printed.count(k))
          bc.enumeration_only.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k)});
      for (const Key &k : printed)
        if (!enumerated.count(k))
          bc.printed_only.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k)});
      bc.matches_enumeration = bc.enumeration_only.empty() && bc.printed_only.empty();
      std::set<HarmonicIndex> oracle_targets;
      for (const auto &kv : oracle)
        oracle_targets.insert(kv.first);
      bc.matches_oracle = oracle_targets == printed_targets;
      out.push_back(std::move(bc));
    }
  }
  return out;
}

std::string render_reference_report(const std::vector<BlockCheck> &checks) {
  std::ostringstream os;
  os << std::setprecision(3);
  for (const BlockCheck &bc : checks) {
    const ReferenceBlock &b = bc.block;
    os << "== block " << b.label << ": source " << format_index(b.source) << ", Q=";
    for (std::size_t i = 0; i < b.Q.size(); ++i)
      os << (i ? "," : "") << b.Q[i];
    os << ", header M=" << b.M << ", caption M=" << b.caption_M << ", s0=" << b.s0_min << ".."
       << b.s0_max << '\n';
    os << "   checked with M=" << bc.M_used << ", rule=" << to_string(bc.rule);
    if (b.M != b.caption_M)
      os << "  [header and caption disagree on M]";
    os << '\n';
    std::size_t nconf = 0;
    for (const EntryCheck &c : bc.checks)
      nconf += c.verdict == Verdict::confirmed;
    os << "   printed entries: " << b.entries.size() << ", confirmed: " << nconf
       << ", discrepancies: " << bc.discrepancies() << '\n';
    for (const EntryCheck &c : bc.checks) {
      if (c.verdict == Verdict::confirmed)
        continue;
      os << "   " << std::left << std::setw(10) << to_string(c.verdict) << ' '
         << format_index(c.entry.target) << "  printed at ";
      if (c.verdict == Verdict::missing)
        os << "-";
      else
        os << "s0=" << c.entry.s0 << " [" << column_label(c.entry.levels) << "]";
      os << ", computed s0=" << (c.entry.target.ell - b.source.ell) / 2 << " ["
         << column_label(c.computed_levels) << "], |tau|=" << c.oracle_tau << '\n';
    }
    os << "   printed targets equal oracle set: " << (bc.matches_oracle ? "yes" : "no") << '\n';
    os << "   printed table equals enumeration: " << (bc.matches_enumeration ? "yes" : "no");
    if (!bc.matches_enumeration)
      os << " (" << bc.printed_only.size() << " printed only, " << bc.enumeration_only.size()
         << " enumerated only)";
    os << '\n';
  }
  return os.str();
}

} // namespace hsalias
