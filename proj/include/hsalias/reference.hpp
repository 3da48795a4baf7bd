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

#ifndef HSALIAS_REFERENCE_HPP
#define HSALIAS_REFERENCE_HPP

#include <string>
#include <vector>

#include "hsalias/aliasing.hpp"

namespace hsalias {

// One printed alias: row s0, column (A/B pattern of s_0..s_{d-2}), target.
struct ReferenceEntry {
  int s0 = 0;
  std::string levels;
  HarmonicIndex target;
};

// A printed alias table block. `M` is the value in the block header and
// `caption_M` the value implied by the caption; they can disagree.
struct ReferenceBlock {
  std::string label;
  HarmonicIndex source;
  std::vector<int> Q;
  int M = 1;
  int caption_M = 1;
  int s0_min = 1;
  int s0_max = 1;
  std::vector<ReferenceEntry> entries;
};

// Text format, one directive per line, '#' starts a comment:
//   block <label> source=0,0,0 Q=2,2 M=1 caption_M=1 s0=1..4
//   <s0> <levels> <ell,m1,...> [<ell,m1,...> ...]
// where <levels> is written like A0,A1 or B0,B1.
std::vector<ReferenceBlock> parse_reference(const std::string &text);

enum class Verdict {
  confirmed,  // printed, oracle nonzero, enumerated in the same column
  misplaced,  // printed, oracle nonzero, enumerated in another column or row
  spurious,   // printed, but the oracle finds tau = 0
  missing     // oracle nonzero in range, not printed
};

const char *to_string(Verdict v);

struct EntryCheck {
  ReferenceEntry entry;       // as printed (levels empty for missing)
  Verdict verdict = Verdict::confirmed;
  double oracle_tau = 0.0;    // |tau| from the brute-force scan
  std::string computed_levels; // column from the index sets
};

struct BlockCheck {
  ReferenceBlock block;
  int M_used = 1;
  IndexRule rule = IndexRule::complete;
  std::vector<EntryCheck> checks;
  // printed (s0, column, target) set equals the enumeration under `rule`
  bool matches_enumeration = false;
  // printed target set equals the oracle's nonzero set (columns ignored)
  bool matches_oracle = false;
  std::vector<ReferenceEntry> enumeration_only; // enumerated, not printed
  std::vector<ReferenceEntry> printed_only;     // printed, not enumerated
  std::size_t discrepancies() const;
};

// Checks every block against the header M and, when it differs, the caption M.
std::vector<BlockCheck> compare_reference(const std::vector<ReferenceBlock> &blocks,
                                          IndexRule rule, double oracle_tol = 1e-8);

std::string render_reference_report(const std::vector<BlockCheck> &checks);

} // namespace hsalias

#endif
