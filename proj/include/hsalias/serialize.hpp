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

#ifndef HSALIAS_SERIALIZE_HPP
#define HSALIAS_SERIALIZE_HPP

#include <string>

#include "hsalias/aliasing.hpp"
#include "hsalias/design.hpp"
#include "hsalias/spectrum.hpp"

namespace hsalias {

std::string design_to_json(const SphericalDesign &design, int indent = -1);
SphericalDesign design_from_json(const std::string &text);

std::string alias_report_to_json(const AliasReport &report, int indent = -1);
AliasReport alias_report_from_json(const std::string &text);
std::string alias_report_to_csv(const AliasReport &report);
// rows grouped by s0, columns by the A/B membership of (s_0, ..., s_{d-2})
std::string alias_report_to_table(const AliasReport &report);
// ell', m'_1, ..., m'_{d-1} per alias
std::string alias_report_to_coords(const AliasReport &report);

std::string folding_to_json(const FoldingMatrix &fm, const PowerSpectrum *C = nullptr,
                            const PowerSpectrum *folded = nullptr, int indent = -1);
FoldingMatrix folding_from_json(const std::string &text);
std::string folding_to_csv(const FoldingMatrix &fm, const PowerSpectrum *C = nullptr,
                           const PowerSpectrum *folded = nullptr);

// Accepts a JSON array, an object with "C" or "values" (and optional
// "band_limit"), or whitespace/comma separated numbers with '#' comments.
PowerSpectrum parse_spectrum(const std::string &text);

std::string format_index(const HarmonicIndex &idx); // a_{ell,m1,...}
std::string column_label(const std::string &levels); // "AB" -> "A0,B1"

} // namespace hsalias

#endif
