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

#ifndef HSALIAS_SRC_GOLUB_WELSCH_HPP
#define HSALIAS_SRC_GOLUB_WELSCH_HPP

#include <vector>

namespace hsalias::detail {

// Eigen-decomposition of the symmetric Jacobi matrix of the Gegenbauer weight.
// Nodes come back polished and symmetrised; weights (if requested) are the
// squared first eigenvector components, symmetrised and scaled to sum to 1.
void golub_welsch(int n, double alpha, std::vector<double> &nodes,
                  std::vector<double> *weights);

} // namespace hsalias::detail

#endif
