// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Definition-level checks that share no code with the recognizers: plain
// permutation search and minors recomputed from the deletion and
// contraction formulas. The census uses them to cross-validate verdicts.

#ifndef PXM_DEFINITION_CHECK_H_
#define PXM_DEFINITION_CHECK_H_

#include <vector>

#include "pxm/vertex_set.h"

namespace pxm::definition {

// Exhaustive search over orderings of {1..n}. A partial ordering is abandoned
// as soon as some edge is split by an unplaced vertex.
bool has_linear_ordering(int n, const std::vector<VertexSet>& edges);
bool has_cyclic_ordering(int n, const std::vector<VertexSet>& edges);

// Edge lists of the single-element minors, relabeled onto {1..n-1}.
std::vector<VertexSet> deletion(int d, const std::vector<VertexSet>& edges,
                                int x);
std::vector<VertexSet> contraction(const std::vector<VertexSet>& edges, int x);

// Non-interval, and every deletion and contraction is interval.
bool is_excluded_minor(int n, int d, const std::vector<VertexSet>& edges);

}  // namespace pxm::definition

#endif  // PXM_DEFINITION_CHECK_H_
