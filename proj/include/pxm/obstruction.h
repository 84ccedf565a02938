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

#ifndef PXM_OBSTRUCTION_H_
#define PXM_OBSTRUCTION_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pxm/clutter.h"
#include "pxm/vertex_set.h"

namespace pxm {

// The forbidden partial clutters of interval clutters.
//
//   type1  A,B,C: (A∩B)\C, (B∩C)\A, (A∩C)\B all nonempty.
//   type2  A,B,C: A\(B∪C), B\(A∪C), C\(A∪B), A∩B∩C all nonempty.
//   type3  A,B,C,D: (A∩B)\(C∪D), (B∩C)\(D∪A), (C∩D)\(A∪B),
//          (D∩A)\(B∪C), A∩B∩C∩D all nonempty.
//   type4  A,B,C pairwise disjoint, each meeting D.
//   type5  A_1..A_m, m >= 4, an induced cycle of the intersection graph.
//   fan    A∩D, B∩D, C∩D nonempty and A\D, B\D, C\D pairwise disjoint.
//
// Types 2, 3, 4 and fan are also non-CA.
enum class ObstructionKind { kType1, kType2, kType3, kType4, kType5, kFan };

std::string_view obstruction_name(ObstructionKind kind);
// Inverse of obstruction_name; throws ParseError.
ObstructionKind parse_obstruction_kind(std::string_view name);

struct ObstructionWitness {
  ObstructionKind kind = ObstructionKind::kType1;
  // Edge indices in role order (A, B, C[, D]) or cycle order for type5.
  std::vector<std::size_t> edges;

  friend bool operator==(const ObstructionWitness&,
                         const ObstructionWitness&) = default;
};

inline constexpr std::array<ObstructionKind, 5> kObstructionPreference = {
    ObstructionKind::kType1, ObstructionKind::kType2, ObstructionKind::kType4,
    ObstructionKind::kType3, ObstructionKind::kType5};

// First witness in preference order, then lexicographic in edge indices.
// Absent iff the clutter is interval.
std::optional<ObstructionWitness> find_obstruction(const Clutter& c);

// Restricts the search to `kinds`, tried in the given order.
std::optional<ObstructionWitness> find_obstruction(
    const Clutter& c, std::span<const ObstructionKind> kinds);

// Re-checks the defining set conditions. Out-of-range indices, repeated
// edges or a wrong edge count make the witness invalid.
bool verify_obstruction(const Clutter& c, const ObstructionWitness& w);

// Throws NotAClutter when the four sets are not pairwise distinct and
// incomparable.
bool is_fan_obstruction(VertexSet a, VertexSet b, VertexSet c, VertexSet d);

enum class TriangleKind { kNone, kTriangle, kTriangleWithCommonPoint };

std::string_view triangle_name(TriangleKind kind);

// Throws WrongEdgeCount unless c has exactly three edges.
TriangleKind triangle_kind(const Clutter& c);

// True when some role assignment of the three sets gives A∩B∩C nonempty,
// A∩C not inside B and B a proper subset of A∪C.
bool has_common_point_shape(VertexSet a, VertexSet b, VertexSet c);

}  // namespace pxm

#endif  // PXM_OBSTRUCTION_H_
