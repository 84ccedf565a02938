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

#ifndef PXM_ORDERING_H_
#define PXM_ORDERING_H_

#include <optional>
#include <span>
#include <vector>

#include "pxm/clutter.h"
#include "pxm/vertex_set.h"

namespace pxm {

enum class OrderKind { kLinear, kCyclic };

// order[i] is the vertex placed at position i + 1. Cyclic witnesses are
// normalized to start at vertex 1, read in the direction whose second entry
// is smaller than the last.
struct OrderingWitness {
  OrderKind kind = OrderKind::kLinear;
  std::vector<int> order;

  friend bool operator==(const OrderingWitness&,
                         const OrderingWitness&) = default;
};

// Exact search over vertex orderings. Twin vertices (same edge membership)
// are placed as one block and failed partial placements are memoized, so the
// search is complete.
std::optional<OrderingWitness> find_interval_ordering(const Clutter& c);

// Cyclic recognition via the complement reduction: with vertex x at position
// 1, an edge through x is a cyclic interval iff its complement is a linear
// interval of the remaining positions.
std::optional<OrderingWitness> find_arc_ordering(const Clutter& c);

inline bool is_interval(const Clutter& c) {
  return find_interval_ordering(c).has_value();
}
inline bool is_circular_arc(const Clutter& c) {
  return find_arc_ordering(c).has_value();
}

// Throws LengthMismatch when the order has the wrong length and
// NotAPermutation when it repeats or misses a vertex.
bool verify_witness(const Clutter& c, const OrderingWitness& w);

// True when `s` occupies consecutive positions under `positions`
// (positions[v - 1] is the 0-based slot of v), cyclically if requested.
bool is_interval_under(VertexSet s, std::span<const int> positions, int n,
                       bool cyclic);

// Linear ordering of `universe` in which every set in `sets` (each a subset
// of `universe`) is contiguous. Sets need not form a clutter.
std::optional<std::vector<int>> consecutive_arrangement(
    VertexSet universe, std::span<const VertexSet> sets);

}  // namespace pxm

#endif  // PXM_ORDERING_H_
