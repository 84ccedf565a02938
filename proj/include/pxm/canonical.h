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

#ifndef PXM_CANONICAL_H_
#define PXM_CANONICAL_H_

#include <compare>
#include <cstddef>
#include <vector>

#include "pxm/clutter.h"
#include "pxm/vertex_set.h"

namespace pxm {

// Relabeling-invariant token: the edge list of the canonically labeled
// clutter, in canonical edge order. Equal keys <=> isomorphic clutters.
struct CanonicalKey {
  int n = 0;
  std::vector<VertexSet> edges;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  CanonicalKey key;
  // Original edge indices in canonical order.
  std::vector<std::size_t> edge_order;
  // vertex_map[v - 1] is the canonical label of original vertex v.
  std::vector<int> vertex_map;
  // Original edge indices that begin some optimal edge ordering. These are
  // exactly the automorphism orbit of edge_order.front().
  std::vector<std::size_t> first_edges;
};

// The canonical labeling maximizes, over all edge orderings, the sequence of
// cell/edge intersection counts produced by refining the vertex partition one
// edge at a time. Branch and bound prunes every ordering whose prefix falls
// below the incumbent.
CanonicalForm canonical_form(const Clutter& c);
CanonicalKey canonical_key(const Clutter& c);
Clutter canonical_clutter(const Clutter& c);

inline bool isomorphic(const Clutter& a, const Clutter& b) {
  return a.n() == b.n() && a.size() == b.size() &&
         canonical_key(a) == canonical_key(b);
}

}  // namespace pxm

#endif  // PXM_CANONICAL_H_
