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

#ifndef PXM_CLUTTER_H_
#define PXM_CLUTTER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pxm/vertex_set.h"

namespace pxm {

// A hypergraph on {1, ..., n} whose edges are nonempty, distinct and
// pairwise incomparable. Edge order is preserved from construction, so edge
// indices are stable and can be quoted by witnesses.
class Clutter {
 public:
  Clutter() = default;

  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(std::size_t i) const { return edges_[i]; }
  VertexSet ground() const { return VertexSet::range(n_); }

  // Index of the edge equal to `e`, or -1.
  int find_edge(VertexSet e) const;

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  friend Clutter make_clutter(int n, std::vector<VertexSet> edges);
  Clutter(int n, std::vector<VertexSet> edges)
      : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// Validates and builds a clutter. Throws Error with kind EdgeOutOfRange,
// EmptyEdge, DuplicateEdge or ComparableEdges. Duplicates are rejected, never
// merged.
Clutter make_clutter(int n, std::vector<VertexSet> edges);
Clutter make_clutter(int n, const std::vector<std::vector<int>>& edges);

// The partial clutter keeping the listed edges (in ascending index order).
Clutter restrict(const Clutter& c, std::span<const std::size_t> keep);

VertexSet isolated_vertices(const Clutter& c);

// Image of `c` under the vertex map v -> perm[v-1].
Clutter relabel(const Clutter& c, std::span<const int> perm);

}  // namespace pxm

#endif  // PXM_CLUTTER_H_
