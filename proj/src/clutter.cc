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

#include "pxm/clutter.h"

#include <algorithm>
#include <string>

#include "pxm/error.h"

namespace pxm {

int Clutter::find_edge(VertexSet e) const {
  auto it = std::find(edges_.begin(), edges_.end(), e);
  return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin());
}

Clutter make_clutter(int n, std::vector<VertexSet> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::kGroundSetTooLarge,
                "ground set size must lie in [0, 64], got " +
                    std::to_string(n));
  }
  const VertexSet ground = VertexSet::range(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) {
      throw Error(ErrorKind::kEmptyEdge,
                  "edge " + std::to_string(i) + " is empty");
    }
    if (!edges[i].subset_of(ground)) {
      throw Error(ErrorKind::kEdgeOutOfRange,
                  "edge " + std::to_string(i) + " has a vertex outside 1.." +
                      std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) {
        throw Error(ErrorKind::kDuplicateEdge,
                    "edges " + std::to_string(i) + " and " +
                        std::to_string(j) + " are equal");
      }
      if (edges[i].subset_of(edges[j]) || edges[j].subset_of(edges[i])) {
        throw Error(ErrorKind::kComparableEdges,
                    "edges " + std::to_string(i) + " and " +
                        std::to_string(j) + " are comparable");
      }
    }
  }
  return Clutter(n, std::move(edges));
}

Clutter make_clutter(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet s;
    for (int v : edges[i]) {
      if (v < 1 || v > n) {
        throw Error(ErrorKind::kEdgeOutOfRange,
                    "edge " + std::to_string(i) + " has vertex " +
                        std::to_string(v) + " outside 1.." +
                        std::to_string(n));
      }
      s.insert(v);
    }
    sets.push_back(s);
  }
  return make_clutter(n, std::move(sets));
}

Clutter restrict(const Clutter& c, std::span<const std::size_t> keep) {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexSet> edges;
  edges.reserve(sorted.size());
  for (std::size_t i : sorted) {
    if (i >= c.size()) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "edge index " + std::to_string(i) + " out of range");
    }
    edges.push_back(c.edge(i));
  }
  return make_clutter(c.n(), std::move(edges));
}

VertexSet isolated_vertices(const Clutter& c) {
  VertexSet covered;
  for (VertexSet e : c.edges()) covered |= e;
  return c.ground() - covered;
}

Clutter relabel(const Clutter& c, std::span<const int> perm) {
  std::vector<VertexSet> edges;
  edges.reserve(c.size());
  for (VertexSet e : c.edges()) {
    VertexSet image;
    for (int v : e.to_vector()) image.insert(perm[v - 1]);
    edges.push_back(image);
  }
  return make_clutter(c.n(), std::move(edges));
}

}  // namespace pxm
