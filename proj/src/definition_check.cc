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

#include "pxm/definition_check.h"

#include <algorithm>
#include <numeric>

namespace pxm::definition {
namespace {

bool place(int n, const std::vector<VertexSet>& edges, VertexSet placed,
           int count) {
  if (count == n) return true;
  for (int w = 1; w <= n; ++w) {
    if (placed.contains(w)) continue;
    bool ok = true;
    for (VertexSet e : edges) {
      bool open = e.intersects(placed) && !e.subset_of(placed);
      if (open && !e.contains(w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    VertexSet next = placed;
    next.insert(w);
    if (place(n, edges, next, count + 1)) return true;
  }
  return false;
}

// Number of maximal runs of occupied positions around the circle.
int cyclic_runs(const std::vector<bool>& occupied) {
  const int n = static_cast<int>(occupied.size());
  int runs = 0;
  for (int i = 0; i < n; ++i) {
    if (occupied[i] && !occupied[(i + n - 1) % n]) ++runs;
  }
  return runs;
}

VertexSet drop(VertexSet s, int x) {
  VertexSet out;
  for (int v : s.to_vector()) {
    if (v < x) out.insert(v);
    if (v > x) out.insert(v - 1);
  }
  return out;
}

}  // namespace

bool has_linear_ordering(int n, const std::vector<VertexSet>& edges) {
  return place(n, edges, VertexSet(), 0);
}

bool has_cyclic_ordering(int n, const std::vector<VertexSet>& edges) {
  if (n <= 3) return true;
  // Rotations are equivalent, so vertex 1 stays in front.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<bool> occupied(n);
  do {
    bool ok = true;
    for (VertexSet e : edges) {
      for (int i = 0; i < n; ++i) occupied[i] = e.contains(order[i]);
      if (cyclic_runs(occupied) > 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

std::vector<VertexSet> deletion(int d, const std::vector<VertexSet>& edges,
                                int x) {
  std::vector<VertexSet> out;
  for (VertexSet h : edges) {
    if (!h.contains(x) || h.size() > d) out.push_back(drop(h, x));
  }
  return out;
}

std::vector<VertexSet> contraction(const std::vector<VertexSet>& edges, int x) {
  std::vector<VertexSet> out;
  for (VertexSet h : edges) {
    if (h.contains(x)) out.push_back(drop(h, x));
  }
  return out;
}

bool is_excluded_minor(int n, int d, const std::vector<VertexSet>& edges) {
  if (has_linear_ordering(n, edges)) return false;
  for (int x = 1; x <= n; ++x) {
    if (!has_linear_ordering(n - 1, deletion(d, edges, x))) return false;
    if (!has_linear_ordering(n - 1, contraction(edges, x))) return false;
  }
  return true;
}

}  // namespace pxm::definition
