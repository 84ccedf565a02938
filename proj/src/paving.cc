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

#include "pxm/paving.h"

#include <cstdint>
#include <string>
#include <vector>

#include "pxm/error.h"
#include "pxm/ordering.h"

namespace pxm {
namespace {

std::string set_string(VertexSet s) {
  std::string out = "{";
  for (int v : s.to_vector()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// Removes x and shifts every larger vertex down by one.
VertexSet collapse(VertexSet s, int x) {
  const std::uint64_t bits = s.bits();
  const std::uint64_t low_mask = (std::uint64_t{1} << (x - 1)) - 1;
  const std::uint64_t high = x >= 64 ? 0 : (bits >> x) << (x - 1);
  return VertexSet((bits & low_mask) | high);
}

void check_vertex(const PavingClutter& p, int x) {
  if (x < 1 || x > p.n()) {
    throw Error(ErrorKind::kVertexOutOfRange,
                "vertex " + std::to_string(x) + " outside 1.." +
                    std::to_string(p.n()));
  }
}

}  // namespace

PavingClutter make_paving(Clutter c, int d) {
  if (d < 2 || d > c.n()) {
    throw Error(ErrorKind::kRankOutOfRange,
                "rank " + std::to_string(d) + " outside 2.." +
                    std::to_string(c.n()));
  }
  for (VertexSet e : c.edges()) {
    if (e.size() < d) {
      throw Error(ErrorKind::kEdgeTooSmall,
                  "edge " + set_string(e) + " has fewer than " +
                      std::to_string(d) + " elements");
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if ((c.edge(i) & c.edge(j)).size() > d - 2) {
        throw Error(ErrorKind::kIntersectionTooLarge,
                    "edges " + set_string(c.edge(i)) + " and " +
                        set_string(c.edge(j)) + " share more than " +
                        std::to_string(d - 2) + " elements");
      }
    }
  }
  return PavingClutter(std::move(c), d, false);
}

EdgeClass edge_class(const PavingClutter& p, VertexSet e) {
  if (p.clutter().find_edge(e) < 0) {
    throw Error(ErrorKind::kNoSuchEdge, set_string(e) + " is not an edge");
  }
  return e.size() == p.rank() ? EdgeClass::kSmall : EdgeClass::kLarge;
}

bool is_coloop(const PavingClutter& p, int x) {
  check_vertex(p, x);
  const Clutter& c = p.clutter();
  if (c.empty()) return c.n() == p.rank();
  return c.size() == 1 && c.edge(0) == c.ground() - VertexSet::singleton(x);
}

bool has_coloop(const PavingClutter& p) {
  for (int x = 1; x <= p.n(); ++x) {
    if (is_coloop(p, x)) return true;
  }
  return false;
}

PavingClutter delete_element(const PavingClutter& p, int x) {
  check_vertex(p, x);
  if (is_coloop(p, x)) {
    throw Error(ErrorKind::kColoopDeletion,
                "element " + std::to_string(x) + " is a coloop");
  }
  std::vector<VertexSet> edges;
  for (VertexSet h : p.clutter().edges()) {
    if (!h.contains(x)) {
      edges.push_back(collapse(h, x));
    } else if (h.size() > p.rank()) {
      edges.push_back(collapse(h, x));
    }
  }
  try {
    return make_paving(make_clutter(p.n() - 1, std::move(edges)), p.rank());
  } catch (const Error& e) {
    throw Error(ErrorKind::kDegenerateMinor,
                "deleting " + std::to_string(x) + ": " + e.what());
  }
}

PavingClutter contract(const PavingClutter& p, int x) {
  check_vertex(p, x);
  std::vector<VertexSet> edges;
  for (VertexSet h : p.clutter().edges()) {
    if (h.contains(x)) edges.push_back(collapse(h, x));
  }
  const int rank = p.rank() - 1;
  if (rank < 2 || p.trivially_interval()) {
    // Edges through x pairwise meet only in x, so the images are disjoint.
    return PavingClutter(make_clutter(p.n() - 1, std::move(edges)), rank,
                         true);
  }
  try {
    return make_paving(make_clutter(p.n() - 1, std::move(edges)), rank);
  } catch (const Error& e) {
    throw Error(ErrorKind::kDegenerateMinor,
                "contracting " + std::to_string(x) + ": " + e.what());
  }
}

PavingClutter relax(const PavingClutter& p, VertexSet e) {
  int index = p.clutter().find_edge(e);
  if (index < 0) {
    throw Error(ErrorKind::kNoSuchEdge, set_string(e) + " is not an edge");
  }
  return relax_index(p, static_cast<std::size_t>(index));
}

PavingClutter relax_index(const PavingClutter& p, std::size_t index) {
  if (index >= p.clutter().size()) {
    throw Error(ErrorKind::kNoSuchEdge,
                "edge index " + std::to_string(index) + " out of range");
  }
  std::vector<VertexSet> edges = p.clutter().edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
  return make_paving(make_clutter(p.n(), std::move(edges)), p.rank());
}

PavingClutter make_trivial_paving(Clutter c, int d) {
  if (d < 0 || d >= 2) {
    throw Error(ErrorKind::kRankOutOfRange,
                "trivially interval rank " + std::to_string(d) +
                    " outside 0..1");
  }
  return PavingClutter(std::move(c), d, true);
}

bool is_interval_positroid(const PavingClutter& p) {
  if (p.trivially_interval() || p.rank() <= 2) return true;
  return is_interval(p.clutter());
}

bool is_positroid(const PavingClutter& p) {
  if (p.trivially_interval() || p.rank() <= 2) return true;
  return is_circular_arc(p.clutter());
}

}  // namespace pxm
