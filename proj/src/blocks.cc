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

#include "pxm/blocks.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "pxm/error.h"

namespace pxm {
namespace {

// The arc an added edge occupies in the cycle of nonempty blocks.
struct Arc {
  std::size_t start = 0;  // position of the first block met
  std::size_t end = 0;    // position of the last block met
};

struct BlockCycle {
  BlockDecomposition decomposition;
  // Nonempty blocks in cyclic order.
  std::vector<VertexSet> blocks;
};

BlockCycle make_block_cycle(const Clutter& base) {
  BlockCycle bc{block_decomposition(base), {}};
  for (VertexSet t : bc.decomposition.blocks) {
    if (!t.empty()) bc.blocks.push_back(t);
  }
  return bc;
}

// The nonempty blocks met by b must form a cyclic interval whose interior
// blocks lie inside b. When b meets every block, the arc runs from one
// partial block around to the partial block just before it.
std::optional<Arc> arc_of(const std::vector<VertexSet>& blocks, VertexSet b) {
  const std::size_t k = blocks.size();
  std::vector<bool> meets(k);
  std::size_t count = 0;
  for (std::size_t q = 0; q < k; ++q) {
    meets[q] = blocks[q].intersects(b);
    count += meets[q];
  }
  if (count == 0) return std::nullopt;
  Arc arc;
  if (count == k) {
    std::vector<std::size_t> partial;
    for (std::size_t q = 0; q < k; ++q) {
      if (!blocks[q].subset_of(b)) partial.push_back(q);
    }
    if (partial.size() != 2) return std::nullopt;
    if ((partial[0] + 1) % k == partial[1]) {
      arc = Arc{partial[1], partial[0]};
    } else if ((partial[1] + 1) % k == partial[0]) {
      arc = Arc{partial[0], partial[1]};
    } else {
      return std::nullopt;
    }
    return arc;
  }
  std::size_t starts = 0;
  for (std::size_t q = 0; q < k; ++q) {
    if (meets[q] && !meets[(q + k - 1) % k]) {
      ++starts;
      arc.start = q;
    }
  }
  if (starts != 1) return std::nullopt;
  arc.end = (arc.start + count - 1) % k;
  for (std::size_t step = 1; step + 1 < count; ++step) {
    if (!blocks[(arc.start + step) % k].subset_of(b)) return std::nullopt;
  }
  return arc;
}

void require_clutter(const Clutter& base, std::span<const VertexSet> added,
                     ErrorKind kind) {
  std::vector<VertexSet> edges = base.edges();
  edges.insert(edges.end(), added.begin(), added.end());
  try {
    make_clutter(base.n(), std::move(edges));
  } catch (const Error& e) {
    throw Error(kind, std::string("added edges do not form a clutter: ") +
                          e.what());
  }
}

std::optional<Placement> placement_of(const BlockCycle& bc,
                                      const Clutter& base, VertexSet b) {
  const BlockDecomposition& bd = bc.decomposition;
  const std::size_t m = bd.num_edges();
  std::optional<Placement> found;
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet lo = base.edge(bd.cycle[i]);
    VertexSet hi = base.edge(bd.cycle[(i + 1) % m]);
    if (bd.junction(i).subset_of(b) && b.subset_of(lo | hi)) {
      if (found) {
        found->ambiguous = true;
      } else {
        found = Placement{i, bd.cycle[i], bd.cycle[(i + 1) % m], false};
      }
    }
  }
  if (!found || !arc_of(bc.blocks, b)) return std::nullopt;
  return found;
}

// Conflict test inside one block between the traces of two arcs.
bool block_conflict(const BlockCycle& bc, std::size_t q, VertexSet b1,
                    const Arc& a1, VertexSet b2, const Arc& a2) {
  const VertexSet t = bc.blocks[q];
  const VertexSet t1 = t & b1;
  const VertexSet t2 = t & b2;
  const bool start1 = a1.start == q, end1 = a1.end == q;
  const bool start2 = a2.start == q, end2 = a2.end == q;
  auto comparable = [](VertexSet x, VertexSet y) {
    return x.subset_of(y) || y.subset_of(x);
  };
  if ((start1 && start2) || (end1 && end2)) {
    if (!comparable(t1, t2)) return true;
  }
  if ((start1 && end2) || (end1 && start2)) {
    if (t1.intersects(t2) && (t1 | t2) != t) return true;
  }
  return false;
}

bool arcs_conflict(const BlockCycle& bc, VertexSet b1, const Arc& a1,
                   VertexSet b2, const Arc& a2) {
  for (std::size_t q : {a1.start, a1.end}) {
    if (q == a2.start || q == a2.end) {
      if (block_conflict(bc, q, b1, a1, b2, a2)) return true;
    }
  }
  return false;
}

}  // namespace

BlockDecomposition block_decomposition(const Clutter& c) {
  const std::size_t m = c.size();
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::kNotApplicable, "no block structure: " + why);
  };
  if (m < 3) fail("fewer than three edges");
  if (!isolated_vertices(c).empty()) fail("isolated vertex");
  for (int v = 1; v <= c.n(); ++v) {
    int degree = 0;
    for (VertexSet e : c.edges()) degree += e.contains(v);
    if (degree > 2) fail("vertex " + std::to_string(v) + " lies in " +
                         std::to_string(degree) + " edges");
  }
  std::vector<std::vector<std::size_t>> neighbours(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && c.edge(i).intersects(c.edge(j))) {
        neighbours[i].push_back(j);
      }
    }
    if (neighbours[i].size() != 2) {
      fail("edge " + std::to_string(i) + " meets " +
           std::to_string(neighbours[i].size()) + " edges");
    }
  }
  BlockDecomposition bd;
  bd.cycle.push_back(0);
  std::size_t prev = 0, cur = neighbours[0][0];
  while (cur != 0) {
    if (bd.cycle.size() > m) fail("intersection graph is not a cycle");
    bd.cycle.push_back(cur);
    std::size_t next =
        neighbours[cur][0] == prev ? neighbours[cur][1] : neighbours[cur][0];
    prev = cur;
    cur = next;
  }
  if (bd.cycle.size() != m) fail("intersection graph is not a single cycle");
  bd.blocks.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet a = c.edge(bd.cycle[i]);
    VertexSet before = c.edge(bd.cycle[(i + m - 1) % m]);
    VertexSet after = c.edge(bd.cycle[(i + 1) % m]);
    bd.blocks.push_back(a & before);
    bd.blocks.push_back(a - before - after);
  }
  return bd;
}

std::optional<Placement> edge_addition_compatible(const Clutter& base,
                                                  VertexSet b) {
  BlockCycle bc = make_block_cycle(base);
  const VertexSet added[] = {b};
  require_clutter(base, added, ErrorKind::kNotAClutter);
  return placement_of(bc, base, b);
}

bool pair_compatible(const Clutter& base, VertexSet b1, VertexSet b2) {
  BlockCycle bc = make_block_cycle(base);
  const VertexSet added[] = {b1, b2};
  require_clutter(base, added, ErrorKind::kNotAClutter);
  if (!placement_of(bc, base, b1) || !placement_of(bc, base, b2)) {
    throw Error(ErrorKind::kPreconditionFailed,
                "an added edge is not individually compatible");
  }
  Arc a1 = *arc_of(bc.blocks, b1);
  Arc a2 = *arc_of(bc.blocks, b2);
  return !arcs_conflict(bc, b1, a1, b2, a2);
}

std::variant<OrderingWitness, IndexPair> extend_to_global(
    const Clutter& base, std::span<const VertexSet> bs) {
  BlockCycle bc;
  try {
    bc = make_block_cycle(base);
  } catch (const Error& e) {
    throw Error(ErrorKind::kPreconditionFailed, e.what());
  }
  require_clutter(base, bs, ErrorKind::kPreconditionFailed);

  std::vector<Arc> arcs;
  arcs.reserve(bs.size());
  for (std::size_t r = 0; r < bs.size(); ++r) {
    if (!placement_of(bc, base, bs[r])) return IndexPair{r, r};
    arcs.push_back(*arc_of(bc.blocks, bs[r]));
  }
  for (std::size_t r = 0; r < bs.size(); ++r) {
    for (std::size_t s = r + 1; s < bs.size(); ++s) {
      if (arcs_conflict(bc, bs[r], arcs[r], bs[s], arcs[s])) {
        return IndexPair{r, s};
      }
    }
  }

  // Per block: edges ending here give a flag of initial segments, edges
  // starting here a flag of terminal segments. Sorting by (first initial
  // segment containing x, then latest terminal segment) realizes both flags.
  constexpr int kNever = std::numeric_limits<int>::max();
  std::vector<int> order;
  order.reserve(base.n());
  for (std::size_t q = 0; q < bc.blocks.size(); ++q) {
    std::vector<VertexSet> initial, terminal;
    for (std::size_t r = 0; r < bs.size(); ++r) {
      if (arcs[r].end == q) initial.push_back(bc.blocks[q] & bs[r]);
      if (arcs[r].start == q) terminal.push_back(bc.blocks[q] & bs[r]);
    }
    auto by_size = [](VertexSet x, VertexSet y) { return x.size() < y.size(); };
    std::sort(initial.begin(), initial.end(), by_size);
    std::sort(terminal.begin(), terminal.end(), by_size);
    auto level = [](const std::vector<VertexSet>& flag, int v) {
      for (std::size_t i = 0; i < flag.size(); ++i) {
        if (flag[i].contains(v)) return static_cast<int>(i);
      }
      return kNever;
    };
    std::vector<int> members = bc.blocks[q].to_vector();
    std::stable_sort(members.begin(), members.end(), [&](int x, int y) {
      int px = level(initial, x), py = level(initial, y);
      if (px != py) return px < py;
      return level(terminal, x) > level(terminal, y);
    });
    order.insert(order.end(), members.begin(), members.end());
  }

  std::vector<VertexSet> all = base.edges();
  all.insert(all.end(), bs.begin(), bs.end());
  Clutter full = make_clutter(base.n(), std::move(all));
  OrderingWitness w{OrderKind::kCyclic, std::move(order)};
  auto one = std::find(w.order.begin(), w.order.end(), 1);
  std::rotate(w.order.begin(), one, w.order.end());
  if (w.order.size() > 2 && w.order.back() < w.order[1]) {
    std::reverse(w.order.begin() + 1, w.order.end());
  }
  if (!verify_witness(full, w)) {
    throw std::logic_error("merged block orders failed verification");
  }
  return w;
}

}  // namespace pxm
