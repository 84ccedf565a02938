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

#ifndef PXM_BLOCKS_H_
#define PXM_BLOCKS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "pxm/clutter.h"
#include "pxm/ordering.h"
#include "pxm/vertex_set.h"

namespace pxm {

// Block structure of a non-interval CA clutter in which every vertex lies in
// at most two edges. The edges form a cycle A_0, ..., A_{m-1} under
// nonempty intersection; cycle[i] is the clutter index of A_i, starting at
// edge 0 and continuing to its lower-indexed neighbour.
//
//   blocks[2i]     = A_i ∩ A_{i-1}
//   blocks[2i + 1] = A_i \ (A_{i-1} ∪ A_{i+1})   (may be empty)
//
// so A_i = blocks[2i] ∪ blocks[2i+1] ∪ blocks[2i+2] (indices mod 2m), and
// every arc ordering lists the blocks in this cyclic order.
struct BlockDecomposition {
  std::vector<std::size_t> cycle;
  std::vector<VertexSet> blocks;

  std::size_t num_edges() const { return cycle.size(); }
  // A_i ∩ A_{i+1}
  VertexSet junction(std::size_t i) const {
    return blocks[(2 * i + 2) % blocks.size()];
  }
};

// Throws NotApplicable unless the clutter has >= 3 edges, no isolated
// vertex, every vertex in at most two edges and a single-cycle intersection
// graph.
BlockDecomposition block_decomposition(const Clutter& c);

// Where an added edge b sits: A_i ∩ A_{i+1} ⊆ b ⊆ A_i ∪ A_{i+1}.
struct Placement {
  std::size_t index = 0;  // i, a position in BlockDecomposition::cycle
  std::size_t first_edge = 0;   // clutter index of A_i
  std::size_t second_edge = 0;  // clutter index of A_{i+1}
  // More than one i satisfied the containment. The characterization asserts
  // uniqueness, so a set flag is an anomaly worth reporting.
  bool ambiguous = false;
};

// Decides whether base + b is CA from the block structure alone. Returns the
// smallest placement index when it is. Throws NotApplicable when base fails
// the block preconditions and NotAClutter when base + b is not a clutter.
std::optional<Placement> edge_addition_compatible(const Clutter& base,
                                                  VertexSet b);

// Decides whether base + b1 + b2 is CA, given that base + b1 and base + b2
// each are (PreconditionFailed otherwise). The only interactions happen in
// blocks where both added edges end: two edges entering a block from the
// same side need nested traces, and edges entering from opposite sides must
// cover the block wherever their traces meet.
bool pair_compatible(const Clutter& base, VertexSet b1, VertexSet b2);

using IndexPair = std::pair<std::size_t, std::size_t>;

// If every pair (including each edge with itself) is compatible, builds one
// arc ordering of base + bs: inside every block the traces of edges ending
// there become initial segments, those of edges starting there become
// terminal segments, and the blocks are concatenated cyclically. Otherwise
// returns the first failing pair of indices into bs. Throws
// PreconditionFailed when base fails the block preconditions or base + bs is
// not a clutter.
std::variant<OrderingWitness, IndexPair> extend_to_global(
    const Clutter& base, std::span<const VertexSet> bs);

}  // namespace pxm

#endif  // PXM_BLOCKS_H_
