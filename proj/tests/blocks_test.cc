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

#include <gtest/gtest.h>

#include <random>
#include <variant>
#include <vector>

#include "oracles.h"
#include "pxm/blocks.h"
#include "random_instances.h"
#include "test_util.h"

namespace pxm {
namespace {

using testing::from_masks;
using testing::O1;
using testing::O114;
using testing::Y0;

std::vector<VertexSet> sets(std::vector<std::vector<int>> lists) {
  std::vector<VertexSet> out;
  for (const auto& l : lists) out.push_back(VertexSet::from_vertices(l));
  return out;
}

TEST(BlockDecomposition, Triangle) {
  BlockDecomposition b = block_decomposition(O1());
  EXPECT_EQ(b.cycle, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(b.blocks, sets({{1}, {2}, {3}, {4}, {5}, {6}}));
  EXPECT_EQ(b.junction(0), VertexSet{3});
}

TEST(BlockDecomposition, WiderTriangle) {
  BlockDecomposition b = block_decomposition(O114());
  EXPECT_EQ(b.blocks, sets({{1}, {2, 3}, {4}, {5, 6}, {7}, {8, 9}}));
}

TEST(BlockDecomposition, RejectsTripleVertex) {
  EXPECT_PXM_ERROR(block_decomposition(Y0()), ErrorKind::kNotApplicable);
}

TEST(BlockDecomposition, RandomChainsAreSound) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 5);
    oracle::Chain ch = oracle::random_chain(rng, m, 3, 2);
    Clutter c = from_masks(ch.n, ch.edges);
    BlockDecomposition b = block_decomposition(c);
    ASSERT_EQ(b.num_edges(), static_cast<std::size_t>(m));
    ASSERT_EQ(b.blocks.size(), 2u * m);
    oracle::Mask seen = 0;
    for (VertexSet blk : b.blocks) {
      EXPECT_EQ(seen & blk.bits(), 0u);
      seen |= blk.bits();
    }
    EXPECT_EQ(seen, oracle::full(ch.n));
    for (std::size_t i = 0; i < b.num_edges(); ++i) {
      VertexSet expect = b.blocks[2 * i] | b.blocks[2 * i + 1] |
                         b.blocks[(2 * i + 2) % (2 * m)];
      EXPECT_EQ(c.edge(b.cycle[i]), expect);
      EXPECT_EQ(b.junction(i),
                c.edge(b.cycle[i]) & c.edge(b.cycle[(i + 1) % m]));
    }
  }
}

TEST(EdgeAddition, Examples) {
  auto p = edge_addition_compatible(O1(), VertexSet{2, 3, 4});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->first_edge, 0u);
  EXPECT_EQ(p->second_edge, 1u);
  EXPECT_FALSE(p->ambiguous);
  EXPECT_FALSE(edge_addition_compatible(O1(), VertexSet{2, 4}));
  EXPECT_TRUE(edge_addition_compatible(O114(), VertexSet{3, 4, 5}));
}

// Edges inside a base edge violate the clutter precondition. As hypergraphs
// these additions are CA, which the oracle confirms.
TEST(EdgeAddition, SubsetOfBaseEdgeIsRejected) {
  EXPECT_PXM_ERROR(edge_addition_compatible(O114(), VertexSet{3, 4}),
                   ErrorKind::kNotAClutter);
  EXPECT_TRUE(oracle::has_cyclic(
      9, {0b000001111, 0b001111000, 0b111000001, 0b000001100}));
  const std::vector<VertexSet> bs = {VertexSet{3, 4}, VertexSet{2, 4, 5}};
  EXPECT_PXM_ERROR(extend_to_global(O114(), bs),
                   ErrorKind::kPreconditionFailed);
}

// An added edge may meet every block when its two partial ends are adjacent.
TEST(EdgeAddition, ArcThroughEveryBlock) {
  Clutter base = testing::C(6, {{1, 2, 4, 6}, {2, 3, 4, 5}, {1, 3, 5, 6}});
  EXPECT_TRUE(edge_addition_compatible(base, VertexSet{1, 2, 3, 6}));
  EXPECT_TRUE(oracle::has_cyclic(6, {0b101011, 0b011110, 0b110101, 0b100111}));
}

TEST(EdgeAddition, RejectsNonClutter) {
  EXPECT_PXM_ERROR(edge_addition_compatible(O1(), VertexSet{1, 2}),
                   ErrorKind::kNotAClutter);
  EXPECT_PXM_ERROR(edge_addition_compatible(O1(), VertexSet{1, 2, 3}),
                   ErrorKind::kNotAClutter);
  // {1, 3} lies inside {1, 2, 3}. The hypergraph O1 + {1, 3} is not CA.
  EXPECT_PXM_ERROR(edge_addition_compatible(O1(), VertexSet{1, 3}),
                   ErrorKind::kNotAClutter);
  EXPECT_FALSE(oracle::has_cyclic(6, {0b000111, 0b011100, 0b110001, 0b101}));
}

TEST(PairCompatible, Examples) {
  EXPECT_TRUE(pair_compatible(O1(), VertexSet{2, 3, 4}, VertexSet{4, 5, 6}));
  EXPECT_FALSE(
      pair_compatible(O114(), VertexSet{3, 4, 5}, VertexSet{2, 4, 5}));
  EXPECT_TRUE(pair_compatible(O1(), VertexSet{2, 3, 4}, VertexSet{6, 1, 2}));
}

TEST(PairCompatible, RequiresIndividuallyCompatibleEdges) {
  EXPECT_PXM_ERROR(pair_compatible(O1(), VertexSet{2, 4}, VertexSet{4, 5, 6}),
                   ErrorKind::kPreconditionFailed);
}

TEST(ExtendToGlobal, Examples) {
  const std::vector<VertexSet> one = {VertexSet{2, 3, 4}};
  auto r = extend_to_global(O1(), one);
  ASSERT_TRUE(std::holds_alternative<OrderingWitness>(r));
  EXPECT_EQ(std::get<OrderingWitness>(r).order,
            (std::vector<int>{1, 2, 3, 4, 5, 6}));

  const std::vector<VertexSet> bad = {VertexSet{3, 4, 5}, VertexSet{2, 4, 5}};
  auto f = extend_to_global(O114(), bad);
  ASSERT_TRUE(std::holds_alternative<IndexPair>(f));
  EXPECT_EQ(std::get<IndexPair>(f), IndexPair(0, 1));

  auto none = extend_to_global(O1(), std::vector<VertexSet>{});
  ASSERT_TRUE(std::holds_alternative<OrderingWitness>(none));
  EXPECT_EQ(std::get<OrderingWitness>(none).order,
            (std::vector<int>{1, 2, 3, 4, 5, 6}));
}

TEST(ExtendToGlobal, ReportsIncompatibleSingleEdge) {
  const std::vector<VertexSet> bs = {VertexSet{4, 5, 6}, VertexSet{2, 4}};
  auto r = extend_to_global(O1(), bs);
  ASSERT_TRUE(std::holds_alternative<IndexPair>(r));
  EXPECT_EQ(std::get<IndexPair>(r), IndexPair(1, 1));
}

// Single and pairwise decisions against brute-force cyclic search.
TEST(LocalDecisions, AgreeWithOracle) {
  std::mt19937_64 rng(203);
  int singles = 0;
  int pairs = 0;
  int compatible_pairs = 0;
  int incompatible_pairs = 0;
  while (pairs < 3000) {
    const int m = 3 + static_cast<int>(rng() % 2);
    oracle::Chain ch = oracle::random_chain(rng, m, 2, 1);
    if (ch.n > 8) continue;
    Clutter base = from_masks(ch.n, ch.edges);
    auto b1 = oracle::random_arc(rng, ch);
    auto b2 = oracle::random_arc(rng, ch);
    if (!b1 || !b2 || *b1 == *b2) continue;
    oracle::Edges e1 = ch.edges;
    e1.push_back(*b1);
    ++singles;
    ASSERT_EQ(edge_addition_compatible(base, VertexSet(*b1)).has_value(),
              oracle::has_cyclic(ch.n, e1));
    oracle::Edges all = e1;
    all.push_back(*b2);
    if (!oracle::is_clutter(ch.n, all)) continue;
    if (!edge_addition_compatible(base, VertexSet(*b1)) ||
        !edge_addition_compatible(base, VertexSet(*b2))) {
      continue;
    }
    ++pairs;
    const bool expect = oracle::has_cyclic(ch.n, all);
    ASSERT_EQ(pair_compatible(base, VertexSet(*b1), VertexSet(*b2)), expect);
    (expect ? compatible_pairs : incompatible_pairs)++;
  }
  EXPECT_GT(singles, 3000);
  EXPECT_GT(compatible_pairs, 300);
  EXPECT_GT(incompatible_pairs, 100);
}

// Random edge additions that are not forced into a single arc ordering.
TEST(EdgeAddition, ArbitraryAddedSetsAgreeWithOracle) {
  std::mt19937_64 rng(205);
  int checked = 0;
  while (checked < 3000) {
    const int m = 3 + static_cast<int>(rng() % 3);
    oracle::Chain ch = oracle::random_chain(rng, m, 2, 1);
    if (ch.n > 8) continue;
    std::uniform_int_distribution<oracle::Mask> pick(1, oracle::full(ch.n));
    oracle::Edges e = ch.edges;
    e.push_back(pick(rng));
    if (!oracle::is_clutter(ch.n, e)) continue;
    ++checked;
    std::string shown;
    for (oracle::Mask x : e) {
      shown += "{";
      for (int v : oracle::vertices_of(x)) shown += std::to_string(v);
      shown += "}";
    }
    ASSERT_EQ(edge_addition_compatible(from_masks(ch.n, ch.edges),
                                       VertexSet(e.back()))
                  .has_value(),
              oracle::has_cyclic(ch.n, e))
        << shown;
  }
}

TEST(PairCompatible, ArbitraryAddedSetsAgreeWithOracle) {
  std::mt19937_64 rng(207);
  int checked = 0;
  int compatible = 0;
  while (checked < 2000) {
    const int m = 3 + static_cast<int>(rng() % 3);
    oracle::Chain ch = oracle::random_chain(rng, m, 2, 1);
    if (ch.n > 8) continue;
    std::uniform_int_distribution<oracle::Mask> pick(1, oracle::full(ch.n));
    oracle::Edges e = ch.edges;
    e.push_back(pick(rng));
    e.push_back(pick(rng));
    if (!oracle::is_clutter(ch.n, e)) continue;
    Clutter base = from_masks(ch.n, ch.edges);
    const VertexSet b1(e[e.size() - 2]), b2(e.back());
    if (!edge_addition_compatible(base, b1) ||
        !edge_addition_compatible(base, b2)) {
      continue;
    }
    ++checked;
    const bool expect = oracle::has_cyclic(ch.n, e);
    ASSERT_EQ(pair_compatible(base, b1, b2), expect);
    compatible += expect;
  }
  EXPECT_GT(compatible, 200);
}

}  // namespace
}  // namespace pxm
