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

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "oracles.h"
#include "pxm/ordering.h"
#include "pxm/paving.h"
#include "test_util.h"

namespace pxm {
namespace {

using testing::C;
using testing::edge_lists;
using testing::from_masks;
using testing::masks;
using testing::O1;
using testing::P;
using testing::Y0;

using Lists = std::vector<std::vector<int>>;

oracle::Edges sorted(oracle::Edges e) {
  std::sort(e.begin(), e.end());
  return e;
}

// Greedy random d-paving clutter.
oracle::Edges random_paving(std::mt19937_64& rng, int n, int d, int tries) {
  oracle::Edges out;
  std::uniform_int_distribution<oracle::Mask> pick(1, oracle::full(n));
  for (int t = 0; t < tries; ++t) {
    oracle::Edges next = out;
    next.push_back(pick(rng));
    if (oracle::is_paving(n, d, next)) out = std::move(next);
  }
  return out;
}

TEST(MakePaving, Examples) {
  PavingClutter p = make_paving(O1(), 3);
  EXPECT_EQ(p.rank(), 3);
  EXPECT_FALSE(p.trivially_interval());
  EXPECT_PXM_ERROR(make_paving(O1(), 4), ErrorKind::kEdgeTooSmall);
  EXPECT_PXM_ERROR(make_paving(C(5, {{1, 2, 3}, {2, 3, 4}}), 3),
                   ErrorKind::kIntersectionTooLarge);
  EXPECT_PXM_ERROR(make_paving(O1(), 1), ErrorKind::kRankOutOfRange);
  EXPECT_PXM_ERROR(make_paving(C(3, {}), 4), ErrorKind::kRankOutOfRange);
}

TEST(MakeTrivialPaving, OnlyBelowRankTwo) {
  EXPECT_TRUE(make_trivial_paving(C(3, {{1}, {2}}), 1).trivially_interval());
  EXPECT_PXM_ERROR(make_trivial_paving(C(3, {}), 2),
                   ErrorKind::kRankOutOfRange);
  EXPECT_PXM_ERROR(make_trivial_paving(C(3, {}), -1),
                   ErrorKind::kRankOutOfRange);
}

TEST(EdgeClass, Examples) {
  EXPECT_EQ(edge_class(P(6, 3, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}),
                       VertexSet{1, 2, 3}),
            EdgeClass::kSmall);
  EXPECT_EQ(edge_class(P(6, 3, {{1, 2, 3, 4}, {5, 6, 1}}),
                       VertexSet{1, 2, 3, 4}),
            EdgeClass::kLarge);
  EXPECT_PXM_ERROR(edge_class(make_paving(O1(), 3), VertexSet{9}),
                   ErrorKind::kNoSuchEdge);
}

TEST(Delete, Examples) {
  PavingClutter y = make_paving(Y0(), 3);
  PavingClutter a = delete_element(y, 7);
  EXPECT_EQ(a.n(), 6);
  EXPECT_EQ(a.rank(), 3);
  EXPECT_EQ(edge_lists(a.clutter()), (Lists{{1, 2, 3}, {1, 4, 5}}));

  // The large edge shrinks; labels above 2 move down by one.
  PavingClutter b =
      delete_element(P(6, 3, {{1, 2, 3, 4}, {5, 6, 1}}), 2);
  EXPECT_EQ(b.n(), 5);
  EXPECT_EQ(edge_lists(b.clutter()), (Lists{{1, 2, 3}, {1, 4, 5}}));

  PavingClutter c = delete_element(make_paving(O1(), 3), 3);
  EXPECT_EQ(c.n(), 5);
  EXPECT_EQ(edge_lists(c.clutter()), (Lists{{1, 4, 5}}));
}

TEST(Delete, Errors) {
  EXPECT_PXM_ERROR(delete_element(make_paving(O1(), 3), 7),
                   ErrorKind::kVertexOutOfRange);
  EXPECT_PXM_ERROR(delete_element(make_paving(O1(), 3), 0),
                   ErrorKind::kVertexOutOfRange);
  EXPECT_PXM_ERROR(delete_element(P(3, 3, {}), 1),
                   ErrorKind::kColoopDeletion);
  EXPECT_PXM_ERROR(delete_element(P(4, 3, {{1, 2, 3}}), 4),
                   ErrorKind::kColoopDeletion);
  // n = d with the ground set as an edge leaves rank above the ground size.
  EXPECT_PXM_ERROR(delete_element(P(3, 3, {{1, 2, 3}}), 1),
                   ErrorKind::kDegenerateMinor);
}

TEST(Coloop, Examples) {
  EXPECT_TRUE(is_coloop(P(3, 3, {}), 2));
  EXPECT_FALSE(is_coloop(P(4, 3, {}), 2));
  EXPECT_TRUE(is_coloop(P(4, 3, {{1, 2, 3}}), 4));
  EXPECT_FALSE(is_coloop(P(4, 3, {{1, 2, 3}}), 1));
  EXPECT_TRUE(has_coloop(P(4, 3, {{1, 2, 3}})));
  EXPECT_FALSE(has_coloop(make_paving(O1(), 3)));
}

TEST(Contract, Examples) {
  PavingClutter a = contract(make_paving(Y0(), 3), 1);
  EXPECT_EQ(a.rank(), 2);
  EXPECT_EQ(a.n(), 6);
  EXPECT_EQ(edge_lists(a.clutter()), (Lists{{1, 2}, {3, 4}, {5, 6}}));

  PavingClutter b = contract(make_paving(O1(), 3), 2);
  EXPECT_EQ(b.rank(), 2);
  EXPECT_EQ(edge_lists(b.clutter()), (Lists{{1, 2}}));

  PavingClutter c = contract(make_paving(O1(), 3), 3);
  EXPECT_EQ(edge_lists(c.clutter()), (Lists{{1, 2}, {3, 4}}));
}

TEST(Contract, RankOneIsTriviallyInterval) {
  PavingClutter r2 = P(4, 2, {{1, 2}, {3, 4}});
  PavingClutter r1 = contract(r2, 1);
  EXPECT_EQ(r1.rank(), 1);
  EXPECT_TRUE(r1.trivially_interval());
  EXPECT_EQ(edge_lists(r1.clutter()), (Lists{{1}}));
  EXPECT_TRUE(is_interval_positroid(r1));
  EXPECT_TRUE(is_positroid(r1));
  EXPECT_PXM_ERROR(contract(r2, 5), ErrorKind::kVertexOutOfRange);
}

TEST(Relax, Examples) {
  PavingClutter d1 = make_paving(testing::D1(), 3);
  PavingClutter o = relax(d1, VertexSet{1, 2, 3});
  EXPECT_EQ(o.clutter().size(), 3u);
  EXPECT_EQ(o.rank(), 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      EXPECT_EQ((o.clutter().edge(i) & o.clutter().edge(j)).size(), 1);
    }
  }
  EXPECT_FALSE(is_interval_positroid(o));

  EXPECT_EQ(relax(make_paving(Y0(), 3), VertexSet{1, 6, 7}).clutter().size(),
            2u);
  EXPECT_PXM_ERROR(relax(make_paving(O1(), 3), VertexSet{9}),
                   ErrorKind::kNoSuchEdge);
  EXPECT_PXM_ERROR(relax_index(make_paving(O1(), 3), 3),
                   ErrorKind::kNoSuchEdge);
}

TEST(Membership, Examples) {
  PavingClutter o1 = make_paving(O1(), 3);
  EXPECT_TRUE(is_positroid(o1));
  EXPECT_FALSE(is_interval_positroid(o1));
  PavingClutter y0 = make_paving(Y0(), 3);
  EXPECT_FALSE(is_positroid(y0));
  EXPECT_FALSE(is_interval_positroid(y0));
  PavingClutter r2 = contract(o1, 2);
  EXPECT_TRUE(is_positroid(r2));
  EXPECT_TRUE(is_interval_positroid(r2));
}

// All labeled 2-paving clutters on n <= 7: pairwise disjoint edges of size at
// least two. Each one has an interval ordering.
TEST(RankTwo, EveryPavingClutterIsInterval) {
  for (int n = 2; n <= 7; ++n) {
    int count = 0;
    std::function<void(oracle::Mask, oracle::Mask, oracle::Edges&)> grow =
        [&](oracle::Mask used, oracle::Mask min_next, oracle::Edges& edges) {
          ++count;
          ASSERT_TRUE(oracle::has_linear(n, edges));
          PavingClutter p = make_paving(from_masks(n, edges), 2);
          ASSERT_TRUE(is_interval_positroid(p));
          ASSERT_TRUE(is_interval(p.clutter()));
          for (oracle::Mask s = min_next; s <= oracle::full(n); ++s) {
            if ((s & used) || oracle::popcount(s) < 2) continue;
            edges.push_back(s);
            grow(used | s, s + 1, edges);
            edges.pop_back();
          }
        };
    oracle::Edges edges;
    grow(0, 1, edges);
    EXPECT_GE(count, n);
  }
}

// Deletion and contraction against an independent reimplementation.
TEST(Minors, AgreeWithOracleFormula) {
  std::mt19937_64 rng(401);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int d = 2 + static_cast<int>(rng() % std::min(3, n - 1));
    oracle::Edges e = random_paving(rng, n, d, 12);
    PavingClutter p = make_paving(from_masks(n, e), d);
    const int x = 1 + static_cast<int>(rng() % n);
    PavingClutter ct = contract(p, x);
    EXPECT_EQ(ct.rank(), d - 1);
    EXPECT_EQ(sorted(masks(ct.clutter())), sorted(oracle::contraction(e, x)));
    if (d - 1 >= 2) {
      EXPECT_TRUE(oracle::is_paving(n - 1, d - 1, masks(ct.clutter())));
    }
    if (is_coloop(p, x)) continue;
    oracle::Edges expect = oracle::deletion(d, e, x);
    if (n - 1 < d) {
      EXPECT_PXM_ERROR(delete_element(p, x), ErrorKind::kDegenerateMinor);
      continue;
    }
    PavingClutter dl = delete_element(p, x);
    ++checked;
    EXPECT_EQ(dl.rank(), d);
    EXPECT_EQ(dl.n(), n - 1);
    EXPECT_EQ(sorted(masks(dl.clutter())), sorted(expect));
    EXPECT_TRUE(oracle::is_paving(n - 1, d, expect));
  }
  EXPECT_GT(checked, 2000);
}

// Relaxations of interval positroids stay interval positroids.
TEST(Relax, PreservesIntervalMembership) {
  std::mt19937_64 rng(403);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int d = 2 + static_cast<int>(rng() % std::min(3, n - 1));
    oracle::Edges e = random_paving(rng, n, d, 10);
    PavingClutter p = make_paving(from_masks(n, e), d);
    ASSERT_EQ(is_positroid(p), d <= 2 || oracle::has_cyclic(n, e));
    ASSERT_EQ(is_interval_positroid(p), d <= 2 || oracle::has_linear(n, e));
    if (!is_interval_positroid(p)) continue;
    for (std::size_t i = 0; i < p.clutter().size(); ++i) {
      ++checked;
      EXPECT_TRUE(is_interval_positroid(relax_index(p, i)));
    }
  }
  EXPECT_GT(checked, 1000);
}

}  // namespace
}  // namespace pxm
