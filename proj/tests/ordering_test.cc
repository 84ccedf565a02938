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
#include <vector>

#include "oracles.h"
#include "pxm/ordering.h"
#include "test_util.h"

namespace pxm {
namespace {

using testing::C;
using testing::from_masks;
using testing::masks;
using testing::O1;
using testing::Y0;

OrderingWitness linear(std::vector<int> order) {
  return {OrderKind::kLinear, std::move(order)};
}
OrderingWitness cyclic(std::vector<int> order) {
  return {OrderKind::kCyclic, std::move(order)};
}

TEST(FindIntervalOrdering, Path) {
  auto w = find_interval_ordering(C(4, {{1, 2}, {2, 3}, {3, 4}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, OrderKind::kLinear);
  EXPECT_EQ(w->order, (std::vector<int>{1, 2, 3, 4}));
}

TEST(FindIntervalOrdering, TriangleIsAbsent) {
  EXPECT_FALSE(find_interval_ordering(O1()));
}

TEST(FindIntervalOrdering, EmptyClutter) {
  auto w = find_interval_ordering(C(5, {}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->order, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(FindArcOrdering, Examples) {
  auto w = find_arc_ordering(O1());
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, cyclic({1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(find_arc_ordering(Y0()));
  auto five = find_arc_ordering(C(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
  ASSERT_TRUE(five);
  EXPECT_EQ(*five, cyclic({1, 2, 3, 4, 5}));
}

TEST(VerifyWitness, Examples) {
  EXPECT_TRUE(verify_witness(O1(), cyclic({1, 2, 3, 4, 5, 6})));
  EXPECT_FALSE(verify_witness(O1(), linear({1, 2, 3, 4, 5, 6})));
  EXPECT_TRUE(verify_witness(C(4, {}), linear({3, 1, 4, 2})));
}

TEST(VerifyWitness, Errors) {
  EXPECT_PXM_ERROR(verify_witness(O1(), linear({1, 2, 3})),
                   ErrorKind::kLengthMismatch);
  EXPECT_PXM_ERROR(verify_witness(O1(), linear({1, 2, 3, 4, 5, 5})),
                   ErrorKind::kNotAPermutation);
  EXPECT_PXM_ERROR(verify_witness(O1(), linear({1, 2, 3, 4, 5, 7})),
                   ErrorKind::kNotAPermutation);
}

TEST(IsIntervalUnder, LinearAndCyclic) {
  const std::vector<int> positions = {0, 1, 2, 3, 4};  // identity
  EXPECT_TRUE(is_interval_under(VertexSet{2, 3}, positions, 5, false));
  EXPECT_FALSE(is_interval_under(VertexSet{5, 1}, positions, 5, false));
  EXPECT_TRUE(is_interval_under(VertexSet{5, 1}, positions, 5, true));
  EXPECT_FALSE(is_interval_under(VertexSet{1, 3}, positions, 5, true));
}

// Differential test against the permutation oracle, with witness checks.
TEST(Recognition, AgreesWithOracle) {
  std::mt19937_64 rng(101);
  int positives = 0;
  for (int trial = 0; trial < 6000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int m = static_cast<int>(rng() % 6);
    oracle::Edges e = oracle::random_clutter(rng, n, m);
    Clutter c = from_masks(n, e);
    auto lin = find_interval_ordering(c);
    auto cyc = find_arc_ordering(c);
    ASSERT_EQ(lin.has_value(), oracle::has_linear(n, e));
    ASSERT_EQ(cyc.has_value(), oracle::has_cyclic(n, e));
    if (lin) {
      ++positives;
      EXPECT_EQ(lin->kind, OrderKind::kLinear);
      EXPECT_TRUE(oracle::witness_ok(n, e, lin->order, false));
      EXPECT_TRUE(cyc.has_value());  // monotonicity
      // Every partial clutter keeps the same ordering.
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (rng() % 2) keep.push_back(i);
      }
      EXPECT_TRUE(verify_witness(restrict(c, keep), *lin));
    }
    if (cyc) {
      EXPECT_EQ(cyc->kind, OrderKind::kCyclic);
      EXPECT_TRUE(oracle::witness_ok(n, e, cyc->order, true));
      EXPECT_EQ(cyc->order.front(), 1);
      if (n >= 3) EXPECT_LT(cyc->order[1], cyc->order.back());
    }
  }
  EXPECT_GT(positives, 1000);
}

TEST(ConsecutiveArrangement, AgreesWithOracle) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    // Sets need not be incomparable here.
    oracle::Edges sets;
    const int count = static_cast<int>(rng() % 5);
    std::uniform_int_distribution<oracle::Mask> pick(1, oracle::full(n));
    for (int k = 0; k < count; ++k) sets.push_back(pick(rng));
    std::vector<VertexSet> vs;
    for (oracle::Mask s : sets) vs.push_back(VertexSet(s));
    auto got = consecutive_arrangement(VertexSet::range(n), vs);
    ASSERT_EQ(got.has_value(), oracle::has_linear(n, sets));
    if (got) EXPECT_TRUE(oracle::witness_ok(n, sets, *got, false));
  }
}

}  // namespace
}  // namespace pxm
