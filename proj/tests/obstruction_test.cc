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
#include <string>
#include <vector>

#include "oracles.h"
#include "pxm/obstruction.h"
#include "pxm/ordering.h"
#include "test_util.h"

namespace pxm {
namespace {

using testing::C;
using testing::from_masks;
using testing::masks;
using testing::O1;
using testing::SH1;
using testing::Y0;

TEST(FindObstruction, Triangle) {
  auto w = find_obstruction(O1());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ObstructionKind::kType1);
  EXPECT_EQ(w->edges, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(verify_obstruction(O1(), *w));
}

TEST(FindObstruction, Claw) {
  auto w = find_obstruction(Y0());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ObstructionKind::kType2);
}

TEST(FindObstruction, Star) {
  auto w = find_obstruction(SH1());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ObstructionKind::kType4);
  EXPECT_EQ(w->edges, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(FindObstruction, AbsentOnIntervalClutter) {
  EXPECT_FALSE(find_obstruction(C(4, {{1, 2}, {2, 3}, {3, 4}})));
}

TEST(FindObstruction, LongCycle) {
  auto w = find_obstruction(C(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ObstructionKind::kType5);
  EXPECT_EQ(w->edges.size(), 5u);
}

TEST(VerifyObstruction, RejectsMalformedWitnesses) {
  EXPECT_FALSE(verify_obstruction(O1(), {ObstructionKind::kType1, {0, 1}}));
  EXPECT_FALSE(verify_obstruction(O1(), {ObstructionKind::kType1, {0, 1, 5}}));
  EXPECT_FALSE(verify_obstruction(O1(), {ObstructionKind::kType1, {0, 0, 1}}));
  EXPECT_FALSE(verify_obstruction(O1(), {ObstructionKind::kType2, {0, 1, 2}}));
}

TEST(ObstructionNames, RoundTrip) {
  for (ObstructionKind k :
       {ObstructionKind::kType1, ObstructionKind::kType2,
        ObstructionKind::kType3, ObstructionKind::kType4,
        ObstructionKind::kType5, ObstructionKind::kFan}) {
    EXPECT_EQ(parse_obstruction_kind(obstruction_name(k)), k);
  }
  EXPECT_PXM_ERROR(parse_obstruction_kind("type6"), ErrorKind::kParseError);
}

TEST(TriangleKind, Examples) {
  EXPECT_EQ(triangle_kind(O1()), TriangleKind::kTriangle);
  EXPECT_EQ(triangle_kind(Y0()), TriangleKind::kNone);
  Clutter common = C(4, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}});
  EXPECT_EQ(triangle_kind(common), TriangleKind::kTriangleWithCommonPoint);
  EXPECT_TRUE(oracle::has_cyclic(4, masks(common)));
  EXPECT_FALSE(oracle::has_linear(4, masks(common)));
}

// The common-point shape holds here, yet the clutter is not CA.
TEST(TriangleKind, ShapeWithoutArcOrderingIsNotATriangle) {
  Clutter c = C(6, {{1, 3, 5}, {1, 2, 5, 6}, {2, 3, 5}});
  EXPECT_TRUE(has_common_point_shape(c.edge(0), c.edge(1), c.edge(2)));
  EXPECT_FALSE(oracle::has_cyclic(6, masks(c)));
  EXPECT_EQ(triangle_kind(c), TriangleKind::kNone);
}

TEST(TriangleKind, NeedsThreeEdges) {
  EXPECT_PXM_ERROR(triangle_kind(C(4, {{1, 2}})), ErrorKind::kWrongEdgeCount);
  EXPECT_PXM_ERROR(triangle_kind(SH1()), ErrorKind::kWrongEdgeCount);
}

TEST(FanObstruction, Examples) {
  EXPECT_TRUE(is_fan_obstruction(VertexSet{1, 2, 3}, VertexSet{4, 5, 6},
                                 VertexSet{7, 8, 9}, VertexSet{1, 4, 7}));
  EXPECT_FALSE(is_fan_obstruction(VertexSet{1, 2, 3}, VertexSet{3, 4, 5},
                                  VertexSet{5, 6, 1}, VertexSet{2, 4, 6}));
  EXPECT_FALSE(is_fan_obstruction(VertexSet{1, 2}, VertexSet{3, 4},
                                  VertexSet{5, 6}, VertexSet{7, 8}));
}

TEST(FanObstruction, NeedsAClutter) {
  EXPECT_PXM_ERROR(is_fan_obstruction(VertexSet{1, 2}, VertexSet{1, 2, 3},
                                      VertexSet{5, 6}, VertexSet{7, 8}),
                   ErrorKind::kNotAClutter);
}

// Equivalence with interval recognition, witness validity, the CA narrowing
// to types 1 and 5, and the fan and triangle implications.
TEST(Obstructions, AgreeWithOracleOnRandomClutters) {
  std::mt19937_64 rng(301);
  int non_interval = 0;
  int non_interval_ca = 0;
  int fans = 0;
  int triangles = 0;
  for (int trial = 0; trial < 8000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int m = static_cast<int>(rng() % 6);
    oracle::Edges e = oracle::random_clutter(rng, n, m);
    Clutter c = from_masks(n, e);
    auto w = find_obstruction(c);
    const bool interval = oracle::has_linear(n, e);
    ASSERT_EQ(!w.has_value(), interval);
    if (w) {
      ++non_interval;
      EXPECT_TRUE(oracle::obstruction_holds(
          e, std::string(obstruction_name(w->kind)), w->edges));
      if (oracle::has_cyclic(n, e)) {
        ++non_interval_ca;
        const ObstructionKind narrow[] = {ObstructionKind::kType1,
                                          ObstructionKind::kType5};
        auto v = find_obstruction(c, narrow);
        ASSERT_TRUE(v);
        EXPECT_TRUE(oracle::obstruction_holds(
            e, std::string(obstruction_name(v->kind)), v->edges));
      }
    }
    if (e.size() == 4 && is_fan_obstruction(VertexSet(e[0]), VertexSet(e[1]),
                                            VertexSet(e[2]), VertexSet(e[3]))) {
      ++fans;
      EXPECT_FALSE(oracle::has_cyclic(n, e));
    }
    if (e.size() == 3) {
      const TriangleKind t = triangle_kind(c);
      const bool expect_triangle =
          !oracle::has_linear(n, e) && oracle::has_cyclic(n, e);
      EXPECT_EQ(t != TriangleKind::kNone, expect_triangle);
      if (t != TriangleKind::kNone) ++triangles;
    }
  }
  EXPECT_GT(non_interval, 1000);
  EXPECT_GT(non_interval_ca, 100);
  EXPECT_GT(fans, 0);
  EXPECT_GT(triangles, 10);
}

}  // namespace
}  // namespace pxm
