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

#ifndef PXM_PAVING_H_
#define PXM_PAVING_H_

#include <cstddef>

#include "pxm/clutter.h"
#include "pxm/vertex_set.h"

namespace pxm {

// The dependent hyperplanes of a paving matroid of rank d: every edge has at
// least d elements and two edges share at most d - 2.
//
// Contracting a rank-2 clutter gives rank 1, which is not a paving clutter.
// Such results carry trivially_interval = true; the d-paving conditions are
// not checked for them and they never witness non-membership.
class PavingClutter {
 public:
  PavingClutter() = default;

  const Clutter& clutter() const { return clutter_; }
  int rank() const { return d_; }
  int n() const { return clutter_.n(); }
  bool trivially_interval() const { return trivial_; }

  friend bool operator==(const PavingClutter&, const PavingClutter&) = default;

 private:
  friend PavingClutter make_paving(Clutter c, int d);
  friend PavingClutter contract(const PavingClutter& p, int x);
  friend PavingClutter make_trivial_paving(Clutter c, int d);
  PavingClutter(Clutter c, int d, bool trivial)
      : clutter_(std::move(c)), d_(d), trivial_(trivial) {}

  Clutter clutter_;
  int d_ = 0;
  bool trivial_ = false;
};

// Throws RankOutOfRange (d < 2 or d > n), EdgeTooSmall or
// IntersectionTooLarge.
PavingClutter make_paving(Clutter c, int d);

// The rank-0 or rank-1 sentinel produced by contraction. Throws
// RankOutOfRange unless 0 <= d < 2.
PavingClutter make_trivial_paving(Clutter c, int d);

enum class EdgeClass { kSmall, kLarge };

// Throws NoSuchEdge.
EdgeClass edge_class(const PavingClutter& p, VertexSet e);

// x is a coloop iff the clutter is empty with n = d, or [n] \ {x} is the only
// edge.
bool is_coloop(const PavingClutter& p, int x);
bool has_coloop(const PavingClutter& p);

// Deletion keeps the edges missing x and the large edges through x with x
// removed. Vertices above x shift down by one. Throws VertexOutOfRange,
// ColoopDeletion, or DegenerateMinor when the result is not a valid d-paving
// clutter.
PavingClutter delete_element(const PavingClutter& p, int x);

// Contraction keeps H - x for the edges H through x, at rank d - 1. Throws
// VertexOutOfRange.
PavingClutter contract(const PavingClutter& p, int x);

// Throws NoSuchEdge.
PavingClutter relax(const PavingClutter& p, VertexSet e);
PavingClutter relax_index(const PavingClutter& p, std::size_t index);

// Rank at most 2 (or a trivially interval minor) is always a member.
bool is_interval_positroid(const PavingClutter& p);
bool is_positroid(const PavingClutter& p);

}  // namespace pxm

#endif  // PXM_PAVING_H_
