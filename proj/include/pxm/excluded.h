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

#ifndef PXM_EXCLUDED_H_
#define PXM_EXCLUDED_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pxm/families.h"
#include "pxm/obstruction.h"
#include "pxm/ordering.h"
#include "pxm/paving.h"

namespace pxm {

enum class MinorOp { kDelete, kContract };

std::string_view minor_op_name(MinorOp op);

PavingClutter apply_minor(const PavingClutter& p, int x, MinorOp op);

// Outcome for one single-element minor: an interval ordering when it is
// interval, an obstruction otherwise.
struct MinorResult {
  int x = 0;
  MinorOp op = MinorOp::kDelete;
  std::optional<OrderingWitness> ordering;
  std::optional<ObstructionWitness> obstruction;

  bool interval() const { return ordering.has_value(); }
};

struct XmCertificate {
  bool verdict = false;
  // Obstruction of the clutter itself when it is non-interval.
  std::optional<ObstructionWitness> nonmembership;
  // Interval ordering of the clutter itself when it is interval.
  std::optional<OrderingWitness> own_ordering;
  // Verdict true: 2n entries, ascending x, deletion before contraction.
  std::vector<MinorResult> minor_witnesses;
  // Verdict false on a non-interval clutter: the first non-interval minor,
  // searching x from n down to 1, deletion before contraction.
  std::optional<MinorResult> failure;
  // With full diagnostics: every single-element minor, ascending.
  std::vector<MinorResult> diagnostics;
};

// A d-paving clutter is an excluded minor of interval positroids iff it is
// non-interval and all 2n single-element minors are interval. Throws
// ColoopPresent.
XmCertificate check_excluded_minor(const PavingClutter& p,
                                   bool full_diagnostics = false);

// Recomputes every minor and re-verifies every witness in the certificate.
// Malformed witnesses give false.
bool verify_certificate(const PavingClutter& p, const XmCertificate& cert);

struct CriterionReport {
  bool holds = false;
  // 0 when all three conditions hold, else the first failing one.
  int violated_condition = 0;
  std::string detail;
  // Edges involved in the violation.
  std::vector<std::size_t> edges;
};

// Excluded-minor test for positroids by clutter conditions alone:
//  (1) the clutter is non-interval and CA;
//  (2) every three-edge non-interval CA partial clutter is not a triangle
//      with a common point and has at most one large edge;
//  (3) for large A, B (possibly equal) with A∩B nonempty and edges C, D
//      overlapping A∪B with incomparable traces on A∪B, A∪B ⊆ C∪D.
// Throws NotAPositroid when the input is not CA.
CriterionReport positroid_xm_criterion(const PavingClutter& p);

struct Reduction {
  FamilyParams params;
  // Indices of the kept edges; every other edge is relaxed.
  std::vector<std::size_t> edges;
};

// Smallest edge subset (by size, then lexicographically) that covers the
// ground set and is an O, Y or Sh instance. Throws NoReduction.
Reduction relaxation_reduce(const PavingClutter& p);

// Structural match of a clutter (all edges, no isolated vertex) against the
// O, Y and Sh definitions.
std::optional<FamilyParams> match_base_family(const Clutter& c, int d);

// Family and parameters whose instance is isomorphic to p, or nullopt
// (Unclassified). Throws PreconditionFailed unless p is a non-CA excluded
// minor.
std::optional<FamilyParams> classify_family(const PavingClutter& p);

}  // namespace pxm

#endif  // PXM_EXCLUDED_H_
