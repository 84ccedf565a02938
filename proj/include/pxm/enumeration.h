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

#ifndef PXM_ENUMERATION_H_
#define PXM_ENUMERATION_H_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "pxm/canonical.h"
#include "pxm/excluded.h"
#include "pxm/families.h"
#include "pxm/paving.h"

namespace pxm {

inline constexpr int kDefaultEnumerationCap = 10;

// One canonical representative per isomorphism class of d-paving clutters on
// n vertices, the empty clutter first, in depth-first canonical-augmentation
// order. A child Y + e is kept only when e lies in the automorphism orbit of
// the canonical first edge of Y + e. Throws CapExceeded when n > cap and
// RankOutOfRange unless 2 <= d <= n.
void enumerate_paving(int d, int n,
                      const std::function<void(const PavingClutter&)>& sink,
                      int cap = kDefaultEnumerationCap);
std::vector<PavingClutter> enumerate_paving(int d, int n,
                                            int cap = kDefaultEnumerationCap);

enum class Category { kIntervalPositroid, kPositroidNonInterval, kNonPositroid };

std::string_view category_name(Category c);
Category categorize(const PavingClutter& p);

struct ExcludedMinorEntry {
  PavingClutter clutter;  // canonical labeling
  bool positroid = false;
  XmCertificate certificate;
  // Non-positroids only; nullopt means unclassified.
  std::optional<FamilyParams> family;
  // Positroids only.
  std::optional<CriterionReport> criterion;
  std::optional<Reduction> reduction;
  std::string reduction_error;
};

struct CensusRow {
  int n = 0;
  std::size_t total = 0;
  std::array<std::size_t, 3> by_category{};  // indexed by Category
  std::size_t positroid_excluded = 0;
  std::size_t non_positroid_excluded = 0;
};

struct CensusOptions {
  int n_min = 0;  // 0 means d
  int jobs = 1;
  int cap = kDefaultEnumerationCap;
  // Re-decide every verdict with the definition-level check.
  bool cross_validate = true;
};

struct CensusReport {
  int d = 0;
  int n_min = 0;
  int n_max = 0;
  std::vector<CensusRow> rows;
  // Sorted by canonical key.
  std::vector<ExcludedMinorEntry> excluded;
  // Clutters where the definition-level check disagreed with the verdict.
  std::vector<PavingClutter> oracle_disagreements;
  // Positroids where the clutter criterion disagreed with the verdict.
  std::vector<PavingClutter> criterion_disagreements;
  std::size_t cross_validated = 0;
};

CensusReport census(int d, int n_max, const CensusOptions& options = {});

}  // namespace pxm

#endif  // PXM_ENUMERATION_H_
