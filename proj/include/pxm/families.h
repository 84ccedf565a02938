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

#ifndef PXM_FAMILIES_H_
#define PXM_FAMILIES_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pxm/paving.h"

namespace pxm {

// Excluded-minor families and their vertex layouts. Blocks are listed in the
// order their vertices are numbered, starting at 1.
//
// O_{a_1..a_m; d}: edges A_1..A_m with |A_i ∩ A_{i+1}| = a_i (indices mod m).
//   Layout: A_m∩A_1, A_1 private, A_1∩A_2, A_2 private, ...
//   |A_i| = max(d, a_{i-1} + a_i); a large edge has no private part.
struct OParams {
  int d = 0;
  std::vector<int> a;
  // Optional. When given, must equal the forced sizes above.
  std::vector<int> sizes;
  friend bool operator==(const OParams&, const OParams&) = default;
};

// Y_{a,b;d}: edges A, B, C through a common point v.
//   Layout: v, (A∩C)\B, A private, B private, (B∩C)\A, C private.
struct YParams {
  int d = 0;
  int a = 0;
  int b = 0;
  int c_size = 0;
  friend bool operator==(const YParams&, const YParams&) = default;
};

// Sh_{a,b,c;d}: pairwise disjoint small A, B, C and D meeting each.
//   Layout: A∩D, A private, B∩D, B private, C∩D, C private, D private.
struct ShParams {
  int d = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int d_size = 0;  // 0 means max(d, a + b + c)
  friend bool operator==(const ShParams&, const ShParams&) = default;
};

// Y'_{a,b;d}: Y_{a,b;d} with |C_1| = d + 1 and private point w, plus
// C_2 = (A \ C_1) ∪ {w} ∪ (B \ C_1). Same layout as Y; edges A, B, C_1, C_2.
struct YprimeParams {
  int d = 0;
  int a = 0;
  int b = 0;
  friend bool operator==(const YprimeParams&, const YprimeParams&) = default;
};

// Y_{a_1..a_m, b_1..b_m; d}: edges A, B, C_1..C_m through v, where every
// C_i \ (A ∪ B) is the shared block W. C_i ∩ A' is the last a_i elements of
// A' = A \ {v} and C_i ∩ B' the first b_i elements of B' = B \ {v}.
//   Layout: v, A', W, B'.
struct MultiYParams {
  int d = 0;
  std::vector<int> a;
  std::vector<int> b;
  int w_size = 1;
  friend bool operator==(const MultiYParams&, const MultiYParams&) = default;
};

// The Δ families share the O_{a,b,c} triangle A, B, C with
//   S = A\(B∪C), T = B\(C∪A), U = C\(A∪B), S' = B∩C, T' = C∩A, U' = A∩B,
// |S'| = a, |T'| = b, |U'| = c. Layout: S, T, U, S', T', U'.
//
// Δ¹_{a,b,c}: |S|=a, |T|=b, |U|=c, fourth edge S∪T∪U, d = a+b+c.
struct Delta1Params {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const Delta1Params&, const Delta1Params&) = default;
};

// Δ²_{a,b,c;k}: |S|=a+k, |T|=b+k, |U|=c+k, fourth edge S'∪T'∪U',
// d = a+b+c+k.
struct Delta2Params {
  int a = 0;
  int b = 0;
  int c = 0;
  int k = 0;
  friend bool operator==(const Delta2Params&, const Delta2Params&) = default;
};

// Δ³_{a,b,c}: Δ¹ plus the edge S'∪T'∪U'.
struct Delta3Params {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const Delta3Params&, const Delta3Params&) = default;
};

using FamilyParams =
    std::variant<OParams, YParams, ShParams, YprimeParams, MultiYParams,
                 Delta1Params, Delta2Params, Delta3Params>;

enum class FamilyTag { kO, kY, kSh, kYprime, kMultiY, kDelta1, kDelta2, kDelta3 };

FamilyTag family_tag(const FamilyParams& p);
std::string_view family_name(FamilyTag tag);
// Throws ParseError.
FamilyTag parse_family_tag(std::string_view name);

// Rank of the generated clutter (derived for the Δ families).
int family_rank(const FamilyParams& p);

// Human-readable form such as "O(d=3;a=1,1,1)".
std::string describe(const FamilyParams& p);

struct Violation {
  std::string constraint;  // e.g. "a <= d-3"
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate_params(const FamilyParams& p);

// Throws InvalidParams naming every violated constraint.
PavingClutter gen_family(const FamilyParams& p);

// Ground-set size of gen_family(p); requires valid params.
int family_size(const FamilyParams& p);

// Every valid parameter tuple whose instance has at most max_n vertices.
std::vector<FamilyParams> all_family_params(int max_n);

}  // namespace pxm

#endif  // PXM_FAMILIES_H_
