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

#include "pxm/error.h"

namespace pxm {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::kEmptyEdge: return "EmptyEdge";
    case ErrorKind::kComparableEdges: return "ComparableEdges";
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNotAPermutation: return "NotAPermutation";
    case ErrorKind::kNotApplicable: return "NotApplicable";
    case ErrorKind::kNotAClutter: return "NotAClutter";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kWrongEdgeCount: return "WrongEdgeCount";
    case ErrorKind::kEdgeTooSmall: return "EdgeTooSmall";
    case ErrorKind::kIntersectionTooLarge: return "IntersectionTooLarge";
    case ErrorKind::kRankOutOfRange: return "RankOutOfRange";
    case ErrorKind::kNoSuchEdge: return "NoSuchEdge";
    case ErrorKind::kColoopDeletion: return "ColoopDeletion";
    case ErrorKind::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::kDegenerateMinor: return "DegenerateMinor";
    case ErrorKind::kInvalidParams: return "InvalidParams";
    case ErrorKind::kColoopPresent: return "ColoopPresent";
    case ErrorKind::kNotAPositroid: return "NotAPositroid";
    case ErrorKind::kNoReduction: return "NoReduction";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUsage: return "Usage";
  }
  return "Unknown";
}

}  // namespace pxm
