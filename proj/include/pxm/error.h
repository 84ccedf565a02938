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

#ifndef PXM_ERROR_H_
#define PXM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pxm {

// Every failure raised by the library carries one of these kinds. The CLI
// reports kind_name() verbatim, so the names are part of the interface.
enum class ErrorKind {
  // clutter construction
  kEdgeOutOfRange,
  kEmptyEdge,
  kComparableEdges,
  kDuplicateEdge,
  kIndexOutOfRange,
  kGroundSetTooLarge,
  // orderings and blocks
  kLengthMismatch,
  kNotAPermutation,
  kNotApplicable,
  kNotAClutter,
  kPreconditionFailed,
  // obstructions
  kWrongEdgeCount,
  // paving
  kEdgeTooSmall,
  kIntersectionTooLarge,
  kRankOutOfRange,
  kNoSuchEdge,
  kColoopDeletion,
  kVertexOutOfRange,
  kDegenerateMinor,
  // families and excluded minors
  kInvalidParams,
  kColoopPresent,
  kNotAPositroid,
  kNoReduction,
  // enumeration and interface
  kCapExceeded,
  kParseError,
  kUsage,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace pxm

#endif  // PXM_ERROR_H_
