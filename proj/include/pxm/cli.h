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

#ifndef PXM_CLI_H_
#define PXM_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pxm::cli {

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

// Environment variable overriding the enumeration cap.
inline constexpr const char* kCapVariable = "PXM_ENUM_CAP";

// Runs one command. `args` excludes the program name. JSON goes to `out`,
// help text and diagnostics to `err`. Errors are reported on `out` as
// {"error": {"kind": ..., "message": ...}} with exit code 2.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace pxm::cli

#endif  // PXM_CLI_H_
