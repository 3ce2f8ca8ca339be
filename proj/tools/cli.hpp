// Copyright 2026 The toruspenny Authors
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

#ifndef TORUSPENNY_TOOLS_CLI_HPP_
#define TORUSPENNY_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace toruspenny::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr int kSchemaVersion = 1;

// Runs one command. `args` excludes the program name. Reports go to `out` as
// JSON (SVG for `render` without --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace toruspenny::cli

#endif  // TORUSPENNY_TOOLS_CLI_HPP_
