// Copyright 2026 The Proofsmith Authors.
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


// Command-line driver. Every run writes one manifest next to its primary
// output: `<output>.manifest.json` unless --manifest names another path.

#ifndef PROOFSMITH_CLI_HPP_
#define PROOFSMITH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace proofsmith::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // bad inputs, empty KB, all facts discarded
inline constexpr int kExitUsage = 2;   // unknown flags, bad flag values
inline constexpr int kExitOracle = 3;  // sidecar unreachable or speaking nonsense

// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, const char* const* argv);

}  // namespace proofsmith::cli

#endif  // PROOFSMITH_CLI_HPP_
