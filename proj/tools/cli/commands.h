// Copyright 2026 The kip Authors
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

#ifndef KIP_TOOLS_CLI_COMMANDS_H_
#define KIP_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "kip/error.h"
#include "kip/instance.h"
#include "kip/solution.h"

namespace kip::cli {

// Exit-code contract shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitParams = 3;
inline constexpr int kExitSize = 4;

int ExitCodeFor(ErrorCode code);

// Pretty-printed JSON; rationals are "num/den" strings (plain integers when
// the denominator is 1). Elapsed time is only included when requested.
std::string SolutionToJson(const Solution& solution, bool with_timing = false,
                           double elapsed_ms = 0);
std::string SolutionToText(const Solution& solution);

// Recomputes F(x) from scratch and checks the budget; returns an empty string
// on success or a description of the mismatch.
std::string CertifySolution(const Instance& inst, const Solution& solution);

// Entry point behind the `kip` executable. args[0] is the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace kip::cli

#endif  // KIP_TOOLS_CLI_COMMANDS_H_
