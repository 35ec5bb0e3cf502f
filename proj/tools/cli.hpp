// Copyright 2026 The crfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crfkit::cli {

inline constexpr const char* kToolName = "crfkit";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 ran to completion, 2 input or validation error,
/// 3 numerical failure or failed audit assertion.
enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitNumerical = 3 };

/// Runs the command line `args` (args[0] is the program name). Reports and
/// state files go to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crfkit::cli
