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

// StateFile: {"parties": M, "local_dim": N, "amplitudes": [[re, im], ...]}
// with amplitudes row-major over (i_1, ..., i_M), i_1 slowest.

#include <string>
#include <vector>

#include "crfkit/tensor.hpp"

namespace crfkit::cli {

/// |norm - 1| up to this is renormalized silently.
inline constexpr double kSilentNormTol = 1e-6;
/// |norm - 1| up to this is renormalized with a warning; beyond it is an error.
inline constexpr double kMaxNormDeviation = 1e-3;

/// Throws ValidationError on malformed content. Renormalization warnings are
/// appended to `warnings`.
PureState parse_state_file(const std::string& text, std::vector<std::string>& warnings);
PureState read_state_file(const std::string& path, std::vector<std::string>& warnings);

std::string format_state_file(const PureState& state);

/// Hex SHA-256 of raw bytes.
std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace crfkit::cli
