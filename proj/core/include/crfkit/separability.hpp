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

// Bipartite separability of pure states decided by frame shrinkage, with an
// independent singular-value oracle on the bipartite reshape.

#include <optional>
#include <utility>
#include <vector>

#include "crfkit/geometry.hpp"

namespace crfkit {

inline constexpr double kDefaultSeparabilityTol = 1e-8;

enum class VerdictMethod { crf, svd };

struct SeparabilityVerdict {
  Bipartition bipartition;
  VerdictMethod method = VerdictMethod::crf;
  bool separable = false;
  /// Diameter of the left frame (crf verdicts only).
  std::optional<double> diameter{};
  /// Diameter of the right frame; the two frames must agree on shrinkage.
  std::optional<double> complement_diameter{};
  std::optional<double> oracle_second_singular{};
  std::optional<bool> agreement{};
};

/// Separable iff every pair of defined left-frame vertices is within `tol`.
/// Frames with a single defined vertex count as shrunk.
SeparabilityVerdict is_separable_crf(const PureState& state, const Bipartition& bp,
                                     double tol = kDefaultSeparabilityTol);

/// Separable iff the second singular value of the bipartite reshape is <= tol.
SeparabilityVerdict svd_oracle(const PureState& state, const Bipartition& bp,
                               double tol = kDefaultSeparabilityTol);

/// Descending singular values of the bipartite reshape.
RVector schmidt_coefficients(const PureState& state, const Bipartition& bp);

struct SeparabilityProfile {
  std::vector<SeparabilityVerdict> verdicts;  // canonical bipartitions, bipartitions() order
  bool fully_separable = false;
};

/// crf verdict for every unordered bipartition; with `with_oracle` the svd
/// result and the agreement flag are filled in as well.
SeparabilityProfile separability_profile(const PureState& state, double tol = kDefaultSeparabilityTol,
                                         bool with_oracle = false);

/// Factors on the left and right parties (each in ascending label order).
/// Throws PreconditionError when the state is not separable across `bp`.
std::pair<PureState, PureState> factorize(const PureState& state, const Bipartition& bp,
                                          double tol = kDefaultSeparabilityTol);

}  // namespace crfkit
