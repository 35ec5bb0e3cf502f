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

// Convex rigid frames: slice a state over the parties of a subset (r)_P,
// normalize each slice, and keep the slice weights as convex coefficients.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crfkit/tensor.hpp"

namespace crfkit {

/// Slices with weight at or below this are ABSENT and carry no state.
inline constexpr double kAbsentWeight = 1e-14;
inline constexpr double kDefaultFrameTol = 1e-9;

struct Vertex {
  std::vector<int> label;        // digits on (r)_P, row-major
  double weight = 0.0;           // lambda = eta^2
  std::optional<CVector> state;  // unit vector on the complement, absent when weight <= kAbsentWeight

  bool defined() const noexcept { return state.has_value(); }
};

struct ConvexRigidFrame {
  PartySubset subset;
  int parties;
  int local_dim;
  std::vector<Vertex> vertices;  // N^P entries, label order

  std::size_t defined_count() const noexcept;
  /// Indices (flat labels) of defined vertices, ascending.
  std::vector<std::size_t> defined_indices() const;
};

Vertex slice_component(const PureState& state, const PartySubset& subset, std::span<const int> label);
ConvexRigidFrame build_frame(const PureState& state, const PartySubset& subset);

/// sum_i lambda_i |phi_i><phi_i|
HermitianMatrix frame_point(const ConvexRigidFrame& frame);

/// Hilbert-Schmidt distance between |a><a| and |b><b| for unit vectors,
/// sqrt(2 - 2|<a|b>|^2), evaluated without cancellation near zero.
double projector_distance(const CVector& a, const CVector& b);

struct FrameDiscrepancy {
  double max_weight_diff = 0.0;
  double max_distance_diff = 0.0;
  bool definedness_mismatch = false;
};

/// Label-matched comparison; throws ValidationError when (M, N, P) differ.
FrameDiscrepancy frame_discrepancy(const ConvexRigidFrame& f, const ConvexRigidFrame& g);
bool frames_identical(const ConvexRigidFrame& f, const ConvexRigidFrame& g,
                      double tol = kDefaultFrameTol);

/// Builds |Phi> with f = sqrt(lambda_[i]) * d at the merged multi-index.
/// `vertices` are taken in label order; labels stored in them are ignored.
PureState assemble_state(const PartySubset& subset, int local_dim, std::span<const Vertex> vertices);
PureState assemble_state(const ConvexRigidFrame& frame);

}  // namespace crfkit
