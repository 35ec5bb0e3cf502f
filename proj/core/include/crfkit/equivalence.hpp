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

// Motion-equivalence of states: frames identical for every proper subset.
// Also hosts the invariant signature and the local-unitary audit instrument.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crfkit/separability.hpp"

namespace crfkit {

struct SubsetRecord {
  PartySubset subset;
  std::vector<double> weights{};  // all N^P, label order
  std::vector<std::size_t> defined{};
  RMatrix dist{};
  double diameter = 0.0;
  int affine_rank = 0;
  double volume = 0.0;
  std::vector<AngleRecord> angles{};
};

struct BipartitionVolumes {
  Bipartition bipartition;
  VolumePair volumes;
};

struct InvariantSignature {
  int parties = 0;
  int local_dim = 0;
  std::vector<SubsetRecord> subsets;          // proper_subsets() order
  std::vector<BipartitionVolumes> volume_pairs;  // bipartitions() order
};

SubsetRecord subset_record(const PureState& state, const PartySubset& subset);
InvariantSignature signature(const PureState& state);

struct SubsetDiff {
  PartySubset subset;
  FrameDiscrepancy discrepancy;
};

struct MotionComparison {
  bool equivalent = true;
  std::size_t violation_count = 0;
  /// First few violating subsets, canonical order.
  std::vector<SubsetDiff> violations;
  double max_weight_diff = 0.0;
  double max_distance_diff = 0.0;
};

inline constexpr std::size_t kMaxReportedViolations = 5;

MotionComparison motion_equivalent(const PureState& a, const PureState& b, double tol = kDefaultFrameTol);

enum class LuKind { haar, diag_phase, complement };

std::string to_string(LuKind kind);
/// "haar", "phase" / "diag-phase", "complement"; throws ValidationError otherwise.
LuKind parse_lu_kind(const std::string& text);

struct AuditTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool motion_equivalent = false;
  /// Only for complement kind: frame of the fixed subset unchanged.
  std::optional<bool> target_frame_identical;
  double max_weight_diff = 0.0;
  double max_distance_diff = 0.0;
  /// The property the kind is audited for: full motion-equivalence, or
  /// target-frame identity for complement kind.
  bool preserved = false;
};

struct AuditReport {
  std::size_t trials = 0;
  LuKind kind = LuKind::haar;
  std::optional<PartySubset> subset;
  std::vector<AuditTrial> per_trial;
  std::size_t preserved_count = 0;
  std::size_t violated_count = 0;
  std::size_t motion_equivalent_count = 0;
};

/// Compares `state` with lu * state. With `target` set, also records whether
/// that subset's frame is unchanged and uses it as the preserved property.
AuditTrial audit_trial(const PureState& state, const LocalUnitary& lu, double tol,
                       const std::optional<PartySubset>& target = std::nullopt);

/// Draws `trials` local unitaries of the given kind with per-trial seeds
/// derive_seed(seed, index). Records outcomes; asserts nothing.
AuditReport audit_lu_invariance(const PureState& state, std::size_t trials, LuKind kind, std::uint64_t seed,
                           double tol = kDefaultFrameTol,
                           const std::optional<PartySubset>& subset = std::nullopt);

/// Diagonal unit-modulus factors: a motion for every subset.
LocalUnitary random_frame_preserving_lu(int parties, int local_dim, std::uint64_t seed);

}  // namespace crfkit
