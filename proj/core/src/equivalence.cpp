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

#include "crfkit/equivalence.hpp"

#include <algorithm>

namespace crfkit {

SubsetRecord subset_record(const PureState& state, const PartySubset& subset) {
  const ConvexRigidFrame frame = build_frame(state, subset);
  const FrameGeometry g = frame_geometry(frame);
  SubsetRecord rec{subset};
  rec.weights.reserve(frame.vertices.size());
  for (const Vertex& v : frame.vertices) rec.weights.push_back(v.weight);
  rec.defined = g.indices;
  rec.dist = g.dist;
  rec.diameter = g.diameter;
  rec.affine_rank = g.affine_rank;
  rec.volume = g.volume;
  rec.angles = angle_cosines(frame, g);
  return rec;
}

InvariantSignature signature(const PureState& state) {
  InvariantSignature sig;
  sig.parties = state.parties();
  sig.local_dim = state.local_dim();
  for (const PartySubset& s : proper_subsets(state.parties())) {
    sig.subsets.push_back(subset_record(state, s));
  }
  auto volume_of = [&](const PartySubset& s) {
    const auto it = std::find_if(sig.subsets.begin(), sig.subsets.end(),
                                 [&](const SubsetRecord& r) { return r.subset == s; });
    return it->volume;
  };
  for (const Bipartition& bp : bipartitions(state.parties())) {
    sig.volume_pairs.push_back({bp, {volume_of(bp.left), volume_of(bp.right)}});
  }
  return sig;
}

MotionComparison motion_equivalent(const PureState& a, const PureState& b, double tol) {
  if (a.parties() != b.parties() || a.local_dim() != b.local_dim()) {
    throw ValidationError("states have different shapes (M, N)");
  }
  MotionComparison out;
  for (const PartySubset& s : proper_subsets(a.parties())) {
    const FrameDiscrepancy d = frame_discrepancy(build_frame(a, s), build_frame(b, s));
    out.max_weight_diff = std::max(out.max_weight_diff, d.max_weight_diff);
    out.max_distance_diff = std::max(out.max_distance_diff, d.max_distance_diff);
    const bool same = !d.definedness_mismatch && d.max_weight_diff <= tol && d.max_distance_diff <= tol;
    if (!same) {
      out.equivalent = false;
      ++out.violation_count;
      if (out.violations.size() < kMaxReportedViolations) out.violations.push_back({s, d});
    }
  }
  return out;
}

std::string to_string(LuKind kind) {
  switch (kind) {
    case LuKind::haar: return "haar";
    case LuKind::diag_phase: return "phase";
    case LuKind::complement: return "complement";
  }
  return "unknown";
}

LuKind parse_lu_kind(const std::string& text) {
  if (text == "haar") return LuKind::haar;
  if (text == "phase" || text == "diag-phase") return LuKind::diag_phase;
  if (text == "complement") return LuKind::complement;
  throw ValidationError("unknown unitary kind '" + text + "' (expected haar, phase or complement)");
}

AuditTrial audit_trial(const PureState& state, const LocalUnitary& lu, double tol,
                       const std::optional<PartySubset>& target) {
  const PureState moved = apply_local_unitary(state, lu);
  const MotionComparison cmp = motion_equivalent(state, moved, tol);
  AuditTrial t;
  t.motion_equivalent = cmp.equivalent;
  t.max_weight_diff = cmp.max_weight_diff;
  t.max_distance_diff = cmp.max_distance_diff;
  t.preserved = cmp.equivalent;
  if (target) {
    t.target_frame_identical = frames_identical(build_frame(state, *target), build_frame(moved, *target), tol);
    t.preserved = *t.target_frame_identical;
  }
  return t;
}

AuditReport audit_lu_invariance(const PureState& state, std::size_t trials, LuKind kind, std::uint64_t seed,
                           double tol, const std::optional<PartySubset>& subset) {
  if (trials < 1) throw ValidationError("audit needs at least one trial");
  if (kind == LuKind::complement && !subset) {
    throw ValidationError("complement audit needs a target subset");
  }
  if (subset && subset->parties() != state.parties()) {
    throw ValidationError("subset was built for a different party count");
  }
  AuditReport report;
  report.trials = trials;
  report.kind = kind;
  if (kind == LuKind::complement) report.subset = subset;

  const int m = state.parties();
  const int n = state.local_dim();
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = derive_seed(seed, i);
    std::optional<LocalUnitary> lu;
    switch (kind) {
      case LuKind::haar: {
        std::vector<CMatrix> f;
        for (int p = 1; p <= m; ++p) {
          f.push_back(random_haar_unitary(n, derive_seed(trial_seed, static_cast<std::uint64_t>(p))));
        }
        lu.emplace(std::move(f));
        break;
      }
      case LuKind::diag_phase:
        lu.emplace(random_frame_preserving_lu(m, n, trial_seed));
        break;
      case LuKind::complement:
        lu.emplace(random_complement_lu(*subset, n, trial_seed));
        break;
    }
    AuditTrial t = audit_trial(state, *lu, tol, kind == LuKind::complement ? subset : std::nullopt);
    t.index = i;
    t.seed = trial_seed;
    if (t.preserved) {
      ++report.preserved_count;
    } else {
      ++report.violated_count;
    }
    if (t.motion_equivalent) ++report.motion_equivalent_count;
    report.per_trial.push_back(t);
  }
  return report;
}

LocalUnitary random_frame_preserving_lu(int parties, int local_dim, std::uint64_t seed) {
  return random_diag_phase_lu(parties, local_dim, seed);
}

}  // namespace crfkit
