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

#include "crfkit/separability.hpp"

#include <cmath>

namespace crfkit {

namespace {

double frame_diameter(const PureState& state, const PartySubset& subset) {
  const ConvexRigidFrame frame = build_frame(state, subset);
  const auto idx = frame.defined_indices();
  double diam = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      diam = std::max(diam, projector_distance(*frame.vertices[idx[a]].state, *frame.vertices[idx[b]].state));
    }
  }
  return diam;
}

}  // namespace

SeparabilityVerdict is_separable_crf(const PureState& state, const Bipartition& bp, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  SeparabilityVerdict v{bp};
  v.method = VerdictMethod::crf;
  v.diameter = frame_diameter(state, bp.left);
  v.complement_diameter = frame_diameter(state, bp.right);
  v.separable = *v.diameter <= tol;
#ifndef NDEBUG
  if (v.separable != (*v.complement_diameter <= tol)) {
    throw NumericalError("left and right frames disagree on shrinkage for " + bp.to_string());
  }
#endif
  return v;
}

RVector schmidt_coefficients(const PureState& state, const Bipartition& bp) {
  const CMatrix r = reshape_bipartite(state, bp);
  Eigen::JacobiSVD<CMatrix> svd(r);
  const RVector s = svd.singularValues();
  if (!s.allFinite()) throw NumericalError("SVD produced non-finite singular values");
  return s;
}

SeparabilityVerdict svd_oracle(const PureState& state, const Bipartition& bp, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  const RVector s = schmidt_coefficients(state, bp);
  SeparabilityVerdict v{bp};
  v.method = VerdictMethod::svd;
  v.oracle_second_singular = s.size() > 1 ? s(1) : 0.0;
  v.separable = *v.oracle_second_singular <= tol;
  return v;
}

SeparabilityProfile separability_profile(const PureState& state, double tol, bool with_oracle) {
  if (state.parties() > kMaxEnumerationParties) {
    throw ResourceError("separability profile limited to M <= " + std::to_string(kMaxEnumerationParties));
  }
  SeparabilityProfile profile;
  profile.fully_separable = true;
  for (const Bipartition& bp : bipartitions(state.parties())) {
    SeparabilityVerdict v = is_separable_crf(state, bp, tol);
    if (with_oracle) {
      const SeparabilityVerdict o = svd_oracle(state, bp, tol);
      v.oracle_second_singular = o.oracle_second_singular;
      v.agreement = o.separable == v.separable;
    }
    profile.fully_separable = profile.fully_separable && v.separable;
    profile.verdicts.push_back(std::move(v));
  }
  return profile;
}

std::pair<PureState, PureState> factorize(const PureState& state, const Bipartition& bp, double tol) {
  if (!is_separable_crf(state, bp, tol).separable) {
    throw PreconditionError("state is not separable across " + bp.to_string());
  }
  const CMatrix r = reshape_bipartite(state, bp);
  Eigen::JacobiSVD<CMatrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  // r ~ s0 u0 v0^dagger, so the right factor is conj(v0)
  CVector left = svd.matrixU().col(0);
  CVector right = svd.matrixV().col(0).conjugate();
  canonicalize_phase(left);
  canonicalize_phase(right);
  const int n = state.local_dim();
  return {normalize_state(bp.left.size(), n, std::move(left)),
          normalize_state(bp.right.size(), n, std::move(right))};
}

}  // namespace crfkit
