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

// Hilbert-Schmidt geometry of convex rigid frames: overlap Gram matrix,
// vertex distances, simplex content and the point-to-vertex angle cosines.
//
// Vertices are pure-state projectors, so every quantity here is a function of
// the weights and the Gram matrix G_ij = |<phi_i|phi_j>|^2 = tr(sigma_i sigma_j).
// H-S vectors sum_i a_i sigma_i are never materialized; their inner products
// are a^T G b.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crfkit/frames.hpp"

namespace crfkit {

/// Relative eigenvalue threshold for the affine rank.
inline constexpr double kRankThreshold = 1e-10;

double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b);
double hs_distance(const HermitianMatrix& a, const HermitianMatrix& b);

struct SimplexContent {
  int affine_rank = 0;
  double volume = 0.0;
};

/// (n-1)-simplex content of n points from their pairwise distances, through
/// the bordered Cayley-Menger determinant. Affinely dependent point sets
/// report volume 0 together with their affine rank.
SimplexContent cayley_menger_volume(const RMatrix& dist);

struct FrameGeometry {
  std::size_t n_defined = 0;
  std::vector<std::size_t> indices;      // flat labels of the defined vertices
  std::vector<std::vector<int>> labels;  // their digit tuples
  RMatrix gram;
  RMatrix dist;
  double diameter = 0.0;
  int affine_rank = 0;
  double volume = 0.0;
};

/// Throws DegenerateError when no vertex is defined.
FrameGeometry frame_geometry(const ConvexRigidFrame& frame);

struct VolumePair {
  double left_volume = 0.0;
  double right_volume = 0.0;
};

VolumePair volume_pair(const PureState& state, const Bipartition& bp);

/// Coefficients lambda_i - [i == k] over the defined vertices (label order).
RVector direction_coeffs(const ConvexRigidFrame& frame, std::span<const int> label);

/// cos of the angle between the directions from the frame point to vertices k and l.
double vertex_angle_cos(const ConvexRigidFrame& frame, std::span<const int> k, std::span<const int> l);

struct AngleRecord {
  std::size_t k = 0;  // flat label
  std::size_t l = 0;
  std::optional<double> cos;  // empty when a direction has zero length
};

/// Every defined pair k < l, using a precomputed geometry of the same frame.
std::vector<AngleRecord> angle_cosines(const ConvexRigidFrame& frame, const FrameGeometry& geometry);

}  // namespace crfkit
