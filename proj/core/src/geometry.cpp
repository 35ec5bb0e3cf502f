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

#include "crfkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crfkit {

namespace {

constexpr double kMinDirectionNorm = 1e-12;

RVector defined_weights(const ConvexRigidFrame& frame, const std::vector<std::size_t>& idx) {
  RVector w(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) w(static_cast<Eigen::Index>(a)) = frame.vertices[idx[a]].weight;
  return w;
}

RMatrix overlap_gram(const ConvexRigidFrame& frame, const std::vector<std::size_t>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  RMatrix g = RMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double ov = std::norm(frame.vertices[idx[static_cast<std::size_t>(i)]].state->dot(
          *frame.vertices[idx[static_cast<std::size_t>(j)]].state));
      g(i, j) = g(j, i) = std::clamp(ov, 0.0, 1.0);
    }
  }
  return g;
}

std::size_t index_of(const ConvexRigidFrame& frame, std::span<const int> label) {
  if (static_cast<int>(label.size()) != frame.subset.size()) {
    throw ValidationError("vertex label needs " + std::to_string(frame.subset.size()) + " digits");
  }
  const std::size_t flat = pack_index(label, frame.local_dim);
  if (!frame.vertices.at(flat).defined()) {
    throw UndefinedVertexError("vertex " + std::to_string(flat) + " is absent (zero weight)");
  }
  return flat;
}

RVector coeffs_for(const RVector& weights, Eigen::Index k) {
  RVector c = weights;
  c(k) -= 1.0;
  return c;
}

std::optional<double> angle_from_gram(const RVector& a, const RVector& b, const RMatrix& g) {
  const double na2 = a.dot(g * a);
  const double nb2 = b.dot(g * b);
  const double na = std::sqrt(std::max(na2, 0.0));
  const double nb = std::sqrt(std::max(nb2, 0.0));
  if (na <= kMinDirectionNorm || nb <= kMinDirectionNorm) return std::nullopt;
  const double c = a.dot(g * b) / (na * nb);
  if (!(std::abs(c) <= 1.0 + 1e-12)) {
    throw NumericalError("angle cosine out of range: " + std::to_string(c));
  }
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("Hilbert-Schmidt inner product needs equal dimensions");
  // tr(A^dagger B) = sum conj(A_ij) B_ij; real for Hermitian A, B
  return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum().real();
}

double hs_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("Hilbert-Schmidt distance needs equal dimensions");
  return (a.matrix() - b.matrix()).norm();
}

SimplexContent cayley_menger_volume(const RMatrix& dist) {
  const Eigen::Index n = dist.rows();
  if (dist.cols() != n) throw ValidationError("distance matrix must be square");
  if (!dist.allFinite()) throw ValidationError("distance matrix must be finite");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(dist(i, i)) > 1e-12) throw ValidationError("distance matrix must have a zero diagonal");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(dist(i, j) - dist(j, i)) > 1e-12) {
        throw ValidationError("distance matrix is not symmetric");
      }
      if (dist(i, j) < 0.0) throw ValidationError("distances must be non-negative");
    }
  }
  if (n <= 1) return {};
  const double dmax = dist.maxCoeff();
  if (dmax == 0.0) return {};
  if (n == 2) return {1, dist(0, 1)};

  const RMatrix sq = dist.cwiseProduct(dist);

  // Affine rank: rank of the doubly-centered Gram matrix -1/2 J D^2 J.
  const RMatrix centering = RMatrix::Identity(n, n) - RMatrix::Constant(n, n, 1.0 / static_cast<double>(n));
  const RMatrix b = -0.5 * centering * sq * centering;
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(b, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericalError("eigen-decomposition failed");
  const RVector ev = eig.eigenvalues();
  const double top = ev.maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > kRankThreshold * top) ++rank;
  }
  if (rank < n - 1) return {rank, 0.0};

  // Bordered Cayley-Menger matrix; for k = n-1,
  // V^2 = (-1)^(k+1) det(CM) / (2^k (k!)^2).
  RMatrix cm = RMatrix::Ones(n + 1, n + 1);
  cm(0, 0) = 0.0;
  cm.bottomRightCorner(n, n) = sq;
  const Eigen::FullPivLU<RMatrix> lu(cm);
  const RVector diag = lu.matrixLU().diagonal();
  double log_abs_det = 0.0;
  double sign = lu.permutationP().determinant() * lu.permutationQ().determinant();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (diag(i) == 0.0) return {rank, 0.0};
    log_abs_det += std::log(std::abs(diag(i)));
    if (diag(i) < 0.0) sign = -sign;
  }
  const auto k = static_cast<double>(n - 1);
  if ((n % 2 == 0 ? 1.0 : -1.0) * sign <= 0.0) return {rank, 0.0};  // (-1)^(k+1) = (-1)^n
  const double log_v2 = log_abs_det - k * std::log(2.0) - 2.0 * std::lgamma(k + 1.0);
  // Relative cut against the content scale dmax^k / k!.
  const double log_scale2 = 2.0 * (k * std::log(dmax) - std::lgamma(k + 1.0));
  if (log_v2 - log_scale2 < std::log(kRankThreshold)) return {rank, 0.0};
  return {rank, std::exp(0.5 * log_v2)};
}

FrameGeometry frame_geometry(const ConvexRigidFrame& frame) {
  FrameGeometry g;
  g.indices = frame.defined_indices();
  g.n_defined = g.indices.size();
  if (g.n_defined == 0) throw DegenerateError("frame has no defined vertices");
  for (std::size_t i : g.indices) g.labels.push_back(frame.vertices[i].label);
  g.gram = overlap_gram(frame, g.indices);

  const auto n = static_cast<Eigen::Index>(g.n_defined);
  g.dist = RMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = projector_distance(*frame.vertices[g.indices[static_cast<std::size_t>(i)]].state,
                                          *frame.vertices[g.indices[static_cast<std::size_t>(j)]].state);
      g.dist(i, j) = g.dist(j, i) = d;
      g.diameter = std::max(g.diameter, d);
    }
  }
  const SimplexContent c = cayley_menger_volume(g.dist);
  g.affine_rank = c.affine_rank;
  g.volume = c.volume;
  return g;
}

VolumePair volume_pair(const PureState& state, const Bipartition& bp) {
  return {frame_geometry(build_frame(state, bp.left)).volume,
          frame_geometry(build_frame(state, bp.right)).volume};
}

RVector direction_coeffs(const ConvexRigidFrame& frame, std::span<const int> label) {
  const std::size_t flat = index_of(frame, label);
  const auto idx = frame.defined_indices();
  const auto pos = std::find(idx.begin(), idx.end(), flat) - idx.begin();
  return coeffs_for(defined_weights(frame, idx), pos);
}

double vertex_angle_cos(const ConvexRigidFrame& frame, std::span<const int> k, std::span<const int> l) {
  const std::size_t fk = index_of(frame, k);
  const std::size_t fl = index_of(frame, l);
  if (fk == fl) throw ValidationError("angle needs two distinct vertices");
  const auto idx = frame.defined_indices();
  const RVector w = defined_weights(frame, idx);
  const RMatrix g = overlap_gram(frame, idx);
  const auto pk = std::find(idx.begin(), idx.end(), fk) - idx.begin();
  const auto pl = std::find(idx.begin(), idx.end(), fl) - idx.begin();
  const auto c = angle_from_gram(coeffs_for(w, pk), coeffs_for(w, pl), g);
  if (!c) throw DegenerateError("direction vector has zero length (frame point sits on a vertex)");
  return *c;
}

std::vector<AngleRecord> angle_cosines(const ConvexRigidFrame& frame, const FrameGeometry& geometry) {
  const RVector w = defined_weights(frame, geometry.indices);
  const auto n = static_cast<Eigen::Index>(geometry.n_defined);
  // column k holds the coefficients of omega_k
  const RMatrix c = w * RVector::Ones(n).transpose() - RMatrix::Identity(n, n);
  const RMatrix lifted = c.transpose() * geometry.gram * c;

  std::vector<AngleRecord> out;
  out.reserve(geometry.n_defined * (geometry.n_defined - 1) / 2);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = k + 1; l < n; ++l) {
      AngleRecord rec{geometry.indices[static_cast<std::size_t>(k)],
                      geometry.indices[static_cast<std::size_t>(l)], std::nullopt};
      const double nk = std::sqrt(std::max(lifted(k, k), 0.0));
      const double nl = std::sqrt(std::max(lifted(l, l), 0.0));
      if (nk > kMinDirectionNorm && nl > kMinDirectionNorm) {
        const double cs = lifted(k, l) / (nk * nl);
        if (!(std::abs(cs) <= 1.0 + 1e-12)) {
          throw NumericalError("angle cosine out of range: " + std::to_string(cs));
        }
        rec.cos = std::clamp(cs, -1.0, 1.0);
      }
      out.push_back(rec);
    }
  }
  return out;
}

}  // namespace crfkit
