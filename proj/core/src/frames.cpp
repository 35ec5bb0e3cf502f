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

#include "crfkit/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crfkit {

namespace {

Vertex make_vertex(std::vector<int> label, const CVector& slice) {
  Vertex v;
  v.label = std::move(label);
  v.weight = slice.squaredNorm();
  if (v.weight > kAbsentWeight) v.state = slice / std::sqrt(v.weight);
  return v;
}

}  // namespace

std::size_t ConvexRigidFrame::defined_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [](const Vertex& v) { return v.defined(); }));
}

std::vector<std::size_t> ConvexRigidFrame::defined_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].defined()) out.push_back(i);
  }
  return out;
}

Vertex slice_component(const PureState& state, const PartySubset& subset, std::span<const int> label) {
  if (subset.parties() != state.parties()) {
    throw ValidationError("subset was built for a different party count");
  }
  if (static_cast<int>(label.size()) != subset.size()) {
    throw ValidationError("label needs " + std::to_string(subset.size()) + " digits");
  }
  const int m = state.parties();
  const int n = state.local_dim();
  std::size_t base = 0;
  for (std::size_t a = 0; a < label.size(); ++a) {
    const int d = label[a];
    if (d < 0 || d >= n) throw ValidationError("label digit out of range");
    std::size_t stride = 1;
    for (int k = subset.labels()[a]; k < m; ++k) stride *= static_cast<std::size_t>(n);
    base += static_cast<std::size_t>(d) * stride;
  }
  const PartySubset rest = subset.complement();
  const auto cols = detail::block_offsets(rest.labels(), m, n);
  CVector slice(static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    slice(static_cast<Eigen::Index>(j)) = state.amplitudes()(static_cast<Eigen::Index>(base + cols[j]));
  }
  return make_vertex(std::vector<int>(label.begin(), label.end()), slice);
}

ConvexRigidFrame build_frame(const PureState& state, const PartySubset& subset) {
  const int m = state.parties();
  const int n = state.local_dim();
  const CMatrix rows = reshape_bipartite(state, Bipartition(subset));
  ConvexRigidFrame frame{subset, m, n, {}};
  frame.vertices.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    frame.vertices.push_back(make_vertex(
        unpack_index(static_cast<std::size_t>(i), subset.size(), n), rows.row(i).transpose()));
  }
  return frame;
}

HermitianMatrix frame_point(const ConvexRigidFrame& frame) {
  Eigen::Index dim = 1;
  for (int k = 0; k < frame.parties - frame.subset.size(); ++k) dim *= frame.local_dim;
  CMatrix sigma = CMatrix::Zero(dim, dim);
  for (const Vertex& v : frame.vertices) {
    if (!v.defined()) continue;
    sigma.noalias() += v.weight * (*v.state) * v.state->adjoint();
  }
  CMatrix herm = 0.5 * (sigma + sigma.adjoint());
  return HermitianMatrix(std::move(herm));
}

double projector_distance(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw ValidationError("vertex states have different lengths");
  // 1 - |<a|b>|^2 equals the squared norm of b's component orthogonal to a.
  const Complex overlap = a.dot(b);
  const double perp = (b - overlap * a).squaredNorm();
  return std::sqrt(2.0 * perp);
}

FrameDiscrepancy frame_discrepancy(const ConvexRigidFrame& f, const ConvexRigidFrame& g) {
  if (f.parties != g.parties || f.local_dim != g.local_dim || f.subset.size() != g.subset.size() ||
      f.vertices.size() != g.vertices.size()) {
    throw ValidationError("frames have different shapes (M, N, P)");
  }
  FrameDiscrepancy out;
  const std::size_t n = f.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.max_weight_diff =
        std::max(out.max_weight_diff, std::abs(f.vertices[i].weight - g.vertices[i].weight));
    if (f.vertices[i].defined() != g.vertices[i].defined()) out.definedness_mismatch = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.vertices[i].defined() || !g.vertices[i].defined()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!f.vertices[j].defined() || !g.vertices[j].defined()) continue;
      const double df = projector_distance(*f.vertices[i].state, *f.vertices[j].state);
      const double dg = projector_distance(*g.vertices[i].state, *g.vertices[j].state);
      out.max_distance_diff = std::max(out.max_distance_diff, std::abs(df - dg));
    }
  }
  return out;
}

bool frames_identical(const ConvexRigidFrame& f, const ConvexRigidFrame& g, double tol) {
  const FrameDiscrepancy d = frame_discrepancy(f, g);
  return !d.definedness_mismatch && d.max_weight_diff <= tol && d.max_distance_diff <= tol;
}

PureState assemble_state(const PartySubset& subset, int local_dim, std::span<const Vertex> vertices) {
  const int m = subset.parties();
  const int p = subset.size();
  std::size_t count = 1;
  std::size_t rest = 1;
  for (int k = 0; k < p; ++k) count *= static_cast<std::size_t>(local_dim);
  for (int k = p; k < m; ++k) rest *= static_cast<std::size_t>(local_dim);
  if (vertices.size() != count) {
    throw ValidationError("expected " + std::to_string(count) + " vertices, got " +
                          std::to_string(vertices.size()));
  }
  double total = 0.0;
  for (const Vertex& v : vertices) {
    if (!(v.weight >= 0.0) || !std::isfinite(v.weight)) throw ValidationError("vertex weights must be >= 0");
    total += v.weight;
  }
  if (std::abs(total - 1.0) > kInputNormTol) {
    throw ValidationError("vertex weights must sum to 1");
  }

  CMatrix rows = CMatrix::Zero(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(rest));
  for (std::size_t i = 0; i < count; ++i) {
    const Vertex& v = vertices[i];
    if (v.weight <= kAbsentWeight) continue;
    if (!v.state) throw ValidationError("vertex with positive weight has no state");
    if (static_cast<std::size_t>(v.state->size()) != rest) {
      throw ValidationError("vertex state has the wrong length");
    }
    if (std::abs(v.state->norm() - 1.0) > kInputNormTol) {
      throw ValidationError("vertex state is not normalized");
    }
    CVector d = *v.state;
    canonicalize_phase(d);
    rows.row(static_cast<Eigen::Index>(i)) = std::sqrt(v.weight) * d.transpose();
  }
  rows /= rows.norm();
  return flatten_bipartite(rows, Bipartition(subset), local_dim);
}

PureState assemble_state(const ConvexRigidFrame& frame) {
  return assemble_state(frame.subset, frame.local_dim, frame.vertices);
}

}  // namespace crfkit
