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

#include "oracles.hpp"

#include <cmath>
#include <random>

namespace crfkit::testing {

std::vector<int> digits_of(std::size_t flat, int parties, int local_dim) {
  std::vector<int> d(static_cast<std::size_t>(parties));
  for (int k = parties - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(local_dim));
    flat /= static_cast<std::size_t>(local_dim);
  }
  return d;
}

namespace {

bool in(const std::vector<int>& set, int label) {
  for (int x : set)
    if (x == label) return true;
  return false;
}

std::vector<int> complement_of(const std::vector<int>& set, int parties) {
  std::vector<int> out;
  for (int p = 1; p <= parties; ++p)
    if (!in(set, p)) out.push_back(p);
  return out;
}

// row-major index of the digits at `labels`
std::size_t sub_index(const std::vector<int>& digits, const std::vector<int>& labels, int local_dim) {
  std::size_t idx = 0;
  for (int l : labels) idx = idx * static_cast<std::size_t>(local_dim) + static_cast<std::size_t>(digits[static_cast<std::size_t>(l - 1)]);
  return idx;
}

}  // namespace

CMatrix brute_partial_trace(const CVector& psi, int parties, int local_dim, const std::vector<int>& traced) {
  const CMatrix rho = psi * psi.adjoint();
  const std::vector<int> kept = complement_of(traced, parties);
  std::size_t kdim = 1;
  for (std::size_t i = 0; i < kept.size(); ++i) kdim *= static_cast<std::size_t>(local_dim);
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(kdim));
  const auto total = static_cast<std::size_t>(psi.size());
  for (std::size_t a = 0; a < total; ++a) {
    const auto da = digits_of(a, parties, local_dim);
    for (std::size_t b = 0; b < total; ++b) {
      const auto db = digits_of(b, parties, local_dim);
      bool same_traced = true;
      for (int t : traced) same_traced = same_traced && da[static_cast<std::size_t>(t - 1)] == db[static_cast<std::size_t>(t - 1)];
      if (!same_traced) continue;
      out(static_cast<Eigen::Index>(sub_index(da, kept, local_dim)),
          static_cast<Eigen::Index>(sub_index(db, kept, local_dim))) +=
          rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }
  return out;
}

double brute_slice_weight(const CVector& psi, int parties, int local_dim, const std::vector<int>& subset,
                          const std::vector<int>& label) {
  return brute_slice(psi, parties, local_dim, subset, label).squaredNorm();
}

CVector brute_slice(const CVector& psi, int parties, int local_dim, const std::vector<int>& subset,
                    const std::vector<int>& label) {
  const std::vector<int> kept = complement_of(subset, parties);
  std::size_t kdim = 1;
  for (std::size_t i = 0; i < kept.size(); ++i) kdim *= static_cast<std::size_t>(local_dim);
  CVector out = CVector::Zero(static_cast<Eigen::Index>(kdim));
  for (std::size_t a = 0; a < static_cast<std::size_t>(psi.size()); ++a) {
    const auto d = digits_of(a, parties, local_dim);
    bool match = true;
    for (std::size_t i = 0; i < subset.size(); ++i) match = match && d[static_cast<std::size_t>(subset[i] - 1)] == label[i];
    if (match) out(static_cast<Eigen::Index>(sub_index(d, kept, local_dim))) = psi(static_cast<Eigen::Index>(a));
  }
  return out;
}

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

RVector hs_flatten(const CMatrix& m) {
  RVector out(2 * m.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(k++) = m(i, j).real();
      out(k++) = m(i, j).imag();
    }
  }
  return out;
}

double dense_angle_cos(const std::vector<double>& weights, const std::vector<CMatrix>& sigmas, std::size_t k,
                       std::size_t l) {
  const auto dim = sigmas.front().rows();
  CMatrix wk = CMatrix::Zero(dim, dim);
  CMatrix wl = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    wk += (weights[i] - (i == k ? 1.0 : 0.0)) * sigmas[i];
    wl += (weights[i] - (i == l ? 1.0 : 0.0)) * sigmas[i];
  }
  const double inner = (wk.adjoint() * wl).trace().real();
  return inner / (wk.norm() * wl.norm());
}

double edge_gram_volume(const RMatrix& points) {
  const Eigen::Index k = points.cols() - 1;
  if (k <= 0) return 0.0;
  RMatrix e(points.rows(), k);
  for (Eigen::Index c = 0; c < k; ++c) e.col(c) = points.col(c + 1) - points.col(0);
  const double det = (e.transpose() * e).determinant();
  double fact = 1.0;
  for (Eigen::Index i = 2; i <= k; ++i) fact *= static_cast<double>(i);
  return std::sqrt(std::max(det, 0.0)) / fact;
}

PartySubset random_subset(int parties, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick(1, (1u << parties) - 2);
  const unsigned mask = pick(rng);
  std::vector<int> labels;
  for (int p = 0; p < parties; ++p)
    if (mask & (1u << p)) labels.push_back(p + 1);
  return PartySubset(labels, parties);
}

PureState random_product_across(const Bipartition& bp, int local_dim, std::uint64_t seed) {
  const PureState a = random_pure_state(bp.left.size(), local_dim, seed);
  const PureState b = random_pure_state(bp.right.size(), local_dim, seed ^ 0xA5A5A5A5ull);
  // tensor_product puts the left parties first; undo that ordering.
  const PureState natural_split = tensor_product(a, b);
  return reorder_parties(natural_split, inverse_permutation(bp.permutation()));
}

}  // namespace crfkit::testing
