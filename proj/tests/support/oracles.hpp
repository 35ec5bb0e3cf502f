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

// Brute-force reference computations for tests. Nothing here calls the
// library's slicing, reshaping, tracing or geometry routines; each oracle
// works from raw amplitudes or explicitly materialized matrices.

#include <cstdint>
#include <vector>

#include "crfkit/crfkit.hpp"

namespace crfkit::testing {

/// Digits of `flat` for M parties of dimension N, i_1 slowest.
std::vector<int> digits_of(std::size_t flat, int parties, int local_dim);

/// Full |psi><psi| traced over `traced` (1-based labels) by summing matched
/// diagonal blocks of the N^M x N^M density matrix.
CMatrix brute_partial_trace(const CVector& psi, int parties, int local_dim, const std::vector<int>& traced);

/// Sum of |c|^2 over amplitudes whose digits at `subset` equal `label`.
double brute_slice_weight(const CVector& psi, int parties, int local_dim, const std::vector<int>& subset,
                          const std::vector<int>& label);

/// Unnormalized slice vector in ascending complement order.
CVector brute_slice(const CVector& psi, int parties, int local_dim, const std::vector<int>& subset,
                    const std::vector<int>& label);

CMatrix projector(const CVector& v);

/// Hermitian matrix flattened into a real vector of its entries (re, im).
RVector hs_flatten(const CMatrix& m);

/// cos between sum_i (lambda_i - d_ik) sigma_i and the same for l, computed
/// with dense density matrices.
double dense_angle_cos(const std::vector<double>& weights, const std::vector<CMatrix>& sigmas, std::size_t k,
                       std::size_t l);

/// Simplex content sqrt(det(E^T E)) / k! from explicit point coordinates
/// (columns of `points`), E the edge vectors from point 0.
double edge_gram_volume(const RMatrix& points);

/// Uniform random proper subset of {1..M}.
PartySubset random_subset(int parties, std::uint64_t seed);

struct Dims {
  int parties;
  int local_dim;
};

/// |a> (x) |b> across a bipartition, built from random factors.
PureState random_product_across(const Bipartition& bp, int local_dim, std::uint64_t seed);

}  // namespace crfkit::testing
