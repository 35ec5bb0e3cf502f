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

// Dense multipartite state tensors over M parties of equal local dimension N.
//
// Amplitudes are stored row-major over the digit tuple (i_1, ..., i_M) with
// i_1 varying slowest. Party labels are 1-based everywhere in the public
// interface; flat indices and digits are 0-based.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "crfkit/errors.hpp"

namespace crfkit {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Tolerance on |norm - 1| for amplitudes handed to PureState.
inline constexpr double kInputNormTol = 1e-9;
/// Default cap on N^M for dense states; override with CRFKIT_MAX_AMPLITUDES.
inline constexpr std::size_t kDefaultMaxAmplitudes = std::size_t{1} << 20;
/// Subset and bipartition enumeration bound on the number of parties.
inline constexpr int kMaxEnumerationParties = 12;

/// Effective amplitude cap: CRFKIT_MAX_AMPLITUDES when set and valid, else 2^20.
std::size_t amplitude_cap();

/// N^M, or throws ResourceError when it exceeds amplitude_cap().
std::size_t checked_dimension(int parties, int local_dim);

/// Normalized pure state of `parties` quNits. Immutable after construction.
class PureState {
 public:
  /// Validates dims, length N^M and unit norm within kInputNormTol.
  PureState(int parties, int local_dim, CVector amplitudes);

  int parties() const noexcept { return parties_; }
  int local_dim() const noexcept { return local_dim_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(std::span<const int> digits) const;

 private:
  int parties_;
  int local_dim_;
  CVector amplitudes_;
};

/// Ordered proper subset (r)_P of {1..M}: non-empty, strictly increasing.
class PartySubset {
 public:
  PartySubset(std::vector<int> labels, int parties);

  const std::vector<int>& labels() const noexcept { return labels_; }
  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int parties() const noexcept { return parties_; }
  bool contains(int label) const noexcept;
  PartySubset complement() const;
  /// "{1,3}"
  std::string to_string() const;

  friend bool operator==(const PartySubset&, const PartySubset&) = default;

 private:
  std::vector<int> labels_;
  int parties_;
};

/// (r)_P || (s)_{M-P}; `right` is always the complement of `left`.
struct Bipartition {
  explicit Bipartition(PartySubset left_side);

  PartySubset left;
  PartySubset right;

  /// Same split with the side containing party 1 on the left.
  Bipartition canonical() const;
  /// Party order (r..., s...) used by reorder_parties to bring the split into natural order.
  std::vector<int> permutation() const;
  /// "{1}|{2,3}"
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// All 2^M - 2 proper subsets, ascending size then lexicographic.
std::vector<PartySubset> proper_subsets(int parties);
/// All 2^(M-1) - 1 unordered bipartitions, canonical (party 1 on the left),
/// in proper_subsets order of the left side.
std::vector<Bipartition> bipartitions(int parties);

/// Density matrix or other Hermitian operator; validated on construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix entries, double tol = 1e-12);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const CMatrix& matrix() const noexcept { return entries_; }
  Complex trace() const { return entries_.trace(); }

 private:
  CMatrix entries_;
};

/// u_1 (x) ... (x) u_M with every factor N x N unitary.
class LocalUnitary {
 public:
  explicit LocalUnitary(std::vector<CMatrix> factors);

  static LocalUnitary identity(int parties, int local_dim);

  int parties() const noexcept { return static_cast<int>(factors_.size()); }
  int local_dim() const noexcept { return static_cast<int>(factors_.front().rows()); }
  const std::vector<CMatrix>& factors() const noexcept { return factors_; }
  /// Copy with the factor on `party` (1-based) replaced.
  LocalUnitary with_factor(int party, CMatrix factor) const;

 private:
  std::vector<CMatrix> factors_;
};

std::size_t pack_index(std::span<const int> digits, int local_dim);
std::vector<int> unpack_index(std::size_t flat, int parties, int local_dim);

/// Scale to unit norm. Throws DegenerateError on an all-zero vector.
PureState normalize_state(int parties, int local_dim, CVector amplitudes);

/// Output party k carries input party permutation[k-1]:
/// out(j_1..j_M) = in(i) with i_{p_k} = j_k.
PureState reorder_parties(const PureState& state, std::span<const int> permutation);
std::vector<int> inverse_permutation(std::span<const int> permutation);

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu);

/// tr over `traced` of |psi><psi|, acting on the complement in ascending label order.
HermitianMatrix partial_trace(const PureState& state, const PartySubset& traced);

/// N^P x N^(M-P) matrix; rows run over the left multi-index, columns over the right.
CMatrix reshape_bipartite(const PureState& state, const Bipartition& bp);
/// Inverse of reshape_bipartite.
PureState flatten_bipartite(const CMatrix& matrix, const Bipartition& bp, int local_dim);

/// |a> (x) |b>, parties of `a` first.
PureState tensor_product(const PureState& a, const PureState& b);

/// Multiply by a global phase so the first entry with magnitude above `eps`
/// is real and positive.
void canonicalize_phase(CVector& v, double eps = 1e-12);

CMatrix random_haar_unitary(int local_dim, std::uint64_t seed);
PureState random_pure_state(int parties, int local_dim, std::uint64_t seed);
/// Every factor diagonal with unit-modulus entries.
LocalUnitary random_diag_phase_lu(int parties, int local_dim, std::uint64_t seed);
/// Haar factors on parties outside `fixed`, identity on parties in `fixed`.
LocalUnitary random_complement_lu(const PartySubset& fixed, int local_dim, std::uint64_t seed);

/// Deterministic 64-bit mixer used to derive independent sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Named fixtures:
///   "ghz"      (|0..0> + |N-1..N-1>)/sqrt2
///   "w"        equal superposition of single-excitation states, N = 2
///   "product"  |0> on odd parties, uniform |+> on even parties
///   "zero"     |0..0>
///   "a-bell"   |0>_A (x) (|00> + |N-1,N-1>)/sqrt2 on BC, M = 3
///   "qutrit-bac-separable"  M = N = 3, c_ijk = a_j b_ik with fixed a, b
PureState named_state(std::string_view name, int parties, int local_dim);
std::vector<std::string> named_state_names();

/// Product of single-party vectors (each normalized internally).
PureState product_state(std::span<const CVector> factors);

/// c_ijk = a_j * b_ik on parties (A, B, C); the state is B||AC separable.
PureState qutrit_bac_separable(const CVector& a, const CMatrix& b);

namespace detail {

/// Flat offsets contributed by every row-major multi-index over `labels`.
std::vector<std::size_t> block_offsets(std::span<const int> labels, int parties, int local_dim);

}  // namespace detail

}  // namespace crfkit
