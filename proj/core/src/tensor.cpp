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

#include "crfkit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace crfkit {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

void check_dims(int parties, int local_dim) {
  if (parties < 1) throw ValidationError("parties must be >= 1, got " + std::to_string(parties));
  if (local_dim < 2) throw ValidationError("local_dim must be >= 2, got " + std::to_string(local_dim));
}

CVector gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

std::size_t amplitude_cap() {
  if (const char* env = std::getenv("CRFKIT_MAX_AMPLITUDES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxAmplitudes;
}

std::size_t checked_dimension(int parties, int local_dim) {
  check_dims(parties, local_dim);
  const std::size_t cap = amplitude_cap();
  std::size_t d = 1;
  for (int i = 0; i < parties; ++i) {
    if (d > cap / static_cast<std::size_t>(local_dim)) {
      throw ResourceError("N^M = " + std::to_string(local_dim) + "^" + std::to_string(parties) +
                          " exceeds the amplitude cap of " + std::to_string(cap));
    }
    d *= static_cast<std::size_t>(local_dim);
  }
  return d;
}

// ---------------------------------------------------------------- PureState

PureState::PureState(int parties, int local_dim, CVector amplitudes)
    : parties_(parties), local_dim_(local_dim), amplitudes_(std::move(amplitudes)) {
  const std::size_t dim = checked_dimension(parties, local_dim);
  if (static_cast<std::size_t>(amplitudes_.size()) != dim) {
    throw ValidationError("expected " + std::to_string(dim) + " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
  if (!amplitudes_.allFinite()) throw ValidationError("amplitudes must be finite");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kInputNormTol) {
    std::ostringstream os;
    os << "state is not normalized: |norm - 1| = " << std::abs(norm - 1.0);
    throw ValidationError(os.str());
  }
}

Complex PureState::amplitude(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != parties_) {
    throw ValidationError("expected " + std::to_string(parties_) + " digits");
  }
  return amplitudes_(static_cast<Eigen::Index>(pack_index(digits, local_dim_)));
}

// -------------------------------------------------------------- PartySubset

PartySubset::PartySubset(std::vector<int> labels, int parties)
    : labels_(std::move(labels)), parties_(parties) {
  if (parties < 2) throw ValidationError("a proper subset needs at least 2 parties");
  if (labels_.empty()) throw ValidationError("party subset must be non-empty");
  if (static_cast<int>(labels_.size()) >= parties) {
    throw ValidationError("party subset must be proper (size <= M-1)");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1 || labels_[i] > parties) {
      throw ValidationError("party label " + std::to_string(labels_[i]) + " outside 1.." +
                            std::to_string(parties));
    }
    if (i > 0 && labels_[i] <= labels_[i - 1]) {
      throw ValidationError("party labels must be strictly increasing");
    }
  }
}

bool PartySubset::contains(int label) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

PartySubset PartySubset::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(parties_) - labels_.size());
  for (int p = 1; p <= parties_; ++p) {
    if (!contains(p)) rest.push_back(p);
  }
  return PartySubset(std::move(rest), parties_);
}

std::string PartySubset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels_[i]);
  }
  return s + "}";
}

Bipartition::Bipartition(PartySubset left_side)
    : left(std::move(left_side)), right(left.complement()) {}

Bipartition Bipartition::canonical() const {
  return left.contains(1) ? *this : Bipartition(right);
}

std::vector<int> Bipartition::permutation() const {
  std::vector<int> p = left.labels();
  p.insert(p.end(), right.labels().begin(), right.labels().end());
  return p;
}

std::string Bipartition::to_string() const { return left.to_string() + "|" + right.to_string(); }

std::vector<PartySubset> proper_subsets(int parties) {
  if (parties < 2) throw ValidationError("need at least 2 parties");
  if (parties > kMaxEnumerationParties) {
    throw ResourceError("subset enumeration limited to M <= " +
                        std::to_string(kMaxEnumerationParties));
  }
  std::vector<std::vector<int>> all;
  const unsigned full = (1u << parties) - 1u;
  for (unsigned mask = 1; mask < full; ++mask) {
    std::vector<int> labels;
    for (int p = 0; p < parties; ++p) {
      if (mask & (1u << p)) labels.push_back(p + 1);
    }
    all.push_back(std::move(labels));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<PartySubset> out;
  out.reserve(all.size());
  for (auto& l : all) out.emplace_back(std::move(l), parties);
  return out;
}

std::vector<Bipartition> bipartitions(int parties) {
  std::vector<Bipartition> out;
  for (auto& s : proper_subsets(parties)) {
    if (s.contains(1)) out.emplace_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------- HermitianMatrix

HermitianMatrix::HermitianMatrix(CMatrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw ValidationError("Hermitian matrix must be square");
  const double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) throw ValidationError("matrix is not Hermitian within tolerance");
}

// ------------------------------------------------------------- LocalUnitary

LocalUnitary::LocalUnitary(std::vector<CMatrix> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("local unitary needs at least one factor");
  const Eigen::Index n = factors_.front().rows();
  if (n < 2) throw ValidationError("local unitary factors must be at least 2x2");
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const CMatrix& u = factors_[k];
    if (u.rows() != n || u.cols() != n) {
      throw ValidationError("factor " + std::to_string(k + 1) + " has the wrong shape");
    }
    const double dev = (u.adjoint() * u - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (!(dev <= 1e-10)) {
      throw ValidationError("factor " + std::to_string(k + 1) + " is not unitary");
    }
  }
}

LocalUnitary LocalUnitary::identity(int parties, int local_dim) {
  check_dims(parties, local_dim);
  return LocalUnitary(std::vector<CMatrix>(static_cast<std::size_t>(parties),
                                           CMatrix::Identity(local_dim, local_dim)));
}

LocalUnitary LocalUnitary::with_factor(int party, CMatrix factor) const {
  if (party < 1 || party > parties()) throw ValidationError("party label out of range");
  auto f = factors_;
  f[static_cast<std::size_t>(party - 1)] = std::move(factor);
  return LocalUnitary(std::move(f));
}

// ----------------------------------------------------------------- indexing

std::size_t pack_index(std::span<const int> digits, int local_dim) {
  if (local_dim < 2) throw ValidationError("local_dim must be >= 2");
  std::size_t flat = 0;
  for (int d : digits) {
    if (d < 0 || d >= local_dim) {
      throw ValidationError("digit " + std::to_string(d) + " outside 0.." +
                            std::to_string(local_dim - 1));
    }
    flat = flat * static_cast<std::size_t>(local_dim) + static_cast<std::size_t>(d);
  }
  return flat;
}

std::vector<int> unpack_index(std::size_t flat, int parties, int local_dim) {
  check_dims(parties, local_dim);
  if (flat >= ipow(local_dim, parties)) throw ValidationError("flat index out of range");
  std::vector<int> digits(static_cast<std::size_t>(parties));
  for (int k = parties - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(local_dim));
    flat /= static_cast<std::size_t>(local_dim);
  }
  return digits;
}

namespace detail {

std::vector<std::size_t> block_offsets(std::span<const int> labels, int parties, int local_dim) {
  const std::size_t count = ipow(local_dim, static_cast<int>(labels.size()));
  std::vector<std::size_t> strides;
  strides.reserve(labels.size());
  for (int l : labels) strides.push_back(ipow(local_dim, parties - l));
  std::vector<std::size_t> out(count);
  std::vector<int> digits(labels.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t off = 0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      off += static_cast<std::size_t>(digits[a]) * strides[a];
    }
    out[idx] = off;
    // row-major increment, last label fastest
    for (std::size_t a = labels.size(); a-- > 0;) {
      if (++digits[a] < local_dim) break;
      digits[a] = 0;
    }
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- operations

PureState normalize_state(int parties, int local_dim, CVector amplitudes) {
  const std::size_t dim = checked_dimension(parties, local_dim);
  if (static_cast<std::size_t>(amplitudes.size()) != dim) {
    throw ValidationError("expected " + std::to_string(dim) + " amplitudes");
  }
  const double norm = amplitudes.norm();
  if (!std::isfinite(norm)) throw ValidationError("amplitudes must be finite");
  if (norm == 0.0) throw DegenerateError("cannot normalize an all-zero state");
  amplitudes /= norm;
  return PureState(parties, local_dim, std::move(amplitudes));
}

std::vector<int> inverse_permutation(std::span<const int> permutation) {
  const int m = static_cast<int>(permutation.size());
  std::vector<int> inv(permutation.size(), 0);
  for (int k = 0; k < m; ++k) {
    const int p = permutation[static_cast<std::size_t>(k)];
    if (p < 1 || p > m || inv[static_cast<std::size_t>(p - 1)] != 0) {
      throw ValidationError("malformed party permutation");
    }
    inv[static_cast<std::size_t>(p - 1)] = k + 1;
  }
  return inv;
}

PureState reorder_parties(const PureState& state, std::span<const int> permutation) {
  const int m = state.parties();
  if (static_cast<int>(permutation.size()) != m) {
    throw ValidationError("permutation length must equal the number of parties");
  }
  (void)inverse_permutation(permutation);  // validates
  const int n = state.local_dim();
  // stride of output position k inside the input layout
  std::vector<std::size_t> in_stride(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) in_stride[static_cast<std::size_t>(k)] = ipow(n, m - permutation[static_cast<std::size_t>(k)]);

  const CVector& in = state.amplitudes();
  CVector out(in.size());
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  std::size_t src = 0;
  for (Eigen::Index dst = 0; dst < out.size(); ++dst) {
    out(dst) = in(static_cast<Eigen::Index>(src));
    for (int k = m; k-- > 0;) {
      const auto ks = static_cast<std::size_t>(k);
      if (++digits[ks] < n) {
        src += in_stride[ks];
        break;
      }
      digits[ks] = 0;
      src -= in_stride[ks] * static_cast<std::size_t>(n - 1);
    }
  }
  return PureState(m, n, std::move(out));
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu) {
  const int m = state.parties();
  const int n = state.local_dim();
  if (lu.parties() != m || lu.local_dim() != n) {
    throw ValidationError("local unitary shape does not match the state");
  }
  CVector amps = state.amplitudes();
  CVector next(amps.size());
  for (int party = 1; party <= m; ++party) {
    const CMatrix& u = lu.factors()[static_cast<std::size_t>(party - 1)];
    const std::size_t inner = ipow(n, m - party);
    const std::size_t outer = ipow(n, party - 1);
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t o = 0; o < outer; ++o) {
      const std::size_t base = o * nn * inner;
      for (std::size_t in = 0; in < inner; ++in) {
        for (std::size_t a = 0; a < nn; ++a) {
          Complex acc{0.0, 0.0};
          for (std::size_t b = 0; b < nn; ++b) {
            acc += u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *
                   amps(static_cast<Eigen::Index>(base + b * inner + in));
          }
          next(static_cast<Eigen::Index>(base + a * inner + in)) = acc;
        }
      }
    }
    amps.swap(next);
  }
  return PureState(m, n, std::move(amps));
}

HermitianMatrix partial_trace(const PureState& state, const PartySubset& traced) {
  const int m = state.parties();
  const int n = state.local_dim();
  if (traced.parties() != m) throw ValidationError("subset was built for a different party count");
  const PartySubset kept = traced.complement();

  // Group amplitudes by the traced multi-index, keyed by the kept multi-index.
  const std::size_t traced_count = ipow(n, traced.size());
  const std::size_t kept_count = ipow(n, kept.size());
  CMatrix grouped = CMatrix::Zero(static_cast<Eigen::Index>(traced_count),
                                  static_cast<Eigen::Index>(kept_count));
  std::vector<int> tdigits(static_cast<std::size_t>(traced.size()));
  std::vector<int> kdigits(static_cast<std::size_t>(kept.size()));
  for (std::size_t flat = 0; flat < state.dimension(); ++flat) {
    const std::vector<int> digits = unpack_index(flat, m, n);
    for (int a = 0; a < traced.size(); ++a) {
      tdigits[static_cast<std::size_t>(a)] = digits[static_cast<std::size_t>(traced.labels()[static_cast<std::size_t>(a)] - 1)];
    }
    for (int b = 0; b < kept.size(); ++b) {
      kdigits[static_cast<std::size_t>(b)] = digits[static_cast<std::size_t>(kept.labels()[static_cast<std::size_t>(b)] - 1)];
    }
    grouped(static_cast<Eigen::Index>(pack_index(tdigits, n)),
            static_cast<Eigen::Index>(pack_index(kdigits, n))) =
        state.amplitudes()(static_cast<Eigen::Index>(flat));
  }

  const auto kc = static_cast<Eigen::Index>(kept_count);
  CMatrix rho(kc, kc);
  for (Eigen::Index j = 0; j < kc; ++j) {
    for (Eigen::Index jp = 0; jp <= j; ++jp) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index t = 0; t < grouped.rows(); ++t) {
        acc += grouped(t, j) * std::conj(grouped(t, jp));
      }
      rho(j, jp) = acc;
      rho(jp, j) = std::conj(acc);
    }
    rho(j, j) = Complex(rho(j, j).real(), 0.0);
  }
  return HermitianMatrix(std::move(rho));
}

CMatrix reshape_bipartite(const PureState& state, const Bipartition& bp) {
  const int m = state.parties();
  const int n = state.local_dim();
  if (bp.left.parties() != m) throw ValidationError("bipartition was built for a different party count");
  const auto rows = detail::block_offsets(bp.left.labels(), m, n);
  const auto cols = detail::block_offsets(bp.right.labels(), m, n);
  CMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  const CVector& amps = state.amplitudes();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          amps(static_cast<Eigen::Index>(rows[i] + cols[j]));
    }
  }
  return out;
}

PureState flatten_bipartite(const CMatrix& matrix, const Bipartition& bp, int local_dim) {
  const int m = bp.left.parties();
  const auto rows = detail::block_offsets(bp.left.labels(), m, local_dim);
  const auto cols = detail::block_offsets(bp.right.labels(), m, local_dim);
  if (static_cast<std::size_t>(matrix.rows()) != rows.size() ||
      static_cast<std::size_t>(matrix.cols()) != cols.size()) {
    throw ValidationError("matrix shape does not match the bipartition");
  }
  CVector amps(static_cast<Eigen::Index>(rows.size() * cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      amps(static_cast<Eigen::Index>(rows[i] + cols[j])) =
          matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return PureState(m, local_dim, std::move(amps));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  if (a.local_dim() != b.local_dim()) throw ValidationError("local dimensions differ");
  const int m = a.parties() + b.parties();
  checked_dimension(m, a.local_dim());
  CVector out(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    out.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState(m, a.local_dim(), std::move(out));
}

void canonicalize_phase(CVector& v, double eps) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > eps) {
      const Complex phase = std::conj(v(i)) / mag;
      v *= phase;
      v(i) = Complex(mag, 0.0);
      return;
    }
  }
}

// ---------------------------------------------------------------- random

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined input
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

CMatrix random_haar_unitary(int local_dim, std::uint64_t seed) {
  if (local_dim < 2) throw ValidationError("local_dim must be >= 2");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(local_dim);
  CMatrix z(n, n);
  const CVector g = gaussian_vector(static_cast<std::size_t>(n * n), rng);
  for (Eigen::Index c = 0; c < n; ++c) z.col(c) = g.segment(c * n, n) / std::sqrt(2.0);

  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  // Q * diag(r_ii / |r_ii|) gives the factorization with positive real diag(R).
  for (Eigen::Index c = 0; c < n; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

PureState random_pure_state(int parties, int local_dim, std::uint64_t seed) {
  const std::size_t dim = checked_dimension(parties, local_dim);
  std::mt19937_64 rng(seed);
  return normalize_state(parties, local_dim, gaussian_vector(dim, rng));
}

LocalUnitary random_diag_phase_lu(int parties, int local_dim, std::uint64_t seed) {
  check_dims(parties, local_dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<CMatrix> factors;
  factors.reserve(static_cast<std::size_t>(parties));
  for (int k = 0; k < parties; ++k) {
    CMatrix d = CMatrix::Zero(local_dim, local_dim);
    for (int i = 0; i < local_dim; ++i) d(i, i) = std::polar(1.0, angle(rng));
    factors.push_back(std::move(d));
  }
  return LocalUnitary(std::move(factors));
}

LocalUnitary random_complement_lu(const PartySubset& fixed, int local_dim, std::uint64_t seed) {
  std::vector<CMatrix> factors;
  for (int p = 1; p <= fixed.parties(); ++p) {
    if (fixed.contains(p)) {
      factors.push_back(CMatrix::Identity(local_dim, local_dim));
    } else {
      factors.push_back(random_haar_unitary(local_dim, derive_seed(seed, static_cast<std::uint64_t>(p))));
    }
  }
  return LocalUnitary(std::move(factors));
}

// ---------------------------------------------------------------- fixtures

PureState product_state(std::span<const CVector> factors) {
  if (factors.empty()) throw ValidationError("product state needs at least one factor");
  const auto n = factors.front().size();
  const int m = static_cast<int>(factors.size());
  checked_dimension(m, static_cast<int>(n));
  CVector out = CVector::Ones(1);
  for (const CVector& f : factors) {
    if (f.size() != n) throw ValidationError("product factors must share one local dimension");
    const double norm = f.norm();
    if (norm == 0.0) throw DegenerateError("product factor is all-zero");
    CVector next(out.size() * n);
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * n, n) = out(i) * f / norm;
    out = std::move(next);
  }
  return normalize_state(m, static_cast<int>(n), std::move(out));
}

PureState qutrit_bac_separable(const CVector& a, const CMatrix& b) {
  if (a.size() != 3 || b.rows() != 3 || b.cols() != 3) {
    throw ValidationError("qutrit-bac-separable needs a (3) and b (3x3)");
  }
  CVector c(27);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c(9 * i + 3 * j + k) = a(j) * b(i, k);
  return normalize_state(3, 3, std::move(c));
}

std::vector<std::string> named_state_names() {
  return {"ghz", "w", "product", "zero", "a-bell", "qutrit-bac-separable"};
}

PureState named_state(std::string_view name, int parties, int local_dim) {
  const std::size_t dim = checked_dimension(parties, local_dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (name == "ghz") {
    if (parties < 2) throw ValidationError("ghz needs at least 2 parties");
    CVector c = CVector::Zero(static_cast<Eigen::Index>(dim));
    c(0) = inv_sqrt2;
    c(static_cast<Eigen::Index>(dim - 1)) = inv_sqrt2;
    return PureState(parties, local_dim, std::move(c));
  }
  if (name == "w") {
    if (local_dim != 2) throw ValidationError("w state is defined for local_dim = 2");
    if (parties < 2) throw ValidationError("w needs at least 2 parties");
    CVector c = CVector::Zero(static_cast<Eigen::Index>(dim));
    const double amp = 1.0 / std::sqrt(static_cast<double>(parties));
    for (int k = 0; k < parties; ++k) c(Eigen::Index{1} << k) = amp;
    return PureState(parties, local_dim, std::move(c));
  }
  if (name == "product") {
    std::vector<CVector> f;
    for (int p = 1; p <= parties; ++p) {
      if (p % 2 == 1) {
        f.push_back(CVector::Unit(local_dim, 0));
      } else {
        f.push_back(CVector::Ones(local_dim) / std::sqrt(static_cast<double>(local_dim)));
      }
    }
    return product_state(f);
  }
  if (name == "zero") {
    CVector c = CVector::Zero(static_cast<Eigen::Index>(dim));
    c(0) = 1.0;
    return PureState(parties, local_dim, std::move(c));
  }
  if (name == "a-bell") {
    if (parties != 3) throw ValidationError("a-bell is defined for 3 parties");
    CVector c = CVector::Zero(static_cast<Eigen::Index>(dim));
    const auto n = static_cast<Eigen::Index>(local_dim);
    c(0) = inv_sqrt2;                 // |0,0,0>
    c((n - 1) * n + (n - 1)) = inv_sqrt2;  // |0,N-1,N-1>
    return PureState(parties, local_dim, std::move(c));
  }
  if (name == "qutrit-bac-separable") {
    if (parties != 3 || local_dim != 3) {
      throw ValidationError("qutrit-bac-separable is defined for M = 3, N = 3");
    }
    CVector a(3);
    a << Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(-1.0, 0.5);
    CMatrix b(3, 3);
    b << Complex(0.5, 0.0), Complex(0.0, -1.0), Complex(0.25, 0.25),
        Complex(1.0, 1.0), Complex(-0.5, 0.0), Complex(0.0, 0.0),
        Complex(0.3, -0.2), Complex(0.0, 0.7), Complex(-1.2, 0.0);
    return qutrit_bac_separable(a, b);
  }
  throw ValidationError("unknown named state '" + std::string(name) + "'");
}

}  // namespace crfkit
