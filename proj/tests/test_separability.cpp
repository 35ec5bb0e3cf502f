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

#include <cmath>

#include <gtest/gtest.h>

#include "crfkit/separability.hpp"
#include "support/oracles.hpp"

namespace crfkit {
namespace {

Bipartition bp_of(std::vector<int> left, int parties) { return Bipartition(PartySubset(std::move(left), parties)); }

TEST(CrfVerdict, GhzIsEntangledEverywhere) {
  const PureState g = named_state("ghz", 3, 2);
  for (const auto& bp : bipartitions(3)) {
    const SeparabilityVerdict v = is_separable_crf(g, bp);
    EXPECT_FALSE(v.separable) << bp.to_string();
    ASSERT_TRUE(v.diameter.has_value());
    EXPECT_NEAR(*v.diameter, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(*v.complement_diameter, std::sqrt(2.0), 1e-12);
  }
}

TEST(CrfVerdict, ABellSplitsOnlyFirstParty) {
  const PureState s = named_state("a-bell", 3, 2);
  EXPECT_TRUE(is_separable_crf(s, bp_of({1}, 3)).separable);
  EXPECT_TRUE(is_separable_crf(s, bp_of({2, 3}, 3)).separable);
  EXPECT_FALSE(is_separable_crf(s, bp_of({2}, 3)).separable);
  EXPECT_FALSE(is_separable_crf(s, bp_of({3}, 3)).separable);
}

TEST(CrfVerdict, QutritExampleSeparatesPartyB) {
  const PureState q = named_state("qutrit-bac-separable", 3, 3);
  const SeparabilityVerdict v = is_separable_crf(q, bp_of({2}, 3));
  EXPECT_TRUE(v.separable);
  EXPECT_LE(*v.diameter, 1e-10);
  EXPECT_FALSE(is_separable_crf(q, bp_of({1}, 3)).separable);
  EXPECT_FALSE(is_separable_crf(q, bp_of({3}, 3)).separable);
  EXPECT_TRUE(svd_oracle(q, bp_of({2}, 3)).separable);
}

TEST(CrfVerdict, ProductIsSeparableEverywhere) {
  const SeparabilityProfile p = separability_profile(named_state("product", 4, 3), kDefaultSeparabilityTol, true);
  EXPECT_EQ(p.verdicts.size(), 7u);
  EXPECT_TRUE(p.fully_separable);
  for (const auto& v : p.verdicts) EXPECT_TRUE(*v.agreement);
}

TEST(SvdOracle, SchmidtCoefficients) {
  const RVector g = schmidt_coefficients(named_state("ghz", 3, 2), bp_of({1}, 3));
  ASSERT_EQ(g.size(), 2);
  EXPECT_NEAR(g(0), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(g(1), 1.0 / std::sqrt(2.0), 1e-14);
  const RVector w = schmidt_coefficients(named_state("w", 3, 2), bp_of({1}, 3));
  EXPECT_NEAR(w(0), std::sqrt(2.0 / 3.0), 1e-14);
  EXPECT_NEAR(w(1), std::sqrt(1.0 / 3.0), 1e-14);
  EXPECT_NEAR(w.squaredNorm(), 1.0, 1e-14);
}

TEST(SvdOracle, AgreesWithCrfOnGenericStates) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 3 + static_cast<int>(seed % 2);
    const PureState r = random_pure_state(m, 2, seed);
    for (const auto& bp : bipartitions(m)) {
      EXPECT_FALSE(is_separable_crf(r, bp).separable);
      EXPECT_FALSE(svd_oracle(r, bp).separable);
    }
  }
}

TEST(SvdOracle, AgreesWithCrfOnConstructedProducts) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 3 + static_cast<int>(seed % 2);
    const int n = 2 + static_cast<int>((seed / 2) % 2);
    const Bipartition bp(testing::random_subset(m, seed));
    const PureState r = testing::random_product_across(bp, n, seed + 11);
    EXPECT_TRUE(is_separable_crf(r, bp).separable);
    EXPECT_TRUE(svd_oracle(r, bp).separable);
    for (const auto& other : bipartitions(m)) {
      const SeparabilityVerdict crf = is_separable_crf(r, other);
      EXPECT_EQ(crf.separable, svd_oracle(r, other).separable) << other.to_string();
      EXPECT_EQ(*crf.diameter <= kDefaultSeparabilityTol, *crf.complement_diameter <= kDefaultSeparabilityTol);
    }
  }
}

TEST(SvdOracle, VerdictIndependentOfSideChosen) {
  const PureState r = testing::random_product_across(bp_of({1, 3}, 4), 2, 4);
  EXPECT_EQ(is_separable_crf(r, bp_of({1, 3}, 4)).separable, is_separable_crf(r, bp_of({2, 4}, 4)).separable);
  EXPECT_TRUE(is_separable_crf(r, bp_of({2, 4}, 4)).separable);
}

TEST(Profile, OrderAndOracleFields) {
  const SeparabilityProfile p = separability_profile(named_state("a-bell", 3, 2), kDefaultSeparabilityTol, true);
  ASSERT_EQ(p.verdicts.size(), 3u);
  EXPECT_FALSE(p.fully_separable);
  const auto expected = bipartitions(3);
  for (std::size_t i = 0; i < p.verdicts.size(); ++i) {
    EXPECT_EQ(p.verdicts[i].bipartition.left, expected[i].left);
    ASSERT_TRUE(p.verdicts[i].agreement.has_value());
    EXPECT_TRUE(*p.verdicts[i].agreement);
    ASSERT_TRUE(p.verdicts[i].oracle_second_singular.has_value());
  }
  const SeparabilityProfile bare = separability_profile(named_state("a-bell", 3, 2));
  EXPECT_FALSE(bare.verdicts[0].agreement.has_value());
}

TEST(Factorize, RecoversFactorsUpToPhase) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Bipartition bp(testing::random_subset(4, seed));
    const PureState r = testing::random_product_across(bp, 2, seed + 3);
    const auto [left, right] = factorize(r, bp);
    EXPECT_EQ(left.parties(), bp.left.size());
    EXPECT_EQ(right.parties(), bp.right.size());
    PureState rebuilt = tensor_product(left, right);
    rebuilt = reorder_parties(rebuilt, inverse_permutation(bp.permutation()));
    EXPECT_NEAR(std::abs(rebuilt.amplitudes().dot(r.amplitudes())), 1.0, 1e-10);
  }
}

TEST(Factorize, RejectsEntangledState) {
  EXPECT_THROW(factorize(named_state("ghz", 3, 2), bp_of({1}, 3)), PreconditionError);
  EXPECT_NO_THROW(factorize(named_state("a-bell", 3, 2), bp_of({1}, 3)));
}

}  // namespace
}  // namespace crfkit
