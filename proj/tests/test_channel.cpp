// Copyright 2026 The ampcode Authors
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

#include <gtest/gtest.h>

#include "ampcode/catalog.hpp"
#include "ampcode/channel.hpp"
#include "test_support.hpp"

namespace ampcode {
namespace {

using testing::amp;
using testing::mono;
using testing::q;

TEST(Channel, SingleModeKrausOperators) {
  // A_1 |1> = sqrt(g) |0>;  A_0 |1> = sqrt(1-g) |1>;  A_0 |0> = |0>.
  PureBranch one;
  one.add({1}, GammaAmplitude(RadicalSum(q(1))));
  const PureBranch lost = kraus_apply(one, ErrorPattern{1});
  ASSERT_EQ(lost.size(), 1u);
  EXPECT_EQ(*lost.amplitude({0}), amp(1, 0, RadicalSum(q(1))));
  EXPECT_EQ(*kraus_apply(one, ErrorPattern{0}).amplitude({1}), amp(0, 1, RadicalSum(q(1))));
  PureBranch vacuum;
  vacuum.add({0}, GammaAmplitude(RadicalSum(q(1))));
  EXPECT_EQ(*kraus_apply(vacuum, ErrorPattern{0}).amplitude({0}), GammaAmplitude(RadicalSum(q(1))));
  EXPECT_TRUE(kraus_apply(vacuum, ErrorPattern{1}).empty());
}

TEST(Channel, ExampleOneSingleLossBranch) {
  // a (|40>+|04>)/sqrt2 + b |22> under k=(0,1) -> sqrt(2g)(1-g)^(3/2) [a|03> + b|21>]
  const Code code = catalog(1);
  const RadicalSum a = RadicalSum::sqrt(q(1, 3)), b = RadicalSum::sqrt(q(2, 3));
  const PureBranch input = PureBranch::superpose(code.codewords(), {a, b});
  const PureBranch out = kraus_apply(input, ErrorPattern{0, 1});
  const GammaAmplitude factor = amp(1, 3, RadicalSum::sqrt(q(2)));
  PureBranch expected;
  expected.add({0, 3}, factor * a);
  expected.add({2, 1}, factor * b);
  EXPECT_EQ(out, expected);
}

TEST(Channel, ErrorPatternEnumeration) {
  const auto k1 = enumerate_error_patterns(2, 1);
  ASSERT_EQ(k1.size(), 2u);
  EXPECT_EQ(k1[0], ErrorPattern({0, 1}));
  EXPECT_EQ(k1[1], ErrorPattern({1, 0}));
  EXPECT_EQ(enumerate_error_patterns(3, 2).size(), 6u);
  const auto k0 = enumerate_error_patterns(2, 0);
  ASSERT_EQ(k0.size(), 1u);
  EXPECT_EQ(k0[0], ErrorPattern({0, 0}));
  const auto up = enumerate_error_patterns_up_to(3, 2);
  EXPECT_EQ(up.size(), 10u);
  for (std::size_t i = 1; i < up.size(); ++i) EXPECT_LE(up[i - 1].weight(), up[i].weight());
}

TEST(Channel, DualRailDampsToTwoBranches) {
  // a|01> + b|10> -> sqrt(1-g)(a|01>+b|10>) (+) sqrt(g)|00>
  const RadicalSum a = RadicalSum::sqrt(q(1, 4)), b = RadicalSum::sqrt(q(3, 4));
  PureBranch input;
  input.add({0, 1}, GammaAmplitude(a));
  input.add({1, 0}, GammaAmplitude(b));
  const MixedState out = damp(input);
  ASSERT_EQ(out.size(), 2u);
  const MixedBranch* none = out.find(ErrorPattern{0, 0});
  ASSERT_NE(none, nullptr);
  EXPECT_EQ(none->probability, mono(0, 1, q(1)));
  const MixedBranch* lost = out.find(ErrorPattern{0, 1});
  ASSERT_NE(lost, nullptr);
  EXPECT_EQ(lost->patterns.size(), 2u);
  EXPECT_EQ(lost->probability, mono(1, 0, q(1)));
  const auto merged = lost->merged_vector();
  ASSERT_TRUE(merged.has_value());
  PureBranch expected;
  expected.add({0, 0}, amp(1, 0, RadicalSum(q(1))));
  EXPECT_EQ(*merged, expected);
  EXPECT_EQ(out.total_probability(), GammaPolynomial(q(1)));
}

TEST(Channel, VacuumIsUndamped) {
  PureBranch vacuum;
  vacuum.add({0, 0}, GammaAmplitude(RadicalSum(q(1))));
  const MixedState out = damp(vacuum);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.branches()[0].probability, GammaPolynomial(q(1)));
}

TEST(Channel, ExampleOneCorrectableBranches) {
  // |phi_00> = (1-g)^2 |psi>; the two single-loss branches have norm 2 g (1-g)^3.
  const Code code = catalog(1);
  const PureBranch input = PureBranch::superpose(code.codewords(), {RadicalSum(q(1)), RadicalSum(q(0))});
  const MixedState out = damp(input, 1, false);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.find(ErrorPattern{0, 0})->state, input.scaled(amp(0, 4, RadicalSum(q(1)))));
  EXPECT_EQ(out.find(ErrorPattern{0, 1})->probability, mono(1, 3, q(2)));
  EXPECT_EQ(out.find(ErrorPattern{1, 0})->probability, mono(1, 3, q(2)));
}

// Completeness: sum over all patterns of the branch norms is exactly 1.
TEST(ChannelProperty, KrausCompleteness) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned modes = 1 + trial % 4;
    const Codeword c = testing::random_codeword(rng, modes, 12, 4, trial % 3 == 0);
    const MixedState out = damp(PureBranch::from_codeword(c), std::nullopt, trial % 2 == 0);
    EXPECT_EQ(out.total_probability(), GammaPolynomial(q(1))) << "trial " << trial;
  }
}

// Branch norm of a constant-row-sum codeword is g^s (1-g)^(N-s) sum mu prod C.
TEST(ChannelProperty, BranchNormClosedForm) {
  const Code code = catalog(9);
  for (const Codeword& c : code.codewords()) {
    for (const ErrorPattern& k : enumerate_error_patterns_up_to(2, 3)) {
      Rational constant;
      for (const CodewordRow& row : c.rows()) {
        BigInt product = 1;
        for (std::size_t j = 0; j < 2; ++j) product *= binomial(row.qcs[j], k[j]);
        constant += row.mu * Rational(product);
      }
      EXPECT_EQ(kraus_apply(c, k).norm_squared(), mono(k.weight(), 16 - k.weight(), constant));
    }
  }
}

// Branch count is bounded by prod (n_j + 1).
TEST(ChannelProperty, BranchCountBound) {
  PureBranch input;
  input.add({3, 1, 2}, GammaAmplitude(RadicalSum(q(1))));
  EXPECT_EQ(damp(input, std::nullopt, false).size(), 4u * 2u * 3u);
}

}  // namespace
}  // namespace ampcode
