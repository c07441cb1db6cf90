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
#include "ampcode/construct.hpp"
#include "ampcode/criteria.hpp"
#include "ampcode/error.hpp"
#include "test_support.hpp"

namespace ampcode {
namespace {

using testing::mono;
using testing::q;

Code single_states(std::vector<OccupationVector> states) {
  std::vector<Codeword> words;
  for (auto& s : states) words.push_back(Codeword({{q(1), 1, s}}));
  return Code("singles", 0, std::move(words));
}

TEST(Criteria, ExampleOnePasses) {
  const Code code = catalog(1);
  EXPECT_TRUE(check_orthogonality(code, 1).passed());
  const CriteriaReport nondef = check_nondeformation(code, 1);
  ASSERT_TRUE(nondef.passed());
  EXPECT_EQ(nondef.syndrome_norms.size(), 3u);
  EXPECT_EQ(nondef.syndrome_norms.at(ErrorPattern{0, 0}), mono(0, 4, q(1)));
  EXPECT_EQ(nondef.syndrome_norms.at(ErrorPattern{1, 0}), mono(1, 3, q(2)));
}

TEST(Criteria, IdenticalCodewordsOverlap) {
  const Code code = single_states({{1, 1}, {1, 1}});
  const CriteriaReport r = check_orthogonality(code, 0);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations[0].codewords, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(std::get<GammaAmplitude>(r.violations[0].exact).to_polynomial(), mono(0, 2, q(1)));
}

TEST(Criteria, DifferentPhotonNumbersDeform) {
  // {|11>, |22>}: g_0 = (1-g)^2 vs (1-g)^4
  const CriteriaReport r = check_nondeformation(single_states({{1, 1}, {2, 2}}), 0);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(std::get<GammaPolynomial>(r.violations[0].exact), mono(0, 4, q(1)) - mono(0, 2, q(1)));
  EXPECT_TRUE(r.syndrome_norms.empty());
}

TEST(Criteria, SameCodewordDifferentPatternsAreChecked) {
  // |2,0> + |0,2> style word with itself: A_(1,0)|c> and A_(0,1)|c> share |1,1>.
  const Code code("x", 1, {Codeword({{q(1, 2), 1, {2, 1}}, {q(1, 2), 1, {1, 2}}})});
  const CriteriaReport r = check_orthogonality(code, 1);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations[0].codewords, (std::vector<std::size_t>{0, 0}));
}

TEST(Criteria, ExampleEightAndSevenPassAtTwo) {
  EXPECT_TRUE(check_orthogonality(catalog(8), 2).passed());
  EXPECT_TRUE(check_nondeformation(catalog(8), 2).passed());
  EXPECT_TRUE(check_nondeformation(catalog(7), 2).passed());
}

TEST(Criteria, MomentTableValues) {
  const MomentTable nine = moment_table(catalog(9), 3);
  EXPECT_EQ(nine.value(0, {0, 0, 0}), q(896));
  EXPECT_EQ(nine.value(1, {0, 0, 0}), q(896));
  const MomentTable four = moment_table(catalog(4), 2);
  EXPECT_EQ(four.value(0, {0, 1}), q(6));
  EXPECT_EQ(four.value(1, {1, 0}), q(6));
  for (int id = 1; id <= 9; ++id) EXPECT_EQ(moment_table(catalog(id), 0).value(0, {}), q(1));
}

TEST(Criteria, MomentChecks) {
  EXPECT_TRUE(check_moments(catalog(6), 1).passed());
  const CriteriaReport three = check_moments(catalog(3), 2);
  ASSERT_FALSE(three.passed());
  EXPECT_EQ(three.violations[0].columns.size(), 2u);
  EXPECT_TRUE(check_moments(catalog(9), 3).passed());
  EXPECT_EQ(check_moments(single_states({{1, 1}, {2, 2}}), 1).status, CheckStatus::not_applicable);
}

TEST(Criteria, DistanceCheck) {
  const CriteriaReport one = theorem2_check(catalog(1), 1);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(*one.min_distance, q(2));
  EXPECT_TRUE(theorem2_check(catalog(4), 2).passed());
  EXPECT_EQ(*theorem2_check(catalog(4), 2).min_distance, q(3));
  EXPECT_FALSE(theorem2_check(catalog(1), 2).passed());
  const Code signed_code("s", 1, {Codeword({{q(1, 2), 1, {4, 0}}, {q(1, 2), -1, {0, 4}}}), Codeword({{q(1), 1, {2, 2}}})});
  EXPECT_EQ(theorem2_check(signed_code, 1).status, CheckStatus::not_applicable);
}

TEST(Criteria, SignedAmplitudesVerifiedByInnerProducts) {
  // (|40> - |04>)/sqrt2 and (|40> + |04>)/sqrt2 are orthogonal at t = 0 even
  // though they share their support.
  const Code code("s", 0, {Codeword({{q(1, 2), 1, {4, 0}}, {q(1, 2), -1, {0, 4}}}),
                           Codeword({{q(1, 2), 1, {4, 0}}, {q(1, 2), 1, {0, 4}}})});
  EXPECT_TRUE(check_orthogonality(code, 0).passed());
  EXPECT_TRUE(check_nondeformation(code, 0).passed());
}

TEST(Criteria, NumericAgreesWithExact) {
  for (int id = 1; id <= 9; ++id) {
    const Code code = catalog(id);
    EXPECT_TRUE(check_numeric(code, code.design_t(), 0.1, 1e-12).passed()) << id;
  }
  EXPECT_FALSE(check_numeric(catalog(1), 2, 0.1, 1e-12).passed());
  EXPECT_FALSE(check_numeric(catalog(10, CatalogVariant::as_printed), 3, 0.1, 1e-12).passed());
}

TEST(Criteria, VerifySummary) {
  EXPECT_TRUE(verify_code(catalog(5), 1).passed());
  const VerificationSummary printed = verify_code(catalog(2, CatalogVariant::as_printed), 1);
  EXPECT_FALSE(printed.passed());
  EXPECT_FALSE(printed.structurally_valid());
}

// Non-deformation witnesses at t = 2 match the column-pair sums computed
// directly from the rows.
TEST(CriteriaProperty, SecondOrderWitnessesMatchColumnPairSums) {
  const Code code = catalog(3);
  const CriteriaReport r = check_nondeformation(code, 2);
  ASSERT_FALSE(r.passed());
  for (const Violation& v : r.violations) {
    const ErrorPattern& k = v.patterns[0];
    if (k.weight() != 2) continue;
    // sum_i mu_i prod_j C(n_ij, k_j) for both codewords differs; so does the
    // pair sum sum_i mu_i n_ij1 n_ij2 for the corresponding columns.
    std::vector<unsigned> cols;
    for (unsigned j = 0; j < k.modes(); ++j)
      for (unsigned c = 0; c < k[j]; ++c) cols.push_back(j);
    auto pair_sum = [&](std::size_t l) {
      Rational s;
      for (const CodewordRow& row : code.codewords()[l].rows())
        s += row.mu * Rational(BigInt(row.qcs[cols[0]] * row.qcs[cols[1]]));
      return s;
    };
    EXPECT_NE(pair_sum(v.codewords[0]), pair_sum(v.codewords[1]));
  }
}

// For valid codes, Theorem 2 implies orthogonality and moment equality
// implies non-deformation.
TEST(CriteriaProperty, SufficientConditionsAreSound) {
  std::vector<Code> codes;
  for (const CatalogEntry& e : catalog_entries()) {
    codes.push_back(e.printed);
    if (e.corrected) codes.push_back(*e.corrected);
  }
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned m = 2; m <= 4; ++m) codes.push_back(build_t1_family(n, m, 2 + n % 2).code);
  for (const OccupationVector& x : enumerate_qcs(4, 3).members) {
    try {
      codes.push_back(build_t2_pair(x, 3).code);
    } catch (const ConstructionError&) {
    }
  }
  std::size_t moment_cases = 0;
  for (const Code& code : codes) {
    if (!code.is_valid()) continue;
    for (unsigned t = 0; t <= 3 && t < code.total_photons(); ++t) {
      if (theorem2_check(code, t).passed()) EXPECT_TRUE(check_orthogonality(code, t).passed()) << code.name();
      if (code.equal_row_sums() && check_moments(code, t).passed()) {
        ++moment_cases;
        EXPECT_TRUE(check_nondeformation(code, t).passed()) << code.name() << " t=" << t;
      }
    }
  }
  EXPECT_GE(moment_cases, 50u);
}

// For an equal-row-sum code every g_k is a single monomial g^s (1-g)^(N-s) c.
TEST(CriteriaProperty, SyndromeNormsAreMonomials) {
  for (int id : {1, 3, 4, 7, 9}) {
    const Code code = catalog(id);
    for (const auto& [k, g] : check_nondeformation(code, code.design_t()).syndrome_norms) {
      const auto m = g.single_monomial();
      ASSERT_TRUE(m.has_value());
      EXPECT_EQ(m->first.gamma, k.weight());
      EXPECT_EQ(m->first.damp, code.total_photons() - k.weight());
    }
  }
}

}  // namespace
}  // namespace ampcode
