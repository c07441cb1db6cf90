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

#include <set>

#include "ampcode/catalog.hpp"
#include "ampcode/code.hpp"
#include "ampcode/error.hpp"
#include "test_support.hpp"

namespace ampcode {
namespace {

using testing::q;

constexpr const char* kExampleOne = R"(code N=4 m=2 t=1 d=2 name="example-1"
word 0
+ 1/2 : 0 4
+ 1/2 : 4 0
word 1
+ 1/1 : 2 2
)";

TEST(CodeModel, ParseExampleOne) {
  const ParsedCode parsed = parse_code(kExampleOne);
  EXPECT_TRUE(parsed.warnings.empty());
  const Code& code = parsed.code;
  EXPECT_EQ(code.descriptor(), "[[4,2,2,2]]");
  EXPECT_EQ(code.name(), "example-1");
  EXPECT_EQ(code.design_t(), 1u);
  ASSERT_EQ(code.size(), 2u);
  EXPECT_EQ(code.codewords()[0].rows()[0].mu, q(1, 2));
  EXPECT_EQ(code.codewords()[0].rows()[0].qcs, OccupationVector({0, 4}));
  EXPECT_EQ(code, catalog(1));
}

TEST(CodeModel, CommentsAndBlankLines) {
  const std::string text = "# header comment\n\ncode N=4 m=2 t=1 d=2 name=\"a # b\"  # trailing\nword 0\n"
                           "+ 1/2 : 0 4 # row\n+ 1/2 : 4 0\n\nword 1\n+ 1/1 : 2 2\n";
  EXPECT_EQ(parse_code(text).code.name(), "a # b");
}

TEST(CodeModel, NormalizationErrorNamesCodeword) {
  const std::string text = "code N=4 m=2 t=1 d=2 name=\"x\"\nword 0\n+ 1/3 : 0 4\n+ 1/3 : 4 0\nword 1\n+ 1/1 : 2 2\n";
  try {
    parse_code(text);
    FAIL() << "expected NormalizationError";
  } catch (const NormalizationError& e) {
    EXPECT_NE(std::string(e.what()).find("word 0: weights sum to 2/3"), std::string::npos);
  }
}

TEST(CodeModel, ExampleElevenAsPrintedFailsNormalization) {
  const std::string text = serialize_code(catalog(11, CatalogVariant::as_printed));
  try {
    parse_code(text);
    FAIL() << "expected NormalizationError";
  } catch (const NormalizationError& e) {
    EXPECT_NE(std::string(e.what()).find("89/90"), std::string::npos);
  }
}

TEST(CodeModel, DuplicateStateIsStructuralError) {
  const std::string text = "code N=4 m=2 t=1 d=2 name=\"x\"\nword 0\n+ 1/2 : 0 4\n+ 1/2 : 0 4\nword 1\n+ 1/1 : 2 2\n";
  EXPECT_THROW(parse_code(text), StructureError);
}

TEST(CodeModel, SyntaxErrorsCarryLineNumbers) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"code N=4 m=2 t=1 d=2\nword 0\n+ 1/1 : 4 0\n", 1},                                 // missing name
      {"code N=4 m=2 t=1 d=2 name=\"x\"\nword 1\n+ 1/1 : 4 0\n", 2},                      // index out of order
      {"code N=4 m=2 t=1 d=2 name=\"x\"\nword 0\n+ 1/1 : 4 0 1\n", 3},                    // wrong mode count
      {"code N=4 m=2 t=1 d=2 name=\"x\"\nword 0\n* 1/1 : 4 0\n", 3},                      // bad sign
      {"code N=4 m=2 t=1 d=2 name=\"x\"\nword 0\n+ 1 : 4 0\n", 3},                        // missing '/'
      {"code N=4 m=2 t=1 d=2 name=\"x\"\n+ 1/1 : 4 0\n", 2},                              // row before word
  };
  for (const auto& [text, line] : cases) {
    try {
      parse_code(text);
      ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    } catch (const Error& e) {
      ADD_FAILURE() << "unexpected error kind: " << e.what();
    }
  }
}

TEST(CodeModel, HeaderMismatchWarns) {
  const std::string text = "code N=5 m=2 t=1 d=3 name=\"x\"\nword 0\n+ 1/2 : 0 4\n+ 1/2 : 4 0\nword 1\n+ 1/1 : 2 2\n";
  EXPECT_EQ(parse_code(text).warnings.size(), 2u);
}

TEST(CodeModel, UnequalRowSumsWarn) {
  const std::string text = "code N=3 m=2 t=0 d=1 name=\"x\"\nword 0\n+ 1/1 : 1 1\nword 1\n+ 1/1 : 2 1\n";
  const ParsedCode parsed = parse_code(text);
  EXPECT_FALSE(parsed.warnings.empty());
  EXPECT_EQ(parsed.code.total_photons(), 3u);
}

TEST(CodeModel, SerializeSortsRows) {
  const Code code("x", 1, {Codeword({{q(1, 2), 1, {4, 0}}, {q(1, 2), 1, {0, 4}}}), Codeword({{q(1), 1, {2, 2}}})});
  EXPECT_EQ(serialize_code(code), std::string(kExampleOne).replace(std::string(kExampleOne).find("example-1"), 9, "x"));
}

TEST(CodeModel, EmptyCodeIsRejected) {
  EXPECT_THROW(Code("x", 1, {}), StructureError);
  EXPECT_THROW(Code("x", 1, {Codeword()}), StructureError);
}

TEST(CodeModel, CatalogDescriptors) {
  EXPECT_EQ(catalog(1).descriptor(), "[[4,2,2,2]]");
  EXPECT_EQ(catalog(4).descriptor(), "[[9,3,2,3]]");
  EXPECT_EQ(catalog(4).codewords()[0].rows()[0].qcs, OccupationVector({3, 0, 6}));
  EXPECT_EQ(catalog(9).descriptor(), "[[16,2,2,4]]");
  EXPECT_EQ(catalog(9).codewords()[0].rows()[2].mu, q(6, 8));
  for (const CatalogEntry& e : catalog_entries()) EXPECT_EQ(e.printed.descriptor(), e.printed_descriptor) << e.id;
  EXPECT_THROW(catalog(0), DomainError);
  EXPECT_THROW(catalog(12), DomainError);
  EXPECT_THROW(catalog(1, CatalogVariant::corrected), DomainError);
}

TEST(CodeModel, BalancedFlags) {
  for (int id : {1, 2, 3, 4, 5, 6}) EXPECT_TRUE(catalog(id).is_balanced()) << id;
  for (int id : {7, 8, 9, 10, 11}) EXPECT_FALSE(catalog(id).is_balanced()) << id;
  EXPECT_TRUE(catalog(8).codewords()[0].is_balanced());
  EXPECT_FALSE(catalog(8).codewords()[1].is_balanced());
}

TEST(CodeModel, CatalogNormalizationOrFlag) {
  for (const CatalogEntry& e : catalog_entries()) {
    bool normalized = true;
    for (const Codeword& c : e.printed.codewords()) normalized = normalized && c.weight_sum() == q(1);
    EXPECT_TRUE(normalized || e.flagged()) << e.id;
  }
  EXPECT_EQ(catalog(11, CatalogVariant::as_printed).codewords()[0].weight_sum(), q(89, 90));
}

// parse(serialize(c)) == c for catalog codes and random valid codes.
TEST(CodeModelProperty, RoundTrip) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (!e.printed.is_valid()) continue;
    EXPECT_EQ(parse_code(serialize_code(e.printed)).code, e.printed) << e.id;
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned modes = 1 + trial % 4;
    std::vector<Codeword> words;
    std::set<OccupationVector> used;
    for (int l = 0; l < 2 + trial % 3; ++l) {
      Codeword c = testing::random_codeword(rng, modes, 10, 4, trial % 5 == 0);
      bool disjoint = true;
      for (const auto& s : c.support()) disjoint = disjoint && !used.count(s);
      if (!disjoint) continue;
      for (const auto& s : c.support()) used.insert(s);
      words.push_back(std::move(c));
    }
    if (words.empty()) continue;
    const Code code("random-" + std::to_string(trial), trial % 3, words);
    EXPECT_EQ(parse_code(serialize_code(code)).code, code) << serialize_code(code);
  }
}

}  // namespace
}  // namespace ampcode
