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

#include <json.hpp>

#include "ampcode/catalog.hpp"
#include "ampcode/commands.hpp"
#include "ampcode/error.hpp"
#include "test_support.hpp"

namespace ampcode {
namespace {

using nlohmann::json;
using testing::q;

TEST(Commands, VerifyReport) {
  const Report r = cmd_verify(catalog(1), {});
  EXPECT_TRUE(r.passed);
  const json j = json::parse(r.json());
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["descriptor"], "[[4,2,2,2]]");
  EXPECT_EQ(j["syndrome_norms"].size(), 3u);
  EXPECT_EQ(j["syndrome_norms"]["(0,0)"], "(1-g)^4");
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass");
  EXPECT_FALSE(j.contains("timings"));
  EXPECT_NE(r.text().find("PASS"), std::string::npos);
}

TEST(Commands, VerifyFailureHasWitness) {
  const Report r = cmd_verify(catalog(2, CatalogVariant::as_printed), {});
  EXPECT_FALSE(r.passed);
  const json j = json::parse(r.json());
  bool witness = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "nondeformation") witness = !c["violations"].empty();
  EXPECT_TRUE(witness);
}

TEST(Commands, VerifyNumeric) {
  VerifyOptions o;
  o.numeric = true;
  o.gamma = q(1, 5);
  EXPECT_TRUE(cmd_verify(catalog(4), o).passed);
  EXPECT_FALSE(cmd_verify(catalog(2, CatalogVariant::as_printed), o).passed);
}

TEST(Commands, Fidelity) {
  const json j = json::parse(cmd_fidelity(catalog(4), std::nullopt, q(1, 10)).json());
  EXPECT_EQ(j["leading_deficit"], "84");
  EXPECT_EQ(j["value"], "473513931/500000000");
  EXPECT_TRUE(j["channel_agrees"].get<bool>());
}

TEST(Commands, RateAndBound) {
  EXPECT_NEAR(json::parse(cmd_rate(catalog(1)).json())["rate"].get<double>(), 0.215338, 1e-6);
  const json b = json::parse(cmd_bound(1, 1, 2).json());
  EXPECT_EQ(b["min_N"], 8);
  EXPECT_THROW(cmd_bound(1, 1, 1), DomainError);
}

TEST(Commands, Simulate) {
  SimulateOptions o;
  o.gamma = q(1, 20);
  o.shots = 1000;
  o.seed = 1;
  const json j = json::parse(cmd_simulate(catalog(1), o).json());
  EXPECT_EQ(j["successes"], 984);
  EXPECT_EQ(j["exact_fidelity"], "157757/160000");
  const std::string single = cmd_simulate(catalog(1), o).json();
  o.threads = 3;
  EXPECT_EQ(cmd_simulate(catalog(1), o).json(), single);
}

TEST(Commands, Construct) {
  const Report t1 = cmd_construct_t1(2, 2, 2);
  EXPECT_TRUE(t1.passed);
  EXPECT_EQ(parse_code(t1.payload).code.descriptor(), "[[4,2,2,2]]");
  const Report t2 = cmd_construct_t2(OccupationVector{1, 0, 2}, 3);
  EXPECT_TRUE(t2.passed);
  EXPECT_EQ(parse_code(t2.payload).code.design_t(), 2u);
  EXPECT_THROW(cmd_construct_t2(OccupationVector{1, 1, 1}, 3), ConstructionError);
  const Report w = cmd_construct_weights("word 0\n9 0\n3 6\nword 1\n0 9\n6 3\n", 1);
  EXPECT_TRUE(w.passed);
  EXPECT_EQ(json::parse(w.json())["weights"][0][1], "3/4");
}

TEST(Commands, ParseSupports) {
  const auto s = parse_supports("# comment\nword 0\n9 0\n+ 1/2 : 3 6\nword 1\n0 9\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].size(), 2u);
  EXPECT_EQ(s[0][1], (OccupationVector{3, 6}));
  EXPECT_THROW(parse_supports("9 0\n"), ParseError);
  EXPECT_THROW(parse_supports(""), ParseError);
}

TEST(Commands, Catalog) {
  const json list = json::parse(cmd_catalog_list().json());
  EXPECT_EQ(list["entries"].size(), 11u);
  const json show = json::parse(cmd_catalog_show(11, CatalogVariant::preferred).json());
  EXPECT_EQ(show["variant"], "corrected");
  EXPECT_THROW(cmd_catalog_show(12, CatalogVariant::preferred), DomainError);
  const Report all = cmd_catalog_verify_all();
  EXPECT_TRUE(all.passed);
  EXPECT_NE(all.text().find("8 pass, 3 flagged"), std::string::npos);
}

TEST(Commands, OptimalT) {
  const json j = json::parse(cmd_optimal_t(q(1, 1000), 0.5, 3.0, 1).json());
  EXPECT_NEAR(j["t_opt"].get<double>(), 9.97868, 1e-4);
  EXPECT_EQ(j["neighbors"][1]["N"], 500);
}

}  // namespace
}  // namespace ampcode
