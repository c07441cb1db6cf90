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

#include "ampcode/catalog.hpp"

#include "ampcode/criteria.hpp"
#include "ampcode/error.hpp"

namespace ampcode {
namespace {

struct Row {
  long num;
  long den;
  std::vector<unsigned> qcs;
};

Codeword word(const std::vector<Row>& rows) {
  std::vector<CodewordRow> out;
  for (const Row& r : rows) out.push_back({Rational(r.num, r.den), +1, OccupationVector(r.qcs)});
  return Codeword(std::move(out));
}

Codeword orbit_word(std::vector<std::vector<unsigned>> states) {
  std::vector<Row> rows;
  for (auto& s : states) rows.push_back({1, static_cast<long>(states.size()), std::move(s)});
  return word(rows);
}

std::vector<std::vector<OccupationVector>> supports_of(const Code& code) {
  std::vector<std::vector<OccupationVector>> out;
  for (const Codeword& c : code.codewords()) out.push_back(c.support());
  return out;
}

// Flags come from the checks themselves, so the catalog cannot drift from
// what verification reports.
std::vector<std::string> detect_flags(const Code& code, unsigned t) {
  std::vector<std::string> flags;
  for (const ValidationIssue& issue : code.validate()) {
    if (issue.kind == ValidationIssue::Kind::normalization) flags.push_back("weight-sum: " + issue.message);
    if (issue.kind == ValidationIssue::Kind::duplicate_state) flags.push_back("duplicate-state: " + issue.message);
  }
  const CriteriaReport moments = check_moments(code, t);
  if (moments.status == CheckStatus::failed)
    flags.push_back("moment-mismatch: " + moments.violations.front().str());
  if (!check_nondeformation(code, t).passed()) flags.push_back("non-deformation fails at t = " + std::to_string(t));
  if (!check_orthogonality(code, t).passed()) flags.push_back("orthogonality fails at t = " + std::to_string(t));
  return flags;
}

CatalogEntry make(int id, std::string descriptor, unsigned t, long deficit, std::vector<Codeword> words) {
  CatalogEntry e;
  e.id = id;
  e.title = "Example " + std::to_string(id);
  e.printed_descriptor = std::move(descriptor);
  e.design_t = t;
  e.printed_deficit = deficit;
  e.printed = Code("example-" + std::to_string(id), t, std::move(words));
  e.flags = detect_flags(e.printed, t);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(make(1, "[[4,2,2,2]]", 1, 6,
                     {word({{1, 2, {4, 0}}, {1, 2, {0, 4}}}), word({{1, 1, {2, 2}}})}));

  std::vector<Codeword> ex2 = {
      orbit_word({{0, 0, 12}, {12, 0, 0}, {0, 12, 0}}), orbit_word({{0, 2, 10}, {10, 0, 2}, {2, 10, 0}}),
      orbit_word({{0, 4, 8}, {8, 0, 4}, {4, 8, 0}}),    orbit_word({{0, 6, 6}, {6, 0, 6}, {6, 6, 0}}),
      orbit_word({{0, 8, 4}, {4, 0, 8}, {8, 4, 0}}),    orbit_word({{0, 10, 2}, {2, 0, 10}, {10, 2, 0}}),
      orbit_word({{2, 2, 8}, {8, 2, 2}, {2, 8, 2}}),    orbit_word({{2, 4, 6}, {6, 2, 4}, {4, 6, 2}}),
      orbit_word({{2, 6, 4}, {6, 4, 2}, {2, 6, 4}}),    orbit_word({{4, 4, 4}})};
  {
    CatalogEntry e = make(2, "[[12,3,10,2]]", 1, 66, ex2);
    ex2[8] = orbit_word({{2, 6, 4}, {6, 4, 2}, {4, 2, 6}});
    e.corrected = Code("example-2", 1, ex2);
    e.note = "c9 printed with (2,6,4) twice; the cyclic orbit gives (4,2,6) as the third state";
    out.push_back(std::move(e));
  }

  out.push_back(make(3, "[[6,3,4,2]]", 1, 15,
                     {orbit_word({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}), orbit_word({{4, 2, 0}, {2, 0, 4}, {0, 4, 2}}),
                      orbit_word({{2, 4, 0}, {4, 0, 2}, {0, 2, 4}}), orbit_word({{2, 2, 2}})}));
  out.push_back(make(4, "[[9,3,2,3]]", 2, 84,
                     {orbit_word({{3, 0, 6}, {0, 6, 3}, {6, 3, 0}}), orbit_word({{0, 3, 6}, {3, 6, 0}, {6, 0, 3}})}));
  out.push_back(make(5, "[[6,4,2,2]]", 1, 15,
                     {orbit_word({{0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3}, {3, 2, 1, 0}}),
                      orbit_word({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}})}));
  out.push_back(make(6, "[[7,2,2,2]]", 1, 21, {orbit_word({{7, 0}, {1, 6}}), orbit_word({{5, 2}, {3, 4}})}));
  out.push_back(make(7, "[[9,2,2,3]]", 2, 84,
                     {word({{1, 4, {9, 0}}, {3, 4, {3, 6}}}), word({{1, 4, {0, 9}}, {3, 4, {6, 3}}})}));
  out.push_back(make(8, "[[9,3,2,3]]", 2, 84,
                     {orbit_word({{0, 3, 6}, {3, 0, 6}, {3, 6, 0}}),
                      word({{6, 9, {3, 3, 3}}, {2, 9, {0, 0, 9}}, {1, 9, {0, 9, 0}}})}));
  out.push_back(make(9, "[[16,2,2,4]]", 3, 1820,
                     {word({{1, 8, {0, 16}}, {1, 8, {16, 0}}, {6, 8, {8, 8}}}),
                      word({{1, 2, {4, 12}}, {1, 2, {12, 4}}})}));

  {
    CatalogEntry e = make(10, "[[20,3,2,4]]", 3, 4845,
                          {word({{1, 25, {0, 4, 16}}, {4, 25, {4, 0, 16}}, {20, 25, {0, 20, 0}}}),
                           word({{2, 5, {4, 4, 12}}, {3, 5, {4, 8, 8}}})});
    e.repair = solve_unbalanced_weights(supports_of(e.printed), e.design_t);
    if (e.repair->ok()) e.corrected = e.repair->to_code(supports_of(e.printed), "example-10", e.design_t);
    e.note = e.repair->ok() ? "weights re-solved on the printed supports"
                            : "no positive weights exist on the printed supports";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = make(11, "[[50,2,2,5]]", 4, 2118760,
                          {word({{1, 18, {0, 50}}, {5, 9, {20, 30}}, {1, 3, {40, 10}}, {2, 45, {45, 5}}}),
                           word({{1, 18, {5, 45}}, {1, 6, {10, 40}}, {33, 90, {25, 25}}, {1, 3, {35, 15}},
                                 {7, 90, {50, 0}}})});
    e.repair = solve_unbalanced_weights(supports_of(e.printed), e.design_t);
    if (e.repair->ok()) e.corrected = e.repair->to_code(supports_of(e.printed), "example-11", e.design_t);
    e.note = e.repair->ok() ? "weights re-solved on the printed supports"
                            : "no positive weights exist on the printed supports";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(int id) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.id == id) return e;
  throw DomainError("no catalog entry " + std::to_string(id) + " (valid ids 1-11)");
}

Code catalog(int id, CatalogVariant variant) {
  const CatalogEntry& e = catalog_entry(id);
  switch (variant) {
    case CatalogVariant::as_printed: return e.printed;
    case CatalogVariant::corrected:
      if (!e.corrected) throw DomainError("catalog entry " + std::to_string(id) + " has no corrected variant");
      return *e.corrected;
    case CatalogVariant::preferred: break;
  }
  return e.preferred();
}

}  // namespace ampcode
