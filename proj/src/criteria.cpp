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

#include "ampcode/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ampcode/error.hpp"

namespace ampcode {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::orthogonality: return "orthogonality";
    case ViolationKind::nondeformation: return "nondeformation";
    case ViolationKind::moment: return "moment";
    case ViolationKind::distance: return "distance";
    case ViolationKind::normalization: return "normalization";
    case ViolationKind::duplicate_state: return "duplicate_state";
  }
  return "?";
}

std::string Violation::str() const {
  std::ostringstream os;
  os << to_string(kind);
  if (!codewords.empty()) {
    os << " words";
    for (std::size_t l : codewords) os << " " << l;
  }
  if (!patterns.empty()) {
    os << " patterns";
    for (const ErrorPattern& k : patterns) os << " " << k.str();
  }
  if (!columns.empty()) {
    os << " columns {";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i] + 1;
    os << "}";
  }
  if (!value.empty()) os << ": " << value;
  return os.str();
}

void CriteriaReport::add(Violation violation) {
  status = CheckStatus::failed;
  ++violation_count;
  if (violations.size() < kMaxWitnesses) violations.push_back(std::move(violation));
}

namespace {

// A_k |c_l> for every codeword l and pattern k with |k| <= t.
struct DamagedTable {
  std::vector<ErrorPattern> patterns;
  std::vector<std::vector<PureBranch>> branches;  // [codeword][pattern]
};

DamagedTable damage_all(const Code& code, unsigned t) {
  DamagedTable table{enumerate_error_patterns_up_to(code.modes(), t), {}};
  table.branches.resize(code.size());
  for (std::size_t l = 0; l < code.size(); ++l) {
    const PureBranch input = PureBranch::from_codeword(code.codewords()[l]);
    table.branches[l].reserve(table.patterns.size());
    for (const ErrorPattern& k : table.patterns) table.branches[l].push_back(kraus_apply(input, k));
  }
  return table;
}

}  // namespace

CriteriaReport check_orthogonality(const Code& code, unsigned t) {
  CriteriaReport report;
  report.check = "orthogonality";
  const DamagedTable table = damage_all(code, t);
  const std::size_t np = table.patterns.size();

  // Only branches that share a damaged state can overlap.
  std::map<OccupationVector, std::vector<std::size_t>> holders;
  for (std::size_t l = 0; l < code.size(); ++l)
    for (std::size_t p = 0; p < np; ++p)
      for (const auto& [state, amplitude] : table.branches[l][p].terms())
        holders[state].push_back(l * np + p);
  std::set<std::pair<std::size_t, std::size_t>> candidates;
  for (const auto& [state, ids] : holders)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) candidates.emplace(ids[a], ids[b]);

  for (const auto& [a, b] : candidates) {
    const std::size_t la = a / np, pa = a % np, lb = b / np, pb = b % np;
    GammaAmplitude overlap = inner_product(table.branches[la][pa], table.branches[lb][pb]);
    if (overlap.is_zero()) continue;
    Violation v{ViolationKind::orthogonality, {la, lb}, {table.patterns[pa], table.patterns[pb]}, {},
                overlap.str(), overlap};
    report.add(std::move(v));
  }
  return report;
}

CriteriaReport check_nondeformation(const Code& code, unsigned t) {
  CriteriaReport report;
  report.check = "nondeformation";
  const DamagedTable table = damage_all(code, t);
  for (std::size_t p = 0; p < table.patterns.size(); ++p) {
    const GammaPolynomial reference = table.branches[0][p].norm_squared();
    bool agree = true;
    for (std::size_t l = 1; l < code.size(); ++l) {
      const GammaPolynomial other = table.branches[l][p].norm_squared();
      GammaPolynomial difference = other - reference;
      if (difference.is_zero()) continue;
      agree = false;
      std::string value = "g(word 0) = " + reference.str() + ", g(word " + std::to_string(l) +
                          ") = " + other.str();
      report.add({ViolationKind::nondeformation, {0, l}, {table.patterns[p]}, {}, std::move(value),
                  std::move(difference)});
    }
    if (agree) report.syndrome_norms.emplace(table.patterns[p], reference);
  }
  if (!report.passed()) report.syndrome_norms.clear();
  return report;
}

// ------------------------------------------------------------------ moments

std::vector<std::vector<unsigned>> column_multisets(unsigned m, unsigned size) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto recurse = [&](auto&& self, unsigned start) -> void {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (unsigned j = start; j < m; ++j) {
      current.push_back(j);
      self(self, j);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

MomentTable::MomentTable(const Code& code, unsigned t) : t_(t), values_(code.size()) {
  for (std::size_t l = 0; l < code.size(); ++l) {
    for (unsigned s = 0; s <= t; ++s) {
      for (const Multiset& columns : column_multisets(code.modes(), s)) {
        Rational total;
        for (const CodewordRow& row : code.codewords()[l].rows()) {
          BigInt product = 1;
          for (unsigned j : columns) product *= row.qcs[j];
          total += row.mu * Rational(product);
        }
        values_[l].emplace(columns, total);
      }
    }
  }
}

const Rational& MomentTable::value(std::size_t codeword, const Multiset& columns) const {
  Multiset key = columns;
  std::sort(key.begin(), key.end());
  auto it = values_.at(codeword).find(key);
  if (it == values_[codeword].end()) throw DomainError("column multiset outside the moment table");
  return it->second;
}

MomentTable moment_table(const Code& code, unsigned t) { return MomentTable(code, t); }

CriteriaReport check_moments(const Code& code, unsigned t) {
  CriteriaReport report;
  report.check = "moments";
  if (!code.equal_row_sums()) {
    report.status = CheckStatus::not_applicable;
    report.note = "row sums differ; the moment condition only applies to a common row sum";
    return report;
  }
  const MomentTable table(code, t);
  for (const auto& [columns, reference] : table.row(0)) {
    if (columns.empty()) continue;
    for (std::size_t l = 1; l < table.codewords(); ++l) {
      const Rational& other = table.row(l).at(columns);
      if (other == reference) continue;
      report.add({ViolationKind::moment, {0, l}, {}, columns,
                  "word 0 = " + reference.str() + ", word " + std::to_string(l) + " = " + other.str(),
                  other - reference});
    }
  }
  return report;
}

CriteriaReport theorem2_check(const Code& code, unsigned t) {
  CriteriaReport report;
  report.check = "distance";
  if (code.has_negative_amplitudes()) {
    report.status = CheckStatus::not_applicable;
    report.note = "negative amplitudes present; the distance criterion assumes non-negative amplitudes";
    return report;
  }
  report.min_distance = code.min_distance();
  if (!report.min_distance) {
    report.note = "single codeword";
    return report;
  }
  const Rational bound(static_cast<long long>(t));
  std::optional<Rational> intra;
  for (std::size_t a = 0; a < code.size(); ++a) {
    const auto& rows_a = code.codewords()[a].rows();
    for (std::size_t i = 0; i < rows_a.size(); ++i)
      for (std::size_t j = i + 1; j < rows_a.size(); ++j) {
        Rational d = distance(rows_a[i].qcs, rows_a[j].qcs);
        if (!intra || d < *intra) intra = d;
      }
    for (std::size_t b = a + 1; b < code.size(); ++b) {
      for (const CodewordRow& ra : rows_a) {
        for (const CodewordRow& rb : code.codewords()[b].rows()) {
          const Rational d = distance(ra.qcs, rb.qcs);
          if (d > bound) continue;
          report.add({ViolationKind::distance, {a, b}, {}, {},
                      "D" + ra.qcs.str() + rb.qcs.str() + " = " + d.str() + " <= " + bound.str(), d});
        }
      }
    }
  }
  report.note = "min cross-codeword distance " + report.min_distance->str();
  if (intra) report.note += ", min within-codeword distance " + intra->str();
  return report;
}

// ------------------------------------------------------------------ numeric

CriteriaReport check_numeric(const Code& code, unsigned t, double gamma, double tolerance) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma outside [0, 1]");
  CriteriaReport report;
  report.check = "numeric";
  const std::vector<ErrorPattern> patterns = enumerate_error_patterns_up_to(code.modes(), t);
  using Vector = std::map<std::vector<unsigned>, double>;
  std::vector<std::vector<Vector>> damaged(code.size(), std::vector<Vector>(patterns.size()));
  for (std::size_t l = 0; l < code.size(); ++l) {
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const ErrorPattern& k = patterns[p];
      for (const CodewordRow& row : code.codewords()[l].rows()) {
        double amplitude = row.sign * std::sqrt(row.mu.to_double());
        std::vector<unsigned> out = row.qcs.values();
        bool vanishes = false;
        for (std::size_t j = 0; j < out.size() && !vanishes; ++j) {
          if (k[j] > out[j]) {
            vanishes = true;
            break;
          }
          const double n = out[j];
          const double kk = k[j];
          amplitude *= std::sqrt(std::exp(std::lgamma(n + 1) - std::lgamma(kk + 1) - std::lgamma(n - kk + 1)));
          amplitude *= std::pow(gamma, kk / 2) * std::pow(1.0 - gamma, (n - kk) / 2);
          out[j] -= k[j];
        }
        if (!vanishes) damaged[l][p][out] += amplitude;
      }
    }
  }
  auto dot = [](const Vector& a, const Vector& b) {
    double out = 0.0;
    for (const auto& [state, amplitude] : a)
      if (auto it = b.find(state); it != b.end()) out += amplitude * it->second;
    return out;
  };
  for (std::size_t la = 0; la < code.size(); ++la) {
    for (std::size_t pa = 0; pa < patterns.size(); ++pa) {
      for (std::size_t lb = la; lb < code.size(); ++lb) {
        for (std::size_t pb = (lb == la ? pa + 1 : 0); pb < patterns.size(); ++pb) {
          const double overlap = dot(damaged[la][pa], damaged[lb][pb]);
          if (std::abs(overlap) > tolerance)
            report.add({ViolationKind::orthogonality, {la, lb}, {patterns[pa], patterns[pb]}, {},
                        std::to_string(overlap), {}});
        }
      }
    }
  }
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const double reference = dot(damaged[0][p], damaged[0][p]);
    for (std::size_t l = 1; l < code.size(); ++l) {
      const double other = dot(damaged[l][p], damaged[l][p]);
      if (std::abs(other - reference) > tolerance)
        report.add({ViolationKind::nondeformation, {0, l}, {patterns[p]}, {},
                    std::to_string(reference) + " vs " + std::to_string(other), {}});
    }
  }
  return report;
}

// -------------------------------------------------------------------- summary

bool VerificationSummary::structurally_valid() const {
  return std::none_of(validation.begin(), validation.end(), [](const ValidationIssue& issue) {
    return issue.kind != ValidationIssue::Kind::unequal_row_sums;
  });
}

bool VerificationSummary::passed() const {
  return structurally_valid() && orthogonality.passed() && nondeformation.passed() &&
         moments.status != CheckStatus::failed && distance.status != CheckStatus::failed;
}

VerificationSummary verify_code(const Code& code, unsigned t) {
  VerificationSummary out;
  out.t = t;
  out.validation = code.validate();
  out.orthogonality = check_orthogonality(code, t);
  out.nondeformation = check_nondeformation(code, t);
  out.moments = check_moments(code, t);
  out.distance = theorem2_check(code, t);
  return out;
}

}  // namespace ampcode
