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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ampcode/channel.hpp"
#include "ampcode/code.hpp"
#include "ampcode/gamma_poly.hpp"

namespace ampcode {

enum class CheckStatus { passed, failed, not_applicable };
enum class ViolationKind { orthogonality, nondeformation, moment, distance, normalization, duplicate_state };

const char* to_string(CheckStatus status);
const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> codewords;
  std::vector<ErrorPattern> patterns;
  std::vector<unsigned> columns;  // column multiset, moment violations only
  std::string value;              // rendered offending value
  std::variant<std::monostate, Rational, GammaPolynomial, GammaAmplitude> exact;

  std::string str() const;
};

struct CriteriaReport {
  static constexpr std::size_t kMaxWitnesses = 32;

  std::string check;
  CheckStatus status = CheckStatus::passed;
  // The first kMaxWitnesses violations in enumeration order.
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  // Common value g_k of <c|A_k^+ A_k|c> per pattern (non-deformation only).
  std::map<ErrorPattern, GammaPolynomial> syndrome_norms;
  // Closest cross-codeword pair (distance check only).
  std::optional<Rational> min_distance;
  std::string note;

  bool passed() const { return status == CheckStatus::passed; }
  void add(Violation violation);
};

// <c_a| A_k^+ A_k' |c_b> = 0 for every (a,k) != (b,k') with |k|, |k'| <= t,
// computed exactly. Pairs whose damaged supports are disjoint are skipped.
CriteriaReport check_orthogonality(const Code& code, unsigned t);

// <c|A_k^+ A_k|c> identical (as polynomials in gamma) across codewords for
// every |k| <= t. On success syndrome_norms holds the common g_k.
CriteriaReport check_nondeformation(const Code& code, unsigned t);

// sum_i mu_i prod_{j in J} n_ij per codeword, for every column multiset J
// with |J| <= t (|J| = 0 gives the weight sum).
class MomentTable {
 public:
  using Multiset = std::vector<unsigned>;

  MomentTable(const Code& code, unsigned t);

  unsigned t() const { return t_; }
  std::size_t codewords() const { return values_.size(); }
  const Rational& value(std::size_t codeword, const Multiset& columns) const;
  const std::map<Multiset, Rational>& row(std::size_t codeword) const { return values_[codeword]; }

 private:
  unsigned t_;
  std::vector<std::map<Multiset, Rational>> values_;
};

MomentTable moment_table(const Code& code, unsigned t);

// Non-decreasing column multisets of the given size over m columns.
std::vector<std::vector<unsigned>> column_multisets(unsigned m, unsigned size);

// Sufficient moment condition: the moment table agrees across codewords up
// to order t. Not applicable unless every row of every codeword has the same
// row sum.
CriteriaReport check_moments(const Code& code, unsigned t);

// Sufficient orthogonality condition: every cross-codeword state pair is at
// distance > t. Not applicable to codes with negative amplitudes.
CriteriaReport theorem2_check(const Code& code, unsigned t);

// Floating-point evaluation of both conditions at a fixed gamma, built
// independently of the exact engine; used only for cross-checking.
CriteriaReport check_numeric(const Code& code, unsigned t, double gamma, double tolerance);

struct VerificationSummary {
  unsigned t = 0;
  std::vector<ValidationIssue> validation;
  CriteriaReport orthogonality;
  CriteriaReport nondeformation;
  CriteriaReport moments;
  CriteriaReport distance;

  bool structurally_valid() const;
  // Valid code, both defining conditions hold, and no sufficient-condition
  // check failed outright.
  bool passed() const;
};

VerificationSummary verify_code(const Code& code, unsigned t);

}  // namespace ampcode
