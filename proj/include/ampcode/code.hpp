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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ampcode/fock.hpp"
#include "ampcode/radical.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

// One row of a codeword: amplitude sign * sqrt(mu) on the state qcs.
struct CodewordRow {
  Rational mu;
  int sign = +1;
  OccupationVector qcs;

  RadicalSum amplitude() const;
  friend bool operator==(const CodewordRow&, const CodewordRow&) = default;
};

// A logical basis state: a signed, weighted superposition of quasi-classical
// states. Normalization and distinctness are checked by Code::validate() and
// by the parser, not here, so printed-but-invalid codes remain representable.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::vector<CodewordRow> rows);

  // Equal weights 1/p over p states, all amplitudes positive.
  static Codeword equal_weight(const std::vector<OccupationVector>& states);

  const std::vector<CodewordRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t modes() const;

  Rational weight_sum() const;
  bool is_balanced() const;
  bool has_negative_amplitudes() const;
  bool has_duplicate_states() const;
  unsigned max_row_sum() const;
  // The row sum shared by every row, if there is one.
  std::optional<unsigned> common_row_sum() const;
  std::vector<OccupationVector> support() const;

  // Rows sorted lexicographically by state.
  Codeword sorted() const;

  // Equality up to row order.
  friend bool operator==(const Codeword& a, const Codeword& b);

 private:
  std::vector<CodewordRow> rows_;
};

struct ValidationIssue {
  enum class Kind { normalization, duplicate_state, unequal_row_sums };
  Kind kind;
  std::size_t codeword;
  std::string message;
};

// A set of codewords with the descriptor [[N, m, 2^k, d]] and a design t.
// N is the largest row sum and d the smallest cross-codeword state distance;
// both are derived from the codewords.
class Code {
 public:
  Code() = default;
  // Throws StructureError on an empty codeword list, an empty codeword or
  // inconsistent mode counts.
  Code(std::string name, unsigned design_t, std::vector<Codeword> codewords);

  const std::string& name() const { return name_; }
  unsigned design_t() const { return design_t_; }
  const std::vector<Codeword>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }
  unsigned total_photons() const { return total_photons_; }
  unsigned modes() const { return modes_; }
  // Unset for a single-codeword code.
  const std::optional<Rational>& min_distance() const { return min_distance_; }

  bool is_balanced() const;
  bool equal_row_sums() const;
  bool has_negative_amplitudes() const;

  // "[[4,2,2,2]]"
  std::string descriptor() const;

  // Normalization and duplicate-state problems plus the unequal-row-sum
  // warning. Empty for a well-formed code with a common row sum.
  std::vector<ValidationIssue> validate() const;
  // Issues other than the unequal-row-sum warning.
  bool is_valid() const;

  Code with_design_t(unsigned t) const;
  Code with_name(std::string name) const;

  // Same name, design t and codewords (rows compared up to order).
  friend bool operator==(const Code& a, const Code& b);

 private:
  std::string name_;
  unsigned design_t_ = 0;
  std::vector<Codeword> codewords_;
  unsigned total_photons_ = 0;
  unsigned modes_ = 0;
  std::optional<Rational> min_distance_;
};

struct ParsedCode {
  Code code;
  std::vector<std::string> warnings;
};

// Reads the text code format:
//
//   code N=<int> m=<int> t=<int> d=<int> name="<string>"
//   word 0
//   + 1/2 : 0 4
//   + 1/2 : 4 0
//   word 1
//   + 1/1 : 2 2
//
// '#' starts a comment. Throws ParseError (with line), NormalizationError
// (naming the codeword) or StructureError (duplicate state, mode mismatch).
// Header N and d that disagree with the codewords produce warnings.
ParsedCode parse_code(std::string_view text);

// Canonical text: codewords in order, rows sorted ascending by state.
std::string serialize_code(const Code& code);

}  // namespace ampcode
