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

#include "ampcode/code.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "ampcode/error.hpp"

namespace ampcode {

RadicalSum CodewordRow::amplitude() const {
  RadicalSum root = RadicalSum::sqrt(mu);
  return sign < 0 ? -root : root;
}

Codeword::Codeword(std::vector<CodewordRow> rows) : rows_(std::move(rows)) {}

Codeword Codeword::equal_weight(const std::vector<OccupationVector>& states) {
  if (states.empty()) throw StructureError("codeword needs at least one state");
  const Rational mu = Rational(1) / Rational(static_cast<long long>(states.size()));
  std::vector<CodewordRow> rows;
  rows.reserve(states.size());
  for (const OccupationVector& s : states) rows.push_back({mu, +1, s});
  return Codeword(std::move(rows));
}

std::size_t Codeword::modes() const { return rows_.empty() ? 0 : rows_.front().qcs.modes(); }

Rational Codeword::weight_sum() const {
  Rational total;
  for (const CodewordRow& row : rows_) total += row.mu;
  return total;
}

bool Codeword::is_balanced() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const CodewordRow& row) { return row.mu == rows_.front().mu; });
}

bool Codeword::has_negative_amplitudes() const {
  return std::any_of(rows_.begin(), rows_.end(), [](const CodewordRow& row) { return row.sign < 0; });
}

bool Codeword::has_duplicate_states() const {
  std::set<OccupationVector> seen;
  for (const CodewordRow& row : rows_)
    if (!seen.insert(row.qcs).second) return true;
  return false;
}

unsigned Codeword::max_row_sum() const {
  unsigned out = 0;
  for (const CodewordRow& row : rows_) out = std::max(out, row.qcs.row_sum());
  return out;
}

std::optional<unsigned> Codeword::common_row_sum() const {
  if (rows_.empty()) return std::nullopt;
  const unsigned first = rows_.front().qcs.row_sum();
  for (const CodewordRow& row : rows_)
    if (row.qcs.row_sum() != first) return std::nullopt;
  return first;
}

std::vector<OccupationVector> Codeword::support() const {
  std::vector<OccupationVector> out;
  out.reserve(rows_.size());
  for (const CodewordRow& row : rows_) out.push_back(row.qcs);
  return out;
}

Codeword Codeword::sorted() const {
  std::vector<CodewordRow> rows = rows_;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CodewordRow& a, const CodewordRow& b) { return a.qcs < b.qcs; });
  return Codeword(std::move(rows));
}

bool operator==(const Codeword& a, const Codeword& b) { return a.sorted().rows_ == b.sorted().rows_; }

// ---------------------------------------------------------------------- Code

Code::Code(std::string name, unsigned design_t, std::vector<Codeword> codewords)
    : name_(std::move(name)), design_t_(design_t), codewords_(std::move(codewords)) {
  if (codewords_.empty()) throw StructureError("code '" + name_ + "' has no codewords");
  for (std::size_t l = 0; l < codewords_.size(); ++l) {
    if (codewords_[l].size() == 0)
      throw StructureError("code '" + name_ + "': word " + std::to_string(l) + " is empty");
    for (const CodewordRow& row : codewords_[l].rows()) {
      if (modes_ == 0) modes_ = static_cast<unsigned>(row.qcs.modes());
      if (row.qcs.modes() != modes_)
        throw StructureError("code '" + name_ + "': word " + std::to_string(l) + " state " +
                             row.qcs.str() + " has " + std::to_string(row.qcs.modes()) +
                             " modes, expected " + std::to_string(modes_));
      if (row.mu.sign() <= 0)
        throw StructureError("code '" + name_ + "': word " + std::to_string(l) +
                             " has non-positive weight " + row.mu.str());
    }
    total_photons_ = std::max(total_photons_, codewords_[l].max_row_sum());
  }
  for (std::size_t a = 0; a < codewords_.size(); ++a) {
    for (std::size_t b = a + 1; b < codewords_.size(); ++b) {
      for (const CodewordRow& ra : codewords_[a].rows()) {
        for (const CodewordRow& rb : codewords_[b].rows()) {
          Rational d = distance(ra.qcs, rb.qcs);
          if (!min_distance_ || d < *min_distance_) min_distance_ = d;
        }
      }
    }
  }
}

bool Code::is_balanced() const {
  return std::all_of(codewords_.begin(), codewords_.end(),
                     [](const Codeword& c) { return c.is_balanced(); });
}

bool Code::equal_row_sums() const {
  for (const Codeword& c : codewords_) {
    auto common = c.common_row_sum();
    if (!common || *common != total_photons_) return false;
  }
  return true;
}

bool Code::has_negative_amplitudes() const {
  return std::any_of(codewords_.begin(), codewords_.end(),
                     [](const Codeword& c) { return c.has_negative_amplitudes(); });
}

std::string Code::descriptor() const {
  std::ostringstream os;
  os << "[[" << total_photons_ << "," << modes_ << "," << codewords_.size() << ","
     << (min_distance_ ? min_distance_->str() : "0") << "]]";
  return os.str();
}

std::vector<ValidationIssue> Code::validate() const {
  std::vector<ValidationIssue> issues;
  for (std::size_t l = 0; l < codewords_.size(); ++l) {
    const Codeword& c = codewords_[l];
    if (Rational sum = c.weight_sum(); sum != Rational(1)) {
      issues.push_back({ValidationIssue::Kind::normalization, l,
                        "word " + std::to_string(l) + ": weights sum to " + sum.str() + ", not 1"});
    }
    std::set<OccupationVector> seen;
    for (const CodewordRow& row : c.rows()) {
      if (!seen.insert(row.qcs).second) {
        issues.push_back({ValidationIssue::Kind::duplicate_state, l,
                          "word " + std::to_string(l) + ": state " + row.qcs.str() +
                              " appears more than once"});
      }
    }
  }
  if (!equal_row_sums()) {
    issues.push_back({ValidationIssue::Kind::unequal_row_sums, 0,
                      "row sums differ; N is taken as the largest row sum " +
                          std::to_string(total_photons_)});
  }
  return issues;
}

bool Code::is_valid() const {
  for (const ValidationIssue& issue : validate())
    if (issue.kind != ValidationIssue::Kind::unequal_row_sums) return false;
  return true;
}

Code Code::with_design_t(unsigned t) const {
  Code out = *this;
  out.design_t_ = t;
  return out;
}

Code Code::with_name(std::string name) const {
  Code out = *this;
  out.name_ = std::move(name);
  return out;
}

bool operator==(const Code& a, const Code& b) {
  return a.name_ == b.name_ && a.design_t_ == b.design_t_ && a.codewords_ == b.codewords_;
}

// ------------------------------------------------------------------- parsing

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

unsigned parse_unsigned(std::string_view text, std::size_t line, std::string_view what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                               std::string(text) + "'");
  return value;
}

// Drops a '#' comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

struct Header {
  std::optional<unsigned> N, m, t;
  std::optional<Rational> d;
  std::optional<std::string> name;
};

Header parse_header(std::string_view body, std::size_t line) {
  Header h;
  std::size_t pos = body.find("code");
  pos += 4;
  while (pos < body.size()) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos >= body.size()) break;
    const std::size_t eq = body.find('=', pos);
    if (eq == std::string_view::npos)
      throw ParseError(line, "expected key=value in header near '" + std::string(body.substr(pos)) + "'");
    const std::string key(body.substr(pos, eq - pos));
    pos = eq + 1;
    std::string value;
    if (pos < body.size() && body[pos] == '"') {
      const std::size_t close = body.find('"', pos + 1);
      if (close == std::string_view::npos) throw ParseError(line, "unterminated name string");
      value = std::string(body.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else {
      std::size_t end = pos;
      while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) ++end;
      value = std::string(body.substr(pos, end - pos));
      pos = end;
    }
    if (key == "N") h.N = parse_unsigned(value, line, "N");
    else if (key == "m") h.m = parse_unsigned(value, line, "m");
    else if (key == "t") h.t = parse_unsigned(value, line, "t");
    else if (key == "d") {
      try {
        h.d = Rational::parse(value);
      } catch (const ParseError& e) {
        throw ParseError(line, std::string("d: ") + e.what());
      }
    } else if (key == "name") h.name = value;
    else throw ParseError(line, "unknown header key '" + key + "'");
  }
  if (!h.N || !h.m || !h.t || !h.d || !h.name)
    throw ParseError(line, "header must define N, m, t, d and name");
  return h;
}

}  // namespace

ParsedCode parse_code(std::string_view text) {
  std::optional<Header> header;
  std::vector<std::vector<CodewordRow>> words;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = strip_comment(line);
    std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (tokens[0] == "code") {
      if (header) throw ParseError(line_no, "duplicate code header");
      header = parse_header(line, line_no);
      header_line = line_no;
    } else if (tokens[0] == "word") {
      if (!header) throw ParseError(line_no, "'word' before the code header");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'word <index>'");
      const unsigned index = parse_unsigned(tokens[1], line_no, "word index");
      if (index != words.size())
        throw ParseError(line_no, "word index " + std::to_string(index) + " out of sequence, expected " +
                                      std::to_string(words.size()));
      words.emplace_back();
    } else if (tokens[0] == "+" || tokens[0] == "-") {
      if (words.empty()) throw ParseError(line_no, "row outside of a word block");
      if (tokens.size() < 4 || tokens[2] != ":")
        throw ParseError(line_no, "expected '<sign> <num>/<den> : <n1> ... <nm>'");
      if (tokens[1].find('/') == std::string::npos)
        throw ParseError(line_no, "weight must be written as <int>/<int>, got '" + tokens[1] + "'");
      Rational mu;
      try {
        mu = Rational::parse(tokens[1]);
      } catch (const Error& e) {
        throw ParseError(line_no, std::string("weight: ") + e.what());
      }
      if (mu.sign() <= 0) throw ParseError(line_no, "weight must be positive, got " + mu.str());
      std::vector<unsigned> occupations;
      for (std::size_t i = 3; i < tokens.size(); ++i)
        occupations.push_back(parse_unsigned(tokens[i], line_no, "occupation"));
      if (occupations.size() != *header->m)
        throw ParseError(line_no, "row has " + std::to_string(occupations.size()) + " modes, header says m=" +
                                      std::to_string(*header->m));
      words.back().push_back({mu, tokens[0] == "-" ? -1 : +1, OccupationVector(std::move(occupations))});
    } else {
      throw ParseError(line_no, "unexpected token '" + tokens[0] + "'");
    }
    if (end == text.size()) break;
  }

  if (!header) throw ParseError(0, "missing code header");
  if (words.empty()) throw ParseError(header_line, "code has no codewords");
  std::vector<Codeword> codewords;
  for (std::size_t l = 0; l < words.size(); ++l) {
    if (words[l].empty()) throw StructureError("word " + std::to_string(l) + " has no rows");
    codewords.emplace_back(std::move(words[l]));
  }

  ParsedCode out{Code(*header->name, *header->t, std::move(codewords)), {}};
  for (const ValidationIssue& issue : out.code.validate()) {
    switch (issue.kind) {
      case ValidationIssue::Kind::normalization:
        throw NormalizationError(issue.message);
      case ValidationIssue::Kind::duplicate_state:
        throw StructureError(issue.message);
      case ValidationIssue::Kind::unequal_row_sums:
        out.warnings.push_back(issue.message);
        break;
    }
  }
  if (*header->N != out.code.total_photons())
    out.warnings.push_back("header N=" + std::to_string(*header->N) + " differs from the largest row sum " +
                           std::to_string(out.code.total_photons()));
  const Rational d = out.code.min_distance().value_or(Rational());
  if (*header->d != d)
    out.warnings.push_back("header d=" + header->d->str() + " differs from the codeword distance " + d.str());
  return out;
}

std::string serialize_code(const Code& code) {
  std::ostringstream os;
  os << "code N=" << code.total_photons() << " m=" << code.modes() << " t=" << code.design_t()
     << " d=" << code.min_distance().value_or(Rational()).str() << " name=\"" << code.name() << "\"\n";
  for (std::size_t l = 0; l < code.size(); ++l) {
    os << "word " << l << "\n";
    const Codeword sorted = code.codewords()[l].sorted();
    for (const CodewordRow& row : sorted.rows()) {
      os << (row.sign < 0 ? "-" : "+") << " " << row.mu.numerator().get_str() << "/"
         << row.mu.denominator().get_str() << " :";
      for (unsigned n : row.qcs.values()) os << " " << n;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace ampcode
