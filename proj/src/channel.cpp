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

#include "ampcode/channel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ampcode/error.hpp"

namespace ampcode {

unsigned ErrorPattern::weight() const { return std::accumulate(losses_.begin(), losses_.end(), 0u); }

std::string ErrorPattern::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < losses_.size(); ++j) os << (j ? "," : "") << losses_[j];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- PureBranch

PureBranch PureBranch::from_codeword(const Codeword& codeword) {
  PureBranch out;
  for (const CodewordRow& row : codeword.rows()) out.add(row.qcs, GammaAmplitude(row.amplitude()));
  return out;
}

PureBranch PureBranch::superpose(const std::vector<Codeword>& codewords,
                                 const std::vector<RadicalSum>& coefficients) {
  if (codewords.size() != coefficients.size())
    throw StructureError("superposition needs one coefficient per codeword");
  PureBranch out;
  for (std::size_t l = 0; l < codewords.size(); ++l) {
    if (coefficients[l].is_zero()) continue;
    for (const CodewordRow& row : codewords[l].rows())
      out.add(row.qcs, GammaAmplitude(row.amplitude() * coefficients[l]));
  }
  return out;
}

void PureBranch::add(const OccupationVector& state, const GammaAmplitude& amplitude) {
  if (amplitude.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(state, amplitude);
  if (!inserted) {
    it->second += amplitude;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<OccupationVector> PureBranch::support() const {
  std::vector<OccupationVector> out;
  out.reserve(terms_.size());
  for (const auto& [state, amplitude] : terms_) out.push_back(state);
  return out;
}

const GammaAmplitude* PureBranch::amplitude(const OccupationVector& state) const {
  auto it = terms_.find(state);
  return it == terms_.end() ? nullptr : &it->second;
}

GammaPolynomial PureBranch::norm_squared() const {
  GammaAmplitude total;
  for (const auto& [state, amplitude] : terms_) total += amplitude * amplitude;
  return total.to_polynomial();
}

PureBranch PureBranch::scaled(const GammaAmplitude& factor) const {
  PureBranch out;
  for (const auto& [state, amplitude] : terms_) out.add(state, amplitude * factor);
  return out;
}

std::string PureBranch::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [state, amplitude] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + amplitude.str() + "]|";
    for (unsigned n : state.values()) out += std::to_string(n) + (state.modes() > 1 && n > 9 ? "," : "");
    out += ">";
  }
  return out;
}

bool operator==(const PureBranch& a, const PureBranch& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

GammaAmplitude inner_product(const PureBranch& a, const PureBranch& b) {
  const PureBranch& small = a.size() <= b.size() ? a : b;
  const PureBranch& large = a.size() <= b.size() ? b : a;
  GammaAmplitude out;
  for (const auto& [state, amplitude] : small.terms()) {
    if (const GammaAmplitude* other = large.amplitude(state)) out += amplitude * *other;
  }
  return out;
}

// ------------------------------------------------------------------- Kraus

PureBranch kraus_apply(const PureBranch& input, const ErrorPattern& pattern) {
  PureBranch out;
  const unsigned s = pattern.weight();
  for (const auto& [state, amplitude] : input.terms()) {
    if (state.modes() != pattern.modes())
      throw StructureError("error pattern " + pattern.str() + " does not match state " + state.str());
    BigInt multiplicity = 1;
    std::vector<unsigned> damaged(state.modes());
    bool vanishes = false;
    for (std::size_t j = 0; j < state.modes(); ++j) {
      if (pattern[j] > state[j]) {
        vanishes = true;
        break;
      }
      multiplicity *= binomial(state[j], pattern[j]);
      damaged[j] = state[j] - pattern[j];
    }
    if (vanishes) continue;
    const GammaAmplitude factor =
        GammaAmplitude::monomial(s, state.row_sum() - s, RadicalSum::sqrt(Rational(multiplicity)));
    out.add(OccupationVector(std::move(damaged)), amplitude * factor);
  }
  return out;
}

PureBranch kraus_apply(const Codeword& input, const ErrorPattern& pattern) {
  return kraus_apply(PureBranch::from_codeword(input), pattern);
}

std::vector<ErrorPattern> enumerate_error_patterns(unsigned m, unsigned s) {
  std::vector<ErrorPattern> out;
  for (const OccupationVector& v : enumerate_qcs(s, m).members) out.emplace_back(v.values());
  return out;
}

std::vector<ErrorPattern> enumerate_error_patterns_up_to(unsigned m, unsigned t) {
  std::vector<ErrorPattern> out;
  for (unsigned s = 0; s <= t; ++s) {
    std::vector<ErrorPattern> layer = enumerate_error_patterns(m, s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// -------------------------------------------------------------- MixedState

std::optional<PureBranch> MixedBranch::merged_vector() const {
  if (patterns.size() == 1) return state;
  const auto total = probability.single_monomial();
  const auto own = state.norm_squared().single_monomial();
  if (!total || !own || !total->second.is_rational() || !own->second.is_rational()) return std::nullopt;
  if (total->first.gamma < own->first.gamma || total->first.damp < own->first.damp) return std::nullopt;
  const Rational ratio = total->second.rational_value() / own->second.rational_value();
  if (ratio.sign() <= 0) return std::nullopt;
  return state.scaled(GammaAmplitude::monomial(total->first.gamma - own->first.gamma,
                                               total->first.damp - own->first.damp,
                                               RadicalSum::sqrt(ratio)));
}

const MixedBranch* MixedState::find(const ErrorPattern& pattern) const {
  for (const MixedBranch& branch : branches_)
    if (std::find(branch.patterns.begin(), branch.patterns.end(), pattern) != branch.patterns.end())
      return &branch;
  return nullptr;
}

GammaPolynomial MixedState::total_probability() const {
  GammaPolynomial total;
  for (const MixedBranch& branch : branches_) total += branch.probability;
  return total;
}

namespace {

bool proportional(const PureBranch& x, const PureBranch& y) {
  if (x.size() != y.size() || x.empty()) return false;
  const GammaAmplitude& x0 = x.terms().begin()->second;
  const GammaAmplitude& y0 = y.terms().begin()->second;
  for (auto ix = x.terms().begin(), iy = y.terms().begin(); ix != x.terms().end(); ++ix, ++iy) {
    if (ix->first != iy->first) return false;
    if (!(iy->second * x0 - ix->second * y0).is_zero()) return false;
  }
  return true;
}

// Patterns with k_j <= bound_j and weight <= max_loss, by weight then lex.
std::vector<ErrorPattern> patterns_in_box(const std::vector<unsigned>& bound, unsigned max_loss) {
  std::vector<ErrorPattern> out;
  const unsigned m = static_cast<unsigned>(bound.size());
  const unsigned cap = std::min(max_loss, std::accumulate(bound.begin(), bound.end(), 0u));
  for (unsigned s = 0; s <= cap; ++s) {
    for (ErrorPattern& p : enumerate_error_patterns(m, s)) {
      bool inside = true;
      for (unsigned j = 0; j < m && inside; ++j) inside = p[j] <= bound[j];
      if (inside) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

MixedState damp(const PureBranch& input, std::optional<unsigned> max_loss, bool merge) {
  if (input.empty()) return {};
  const std::size_t m = input.terms().begin()->first.modes();
  std::vector<unsigned> bound(m, 0);
  for (const auto& [state, amplitude] : input.terms())
    for (std::size_t j = 0; j < m; ++j) bound[j] = std::max(bound[j], state[j]);

  std::vector<MixedBranch> branches;
  std::map<std::vector<OccupationVector>, std::vector<std::size_t>> by_support;
  for (const ErrorPattern& pattern : patterns_in_box(bound, max_loss.value_or(~0u))) {
    PureBranch out = kraus_apply(input, pattern);
    if (out.empty()) continue;
    GammaPolynomial probability = out.norm_squared();
    if (merge) {
      std::vector<std::size_t>& group = by_support[out.support()];
      auto target = std::find_if(group.begin(), group.end(),
                                 [&](std::size_t i) { return proportional(branches[i].state, out); });
      if (target != group.end()) {
        branches[*target].patterns.push_back(pattern);
        branches[*target].probability += probability;
        continue;
      }
      group.push_back(branches.size());
    }
    branches.push_back({{pattern}, std::move(out), std::move(probability)});
  }
  return MixedState(std::move(branches));
}

}  // namespace ampcode
