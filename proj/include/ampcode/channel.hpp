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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ampcode/code.hpp"
#include "ampcode/fock.hpp"
#include "ampcode/gamma_poly.hpp"

namespace ampcode {

// Photons lost per mode; the weight is the total loss.
class ErrorPattern {
 public:
  ErrorPattern() = default;
  explicit ErrorPattern(std::vector<unsigned> losses) : losses_(std::move(losses)) {}
  ErrorPattern(std::initializer_list<unsigned> losses) : losses_(losses) {}

  std::size_t modes() const { return losses_.size(); }
  unsigned operator[](std::size_t mode) const { return losses_[mode]; }
  const std::vector<unsigned>& values() const { return losses_; }
  unsigned weight() const;
  std::string str() const;

  friend auto operator<=>(const ErrorPattern&, const ErrorPattern&) = default;

 private:
  std::vector<unsigned> losses_;
};

// Unnormalized pure state sum_i amplitude_i |state_i>. The squared norm of a
// damped branch is the probability of the history that produced it.
class PureBranch {
 public:
  using Terms = std::map<OccupationVector, GammaAmplitude>;

  PureBranch() = default;

  // sum_i sign_i sqrt(mu_i) |n_i>; repeated states add.
  static PureBranch from_codeword(const Codeword& codeword);
  // sum_l coefficients[l] |c_l>
  static PureBranch superpose(const std::vector<Codeword>& codewords,
                              const std::vector<RadicalSum>& coefficients);

  void add(const OccupationVector& state, const GammaAmplitude& amplitude);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<OccupationVector> support() const;
  const GammaAmplitude* amplitude(const OccupationVector& state) const;

  // Throws DomainError if a term carries a half-integer power (which cannot
  // happen for branches produced from constant-amplitude inputs).
  GammaPolynomial norm_squared() const;
  PureBranch scaled(const GammaAmplitude& factor) const;
  std::string str() const;

  friend bool operator==(const PureBranch& a, const PureBranch& b);

 private:
  Terms terms_;
};

// <a|b> for real amplitudes.
GammaAmplitude inner_product(const PureBranch& a, const PureBranch& b);

// Applies A_k = A_{k_1} x ... x A_{k_m}. Each |n> maps to
// prod_j sqrt(C(n_j, k_j)) g^(s/2) (1-g)^((|n|-s)/2) |n - k>; terms with some
// k_j > n_j vanish, possibly leaving an empty branch.
PureBranch kraus_apply(const PureBranch& input, const ErrorPattern& pattern);
PureBranch kraus_apply(const Codeword& input, const ErrorPattern& pattern);

// K(s) for m modes, lexicographic order.
std::vector<ErrorPattern> enumerate_error_patterns(unsigned m, unsigned s);
// K(0) u ... u K(t), ordered by weight, then lexicographically.
std::vector<ErrorPattern> enumerate_error_patterns_up_to(unsigned m, unsigned t);

// One alternative history of the damped state. Several patterns share a
// branch when their outputs are proportional; `state` is then the first
// pattern's output and `probability` the summed squared norm.
struct MixedBranch {
  std::vector<ErrorPattern> patterns;
  PureBranch state;
  GammaPolynomial probability;

  // sqrt(probability) times the unit vector along `state`, when that is
  // expressible exactly (both norms are single monomials with rational
  // coefficients).
  std::optional<PureBranch> merged_vector() const;
};

class MixedState {
 public:
  MixedState() = default;
  explicit MixedState(std::vector<MixedBranch> branches) : branches_(std::move(branches)) {}

  const std::vector<MixedBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  const MixedBranch* find(const ErrorPattern& pattern) const;
  GammaPolynomial total_probability() const;

 private:
  std::vector<MixedBranch> branches_;
};

// Tensor-sum decomposition of a damped pure state: one branch per error
// pattern of weight <= max_loss (every pattern when unset), empty branches
// dropped. With merge set, branches with identical support and proportional
// amplitudes are combined.
MixedState damp(const PureBranch& input, std::optional<unsigned> max_loss = std::nullopt,
                bool merge = true);

}  // namespace ampcode
