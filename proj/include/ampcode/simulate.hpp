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

#include <cstdint>
#include <span>
#include <vector>

#include "ampcode/channel.hpp"
#include "ampcode/code.hpp"
#include "ampcode/gamma_poly.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

struct Syndrome {
  ErrorPattern pattern;
  GammaPolynomial norm;                // g_k, common to every codeword
  std::vector<PureBranch> damaged;     // A_k |c_l>
  std::vector<PureBranch> normalized;  // A_k |c_l> / sqrt(g_k), constant amplitudes
};

class RecoveryMap {
 public:
  RecoveryMap(Code code, unsigned t, std::vector<Syndrome> syndromes)
      : code_(std::move(code)), t_(t), syndromes_(std::move(syndromes)) {}

  const Code& code() const { return code_; }
  unsigned t() const { return t_; }
  const std::vector<Syndrome>& syndromes() const { return syndromes_; }
  const Syndrome* find(const ErrorPattern& pattern) const;

  // Coordinates <c_l^k | branch> of a damaged branch in the normalized
  // syndrome basis; the corrected state is sum_l coordinate_l |c_l>.
  std::vector<GammaAmplitude> recover(const ErrorPattern& pattern, const PureBranch& branch) const;

 private:
  Code code_;
  unsigned t_;
  std::vector<Syndrome> syndromes_;
};

// Throws CriteriaError naming the first violation when the code fails either
// condition at t, and DomainError when damaged codewords cannot be normalized
// exactly (rows with different row sums).
RecoveryMap build_recovery(const Code& code, unsigned t);

// Probability that the realized error pattern has weight <= t.
Rational exact_success_probability(const RecoveryMap& recovery, const Rational& gamma);
Rational exact_success_probability(const Code& code, unsigned t, const Rational& gamma);

struct SimulationResult {
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  double estimated_fidelity = 0.0;
  Rational exact_fidelity;
  std::uint64_t seed = 0;
  double sigma = 0.0;    // sqrt(F (1 - F) / shots)
  double z_score = 0.0;  // (estimate - F) / sigma; 0 when sigma = 0
};

// Shot i draws u_i from a counter-based generator keyed by (seed, i) and
// picks an error pattern from the exact branch distribution of
// sum_l coefficients[l] |c_l>; it succeeds when the weight is <= t. The
// result does not depend on `threads`.
SimulationResult run_monte_carlo(const Code& code, unsigned t, std::span<const double> coefficients,
                                 const Rational& gamma, std::uint64_t shots, std::uint64_t seed,
                                 unsigned threads = 1);

// Uniform double in [0, 1) for shot `index` of stream `seed`.
double shot_uniform(std::uint64_t seed, std::uint64_t index);

}  // namespace ampcode
