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

#include <vector>

#include "ampcode/code.hpp"
#include "ampcode/gamma_poly.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

struct RateResult {
  std::size_t codewords = 0;
  double k = 0.0;            // log2(#codewords)
  unsigned modes = 0;
  unsigned total_photons = 0;
  double denominator = 0.0;  // m log2(N + 1)
  double rate = 0.0;
};

// k / (m log2(N + 1)); k = 0 for a single codeword.
RateResult rate(const Code& code);

// P(n, m) / m.
Rational codeword_count_estimate(unsigned n, unsigned m);

struct FidelityResult {
  unsigned N = 0;
  unsigned t = 0;
  // sum_{s=0}^{t} C(N,s) g^s (1-g)^(N-s)
  GammaPolynomial polynomial;
  // Coefficients of 1, g, g^2, ... with trailing zeros removed.
  std::vector<Rational> coefficients;
  BigInt leading_deficit;  // C(N, t+1)
};

// Throws DomainError when t >= N.
FidelityResult fidelity_poly(unsigned N, unsigned t);

struct OptimalT {
  double t_opt = 0.0;
  // Floor and ceiling of t_opt (at least 1), with N = round(f l_o t^alpha)
  // and the fidelity there.
  struct Neighbor {
    unsigned t = 0;
    unsigned N = 0;
    double fidelity = 0.0;
    bool valid = false;  // t < N
  };
  Neighbor lower;
  Neighbor upper;
};

// t_opt = (e^-alpha / (gamma f l_o))^(1 / (alpha - 1)). Throws DomainError
// unless gamma in (0,1), f > 0, alpha > 1 and l_o >= 1.
OptimalT optimal_t(const Rational& gamma, double f, double alpha, unsigned l_o);

}  // namespace ampcode
