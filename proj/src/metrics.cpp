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

#include "ampcode/metrics.hpp"

#include <cmath>

#include "ampcode/error.hpp"
#include "ampcode/fock.hpp"

namespace ampcode {

RateResult rate(const Code& code) {
  RateResult out;
  out.codewords = code.size();
  out.modes = code.modes();
  out.total_photons = code.total_photons();
  out.k = std::log2(static_cast<double>(code.size()));
  out.denominator = code.modes() * std::log2(static_cast<double>(code.total_photons()) + 1.0);
  out.rate = out.denominator > 0.0 ? out.k / out.denominator : 0.0;
  return out;
}

Rational codeword_count_estimate(unsigned n, unsigned m) {
  if (m == 0) throw DomainError("m must be at least 1");
  return Rational(partition_count(n, m), BigInt(m));
}

FidelityResult fidelity_poly(unsigned N, unsigned t) {
  if (t >= N) throw DomainError("fidelity needs t < N (t = " + std::to_string(t) + ", N = " + std::to_string(N) + ")");
  FidelityResult out;
  out.N = N;
  out.t = t;
  for (unsigned s = 0; s <= t; ++s)
    out.polynomial += GammaPolynomial::monomial(s, N - s, RadicalSum(Rational(binomial(N, s))));
  out.coefficients = poly_expand(out.polynomial);
  out.leading_deficit = binomial(N, t + 1);
  return out;
}

OptimalT optimal_t(const Rational& gamma, double f, double alpha, unsigned l_o) {
  if (gamma.sign() <= 0 || gamma >= Rational(1)) throw DomainError("gamma must lie in (0, 1)");
  if (!(f > 0.0)) throw DomainError("f must be positive");
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  if (l_o == 0) throw DomainError("l_o must be at least 1");
  const double g = gamma.to_double();
  OptimalT out;
  out.t_opt = std::pow(std::exp(-alpha) / (g * f * l_o), 1.0 / (alpha - 1.0));
  auto neighbor = [&](double t_value) {
    OptimalT::Neighbor nb;
    nb.t = static_cast<unsigned>(std::max(1.0, t_value));
    nb.N = static_cast<unsigned>(std::llround(f * l_o * std::pow(nb.t, alpha)));
    if (nb.t < nb.N) {
      nb.valid = true;
      nb.fidelity = poly_eval(fidelity_poly(nb.N, nb.t).coefficients, gamma).to_double();
    }
    return nb;
  };
  out.lower = neighbor(std::floor(out.t_opt));
  out.upper = neighbor(std::ceil(out.t_opt));
  return out;
}

}  // namespace ampcode
