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
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ampcode/radical.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

// Exponent pair of gamma^gamma * (1 - gamma)^damp.
struct GammaPowers {
  unsigned gamma = 0;
  unsigned damp = 0;
  friend auto operator<=>(const GammaPowers&, const GammaPowers&) = default;
};

// Polynomial in the loss parameter gamma, held as a sum of monomials
// c * gamma^a * (1 - gamma)^b. The monomial form is what the channel
// computations produce; expand() gives the canonical coefficient list in
// powers of gamma, and equality is decided on that expansion.
class GammaPolynomial {
 public:
  using Monomials = std::map<GammaPowers, RadicalSum>;

  GammaPolynomial() = default;
  GammaPolynomial(const RadicalSum& constant);  // NOLINT
  GammaPolynomial(const Rational& constant) : GammaPolynomial(RadicalSum(constant)) {}  // NOLINT

  static GammaPolynomial monomial(unsigned gamma_power, unsigned damp_power,
                                  const RadicalSum& coefficient);

  const Monomials& monomials() const { return monomials_; }

  // Identically zero as a function of gamma.
  bool is_zero() const;
  bool has_rational_coefficients() const;
  // max(a + b) over stored monomials.
  unsigned degree() const;

  // Coefficients of gamma^0 .. gamma^deg, trailing zeros trimmed.
  std::vector<RadicalSum> expand_radical() const;
  // As expand_radical(); throws DomainError on an irrational coefficient.
  std::vector<Rational> expand() const;

  // Throws DomainError unless 0 <= gamma <= 1.
  RadicalSum evaluate(const Rational& gamma) const;
  double evaluate(double gamma) const;

  // The (powers, coefficient) pair when exactly one monomial is stored.
  std::optional<std::pair<GammaPowers, RadicalSum>> single_monomial() const;

  std::string str() const;

  GammaPolynomial operator-() const;
  GammaPolynomial& operator+=(const GammaPolynomial& other);
  GammaPolynomial& operator-=(const GammaPolynomial& other);
  GammaPolynomial& operator*=(const RadicalSum& scalar);

  friend GammaPolynomial operator+(GammaPolynomial a, const GammaPolynomial& b) { return a += b; }
  friend GammaPolynomial operator-(GammaPolynomial a, const GammaPolynomial& b) { return a -= b; }
  friend GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b);
  friend GammaPolynomial operator*(GammaPolynomial a, const RadicalSum& b) { return a *= b; }

  friend bool operator==(const GammaPolynomial& a, const GammaPolynomial& b) {
    return (a - b).is_zero();
  }

 private:
  void add_monomial(GammaPowers powers, const RadicalSum& coefficient);

  Monomials monomials_;
};

std::vector<Rational> poly_expand(const GammaPolynomial& p);
// Throws DomainError unless 0 <= gamma <= 1 or if p has irrational coefficients.
Rational poly_eval(const GammaPolynomial& p, const Rational& gamma);
Rational poly_eval(std::span<const Rational> coefficients, const Rational& gamma);
// "1 - 6g^2 + 8g^3 - 3g^4"
std::string format_expanded(std::span<const Rational> coefficients);

// Amplitude-level counterpart of GammaPolynomial: exponents are counted in
// half powers, so a monomial is c * gamma^(a/2) * (1 - gamma)^(b/2). Products
// of two amplitudes with even total exponents convert back to polynomials.
class GammaAmplitude {
 public:
  using Monomials = std::map<GammaPowers, RadicalSum>;

  GammaAmplitude() = default;
  GammaAmplitude(const RadicalSum& constant);  // NOLINT

  static GammaAmplitude monomial(unsigned half_gamma, unsigned half_damp,
                                 const RadicalSum& coefficient);

  const Monomials& monomials() const { return monomials_; }

  // Exact: the four classes 1, sqrt(g), sqrt(1-g), sqrt(g(1-g)) are linearly
  // independent over polynomials in g, so each parity class is tested alone.
  bool is_zero() const;
  bool is_polynomial() const;
  // Throws DomainError when a half-integer power is present.
  GammaPolynomial to_polynomial() const;
  double evaluate(double gamma) const;
  std::string str() const;

  GammaAmplitude operator-() const;
  GammaAmplitude& operator+=(const GammaAmplitude& other);
  GammaAmplitude& operator-=(const GammaAmplitude& other);
  GammaAmplitude& operator*=(const RadicalSum& scalar);

  friend GammaAmplitude operator+(GammaAmplitude a, const GammaAmplitude& b) { return a += b; }
  friend GammaAmplitude operator-(GammaAmplitude a, const GammaAmplitude& b) { return a -= b; }
  friend GammaAmplitude operator*(const GammaAmplitude& a, const GammaAmplitude& b);
  friend GammaAmplitude operator*(GammaAmplitude a, const RadicalSum& b) { return a *= b; }

  friend bool operator==(const GammaAmplitude& a, const GammaAmplitude& b) {
    return (a - b).is_zero();
  }

 private:
  void add_monomial(GammaPowers powers, const RadicalSum& coefficient);

  Monomials monomials_;
};

std::ostream& operator<<(std::ostream& os, const GammaPolynomial& p);
std::ostream& operator<<(std::ostream& os, const GammaAmplitude& p);

}  // namespace ampcode
