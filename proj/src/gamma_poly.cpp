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

#include "ampcode/gamma_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ampcode/error.hpp"

namespace ampcode {

namespace {

void require_unit_interval(const Rational& gamma) {
  if (gamma.sign() < 0 || gamma > Rational(1))
    throw DomainError("gamma = " + gamma.str() + " lies outside [0, 1]");
}

template <typename Map>
void accumulate(Map& monomials, GammaPowers powers, const RadicalSum& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = monomials.try_emplace(powers, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) monomials.erase(it);
  }
}

// "c*g^a*(1-g)^b" with the unit parts elided; exponents are scaled by 1/2
// when half is set.
std::string format_monomial(GammaPowers powers, const RadicalSum& coefficient, bool half) {
  auto exponent = [half](unsigned e) {
    if (!half) return std::to_string(e);
    return e % 2 ? std::to_string(e) + "/2" : std::to_string(e / 2);
  };
  auto unit = [half](unsigned e) { return half ? e == 2 : e == 1; };
  std::ostringstream os;
  const bool has_factors = powers.gamma || powers.damp;
  const std::string c = coefficient.str();
  const bool compound = coefficient.terms().size() > 1;
  if (!has_factors) return compound ? "(" + c + ")" : c;
  if (compound) os << "(" << c << ")*";
  else if (c == "-1") os << "-";
  else if (c != "1") os << c << "*";
  bool first = true;
  if (powers.gamma) {
    os << "g";
    if (!unit(powers.gamma)) os << "^" << (half && powers.gamma % 2 ? "(" + exponent(powers.gamma) + ")" : exponent(powers.gamma));
    first = false;
  }
  if (powers.damp) {
    if (!first) os << "*";
    os << "(1-g)";
    if (!unit(powers.damp)) os << "^" << (half && powers.damp % 2 ? "(" + exponent(powers.damp) + ")" : exponent(powers.damp));
  }
  return os.str();
}

template <typename Map>
std::string format_sum(const Map& monomials, bool half) {
  if (monomials.empty()) return "0";
  std::string out;
  for (const auto& [powers, coefficient] : monomials) {
    if (!out.empty()) out += " + ";
    out += format_monomial(powers, coefficient, half);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- polynomial

GammaPolynomial::GammaPolynomial(const RadicalSum& constant) { add_monomial({0, 0}, constant); }

GammaPolynomial GammaPolynomial::monomial(unsigned gamma_power, unsigned damp_power,
                                          const RadicalSum& coefficient) {
  GammaPolynomial out;
  out.add_monomial({gamma_power, damp_power}, coefficient);
  return out;
}

void GammaPolynomial::add_monomial(GammaPowers powers, const RadicalSum& coefficient) {
  accumulate(monomials_, powers, coefficient);
}

bool GammaPolynomial::is_zero() const {
  if (monomials_.size() <= 1) return monomials_.empty();
  return expand_radical().empty();
}

bool GammaPolynomial::has_rational_coefficients() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [](const auto& entry) { return entry.second.is_rational(); });
}

unsigned GammaPolynomial::degree() const {
  unsigned out = 0;
  for (const auto& [powers, coefficient] : monomials_)
    out = std::max(out, powers.gamma + powers.damp);
  return out;
}

std::vector<RadicalSum> GammaPolynomial::expand_radical() const {
  std::vector<RadicalSum> out(monomials_.empty() ? 0 : degree() + 1);
  for (const auto& [powers, coefficient] : monomials_) {
    // gamma^a (1-gamma)^b = sum_i C(b,i) (-1)^i gamma^(a+i)
    for (unsigned i = 0; i <= powers.damp; ++i) {
      Rational weight(binomial(powers.damp, i));
      if (i % 2) weight = -weight;
      out[powers.gamma + i] += coefficient * weight;
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<Rational> GammaPolynomial::expand() const {
  std::vector<Rational> out;
  for (const RadicalSum& c : expand_radical()) {
    if (!c.is_rational())
      throw DomainError("polynomial has irrational coefficient " + c.str() +
                        "; it is an amplitude, not a probability");
    out.push_back(c.rational_value());
  }
  return out;
}

RadicalSum GammaPolynomial::evaluate(const Rational& gamma) const {
  require_unit_interval(gamma);
  const Rational damp = Rational(1) - gamma;
  RadicalSum out;
  for (const auto& [powers, coefficient] : monomials_)
    out += coefficient * (pow(gamma, powers.gamma) * pow(damp, powers.damp));
  return out;
}

double GammaPolynomial::evaluate(double gamma) const {
  double out = 0.0;
  for (const auto& [powers, coefficient] : monomials_)
    out += coefficient.to_double() * std::pow(gamma, powers.gamma) * std::pow(1.0 - gamma, powers.damp);
  return out;
}

std::optional<std::pair<GammaPowers, RadicalSum>> GammaPolynomial::single_monomial() const {
  if (monomials_.size() != 1) return std::nullopt;
  return *monomials_.begin();
}

std::string GammaPolynomial::str() const { return format_sum(monomials_, false); }

GammaPolynomial GammaPolynomial::operator-() const {
  GammaPolynomial out = *this;
  for (auto& [powers, coefficient] : out.monomials_) coefficient = -coefficient;
  return out;
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& other) {
  for (const auto& [powers, coefficient] : other.monomials_) add_monomial(powers, coefficient);
  return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& other) {
  for (const auto& [powers, coefficient] : other.monomials_) add_monomial(powers, -coefficient);
  return *this;
}

GammaPolynomial& GammaPolynomial::operator*=(const RadicalSum& scalar) {
  GammaPolynomial out;
  for (const auto& [powers, coefficient] : monomials_) out.add_monomial(powers, coefficient * scalar);
  return *this = std::move(out);
}

GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b) {
  GammaPolynomial out;
  for (const auto& [pa, ca] : a.monomials_)
    for (const auto& [pb, cb] : b.monomials_)
      out.add_monomial({pa.gamma + pb.gamma, pa.damp + pb.damp}, ca * cb);
  return out;
}

std::vector<Rational> poly_expand(const GammaPolynomial& p) { return p.expand(); }

Rational poly_eval(const GammaPolynomial& p, const Rational& gamma) {
  return p.evaluate(gamma).rational_value();
}

Rational poly_eval(std::span<const Rational> coefficients, const Rational& gamma) {
  require_unit_interval(gamma);
  Rational out;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = out * gamma + *it;
  return out;
}

std::string format_expanded(std::span<const Rational> coefficients) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Rational c = coefficients[i];
    if (c.is_zero()) continue;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c.sign() < 0 && i > 0) {
      os << "-";
      c = abs(c);
    }
    if (i == 0 || c != Rational(1)) os << c;
    if (i > 0) os << "g";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

// ----------------------------------------------------------------- amplitude

GammaAmplitude::GammaAmplitude(const RadicalSum& constant) { add_monomial({0, 0}, constant); }

GammaAmplitude GammaAmplitude::monomial(unsigned half_gamma, unsigned half_damp,
                                        const RadicalSum& coefficient) {
  GammaAmplitude out;
  out.add_monomial({half_gamma, half_damp}, coefficient);
  return out;
}

void GammaAmplitude::add_monomial(GammaPowers powers, const RadicalSum& coefficient) {
  accumulate(monomials_, powers, coefficient);
}

bool GammaAmplitude::is_zero() const {
  if (monomials_.size() <= 1) return monomials_.empty();
  std::map<std::pair<unsigned, unsigned>, GammaPolynomial> classes;
  for (const auto& [powers, coefficient] : monomials_) {
    classes[{powers.gamma % 2, powers.damp % 2}] +=
        GammaPolynomial::monomial(powers.gamma / 2, powers.damp / 2, coefficient);
  }
  return std::all_of(classes.begin(), classes.end(),
                     [](const auto& entry) { return entry.second.is_zero(); });
}

bool GammaAmplitude::is_polynomial() const {
  return std::all_of(monomials_.begin(), monomials_.end(), [](const auto& entry) {
    return entry.first.gamma % 2 == 0 && entry.first.damp % 2 == 0;
  });
}

GammaPolynomial GammaAmplitude::to_polynomial() const {
  GammaPolynomial out;
  for (const auto& [powers, coefficient] : monomials_) {
    if (powers.gamma % 2 || powers.damp % 2)
      throw DomainError("amplitude " + str() + " carries half-integer powers of gamma");
    out += GammaPolynomial::monomial(powers.gamma / 2, powers.damp / 2, coefficient);
  }
  return out;
}

double GammaAmplitude::evaluate(double gamma) const {
  double out = 0.0;
  for (const auto& [powers, coefficient] : monomials_) {
    out += coefficient.to_double() * std::pow(gamma, 0.5 * powers.gamma) *
           std::pow(1.0 - gamma, 0.5 * powers.damp);
  }
  return out;
}

std::string GammaAmplitude::str() const { return format_sum(monomials_, true); }

GammaAmplitude GammaAmplitude::operator-() const {
  GammaAmplitude out = *this;
  for (auto& [powers, coefficient] : out.monomials_) coefficient = -coefficient;
  return out;
}

GammaAmplitude& GammaAmplitude::operator+=(const GammaAmplitude& other) {
  for (const auto& [powers, coefficient] : other.monomials_) add_monomial(powers, coefficient);
  return *this;
}

GammaAmplitude& GammaAmplitude::operator-=(const GammaAmplitude& other) {
  for (const auto& [powers, coefficient] : other.monomials_) add_monomial(powers, -coefficient);
  return *this;
}

GammaAmplitude& GammaAmplitude::operator*=(const RadicalSum& scalar) {
  GammaAmplitude out;
  for (const auto& [powers, coefficient] : monomials_) out.add_monomial(powers, coefficient * scalar);
  return *this = std::move(out);
}

GammaAmplitude operator*(const GammaAmplitude& a, const GammaAmplitude& b) {
  GammaAmplitude out;
  for (const auto& [pa, ca] : a.monomials_)
    for (const auto& [pb, cb] : b.monomials_)
      out.add_monomial({pa.gamma + pb.gamma, pa.damp + pb.damp}, ca * cb);
  return out;
}

std::ostream& operator<<(std::ostream& os, const GammaPolynomial& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const GammaAmplitude& p) { return os << p.str(); }

}  // namespace ampcode
