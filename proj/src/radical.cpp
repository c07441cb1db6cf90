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

#include "ampcode/radical.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ampcode/error.hpp"

namespace ampcode {

SquarefreeSplit squarefree_split(const BigInt& value, std::uint64_t trial_bound) {
  if (value <= 0) throw DomainError("squarefree split of a non-positive integer");
  BigInt rest = value;
  BigInt square = 1;
  BigInt kernel = 1;
  auto strip = [&](unsigned long p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
    if (count % 2) kernel *= p;
  };
  strip(2);
  unsigned long p = 3;
  for (; p <= trial_bound && BigInt(p) * p <= rest; p += 2) strip(p);
  if (rest != 1) {
    if (BigInt(p) * p > rest || mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0) {
      kernel *= rest;  // rest is prime
    } else if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      square *= root;
    } else {
      throw DomainError("cannot certify squarefree part of " + value.get_str() +
                        " with trial division up to " + std::to_string(trial_bound));
    }
  }
  if (!kernel.fits_ulong_p()) throw DomainError("radical kernel exceeds 64 bits");
  return {square, kernel.get_ui()};
}

RadicalSum::RadicalSum(const Rational& value) {
  if (!value.is_zero()) terms_.emplace(1, value);
}

RadicalSum RadicalSum::sqrt(const Rational& value, std::uint64_t trial_bound) {
  if (value.sign() < 0) throw DomainError("square root of negative rational " + value.str());
  if (value.is_zero()) return {};
  // sqrt(p/q) = sqrt(p*q) / q
  const BigInt q = value.denominator();
  const SquarefreeSplit split = squarefree_split(value.numerator() * q, trial_bound);
  return term(Rational(split.square, q), split.kernel);
}

RadicalSum RadicalSum::term(const Rational& coefficient, Kernel kernel) {
  RadicalSum out;
  out.add_term(kernel, coefficient);
  return out;
}

void RadicalSum::add_term(Kernel kernel, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(kernel, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalSum::rational_value() const {
  if (!is_rational()) throw DomainError("radical " + str() + " is not rational");
  return terms_.empty() ? Rational() : terms_.begin()->second;
}

double RadicalSum::to_double() const {
  double out = 0.0;
  for (const auto& [kernel, coefficient] : terms_)
    out += coefficient.to_double() * std::sqrt(static_cast<double>(kernel));
  return out;
}

std::string RadicalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [kernel, coefficient] : terms_) {
    Rational c = coefficient;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (kernel == 1) {
      os << c;
    } else {
      if (c == Rational(-1)) os << "-";
      else if (c != Rational(1)) os << c << "*";
      os << "sqrt(" << kernel << ")";
    }
  }
  return os.str();
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  for (auto& [kernel, coefficient] : out.terms_) coefficient = -coefficient;
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& [kernel, coefficient] : other.terms_) add_term(kernel, coefficient);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
  for (const auto& [kernel, coefficient] : other.terms_) add_term(kernel, -coefficient);
  return *this;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  RadicalSum out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // sqrt(ka)*sqrt(kb) = g*sqrt((ka/g)*(kb/g)) for squarefree ka, kb
      const std::uint64_t g = std::gcd(ka, kb);
      std::uint64_t kernel = 0;
      if (__builtin_mul_overflow(ka / g, kb / g, &kernel))
        throw DomainError("radical kernel exceeds 64 bits");
      out.add_term(kernel, ca * cb * Rational(static_cast<long long>(g)));
    }
  }
  return out;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& other) { return *this = *this * other; }

RadicalSum& RadicalSum::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [kernel, coefficient] : terms_) coefficient *= scalar;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const RadicalSum& value) { return os << value.str(); }

}  // namespace ampcode
