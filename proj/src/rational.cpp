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

#include "ampcode/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "ampcode/error.hpp"

namespace ampcode {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError(0, "malformed number '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(0, "malformed number '" + std::string(whole) + "'");
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ParseError(0, "empty number");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    result = Rational(parse_digits(text.substr(0, slash), whole),
                      parse_digits(text.substr(slash + 1), whole));
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      BigInt magnitude = parse_digits(exp_text, whole);
      if (magnitude > 4096) throw ParseError(0, "exponent out of range in '" + std::string(whole) + "'");
      exponent = magnitude.get_si() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string_view integral = text;
    std::string_view fraction;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      integral = text.substr(0, dot);
      fraction = text.substr(dot + 1);
      if (integral.empty() && fraction.empty())
        throw ParseError(0, "malformed number '" + std::string(whole) + "'");
    }
    BigInt mantissa = integral.empty() ? BigInt(0) : parse_digits(integral, whole);
    if (!fraction.empty()) {
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
      mantissa = mantissa * scale + parse_digits(fraction, whole);
    }
    exponent -= static_cast<long>(fraction.size());
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    result = exponent >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
  }
  return negative ? -result : result;
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  Rational r;
  r.value_ = mpq_class(value);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace ampcode
