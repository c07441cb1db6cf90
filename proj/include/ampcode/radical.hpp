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
#include <map>
#include <ostream>
#include <string>

#include "ampcode/rational.hpp"

namespace ampcode {

// Exact real number of the form sum_k c_k * sqrt(k) with rational c_k and
// distinct squarefree kernels k. Square roots of distinct squarefree integers
// are linearly independent over the rationals, so the canonical map below is
// unique and equality is structural.
class RadicalSum {
 public:
  using Kernel = std::uint64_t;
  using Terms = std::map<Kernel, Rational>;

  static constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

  RadicalSum() = default;
  RadicalSum(const Rational& value);  // NOLINT: rationals embed implicitly
  RadicalSum(long long value) : RadicalSum(Rational(value)) {}  // NOLINT

  // sqrt(value) for value >= 0. Squarefree extraction uses trial division up
  // to trial_bound and throws DomainError if it cannot certify the kernel.
  static RadicalSum sqrt(const Rational& value,
                         std::uint64_t trial_bound = kDefaultTrialBound);

  // coefficient * sqrt(kernel); kernel must already be squarefree.
  static RadicalSum term(const Rational& coefficient, Kernel kernel);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Throws DomainError unless is_rational().
  Rational rational_value() const;
  double to_double() const;
  std::string str() const;

  RadicalSum operator-() const;
  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator-=(const RadicalSum& other);
  RadicalSum& operator*=(const RadicalSum& other);
  RadicalSum& operator*=(const Rational& scalar);

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator*(RadicalSum a, const Rational& b) { return a *= b; }
  friend RadicalSum operator*(const Rational& a, RadicalSum b) { return b *= a; }

  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Kernel kernel, const Rational& coefficient);

  Terms terms_;
};

// value == square^2 * kernel with kernel squarefree. Throws DomainError when
// trial division up to trial_bound cannot certify the factorization or the
// kernel does not fit in 64 bits.
struct SquarefreeSplit {
  BigInt square;
  std::uint64_t kernel;
};
SquarefreeSplit squarefree_split(const BigInt& value,
                                 std::uint64_t trial_bound = RadicalSum::kDefaultTrialBound);

std::ostream& operator<<(std::ostream& os, const RadicalSum& value);

}  // namespace ampcode
