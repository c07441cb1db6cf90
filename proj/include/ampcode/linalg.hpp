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

#include <cstddef>
#include <vector>

#include "ampcode/rational.hpp"

namespace ampcode {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix select_rows(const std::vector<std::size_t>& rows) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

// Gauss-Jordan elimination; pivots taken in column order.
EchelonForm reduced_row_echelon(RationalMatrix matrix);

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  // Free variables set to zero.
  RationalVector particular;
  std::vector<RationalVector> null_space;
};

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b);

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  RationalVector x;
  Rational objective;
};

// maximize c.x subject to A x = b, x >= 0. Two-phase tableau simplex with
// Bland's rule in exact arithmetic.
LpResult simplex_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace ampcode
