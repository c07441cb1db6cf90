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

#include "ampcode/linalg.hpp"

#include <optional>

#include "ampcode/error.hpp"

namespace ampcode {

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(rows[i], c);
  return out;
}

EchelonForm reduced_row_echelon(RationalMatrix m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Rational scale = m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) /= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side size mismatch");
  const std::size_t n = a.cols();
  RationalMatrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented.at(r, c) = a.at(r, c);
    augmented.at(r, n) = b[r];
  }
  const EchelonForm form = reduced_row_echelon(std::move(augmented));
  LinearSolution out;
  if (!form.pivot_columns.empty() && form.pivot_columns.back() == n) return out;
  out.consistent = true;
  out.rank = form.rank();
  out.particular.assign(n, Rational());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < form.rank(); ++i) {
    out.particular[form.pivot_columns[i]] = form.reduced.at(i, n);
    is_pivot[form.pivot_columns[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < form.rank(); ++i) v[form.pivot_columns[i]] = -form.reduced.at(i, f);
    out.null_space.push_back(std::move(v));
  }
  return out;
}

namespace {

// Tableau in canonical form for `basis`; last column is the right-hand side.
struct Tableau {
  RationalMatrix t;
  std::vector<std::size_t> basis;

  std::size_t vars() const { return t.cols() - 1; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational scale = t.at(row, col);
    for (std::size_t c = 0; c < t.cols(); ++c) t.at(row, c) /= scale;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (r == row || t.at(r, col).is_zero()) continue;
      const Rational factor = t.at(r, col);
      for (std::size_t c = 0; c < t.cols(); ++c) t.at(r, c) -= factor * t.at(row, c);
    }
    basis[row] = col;
  }

  // Returns false when unbounded.
  bool maximize(const RationalVector& c, std::size_t usable_columns) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable_columns && !entering; ++j) {
        Rational reduced = c[j];
        for (std::size_t i = 0; i < t.rows(); ++i) reduced -= c[basis[i]] * t.at(i, j);
        if (reduced.sign() > 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t.at(i, *entering).sign() <= 0) continue;
        const Rational ratio = t.at(i, vars()) / t.at(i, *entering);
        if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  RationalVector solution(std::size_t n) const {
    RationalVector x(n);
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (basis[i] < n) x[basis[i]] = t.at(i, vars());
    return x;
  }
};

}  // namespace

LpResult simplex_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t rows = a.rows(), n = a.cols();
  if (b.size() != rows || c.size() != n) throw DomainError("linear program size mismatch");

  // Phase 1: artificial variable per row, minimize their sum.
  Tableau tab{RationalMatrix(rows, n + rows + 1), {}};
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t.at(r, j) = flip ? -a.at(r, j) : a.at(r, j);
    tab.t.at(r, n + r) = 1;
    tab.t.at(r, n + rows) = flip ? -b[r] : b[r];
    tab.basis.push_back(n + r);
  }
  RationalVector phase1(n + rows);
  for (std::size_t r = 0; r < rows; ++r) phase1[n + r] = -1;
  tab.maximize(phase1, n + rows);
  Rational infeasibility;
  for (std::size_t i = 0; i < rows; ++i)
    if (tab.basis[i] >= n) infeasibility += tab.t.at(i, n + rows);
  LpResult out;
  if (infeasibility.sign() != 0) return out;

  // Drive remaining artificials out of the basis; drop redundant rows.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows; ++i) {
    if (tab.basis[i] >= n) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!tab.t.at(i, j).is_zero()) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    if (tab.basis[i] < n) keep.push_back(i);
  }
  Tableau phase2{RationalMatrix(keep.size(), n + 1), {}};
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) phase2.t.at(r, j) = tab.t.at(keep[r], j);
    phase2.t.at(r, n) = tab.t.at(keep[r], n + rows);
    phase2.basis.push_back(tab.basis[keep[r]]);
  }
  if (!phase2.maximize(c, n)) {
    out.status = LpResult::Status::unbounded;
    return out;
  }
  out.status = LpResult::Status::optimal;
  out.x = phase2.solution(n);
  for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
  return out;
}

}  // namespace ampcode
