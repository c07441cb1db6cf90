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

#include "ampcode/construct.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "ampcode/criteria.hpp"
#include "ampcode/error.hpp"
#include "ampcode/linalg.hpp"

namespace ampcode {

OrbitCodeFamily build_t1_family(unsigned n, unsigned m, unsigned d) {
  if (m == 0) throw ConstructionError("m must be at least 1");
  if (d < 2) throw ConstructionError("d must be at least 2 for t = 1");
  std::set<OccupationVector> seen;
  std::vector<Codeword> codewords;
  for (const OccupationVector& x : enumerate_qcs(n, m).members) {
    if (seen.count(x)) continue;
    std::vector<OccupationVector> states;
    for (const OccupationVector& y : cyclic_orbit(x)) {
      seen.insert(y);
      states.push_back(scale(y, d));
    }
    codewords.push_back(Codeword::equal_weight(states));
  }
  std::string name = "t1-n" + std::to_string(n) + "-m" + std::to_string(m) + "-d" + std::to_string(d);
  return {n, m, d, Code(std::move(name), 1, std::move(codewords))};
}

ConstructedCode build_t2_pair(const OccupationVector& x, unsigned d) {
  if (x.modes() <= 2) throw ConstructionError("the t = 2 pair needs m > 2 modes");
  if (d == 0) throw ConstructionError("d must be positive");
  const std::vector<OccupationVector> forward = cyclic_orbit(x);
  const OccupationVector rev = reversed(x);
  if (std::find(forward.begin(), forward.end(), rev) != forward.end())
    throw ConstructionError("reverse of " + x.str() + " lies in its own cyclic orbit");
  std::vector<OccupationVector> a, b;
  for (const OccupationVector& y : forward) a.push_back(scale(y, d));
  for (const OccupationVector& y : cyclic_orbit(rev)) b.push_back(scale(y, d));
  ConstructedCode out;
  Code draft("t2-" + x.str() + "-d" + std::to_string(d), 2,
             {Codeword::equal_weight(a), Codeword::equal_weight(b)});
  const Rational dist = *draft.min_distance();
  const BigInt floor_dist = dist.numerator() / dist.denominator();
  const long t = std::min(2L, std::max(0L, floor_dist.get_si() - 1));
  out.code = draft.with_design_t(static_cast<unsigned>(t));
  if (d < 3)
    out.warnings.push_back("d = " + std::to_string(d) + " < 3: design t lowered to " + std::to_string(t) +
                           " (min distance " + dist.str() + ")");
  return out;
}

const char* to_string(WeightSolveResult::Status status) {
  switch (status) {
    case WeightSolveResult::Status::solved: return "solved";
    case WeightSolveResult::Status::infeasible: return "infeasible";
    case WeightSolveResult::Status::underdetermined_resolved: return "underdetermined_resolved";
  }
  return "?";
}

Code WeightSolveResult::to_code(const std::vector<std::vector<OccupationVector>>& supports,
                                std::string name, unsigned t) const {
  if (!ok()) throw ConstructionError("no weights to build a code from");
  std::vector<Codeword> codewords;
  for (std::size_t l = 0; l < supports.size(); ++l) {
    std::vector<CodewordRow> rows;
    for (std::size_t i = 0; i < supports[l].size(); ++i) rows.push_back({weights[l][i], +1, supports[l][i]});
    codewords.emplace_back(std::move(rows));
  }
  return Code(std::move(name), t, std::move(codewords));
}

namespace {

struct System {
  RationalMatrix a;
  RationalVector b;
  std::vector<std::string> labels;
};

std::string multiset_label(const std::vector<unsigned>& columns) {
  std::string out = "{";
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + std::to_string(columns[i] + 1);
  return out + "}";
}

System build_system(const std::vector<std::vector<OccupationVector>>& supports, unsigned t) {
  const unsigned m = static_cast<unsigned>(supports[0][0].modes());
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (const auto& s : supports) {
    offset.push_back(n);
    n += s.size();
  }
  std::vector<std::vector<Rational>> rows;
  System sys;
  for (std::size_t l = 0; l < supports.size(); ++l) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < supports[l].size(); ++i) row[offset[l] + i] = 1;
    rows.push_back(std::move(row));
    sys.b.push_back(1);
    sys.labels.push_back("sum of weights of word " + std::to_string(l) + " = 1");
  }
  for (unsigned s = 1; s <= t; ++s) {
    for (const std::vector<unsigned>& columns : column_multisets(m, s)) {
      for (std::size_t l = 1; l < supports.size(); ++l) {
        std::vector<Rational> row(n);
        for (std::size_t w : {std::size_t{0}, l}) {
          const int sign = w == 0 ? 1 : -1;
          for (std::size_t i = 0; i < supports[w].size(); ++i) {
            BigInt product = 1;
            for (unsigned j : columns) product *= supports[w][i][j];
            row[offset[w] + i] += Rational(product) * Rational(sign);
          }
        }
        rows.push_back(std::move(row));
        sys.b.push_back(0);
        sys.labels.push_back("moment " + multiset_label(columns) + ": word 0 = word " + std::to_string(l));
      }
    }
  }
  sys.a = RationalMatrix(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) sys.a.at(r, c) = rows[r][c];
  return sys;
}

// Maximizes eps subject to A x = b, x_i >= eps, eps <= 1. Returns the
// optimal x when eps > 0.
std::optional<RationalVector> max_min_solution(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t rows = a.rows(), n = a.cols();
  // Variables: x (n), eps, slack s (n), cap slack w.
  const std::size_t vars = 2 * n + 2;
  RationalMatrix lp(rows + n + 1, vars);
  RationalVector rhs(rows + n + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) lp.at(r, c) = a.at(r, c);
    rhs[r] = b[r];
  }
  for (std::size_t i = 0; i < n; ++i) {
    lp.at(rows + i, i) = 1;
    lp.at(rows + i, n) = -1;
    lp.at(rows + i, n + 1 + i) = -1;
  }
  lp.at(rows + n, n) = 1;
  lp.at(rows + n, vars - 1) = 1;
  rhs[rows + n] = 1;
  RationalVector objective(vars);
  objective[n] = 1;
  const LpResult result = simplex_maximize(lp, rhs, objective);
  if (result.status != LpResult::Status::optimal || result.objective.sign() <= 0) return std::nullopt;
  return RationalVector(result.x.begin(), result.x.begin() + static_cast<std::ptrdiff_t>(n));
}

bool positive_solution_exists(const System& sys, const std::vector<std::size_t>& subset) {
  return max_min_solution(sys.a.select_rows(subset), [&] {
           RationalVector b;
           for (std::size_t r : subset) b.push_back(sys.b[r]);
           return b;
         }())
      .has_value();
}

}  // namespace

WeightSolveResult solve_unbalanced_weights(const std::vector<std::vector<OccupationVector>>& supports,
                                           unsigned t) {
  if (supports.size() < 2) throw ConstructionError("at least two supports are needed");
  std::optional<unsigned> row_sum;
  for (std::size_t l = 0; l < supports.size(); ++l) {
    if (supports[l].empty()) throw ConstructionError("support of word " + std::to_string(l) + " is empty");
    std::set<OccupationVector> distinct(supports[l].begin(), supports[l].end());
    if (distinct.size() != supports[l].size())
      throw ConstructionError("support of word " + std::to_string(l) + " repeats a state");
    for (const OccupationVector& x : supports[l]) {
      if (x.modes() != supports[0][0].modes()) throw ConstructionError("mode counts differ");
      if (row_sum && *row_sum != x.row_sum())
        throw ConstructionError("supports must share one row sum for the moment system");
      row_sum = x.row_sum();
    }
  }

  WeightSolveResult out;
  for (std::size_t a = 0; a < supports.size(); ++a)
    for (std::size_t b = a + 1; b < supports.size(); ++b)
      for (const OccupationVector& x : supports[a])
        for (const OccupationVector& y : supports[b])
          if (distance(x, y) <= Rational(static_cast<long long>(t)))
            out.warnings.push_back("distance " + x.str() + " " + y.str() + " = " + distance(x, y).str() +
                                   " <= t; orthogonality is not guaranteed");

  const System sys = build_system(supports, t);
  out.equations = sys.a.rows();
  out.unknowns = sys.a.cols();
  const LinearSolution lin = solve_linear(sys.a, sys.b);
  std::optional<RationalVector> x;
  if (lin.consistent) {
    out.rank = lin.rank;
    out.residual_constraints = out.equations - lin.rank;
    const bool positive = std::all_of(lin.particular.begin(), lin.particular.end(),
                                      [](const Rational& v) { return v.sign() > 0; });
    if (positive) {
      x = lin.particular;
      out.status = lin.null_space.empty() ? WeightSolveResult::Status::solved
                                          : WeightSolveResult::Status::underdetermined_resolved;
    } else if (!lin.null_space.empty()) {
      x = max_min_solution(sys.a, sys.b);
      if (x) out.status = WeightSolveResult::Status::underdetermined_resolved;
    }
  } else {
    out.rank = reduced_row_echelon(sys.a).rank();
    out.residual_constraints = out.equations - out.rank;
  }

  if (!x) {
    out.status = WeightSolveResult::Status::infeasible;
    // Deletion filter: drop each constraint whose removal keeps the set infeasible.
    std::vector<std::size_t> subset(sys.a.rows());
    for (std::size_t r = 0; r < subset.size(); ++r) subset[r] = r;
    for (std::size_t r = 0; r < sys.a.rows(); ++r) {
      std::vector<std::size_t> trial;
      for (std::size_t s : subset)
        if (s != r) trial.push_back(s);
      if (!positive_solution_exists(sys, trial)) subset = std::move(trial);
    }
    for (std::size_t r : subset) out.failing_constraints.push_back(sys.labels[r]);
    return out;
  }

  std::size_t k = 0;
  for (const auto& s : supports) {
    out.weights.emplace_back(x->begin() + static_cast<std::ptrdiff_t>(k),
                             x->begin() + static_cast<std::ptrdiff_t>(k + s.size()));
    k += s.size();
  }
  return out;
}

unsigned long existence_min_N(unsigned l_o, unsigned t, unsigned m) {
  if (l_o == 0) throw DomainError("existence bound needs l_o >= 1");
  // P(n, 1) = 1 never reaches the required count.
  if (m < 2) throw DomainError("existence bound needs m >= 2");
  BigInt small = 0;
  for (unsigned s = 0; s <= t; ++s) small += partition_count(s, m);
  const BigInt needed = 1 + BigInt(l_o) + BigInt(l_o) * small;
  for (unsigned long n = 0;; ++n)
    if (partition_count(static_cast<unsigned>(n), m) >= needed) return n * (t + 1);
}

}  // namespace ampcode
