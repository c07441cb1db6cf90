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
#include <string>
#include <vector>

#include "ampcode/code.hpp"
#include "ampcode/fock.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

struct OrbitCodeFamily {
  unsigned n = 0;
  unsigned m = 0;
  unsigned d = 0;
  // One equal-weight codeword per cyclic orbit of Q(n, m), states scaled by d,
  // orbits in order of their lexicographically first member.
  Code code;
};

// Balanced t = 1 family. Throws ConstructionError when m == 0 or d < 2.
OrbitCodeFamily build_t1_family(unsigned n, unsigned m, unsigned d);

struct ConstructedCode {
  Code code;
  std::vector<std::string> warnings;
};

// Two codewords: cyclic shifts of d*x and cyclic shifts of d*reverse(x).
// Throws ConstructionError when m <= 2, d == 0 or the two orbits coincide.
// d < 3 is accepted with a warning; the design t is then min(2, D - 1).
ConstructedCode build_t2_pair(const OccupationVector& x, unsigned d);

struct WeightSolveResult {
  enum class Status { solved, infeasible, underdetermined_resolved };
  Status status = Status::infeasible;
  // Per codeword, in support order. Empty unless a solution was found.
  std::vector<std::vector<Rational>> weights;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  // Equations beyond the rank (redundant once the system is consistent).
  std::size_t residual_constraints = 0;
  // Irreducible subset of constraints with no strictly positive solution.
  std::vector<std::string> failing_constraints;
  std::vector<std::string> warnings;

  bool ok() const { return status != Status::infeasible; }
  // Code built from the supports and the solved weights.
  Code to_code(const std::vector<std::vector<OccupationVector>>& supports, std::string name,
               unsigned t) const;
};

const char* to_string(WeightSolveResult::Status status);

// Solves moment equality across codewords for every column multiset of size
// 1..t plus per-codeword normalization, exactly, for strictly positive
// weights. Supports must share one row sum (ConstructionError otherwise).
// A unique or particular (free variables zero) solution is returned when
// positive; otherwise an LP maximizing the smallest weight picks one.
WeightSolveResult solve_unbalanced_weights(const std::vector<std::vector<OccupationVector>>& supports,
                                           unsigned t);

// Smallest N divisible by t+1 with 1 + l_o + l_o sum_{s<=t} P(s,m) <= P(N/(t+1), m).
// Throws DomainError for l_o == 0 or m < 2 (no N satisfies the inequality).
unsigned long existence_min_N(unsigned l_o, unsigned t, unsigned m);

}  // namespace ampcode
