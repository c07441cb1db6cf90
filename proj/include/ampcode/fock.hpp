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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "ampcode/rational.hpp"

namespace ampcode {

// Photon counts per mode of a quasi-classical state |n_1 ... n_m>.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<unsigned> occupations);
  OccupationVector(std::initializer_list<unsigned> occupations);

  std::size_t modes() const { return n_.size(); }
  unsigned operator[](std::size_t mode) const { return n_[mode]; }
  const std::vector<unsigned>& values() const { return n_; }
  unsigned row_sum() const;

  // "(3,0,6)"
  std::string str() const;

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<unsigned> n_;
};

std::ostream& operator<<(std::ostream& os, const OccupationVector& v);

// Q(n, m): every occupation vector of m modes with row sum n.
struct QcsSpace {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<OccupationVector> members;  // lexicographically ascending
};

// P(n, m) = C(n + m - 1, m - 1), the size of Q(n, m).
BigInt partition_count(unsigned n, unsigned m);

QcsSpace enumerate_qcs(unsigned n, unsigned m);

// Half the L1 distance. Integer-valued for equal row sums, half-integer
// otherwise. Throws StructureError on a mode-count mismatch.
Rational distance(const OccupationVector& u, const OccupationVector& v);

// Distinct cyclic shifts (x_1..x_m) -> (x_2..x_m,x_1) in shift order starting
// from x. The orbit size always divides m.
std::vector<OccupationVector> cyclic_orbit(const OccupationVector& x);

OccupationVector scale(const OccupationVector& x, unsigned d);
OccupationVector reversed(const OccupationVector& x);

}  // namespace ampcode
