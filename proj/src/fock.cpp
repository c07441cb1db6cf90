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

#include "ampcode/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ampcode/error.hpp"

namespace ampcode {

OccupationVector::OccupationVector(std::vector<unsigned> occupations) : n_(std::move(occupations)) {
  if (n_.empty()) throw StructureError("occupation vector needs at least one mode");
}

OccupationVector::OccupationVector(std::initializer_list<unsigned> occupations)
    : OccupationVector(std::vector<unsigned>(occupations)) {}

unsigned OccupationVector::row_sum() const { return std::accumulate(n_.begin(), n_.end(), 0u); }

std::string OccupationVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < n_.size(); ++j) os << (j ? "," : "") << n_[j];
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OccupationVector& v) { return os << v.str(); }

BigInt partition_count(unsigned n, unsigned m) {
  if (m == 0) return n == 0 ? 1 : 0;
  return binomial(n + m - 1, m - 1);
}

namespace {

void fill_partitions(unsigned remaining, std::vector<unsigned>& prefix, std::size_t m,
                     std::vector<OccupationVector>& out) {
  if (prefix.size() + 1 == m) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = 0; first <= remaining; ++first) {
    prefix.push_back(first);
    fill_partitions(remaining - first, prefix, m, out);
    prefix.pop_back();
  }
}

}  // namespace

QcsSpace enumerate_qcs(unsigned n, unsigned m) {
  if (m == 0) throw DomainError("Q(n, m) needs m >= 1");
  QcsSpace space{n, m, {}};
  space.members.reserve(partition_count(n, m).get_ui());
  std::vector<unsigned> prefix;
  fill_partitions(n, prefix, m, space.members);
  return space;
}

Rational distance(const OccupationVector& u, const OccupationVector& v) {
  if (u.modes() != v.modes())
    throw StructureError("distance between " + u.str() + " and " + v.str() +
                         ": mode counts differ");
  long long total = 0;
  for (std::size_t j = 0; j < u.modes(); ++j)
    total += std::llabs(static_cast<long long>(u[j]) - static_cast<long long>(v[j]));
  return Rational(total) / Rational(2);
}

std::vector<OccupationVector> cyclic_orbit(const OccupationVector& x) {
  std::vector<OccupationVector> orbit{x};
  std::vector<unsigned> shifted = x.values();
  for (std::size_t step = 1; step < x.modes(); ++step) {
    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
    if (shifted == x.values()) break;
    orbit.emplace_back(shifted);
  }
  return orbit;
}

OccupationVector scale(const OccupationVector& x, unsigned d) {
  std::vector<unsigned> out = x.values();
  for (unsigned& n : out) n *= d;
  return OccupationVector(std::move(out));
}

OccupationVector reversed(const OccupationVector& x) {
  std::vector<unsigned> out = x.values();
  std::reverse(out.begin(), out.end());
  return OccupationVector(std::move(out));
}

}  // namespace ampcode
