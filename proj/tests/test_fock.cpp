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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ampcode/error.hpp"
#include "ampcode/fock.hpp"

namespace ampcode {
namespace {

TEST(Fock, PartitionCounts) {
  EXPECT_EQ(partition_count(6, 3), 28);
  EXPECT_EQ(partition_count(3, 3), 10);
  EXPECT_EQ(partition_count(0, 4), 1);
  EXPECT_EQ(partition_count(5, 1), 1);
  EXPECT_EQ(partition_count(2, 2), 3);
}

TEST(Fock, EnumerationMatchesCountAndIsSorted) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 0; n <= 7; ++n) {
      const QcsSpace space = enumerate_qcs(n, m);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(space.members.size())), partition_count(n, m));
      EXPECT_TRUE(std::is_sorted(space.members.begin(), space.members.end()));
      for (const OccupationVector& x : space.members) EXPECT_EQ(x.row_sum(), n);
    }
  }
}

TEST(Fock, DistanceIsHalfL1) {
  EXPECT_EQ(distance({4, 0}, {2, 2}), Rational(2));
  EXPECT_EQ(distance({3, 0, 6}, {0, 3, 6}), Rational(3));
  EXPECT_EQ(distance({1, 0}, {0, 0}), Rational(BigInt(1), BigInt(2)));
  EXPECT_THROW(distance({1, 0}, {1, 0, 0}), StructureError);
}

TEST(Fock, CyclicOrbit) {
  const auto orbit = cyclic_orbit({1, 0, 2});
  ASSERT_EQ(orbit.size(), 3u);
  EXPECT_EQ(orbit[0], OccupationVector({1, 0, 2}));
  EXPECT_EQ(orbit[1], OccupationVector({0, 2, 1}));
  EXPECT_EQ(orbit[2], OccupationVector({2, 1, 0}));
  EXPECT_EQ(cyclic_orbit({2, 2}).size(), 1u);
  EXPECT_EQ(cyclic_orbit({1, 0, 1, 0}).size(), 2u);
}

TEST(Fock, ScaleAndReverse) {
  EXPECT_EQ(scale({1, 0, 2}, 3), OccupationVector({3, 0, 6}));
  EXPECT_EQ(reversed({1, 0, 2}), OccupationVector({2, 0, 1}));
  EXPECT_EQ(OccupationVector({3, 0, 6}).str(), "(3,0,6)");
  EXPECT_THROW(OccupationVector(std::vector<unsigned>{}), StructureError);
}

// Orbits partition Q(n,m); for n coprime to m every orbit has size m.
TEST(FockProperty, OrbitsPartitionTheSpace) {
  for (unsigned m = 2; m <= 4; ++m) {
    for (unsigned n = 1; n <= 7; ++n) {
      std::set<OccupationVector> seen;
      std::size_t orbits = 0;
      for (const OccupationVector& x : enumerate_qcs(n, m).members) {
        if (seen.count(x)) continue;
        ++orbits;
        const auto orbit = cyclic_orbit(x);
        if (std::gcd(n, m) == 1) EXPECT_EQ(orbit.size(), m);
        for (const auto& y : orbit) EXPECT_TRUE(seen.insert(y).second);
      }
      EXPECT_EQ(BigInt(static_cast<unsigned long>(seen.size())), partition_count(n, m));
      if (std::gcd(n, m) == 1) EXPECT_EQ(BigInt(static_cast<unsigned long>(orbits * m)), partition_count(n, m));
    }
  }
}

}  // namespace
}  // namespace ampcode
