//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/analytic.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "graphlet5/counts_five.hpp"
#include "graphlet5/counts_small.hpp"
#include "graphlet5/generators.hpp"

namespace graphlet5 {
namespace {

TEST(CompleteWalksTest, Examples) {
  const CompleteWalks w = complete_walks(20, 4);
  EXPECT_EQ(w.diagonal, 6517);
  EXPECT_EQ(w.off_diagonal, 6516);
  EXPECT_EQ(complete_walks(7, 1).off_diagonal, 1);
  EXPECT_EQ(complete_walks(7, 1).diagonal, 0);
  EXPECT_EQ(complete_walks(7, 2).off_diagonal, 5);
  EXPECT_THROW(complete_walks(1, 2), std::invalid_argument);
  EXPECT_THROW(complete_walks(5, 0), std::invalid_argument);
}

TEST(CompleteWalksTest, AgreesWithWalkTable) {
  for (int n = 2; n <= 25; ++n) {
    for (int k = 1; k <= 6; ++k) {
      const CompleteWalks w = complete_walks(n, k);
      const CountMatrix table = walk_table<Count>(complete(n), k).entries;
      EXPECT_EQ(w.diagonal, table(0, 0)) << n << "," << k;
      EXPECT_EQ(w.off_diagonal, table(0, 1)) << n << "," << k;
    }
  }
}

TEST(FivePathsCompleteTest, Values) {
  EXPECT_EQ(five_paths_complete(5), 60);
  EXPECT_EQ(five_paths_complete(4), 0);
  EXPECT_EQ(five_paths_complete(8), count_five(complete(8))[86]);
}

TEST(FivePathsCompleteTest, FourPathsEqualTadpoles) {
  for (int n = 4; n <= 12; ++n) {
    const SmallCountVector s = count_small(complete(n));
    EXPECT_EQ(s[13], s[15]);
  }
}

TEST(BullsTest, Published) {
  const BullCount b = bulls_balanced_npartite(5, 3);
  EXPECT_EQ(b.value, 74520);
  EXPECT_TRUE(b.degree_assumption_holds);
}

TEST(BullsTest, RootsOfTheClosedForm) {
  EXPECT_EQ(bulls_balanced_npartite(3, 1).value, 0);
  EXPECT_FALSE(bulls_balanced_npartite(3, 1).degree_assumption_holds);
  EXPECT_EQ(bulls_balanced_npartite(4, 1).value, 0);
}

TEST(BullsTest, AgreesWithGeneralCount) {
  EXPECT_EQ(bulls_balanced_npartite(4, 2).value, count_five(n_partite(4, 2))[87]);
  for (int groups = 2; groups <= 6; ++groups) {
    for (int size = 1; size <= 4; ++size) {
      const BullCount b = bulls_balanced_npartite(groups, size);
      if (!b.degree_assumption_holds) continue;
      EXPECT_EQ(b.value, count_five(n_partite(groups, size))[87]) << groups << "," << size;
    }
  }
  EXPECT_THROW(bulls_balanced_npartite(1, 3), std::invalid_argument);
  EXPECT_THROW(bulls_balanced_npartite(3, 0), std::invalid_argument);
}

TEST(SpinningTopsTest, Published) {
  EXPECT_EQ(spinning_tops_ring_lattice(29, 10), 912108);
  for (int n = 31; n <= 40; ++n) EXPECT_EQ(spinning_tops_ring_lattice(n, 10), 30420 * n);
  const Count n = 25;
  EXPECT_EQ(spinning_tops_ring_lattice(25, 10),
            488724 * n - 39026 * n * n + 1092 * n * n * n - 10 * n * n * n * n);
  for (int m = 3; m <= 12; ++m) EXPECT_EQ(spinning_tops_ring_lattice(m, 1), 0);
}

TEST(SpinningTopsTest, MinimumAtTwentyNine) {
  const Count at29 = spinning_tops_ring_lattice(29, 10);
  EXPECT_LT(at29, spinning_tops_ring_lattice(30, 10));
  EXPECT_LT(at29, spinning_tops_ring_lattice(31, 10));
  for (int n = 21; n <= 40; ++n) EXPECT_GE(spinning_tops_ring_lattice(n, 10), at29);
}

TEST(SpinningTopsTest, AgreesWithGeneralCount) {
  for (int k = 1; k <= 7; ++k) {
    for (int n = 2 * k + 1; n <= 3 * k + 4; ++n) {
      EXPECT_EQ(spinning_tops_ring_lattice(n, k), count_five(ring_lattice(n, k))[119])
          << n << "," << k;
    }
  }
  for (int n = 21; n <= 40; ++n) {
    EXPECT_EQ(spinning_tops_ring_lattice(n, 10), count_five(ring_lattice(n, 10))[119]);
  }
  EXPECT_THROW(spinning_tops_ring_lattice(20, 10), std::invalid_argument);
  EXPECT_THROW(spinning_tops_ring_lattice(5, 0), std::invalid_argument);
}

}  // namespace
}  // namespace graphlet5
