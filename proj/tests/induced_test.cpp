//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/induced.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "graphlet5/generators.hpp"
#include "graphlet5/oracle.hpp"

namespace graphlet5 {
namespace {

std::vector<int> sorted_degrees(const Graph &g) {
  std::vector<int> d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

FiveCountVector random_vector(std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::int64_t> value(-1000000, 1000000);
  FiveCountVector y;
  for (int s = 0; s < 21; ++s) y.values(s) = value(rng);
  return y;
}

TEST(InclusionMatrixTest, PublishedEntries) {
  const InclusionMatrix &a = inclusion_matrix();
  EXPECT_EQ(a(75, 79), 1);
  EXPECT_EQ(a(511, 1023), 10);
  EXPECT_EQ(a(75, 1023), 5);
  EXPECT_EQ(a(79, 1023), 30);
  EXPECT_EQ(a(86, 1023), 60);
}

TEST(InclusionMatrixTest, StrictlyUpperTriangular) {
  const auto &entries = inclusion_matrix().entries;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j <= i; ++j) EXPECT_EQ(entries(i, j), 0) << i << "," << j;
  }
}

TEST(InclusionMatrixTest, ZeroUnlessContainerHasMoreEdges) {
  const InclusionMatrix &a = inclusion_matrix();
  for (GraphletId i : kFiveGraphlets) {
    for (GraphletId j : kFiveGraphlets) {
      if (graphlet_graph(j).size() <= graphlet_graph(i).size()) {
        EXPECT_EQ(a(i.code, j.code), 0) << i.key() << " in " << j.key();
      }
    }
  }
}

TEST(InclusionMatrixTest, ZeroUnlessDegreesDominate) {
  const InclusionMatrix &a = inclusion_matrix();
  for (GraphletId i : kFiveGraphlets) {
    const std::vector<int> di = sorted_degrees(graphlet_graph(i));
    for (GraphletId j : kFiveGraphlets) {
      const std::vector<int> dj = sorted_degrees(graphlet_graph(j));
      bool dominates = true;
      for (int t = 0; t < 5; ++t) dominates = dominates && dj[t] >= di[t];
      if (!dominates) {
        EXPECT_EQ(a(i.code, j.code), 0) << i.key() << " in " << j.key();
      }
    }
  }
}

TEST(InclusionMatrixTest, RegeneratedByOracle) {
  const InclusionMatrix &a = inclusion_matrix();
  for (GraphletId j : kFiveGraphlets) {
    const Graph host = graphlet_graph(j);
    for (GraphletId i : kFiveGraphlets) {
      if (i == j) continue;
      EXPECT_EQ(a(i.code, j.code), oracle_noninduced(host, i)) << i.key() << " in " << j.key();
    }
  }
}

TEST(InducedTest, CompleteFiveIsUnit) {
  const InducedCountVector t = induced_from_noninduced(count_five(complete(5)));
  for (GraphletId id : kFiveGraphlets) EXPECT_EQ(t[id.code], id.code == 1023 ? 1 : 0);
  EXPECT_EQ(induced_explicit(count_five(complete(5)))[511], 0);
}

TEST(InducedTest, PathIsUnit) {
  const InducedCountVector t = induced_from_noninduced(count_five(path(5)));
  for (GraphletId id : kFiveGraphlets) EXPECT_EQ(t[id.code], id.code == 86 ? 1 : 0);
}

TEST(InducedTest, CompleteSlotUnchanged) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FiveCountVector y = random_vector(rng);
    EXPECT_EQ(induced_explicit(y)[1023], y[1023]);
  }
}

TEST(InducedTest, MatchesInducedOracle) {
  const Graph g = erdos_renyi(11, 0.35, 35);
  const InducedCountVector t = induced_from_noninduced(count_five(g));
  EXPECT_EQ(t, oracle_induced(g));
  EXPECT_GE(t.values.minCoeff(), 0);
}

TEST(InducedTest, ExplicitAgreesWithSolve) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const FiveCountVector y = random_vector(rng);
    EXPECT_EQ(induced_explicit(y), induced_from_noninduced(y));
  }
}

TEST(InducedTest, RoundTrip) {
  const FiveCountVector y = count_five(erdos_renyi(10, 0.4, 40));
  EXPECT_EQ(noninduced_from_induced(induced_from_noninduced(y)), y);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const FiveCountVector v = random_vector(rng);
    const InducedCountVector t(v.values);
    EXPECT_EQ(induced_from_noninduced(noninduced_from_induced(t)), t);
  }
}

TEST(InducedTest, UnitVectorGivesColumn) {
  InducedCountVector t;
  t[1023] = 1;
  const FiveCountVector y = noninduced_from_induced(t);
  EXPECT_EQ(y[75], 5);
  EXPECT_EQ(y[1023], 1);
  EXPECT_EQ(noninduced_from_induced(InducedCountVector()).values, Vector21::Zero());
}

}  // namespace
}  // namespace graphlet5
