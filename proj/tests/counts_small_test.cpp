//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/counts_small.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "graphlet5/generators.hpp"
#include "graphlet5/oracle.hpp"

namespace graphlet5 {
namespace {

TEST(CountSmallTest, CompleteGraphs) {
  for (int n = 4; n <= 12; ++n) {
    const SmallCountVector s = count_small(complete(n));
    EXPECT_EQ(s[3], n * choose(n - 1, 2));
    EXPECT_EQ(s[7], choose(n, 3));
    EXPECT_EQ(s[11], n * choose(n - 1, 3));
    EXPECT_EQ(s[13], Count(n - 2) * (n - 3) * choose(n, 2));
    EXPECT_EQ(s[15], s[13]);
    EXPECT_EQ(s[63], choose(n, 4));
  }
}

TEST(CountSmallTest, Paths) {
  for (int n = 5; n <= 20; ++n) {
    const SmallCountVector s = count_small(path(n));
    EXPECT_EQ(s[3], n - 2);
    EXPECT_EQ(s[13], n - 3);
    EXPECT_EQ(s[7], 0);
    EXPECT_EQ(s[11], 0);
    EXPECT_EQ(s[15], 0);
  }
}

TEST(CountSmallTest, EmptyAndTinyGraphs) {
  EXPECT_EQ(count_small(Graph()).values.sum(), 0);
  EXPECT_EQ(count_small(Graph(3)).values.sum(), 0);
  EXPECT_EQ(count_small(complete(2)).values.sum(), 0);
  const SmallCountVector k3 = count_small(complete(3));
  EXPECT_EQ(k3[3], 3);
  EXPECT_EQ(k3[7], 1);
  EXPECT_EQ(k3.values.tail<6>().sum(), 0);
}

TEST(CountSmallTest, ViewCounts) {
  const SmallCountVector k4 = count_small_in(complete(4));
  EXPECT_EQ(k4[63], 1);
  EXPECT_EQ(k4[30], 3);
  EXPECT_EQ(k4[31], 6);
  EXPECT_EQ(count_small_in(Graph(6)).values.sum(), 0);
  const SmallCountVector c4 = count_small_in(cycle(4));
  EXPECT_EQ(c4[30], 1);
  EXPECT_EQ(c4[7], 0);
}

TEST(CountSmallTest, ViewUsesItsOwnDegrees) {
  // In a wheel the rim is a cycle: its 4-paths use rim degrees, not the
  // wheel degrees.
  std::vector<Edge> edges;
  for (int i = 1; i <= 6; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i % 6 + 1});
  }
  const Graph wheel(7, edges);
  const NeighborhoodView view = neighborhood_subgraph(wheel, 0);
  EXPECT_EQ(count_small_in(view.subgraph)[13], 6);
}

TEST(CountSmallTest, MatchesOracle) {
  for (const auto &[name, g] : testing::oracle_corpus()) {
    const SmallCountVector s = count_small(g);
    for (GraphletId id : kSmallGraphlets) {
      EXPECT_EQ(s[id.code], oracle_noninduced(g, id)) << name << " " << id.key();
    }
  }
}

TEST(CountSmallTest, TraceCubed) {
  EXPECT_EQ(trace_cubed(complete(4).adjacency_as<Count>()), 24);
  EXPECT_EQ(trace_cubed(CountMatrix()), 0);
}

}  // namespace
}  // namespace graphlet5
