//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_TESTS_CORPUS_HPP_
#define GRAPHLET5_TESTS_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphlet5/graph.hpp"

namespace graphlet5::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Seeded G(n, p) graphs for n in [5, 12] and p in {0.15, 0.3, 0.5, 0.8},
/// six seeds each, followed by paths, cycles, stars, complete graphs, ring
/// lattices and balanced multipartite graphs on at most 12 nodes.
const std::vector<NamedGraph> &oracle_corpus();

/// A graph on n nodes with independent random edges, drawn from `rng`.
Graph random_graph(int n, double p, std::mt19937_64 &rng);

/// g with its nodes relabeled by a random permutation.
Graph shuffled(const Graph &g, std::mt19937_64 &rng);

}  // namespace graphlet5::testing

#endif  // GRAPHLET5_TESTS_CORPUS_HPP_
