//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_GENERATORS_HPP_
#define GRAPHLET5_GENERATORS_HPP_

#include <cstdint>
#include <span>

#include "graphlet5/graph.hpp"

namespace graphlet5 {

// Constructors reject invalid parameters with std::invalid_argument naming
// the violated constraint.

Graph complete(int n);

Graph path(int n);

/// Requires n >= 3.
Graph cycle(int n);

/// Node 0 joined to nodes 1..n-1.
Graph star(int n);

/// Complete multipartite graph. Group c holds `sizes[c]` consecutive node
/// ids; nodes are adjacent iff they lie in different groups.
Graph n_partite(std::span<const int> sizes);

/// Balanced complete multipartite graph with `groups` groups of
/// `group_size` nodes.
Graph n_partite(int groups, int group_size);

/// Circulant graph where node i is adjacent to i +- 1, ..., i +- k (mod n).
/// Requires k >= 1 and n > 2k; the result is 2k-regular with n*k edges.
Graph ring_lattice(int n, int k);

/// G(n, p) sample.
///
/// Pairs (i, j) with i < j are visited in row-major order. Each visit draws
/// one 64-bit output of std::mt19937_64 seeded with `seed`, maps it to
/// u = (x >> 11) * 2^-53 in [0, 1), and adds the edge iff u < p. Both the
/// engine and this mapping are fixed, so a seed reproduces the same graph
/// on every platform.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace graphlet5

#endif  // GRAPHLET5_GENERATORS_HPP_
