//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_GRAPH_HPP_
#define GRAPHLET5_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphlet5/count.hpp"

namespace graphlet5 {

struct Edge {
  int u;
  int v;
};

/// Simple undirected unweighted graph with dense adjacency.
///
/// Nodes are 0..n-1. The adjacency matrix is symmetric with a zero diagonal
/// and degrees are cached at construction. Instances are immutable.
class Graph {
 public:
  using Adjacency = MatrixX<std::uint8_t>;

  Graph() = default;

  /// Edgeless graph on n nodes.
  explicit Graph(int n);

  /// Graph on n nodes. Self-loops are dropped and repeated edges collapse
  /// into one; endpoints outside [0, n) throw std::out_of_range.
  Graph(int n, std::span<const Edge> edges);

  /// Validates symmetry, 0/1 entries and the zero diagonal.
  static Graph from_adjacency(Adjacency adjacency);

  int order() const { return static_cast<int>(degree_.size()); }
  std::int64_t size() const { return edges_; }

  int degree(int i) const { return degree_[check(i)]; }
  const std::vector<int> &degrees() const { return degree_; }

  bool adjacent(int i, int j) const {
    return adjacency_(check(i), check(j)) != 0;
  }

  const Adjacency &adjacency() const { return adjacency_; }

  /// Adjacency matrix with entries converted to Scalar.
  template <typename Scalar>
  auto adjacency_as() const {
    return adjacency_.template cast<Scalar>();
  }

  /// Ascending neighbor list of node i.
  std::vector<int> neighbors(int i) const;

  /// Edge list with u < v, in row-major order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `nodes`; node t of the result is nodes[t].
  Graph induced(std::span<const int> nodes) const;

  bool connected() const;

  int max_degree() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  int check(int i) const;
  void cache_degrees();

  Adjacency adjacency_;
  std::vector<int> degree_;
  std::int64_t edges_ = 0;
};

/// Entries of g^k: the number of length-k walks between each pair of nodes.
template <typename Scalar = Count>
struct WalkTable {
  int power = 1;
  MatrixX<Scalar> entries;

  Scalar trace() const { return entries.trace(); }
};

/// Walk counts of length k by repeated multiplication of the adjacency
/// matrix. k = 0 is rejected.
template <typename Scalar = Count>
WalkTable<Scalar> walk_table(const Graph &g, int k) {
  if (k < 1) {
    throw std::invalid_argument("walk_table: power must be at least 1");
  }
  const MatrixX<Scalar> a = g.adjacency_as<Scalar>();
  MatrixX<Scalar> power = a;
  for (int step = 1; step < k; ++step) power = power * a;
  return {k, std::move(power)};
}

/// S(i, j): nodes adjacent to both i and j, ascending.
std::vector<int> common_neighborhood(const Graph &g, int i, int j);

/// Induced subgraph on all nodes except i. Node t of the result is node t of
/// g for t < i and node t + 1 otherwise.
Graph delete_node(const Graph &g, int i);

/// Node i together with the subgraph induced by its neighbors.
struct NeighborhoodView {
  int center = 0;
  std::vector<int> members;  // ascending; subgraph node t is members[t]
  Graph subgraph;
};

NeighborhoodView neighborhood_subgraph(const Graph &g, int i);

}  // namespace graphlet5

#endif  // GRAPHLET5_GRAPH_HPP_
