//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/graph.hpp"

#include <algorithm>
#include <string>

namespace graphlet5 {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative node count");
  adjacency_ = Adjacency::Zero(n, n);
  degree_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge &e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::out_of_range("Graph: edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") outside [0, " +
                              std::to_string(n) + ")");
    }
    if (e.u == e.v) continue;
    adjacency_(e.u, e.v) = 1;
    adjacency_(e.v, e.u) = 1;
  }
  cache_degrees();
}

Graph Graph::from_adjacency(Adjacency adjacency) {
  if (adjacency.rows() != adjacency.cols()) {
    throw std::invalid_argument("Graph: adjacency matrix is not square");
  }
  for (Eigen::Index i = 0; i < adjacency.rows(); ++i) {
    if (adjacency(i, i) != 0) {
      throw std::invalid_argument("Graph: nonzero diagonal at node " +
                                  std::to_string(i));
    }
    for (Eigen::Index j = 0; j < adjacency.cols(); ++j) {
      if (adjacency(i, j) > 1 || adjacency(i, j) != adjacency(j, i)) {
        throw std::invalid_argument(
            "Graph: adjacency must be a symmetric 0/1 matrix");
      }
    }
  }
  Graph g;
  g.adjacency_ = std::move(adjacency);
  g.cache_degrees();
  return g;
}

void Graph::cache_degrees() {
  const VectorX<int> row_sums = adjacency_.cast<int>().rowwise().sum();
  degree_.assign(row_sums.begin(), row_sums.end());
  std::int64_t twice_m = 0;
  for (int d : degree_) twice_m += d;
  edges_ = twice_m / 2;
}

int Graph::check(int i) const {
  if (i < 0 || i >= order()) {
    throw std::out_of_range("Graph: node " + std::to_string(i) +
                            " outside [0, " + std::to_string(order()) + ")");
  }
  return i;
}

std::vector<int> Graph::neighbors(int i) const {
  check(i);
  std::vector<int> out;
  out.reserve(degree_[i]);
  for (int j = 0; j < order(); ++j) {
    if (adjacency_(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int i = 0; i < order(); ++i) {
    for (int j = i + 1; j < order(); ++j) {
      if (adjacency_(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const int> nodes) const {
  for (int v : nodes) check(v);
  const std::vector<int> index(nodes.begin(), nodes.end());
  Graph g;
  g.adjacency_ = adjacency_(index, index);
  for (Eigen::Index t = 0; t < g.adjacency_.rows(); ++t) {
    if (g.adjacency_(t, t) != 0) {
      throw std::invalid_argument("Graph::induced: repeated node");
    }
  }
  g.cache_degrees();
  return g;
}

bool Graph::connected() const {
  if (order() <= 1) return true;
  std::vector<char> seen(order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < order(); ++v) {
      if (adjacency_(u, v) && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == order();
}

int Graph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::vector<int> common_neighborhood(const Graph &g, int i, int j) {
  if (i == j) {
    throw std::invalid_argument(
        "common_neighborhood: nodes must be distinct");
  }
  std::vector<int> out;
  for (int r = 0; r < g.order(); ++r) {
    if (g.adjacent(i, r) && g.adjacent(j, r)) out.push_back(r);
  }
  return out;
}

Graph delete_node(const Graph &g, int i) {
  if (i < 0 || i >= g.order()) {
    throw std::out_of_range("delete_node: node " + std::to_string(i) +
                            " outside [0, " + std::to_string(g.order()) + ")");
  }
  std::vector<int> keep;
  keep.reserve(g.order() - 1);
  for (int v = 0; v < g.order(); ++v) {
    if (v != i) keep.push_back(v);
  }
  return g.induced(keep);
}

NeighborhoodView neighborhood_subgraph(const Graph &g, int i) {
  NeighborhoodView view;
  view.center = i;
  view.members = g.neighbors(i);
  view.subgraph = g.induced(view.members);
  return view;
}

}  // namespace graphlet5
