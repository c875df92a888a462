//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphlet5 {
namespace {

void require(bool condition, const char *constraint) {
  if (!condition) {
    throw std::invalid_argument(std::string("constraint violated: ") +
                                constraint);
  }
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph path(int n) {
  require(n >= 1, "n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph star(int n) {
  require(n >= 1, "n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, edges);
}

Graph n_partite(std::span<const int> sizes) {
  require(sizes.size() >= 2, "N >= 2 groups");
  std::vector<int> group;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    require(sizes[c] >= 1, "every group size >= 1");
    group.insert(group.end(), sizes[c], static_cast<int>(c));
  }
  const int n = static_cast<int>(group.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (group[i] != group[j]) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

Graph n_partite(int groups, int group_size) {
  require(groups >= 2, "N >= 2 groups");
  const std::vector<int> sizes(groups, group_size);
  return n_partite(sizes);
}

Graph ring_lattice(int n, int k) {
  require(k >= 1, "k >= 1");
  require(n > 2 * k, "n > 2k");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int step = 1; step <= k; ++step) edges.push_back({i, (i + step) % n});
  }
  return Graph(n, edges);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  require(n >= 1, "n >= 1");
  require(p >= 0.0 && p <= 1.0, "0 <= p <= 1");
  std::mt19937_64 engine(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

}  // namespace graphlet5
