//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace graphlet5 {
namespace {

void require_small_host(const Graph &g) {
  if (g.order() > kOracleMaxNodes) throw OracleSizeError(g.order(), kOracleMaxNodes);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const auto add = [&out](GraphletId id) {
    Graph h = graphlet_graph(id);
    const std::int64_t aut = automorphism_count(h);
    out.push_back({id, graphlet_name(id), std::move(h), aut});
  };
  for (GraphletId id : kSmallGraphlets) add(id);
  for (GraphletId id : kFiveGraphlets) add(id);
  for (GraphletId id : kSixGraphlets) add(id);
  return out;
}

// Pattern nodes in BFS order, each with the earlier nodes it must touch.
struct PatternStep {
  int node;
  std::vector<int> earlier_neighbors;  // positions in the order
};

std::vector<PatternStep> pattern_order(const Graph &h) {
  const int b = h.order();
  std::vector<int> order;
  std::vector<bool> seen(b, false);
  for (int root = 0; root < b; ++root) {
    if (seen[root]) continue;
    std::queue<int> frontier;
    frontier.push(root);
    seen[root] = true;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      order.push_back(u);
      for (int v : h.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
  }
  std::vector<PatternStep> steps;
  for (int pos = 0; pos < b; ++pos) {
    PatternStep step{order[pos], {}};
    for (int prev = 0; prev < pos; ++prev) {
      if (h.adjacent(order[pos], order[prev])) step.earlier_neighbors.push_back(prev);
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

class Embedder {
 public:
  Embedder(const Graph &g, const Graph &h)
      : g_(g), steps_(pattern_order(h)), image_(h.order(), -1), used_(g.order(), false) {}

  Count run() { return extend(0); }

 private:
  Count extend(std::size_t pos) {
    if (pos == steps_.size()) return 1;
    const PatternStep &step = steps_[pos];
    Count total = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (used_[v]) continue;
      bool fits = true;
      for (int prev : step.earlier_neighbors) {
        if (!g_.adjacent(v, image_[prev])) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      image_[pos] = v;
      used_[v] = true;
      total += extend(pos + 1);
      used_[v] = false;
    }
    return total;
  }

  const Graph &g_;
  std::vector<PatternStep> steps_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

OracleSizeError::OracleSizeError(int nodes, int limit)
    : std::length_error("oracle refuses a graph with " + std::to_string(nodes) +
                        " nodes (limit " + std::to_string(limit) + ")") {}

const std::vector<CatalogEntry> &graphlet_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry &catalog_entry(GraphletId id) {
  for (const CatalogEntry &e : graphlet_catalog()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("graphlet " + id.key() + " is not in the catalog");
}

std::int64_t automorphism_count(const Graph &h) {
  const int b = h.order();
  if (b < 1 || b > kMaxGraphletNodes) {
    throw std::out_of_range("automorphism_count: requires 1..6 nodes, got " +
                            std::to_string(b));
  }
  std::vector<int> perm(b);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool preserves = true;
    for (int i = 0; i < b && preserves; ++i) {
      for (int j = i + 1; j < b; ++j) {
        if (h.adjacent(i, j) != h.adjacent(perm[i], perm[j])) {
          preserves = false;
          break;
        }
      }
    }
    if (preserves) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Count embedding_count(const Graph &g, const Graph &h) {
  require_small_host(g);
  if (h.order() > g.order()) return 0;
  return Embedder(g, h).run();
}

Count oracle_noninduced(const Graph &g, const Graph &h) {
  const Count maps = embedding_count(g, h);
  const std::int64_t aut = automorphism_count(h);
  if (maps % aut != 0) {
    throw std::logic_error("embedding count " + to_string(maps) +
                           " is not divisible by |Aut| = " + std::to_string(aut));
  }
  return maps / aut;
}

Count oracle_noninduced(const Graph &g, GraphletId h) {
  const CatalogEntry &entry = catalog_entry(h);
  const Count maps = embedding_count(g, entry.graph);
  if (maps % entry.automorphisms != 0) {
    throw std::logic_error("embedding count for " + h.key() +
                           " is not divisible by its automorphism count");
  }
  return maps / entry.automorphisms;
}

InducedCountVector oracle_induced(const Graph &g) {
  require_small_host(g);
  InducedCountVector out;
  const int n = g.order();
  if (n < 5) return out;
  std::vector<int> subset{0, 1, 2, 3, 4};
  while (true) {
    const Graph sub = g.induced(subset);
    if (sub.connected()) out[canonical_id(sub).code] += 1;
    // Next 5-subset in lexicographic order.
    int pos = 4;
    while (pos >= 0 && subset[pos] == n - 5 + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int q = pos + 1; q < 5; ++q) subset[q] = subset[q - 1] + 1;
  }
  return out;
}

}  // namespace graphlet5
