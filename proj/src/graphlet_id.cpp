//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/graphlet_id.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace graphlet5 {
namespace {

// Bit weight exponent of pair (i, j), 0-based with i < j.
constexpr int bit_of(int b, int i, int j) {
  const int row = b - (i + 1);
  return row * (row - 1) / 2 + (b - (j + 1));
}

std::uint32_t code_under(const Graph &g, std::span<const int> perm) {
  const int b = g.order();
  std::uint32_t code = 0;
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      if (g.adjacent(perm[i], perm[j])) code |= 1u << bit_of(b, i, j);
    }
  }
  return code;
}

void require_classifiable(const Graph &g) {
  if (g.order() < 3 || g.order() > kMaxGraphletNodes) {
    throw ClassificationError("graphlet must have 3 to 6 nodes, got " +
                              std::to_string(g.order()));
  }
  if (!g.connected()) {
    throw ClassificationError("graphlet must be connected");
  }
}

template <typename Pick>
std::uint32_t extreme_code(const Graph &g, Pick pick) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = code_under(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = pick(best, code_under(g, perm));
  }
  return best;
}

}  // namespace

std::string GraphletId::key() const {
  return "M" + std::to_string(code) + "_" + std::to_string(nodes);
}

std::uint32_t adjacency_code(const Graph &g) {
  if (g.order() > kMaxGraphletNodes) {
    throw ClassificationError("adjacency_code: more than 6 nodes");
  }
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return code_under(g, identity);
}

GraphletId canonical_id(const Graph &g) {
  require_classifiable(g);
  return {g.order(), extreme_code(g, [](auto a, auto b) { return std::min(a, b); })};
}

std::uint32_t max_code(const Graph &g) {
  require_classifiable(g);
  return extreme_code(g, [](auto a, auto b) { return std::max(a, b); });
}

Graph graphlet_graph(GraphletId id) {
  const int b = id.nodes;
  if (b < 1 || b > kMaxGraphletNodes) {
    throw ClassificationError("graphlet_graph: unsupported node count " +
                              std::to_string(b));
  }
  if (b < 32 && (id.code >> (b * (b - 1) / 2)) != 0) {
    throw ClassificationError("graphlet_graph: code " +
                              std::to_string(id.code) + " too large for " +
                              std::to_string(b) + " nodes");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      if ((id.code >> bit_of(b, i, j)) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(b, edges);
}

int five_slot(std::uint32_t code) {
  const auto it = std::find_if(kFiveGraphlets.begin(), kFiveGraphlets.end(),
                               [code](GraphletId id) { return id.code == code; });
  if (it == kFiveGraphlets.end()) {
    throw std::out_of_range("no five-node graphlet with code " +
                            std::to_string(code));
  }
  return static_cast<int>(it - kFiveGraphlets.begin());
}

int small_slot(std::uint32_t code) {
  const auto it = std::find_if(kSmallGraphlets.begin(), kSmallGraphlets.end(),
                               [code](GraphletId id) { return id.code == code; });
  if (it == kSmallGraphlets.end()) {
    throw std::out_of_range("no three- or four-node graphlet with code " +
                            std::to_string(code));
  }
  return static_cast<int>(it - kSmallGraphlets.begin());
}

std::string_view graphlet_name(GraphletId id) {
  struct Named {
    GraphletId id;
    std::string_view name;
  };
  static constexpr Named kNames[] = {
      {{3, 3}, "3-star"},        {{3, 7}, "triangle"},
      {{4, 11}, "4-star"},       {{4, 13}, "4-path"},
      {{4, 15}, "tadpole"},      {{4, 30}, "4-circle"},
      {{4, 31}, "diamond"},      {{4, 63}, "4-complete"},
      {{5, 75}, "5-star"},       {{5, 77}, "5-arrow"},
      {{5, 79}, "cricket"},      {{5, 86}, "5-path"},
      {{5, 87}, "bull"},         {{5, 94}, "banner"},
      {{5, 95}, "stingray"},     {{5, 117}, "lollipop"},
      {{5, 119}, "spinning top"}, {{5, 127}, "kite"},
      {{5, 222}, "ufo"},         {{5, 223}, "chevron"},
      {{5, 235}, "hourglass"},   {{5, 236}, "5-circle"},
      {{5, 237}, "house"},       {{5, 239}, "crown"},
      {{5, 254}, "envelope"},    {{5, 255}, "lamp"},
      {{5, 507}, "arrowhead"},   {{5, 511}, "cat's cradle"},
      {{5, 1023}, "5-complete"},
  };
  for (const Named &n : kNames) {
    if (n.id == id) return n.name;
  }
  return {};
}

}  // namespace graphlet5
