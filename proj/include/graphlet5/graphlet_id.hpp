//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_GRAPHLET_ID_HPP_
#define GRAPHLET5_GRAPHLET_ID_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graphlet5/graph.hpp"

namespace graphlet5 {

/// A connected graphlet up to isomorphism: `nodes` is the node count b and
/// `code` is the canonical decimal code a, written M_a^(b).
///
/// The code of a labeled graph on b nodes reads the upper triangle of its
/// adjacency matrix row by row as a binary number, most significant bit
/// first: pair (i, j), 1 <= i < j <= b, carries weight 2^(C(b-i, 2) + b - j).
/// The canonical code is the minimum over all b! relabelings.
struct GraphletId {
  int nodes = 0;
  std::uint32_t code = 0;

  /// "M86_5" style key.
  std::string key() const;

  friend auto operator<=>(const GraphletId &, const GraphletId &) = default;
};

class ClassificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxGraphletNodes = 6;

/// Code of `g` under its current labeling (no minimization).
std::uint32_t adjacency_code(const Graph &g);

/// Canonical id of a connected graph on 3..6 nodes, by exhaustive search
/// over node permutations. Throws ClassificationError otherwise.
GraphletId canonical_id(const Graph &g);

/// Largest code over all relabelings; the counterpart of canonical_id.
std::uint32_t max_code(const Graph &g);

/// Labeled graph whose adjacency_code is id.code.
Graph graphlet_graph(GraphletId id);

inline constexpr std::array<GraphletId, 8> kSmallGraphlets{{
    {3, 3}, {3, 7}, {4, 11}, {4, 13}, {4, 15}, {4, 30}, {4, 31}, {4, 63},
}};

inline constexpr std::array<GraphletId, 21> kFiveGraphlets{{
    {5, 75},  {5, 77},  {5, 79},  {5, 86},  {5, 87},  {5, 94},  {5, 95},
    {5, 117}, {5, 119}, {5, 127}, {5, 222}, {5, 223}, {5, 235}, {5, 236},
    {5, 237}, {5, 239}, {5, 254}, {5, 255}, {5, 507}, {5, 511}, {5, 1023},
}};

inline constexpr std::array<GraphletId, 2> kSixGraphlets{{
    {6, 7919}, {6, 1182},
}};

/// Position of a five-node code in kFiveGraphlets; throws for other codes.
int five_slot(std::uint32_t code);

/// Position of a three- or four-node code in kSmallGraphlets.
int small_slot(std::uint32_t code);

/// Common name ("5-path", "spinning top", ...) or "" if unnamed.
std::string_view graphlet_name(GraphletId id);

}  // namespace graphlet5

#endif  // GRAPHLET5_GRAPHLET_ID_HPP_
