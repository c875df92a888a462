//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_COUNTS_SMALL_HPP_
#define GRAPHLET5_COUNTS_SMALL_HPP_

#include <cstdint>

#include "graphlet5/count.hpp"
#include "graphlet5/graph.hpp"
#include "graphlet5/graphlet_id.hpp"

namespace graphlet5 {

/// Non-induced counts of the eight connected graphlets on three and four
/// nodes, in kSmallGraphlets order: 3-star, triangle, 4-star, 4-path,
/// tadpole, 4-circle, diamond, 4-complete.
struct SmallCountVector {
  Eigen::Matrix<Count, 8, 1> values = Eigen::Matrix<Count, 8, 1>::Zero();

  Count operator[](std::uint32_t code) const { return values(small_slot(code)); }
  Count &operator[](std::uint32_t code) { return values(small_slot(code)); }

  friend bool operator==(const SmallCountVector &a, const SmallCountVector &b) {
    return a.values == b.values;
  }
};

/// Closed-form counts from degrees and traces of adjacency powers:
///
///   3-star     sum_i C(k_i, 2)
///   triangle   tr(g^3) / 6
///   4-star     sum_i C(k_i, 3)
///   4-path     sum_{(i,j) in E} (k_i - 1)(k_j - 1) - 3 triangles
///   tadpole    (1/2) sum_i (g^3)_ii (k_i - 2)
///   4-circle   (tr(g^4) - 4 3-stars - 2m) / 8
///   diamond    (1/2) sum_{i != j} C((g^2)_ij g_ij, 2)
///   4-complete (1/24) sum_i tr(g_{-i}^3)
///
/// where g_{-i} is the subgraph induced by the neighbors of i.
SmallCountVector count_small(const Graph &g);

/// Same formulae evaluated on a (typically neighborhood) subgraph, with the
/// subgraph's own degrees.
SmallCountVector count_small_in(const Graph &view);

/// tr(b^3) for a symmetric matrix b.
Count trace_cubed(const CountMatrix &b);

}  // namespace graphlet5

#endif  // GRAPHLET5_COUNTS_SMALL_HPP_
