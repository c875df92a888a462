//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_COUNTS_FIVE_HPP_
#define GRAPHLET5_COUNTS_FIVE_HPP_

#include "graphlet5/count.hpp"
#include "graphlet5/counts_small.hpp"
#include "graphlet5/five_vector.hpp"
#include "graphlet5/graph.hpp"
#include "graphlet5/graphlet_id.hpp"

namespace graphlet5 {

/// Exact non-induced counts of all 21 connected five-node graphlets.
FiveCountVector count_five(const Graph &g);

/// As above, reusing already computed three- and four-node counts of g.
FiveCountVector count_five(const Graph &g, const SmallCountVector &small);

/// Chevron count from 4-stars inside node neighborhoods:
/// (1/2) sum_{i: k_i > 3} sum_{r in N(i), k_r > 3} C(d_i(r), 3), where d_i(r)
/// is the degree of r inside the neighborhood subgraph of i.
Count count_chevron_neighborhood(const Graph &g);

// Three published formulations of the 5-path count. Only the first agrees
// with count_five in general; the other two are kept as reference
// transcriptions and are known to diverge.

/// A/2 with A = sum_{i != j} [(g^4)_ij - 2 (g^2)_ij (k_j - g_ij)]
///            - sum_i [(2 k_i - 1)(g^3)_ii + 6 C(k_i, 3)].
Count five_path_formulation1(const Graph &g);

/// (1/2) 1'g^4 1 - m - 4 3-stars - 9 triangles - 6 4-stars - 2 4-paths
/// - 4 tadpoles - 4 4-circles. Correct only when the graph has no 4-stars
/// and no tadpoles.
Count five_path_formulation2(const Graph &g);

/// sum_{(i,j) in E} (k_i + k_j - 2) - 3 triangles - 2 tadpoles - 4 4-circles.
/// Gives 2n - 4 on a path of n >= 5 nodes, where the true count is n - 4.
Count five_path_formulation3(const Graph &g);

/// Six-node graphlet M_7919^(6): a house plus a node adjacent to all five
/// house nodes. sum_{i: k_i > 4} houses in the neighborhood subgraph of i.
Count count_m7919_six(const Graph &g);

/// Six-node graphlet M_1182^(6): a 4-cycle with one pendant edge on each of
/// two opposite nodes.
Count count_m1182_six(const Graph &g);

}  // namespace graphlet5

#endif  // GRAPHLET5_COUNTS_FIVE_HPP_
