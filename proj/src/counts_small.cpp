//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/counts_small.hpp"

namespace graphlet5 {

Count trace_cubed(const CountMatrix &b) {
  if (b.size() == 0) return 0;
  return (b * b).cwiseProduct(b).sum();
}

SmallCountVector count_small(const Graph &g) {
  const int n = g.order();
  const CountMatrix a = g.adjacency_as<Count>();
  const CountMatrix w2 = a * a;
  const Count m = g.size();

  Count stars3 = 0, stars4 = 0, tadpole_sum = 0, path_sum = 0, diamond_sum = 0;
  Count clique_sum = 0;
  Count trace3 = 0;
  for (int i = 0; i < n; ++i) {
    const Count ki = g.degree(i);
    // (g^3)_ii = sum_j (g^2)_ij g_ji
    const Count closed3 = w2.row(i).dot(a.col(i));
    trace3 += closed3;
    stars3 += choose(ki, 2);
    stars4 += choose(ki, 3);
    if (ki > 2) tadpole_sum += closed3 * (ki - 2);
    for (int j = 0; j < n; ++j) {
      if (j == i || !g.adjacent(i, j)) continue;
      if (i < j) path_sum += (ki - 1) * (g.degree(j) - 1);
      diamond_sum += choose(w2(i, j), 2);
    }
    if (ki >= 3) {
      const NeighborhoodView view = neighborhood_subgraph(g, i);
      clique_sum += trace_cubed(view.subgraph.adjacency_as<Count>());
    }
  }
  const Count trace4 = w2.cwiseProduct(w2).sum();

  SmallCountVector out;
  const Count triangles = exact_div(trace3, 6, "triangles");
  out[3] = stars3;
  out[7] = triangles;
  out[11] = stars4;
  out[13] = path_sum - 3 * triangles;
  out[15] = exact_div(tadpole_sum, 2, "tadpoles");
  out[30] = exact_div(trace4 - 4 * stars3 - 2 * m, 8, "4-circles");
  out[31] = exact_div(diamond_sum, 2, "diamonds");
  out[63] = exact_div(clique_sum, 24, "4-cliques");
  return out;
}

SmallCountVector count_small_in(const Graph &view) { return count_small(view); }

}  // namespace graphlet5
