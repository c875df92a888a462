//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/counts_five.hpp"

#include <vector>

namespace graphlet5 {
namespace {

struct WalkPowers {
  CountMatrix a;
  CountMatrix w2;
  CountMatrix w3;
};

WalkPowers walk_powers(const Graph &g) {
  WalkPowers w;
  w.a = g.adjacency_as<Count>();
  w.w2 = w.a * w.a;
  w.w3 = w.w2 * w.a;
  return w;
}

// sum_{i != j} (g^4)_ij and tr(g^4) from g^2 alone.
struct FourWalkSums {
  Count off_diagonal;
  Count trace;
};

FourWalkSums four_walk_sums(const CountMatrix &w2) {
  if (w2.size() == 0) return {0, 0};
  const CountVector row_sums = w2.rowwise().sum();
  const Count total = row_sums.cwiseProduct(row_sums).sum();
  const Count trace = w2.cwiseProduct(w2).sum();
  return {total - trace, trace};
}

}  // namespace

FiveCountVector count_five(const Graph &g) { return count_five(g, count_small(g)); }

FiveCountVector count_five(const Graph &g, const SmallCountVector &small) {
  const int n = g.order();
  const WalkPowers w = walk_powers(g);
  const auto deg = [&g](int i) -> Count { return g.degree(i); };

  const Count stars3 = small[3];
  const Count triangles = small[7];
  const Count stars4 = small[11];
  const Count paths4 = small[13];
  const Count tadpoles = small[15];
  const Count diamonds = small[31];
  const Count cliques4 = small[63];

  Count star = 0, arrow = 0, cricket = 0, bull = 0, banner = 0, stingray = 0;
  Count lollipop = 0, spinning_top = 0, kite = 0, ufo = 0, chevron = 0;
  Count hourglass = 0, house = 0, crown = 0, envelope = 0, lamp = 0;
  Count arrowhead = 0, cradle = 0, complete5 = 0;

  for (int i = 0; i < n; ++i) {
    const Count ki = deg(i);
    const Count closed3 = w.w3(i, i);

    star += choose(ki, 4);
    if (ki > 3) cricket += closed3 * choose(ki - 2, 2);
    if (ki > 2) hourglass += choose(exact_div(closed3, 2, "triangles at node"), 2);

    Count neighbor_excess = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Count kj = deg(j);
      const Count w2ij = w.w2(i, j);
      const bool edge = g.adjacent(i, j);

      if (ki > 2) banner += choose(w2ij, 2) * (ki - 2);
      if (ki > 2 && kj > 2) ufo += choose(w2ij, 3);
      if (!edge) continue;

      // Ordered pairs (i, j)*: each edge is visited in both directions.
      neighbor_excess += kj - 1;
      if (ki > 2) arrow += choose(ki - 1, 2) * (kj - 1);
      if (ki > 3) stingray += choose(w2ij, 2) * (ki - 3);
      if (ki > 3 && kj > 3) chevron += choose(w2ij, 3);

      // Unordered edges (i, j) in E.
      if (i > j) continue;
      house += w.w3(i, j) * w2ij;
      if (ki > 2 && kj > 2) {
        bull += w2ij * (ki - 2) * (kj - 2);

        const std::vector<int> common = common_neighborhood(g, i, j);
        Count top_excess = 0;
        for (int r : common) {
          if (deg(r) >= 2) top_excess += deg(r) - 2;
        }
        spinning_top += (w2ij - 1) * top_excess;

        for (std::size_t s = 0; s < common.size(); ++s) {
          const int r = common[s];
          if (deg(r) <= 2) continue;
          for (std::size_t t = s + 1; t < common.size(); ++t) {
            const int q = common[t];
            if (deg(q) <= 2) continue;
            envelope += w.w2(r, q) - 2;
          }
        }
      }
    }
    lollipop += closed3 * neighbor_excess;

    if (ki > 3) {
      const NeighborhoodView view = neighborhood_subgraph(g, i);
      const SmallCountVector local = count_small_in(view.subgraph);
      kite += local[7] * (ki - 3);  // 4-cliques through i, times a spare edge
      crown += local[13];
      lamp += local[15];
      arrowhead += local[30];
      cradle += local[31];
      complete5 += local[63];
    }
  }

  const FourWalkSums four = four_walk_sums(w.w2);
  const Count trace5 = n == 0 ? Count(0) : w.w2.cwiseProduct(w.w3).sum();

  FiveCountVector out;
  out[75] = star;
  out[77] = arrow - 2 * tadpoles;
  out[79] = exact_div(cricket, 2, "crickets");
  out[86] = exact_div(four.off_diagonal, 2, "5-paths") - 2 * stars3 -
            9 * triangles - 3 * stars4 - 2 * paths4 - 2 * tadpoles;
  out[87] = bull - 2 * diamonds;
  out[94] = banner - 2 * diamonds;
  out[95] = stingray;
  out[117] = exact_div(lollipop, 2, "lollipops") - 6 * triangles -
             2 * tadpoles - 4 * diamonds;
  out[119] = spinning_top - 12 * cliques4;
  out[127] = kite;
  out[222] = exact_div(ufo, 2, "ufos");
  out[223] = exact_div(chevron, 2, "chevrons");
  out[235] = hourglass - 2 * diamonds;
  out[236] = exact_div(trace5 - 30 * triangles - 10 * tadpoles, 10, "5-circles");
  out[237] = house - 9 * triangles - 2 * tadpoles - 4 * diamonds;
  out[239] = crown;
  out[254] = envelope;
  out[255] = exact_div(lamp, 2, "lamps");
  out[507] = arrowhead;
  out[511] = exact_div(cradle, 3, "cat's cradles");
  out[1023] = exact_div(complete5, 5, "5-cliques");
  return out;
}

Count count_chevron_neighborhood(const Graph &g) {
  Count total = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(i) <= 3) continue;
    const NeighborhoodView view = neighborhood_subgraph(g, i);
    for (std::size_t t = 0; t < view.members.size(); ++t) {
      if (g.degree(view.members[t]) <= 3) continue;
      total += choose(view.subgraph.degree(static_cast<int>(t)), 3);
    }
  }
  return exact_div(total, 2, "chevrons (neighborhood form)");
}

Count five_path_formulation1(const Graph &g) {
  const int n = g.order();
  const WalkPowers w = walk_powers(g);
  const CountMatrix w4 = walk_table<Count>(g, 4).entries;
  Count total = 0;
  for (int i = 0; i < n; ++i) {
    const Count ki = g.degree(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      total += w4(i, j) - 2 * w.w2(i, j) * (g.degree(j) - w.a(i, j));
    }
    total -= (2 * ki - 1) * w.w3(i, i) + 6 * choose(ki, 3);
  }
  return exact_div(total, 2, "5-paths (formulation 1)");
}

Count five_path_formulation2(const Graph &g) {
  const SmallCountVector s = count_small(g);
  const Count all_walks4 =
      g.order() == 0 ? Count(0) : walk_table<Count>(g, 4).entries.sum();
  return exact_div(all_walks4, 2, "5-paths (formulation 2)") - g.size() -
         4 * s[3] - 9 * s[7] - 6 * s[11] - 2 * s[13] - 4 * s[15] - 4 * s[30];
}

Count five_path_formulation3(const Graph &g) {
  const SmallCountVector s = count_small(g);
  Count edge_sum = 0;
  for (const Edge &e : g.edges()) {
    edge_sum += Count(g.degree(e.u)) + g.degree(e.v) - 2;
  }
  return edge_sum - 3 * s[7] - 2 * s[15] - 4 * s[30];
}

Count count_m7919_six(const Graph &g) {
  Count total = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(i) <= 4) continue;
    total += count_five(neighborhood_subgraph(g, i).subgraph)[237];
  }
  return total;
}

Count count_m1182_six(const Graph &g) {
  const int n = g.order();
  const SmallCountVector small = count_small(g);
  const FiveCountVector five = count_five(g, small);
  const CountMatrix a = g.adjacency_as<Count>();
  const CountMatrix w2 = a * a;
  Count total = 0;
  for (int i = 0; i < n; ++i) {
    const Count ki = g.degree(i);
    if (ki <= 2) continue;
    for (int j = 0; j < n; ++j) {
      const Count kj = g.degree(j);
      if (j == i || kj <= 2) continue;
      total += choose(w2(i, j), 2) * (ki - 2) * (kj - 2);
    }
  }
  return exact_div(total, 2, "M1182 six-node graphlets") - small[31] -
         five[95] - 3 * five[222];
}

}  // namespace graphlet5
