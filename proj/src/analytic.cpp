//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/analytic.hpp"

#include <stdexcept>

namespace graphlet5 {

CompleteWalks complete_walks(int n, int k) {
  if (n < 2) throw std::invalid_argument("complete_walks: requires n >= 2");
  if (k < 1) throw std::invalid_argument("complete_walks: requires k >= 1");
  const Count sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k
  // b_k = ((n-1)^k + (-1)^(k+1)) / n,  a_k = b_k + (-1)^k
  const Count off = exact_div(checked_pow(n - 1, k) - sign, n, "complete_walks");
  return {off + sign, off};
}

Count five_paths_complete(int n) {
  if (n < 0) throw std::invalid_argument("five_paths_complete: requires n >= 0");
  return 60 * choose(n, 5);
}

BullCount bulls_balanced_npartite(int groups, int group_size) {
  if (groups < 2) {
    throw std::invalid_argument("bulls_balanced_npartite: requires N >= 2");
  }
  if (group_size < 1) {
    throw std::invalid_argument("bulls_balanced_npartite: requires n_a >= 1");
  }
  const Count na = group_size;
  const Count others = Count(groups - 1) * na;  // degree of every node
  const Count value = 3 * choose(groups, 3) * na * na * na *
                      ((others - 2) * (others - 3) + na - 1);
  return {value, others > 2};
}

Count spinning_tops_ring_lattice(int n, int k) {
  if (k < 1) {
    throw std::invalid_argument("spinning_tops_ring_lattice: requires k >= 1");
  }
  if (n <= 2 * k) {
    throw std::invalid_argument("spinning_tops_ring_lattice: requires n > 2k");
  }
  const Count N = n;
  const Count K = k;
  const Count sparse_part = (K - 1) * K * (7 * (K - 1) * (K - 2) + 3);
  if (n >= 3 * k + 1) {
    return exact_div(2 * N * sparse_part, 3, "spinning tops, n >= 3k+1");
  }
  // Extra diamonds and 4-cliques once the two arcs of a neighborhood overlap.
  const Count overlap = (3 * K - N + 1) * (3 * K - N + 2) *
                        (9 * K * K - (2 * N + 21) * K + 5 * N + 3);
  return exact_div(2 * N * (overlap + sparse_part), 3,
                   "spinning tops, 2k+1 <= n <= 3k");
}

}  // namespace graphlet5
