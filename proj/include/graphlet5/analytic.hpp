//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_ANALYTIC_HPP_
#define GRAPHLET5_ANALYTIC_HPP_

#include "graphlet5/count.hpp"

namespace graphlet5 {

// Closed-form counts for special graph families. Each one has a general
// counterpart in count_five/walk_table on the generated graph.

/// Entries of g^k for the complete graph K_n: `diagonal` = (g^k)_ii and
/// `off_diagonal` = (g^k)_ij, i != j. Requires n >= 2, k >= 1.
struct CompleteWalks {
  Count diagonal;
  Count off_diagonal;
};

CompleteWalks complete_walks(int n, int k);

/// 5-paths in K_n: 60 * C(n, 5).
Count five_paths_complete(int n);

/// Bulls in the balanced complete N-partite graph with n_a nodes per group.
///
/// The closed form assumes every node has degree n - n_a > 2. When that
/// fails `degree_assumption_holds` is false and `value` is still the closed
/// form, which the caller should confirm with the general counter.
struct BullCount {
  Count value;
  bool degree_assumption_holds;
};

BullCount bulls_balanced_npartite(int groups, int group_size);

/// Spinning tops in the ring lattice (n, k). Piecewise in n: linear in n for
/// n >= 3k + 1, and a quartic in n for 2k + 1 <= n <= 3k.
/// Requires k >= 1 and n > 2k.
Count spinning_tops_ring_lattice(int n, int k);

}  // namespace graphlet5

#endif  // GRAPHLET5_ANALYTIC_HPP_
