//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_ORACLE_HPP_
#define GRAPHLET5_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "graphlet5/count.hpp"
#include "graphlet5/five_vector.hpp"
#include "graphlet5/graph.hpp"
#include "graphlet5/graphlet_id.hpp"

namespace graphlet5 {

/// Largest host graph the exhaustive oracle accepts.
inline constexpr int kOracleMaxNodes = 14;

class OracleSizeError : public std::length_error {
 public:
  OracleSizeError(int nodes, int limit);
};

struct CatalogEntry {
  GraphletId id;
  std::string_view name;
  Graph graph;
  std::int64_t automorphisms = 0;
};

/// The 8 small, 21 five-node and 2 six-node graphlets, in that order.
const std::vector<CatalogEntry> &graphlet_catalog();

const CatalogEntry &catalog_entry(GraphletId id);

/// Number of node permutations of h preserving adjacency (1 <= n <= 6).
std::int64_t automorphism_count(const Graph &h);

/// Injective maps of h into g that preserve every edge of h. Pattern nodes
/// are placed in breadth-first order from node 0 of h; host candidates are
/// tried in ascending order.
Count embedding_count(const Graph &g, const Graph &h);

/// Non-induced copies of h in g: embedding_count / |Aut(h)|.
Count oracle_noninduced(const Graph &g, const Graph &h);
Count oracle_noninduced(const Graph &g, GraphletId h);

/// Induced five-node counts by classifying every 5-subset of g, subsets
/// visited in lexicographic order.
InducedCountVector oracle_induced(const Graph &g);

}  // namespace graphlet5

#endif  // GRAPHLET5_ORACLE_HPP_
