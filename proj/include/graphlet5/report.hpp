//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_REPORT_HPP_
#define GRAPHLET5_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "graphlet5/counts_five.hpp"
#include "graphlet5/graph.hpp"
#include "graphlet5/graph_io.hpp"

namespace graphlet5 {

struct GraphSummary {
  int nodes = 0;
  std::int64_t edges = 0;
  std::optional<double> density;  // 2m / (n(n-1)), absent for n < 2
  IngestStats stats;
};

/// Per-slot results of counting R density-matched G(n, p) replicates.
struct NullModel {
  int replicates = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  Vector21 sums = Vector21::Zero();  // the mean of slot s is sums(s) / replicates
};

struct CountReport {
  GraphSummary graph;
  FiveCountVector noninduced;
  std::optional<InducedCountVector> induced;
  std::optional<NullModel> null_model;
};

class DensityUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

GraphSummary summarize(const Graph &g, const IngestStats &stats = {});

CountReport make_count_report(const LabeledGraph &input, bool with_induced);

/// Seed of replicate r, derived from the master seed with splitmix64.
std::uint64_t replicate_seed(std::uint64_t master, int replicate);

/// Counts R Erdős–Rényi graphs with the node count and density of g.
/// Throws DensityUndefined when g has fewer than two nodes.
NullModel run_null_model(const Graph &g, int replicates, std::uint64_t seed);

/// real / (sums / replicates) for one slot, absent when the null mean is 0.
std::optional<double> null_ratio(const NullModel &null_model, Count real, int slot);

std::string to_json(const CountReport &report);
std::string to_csv(const CountReport &report);

}  // namespace graphlet5

#endif  // GRAPHLET5_REPORT_HPP_
