//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_GRAPH_IO_HPP_
#define GRAPHLET5_GRAPH_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphlet5/graph.hpp"

namespace graphlet5 {

// Edge-list text format:
//
//   # comment
//   nodes 12        (optional; declares labels 0..11, isolated ones included)
//   0 1
//   1 2
//
// One edge per line as two whitespace-separated nonnegative integer labels.
// Labels are compacted to 0..n-1 in ascending order.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an input would produce more nodes than the caller allows.
/// Checked before the dense adjacency matrix is allocated.
class NodeLimitExceeded : public std::runtime_error {
 public:
  NodeLimitExceeded(std::int64_t nodes, std::int64_t limit);

  std::int64_t nodes() const { return nodes_; }
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t nodes_;
  std::int64_t limit_;
};

/// Input normalizations applied while building a simple graph.
struct IngestStats {
  std::int64_t duplicate_edges = 0;
  std::int64_t self_loops = 0;
};

struct LabeledGraph {
  Graph graph;
  std::vector<std::int64_t> labels;  // labels[t] is the input id of node t
  IngestStats stats;
};

using LabelPair = std::pair<std::int64_t, std::int64_t>;

/// Builds a simple graph from labeled pairs. Every label that appears
/// becomes a node, including labels that only occur in self-loops. With
/// `declared_nodes` = N, labels 0..N-1 are nodes as well.
/// Throws NodeLimitExceeded if the node count would exceed `max_nodes`.
LabeledGraph from_edge_list(std::span<const LabelPair> pairs,
                            std::optional<std::int64_t> declared_nodes = {},
                            std::optional<std::int64_t> max_nodes = {});

LabeledGraph read_edge_list(std::istream &in,
                            std::optional<std::int64_t> max_nodes = {});

/// Throws std::runtime_error if the file cannot be opened.
LabeledGraph read_edge_list_file(const std::filesystem::path &path,
                                 std::optional<std::int64_t> max_nodes = {});

/// Writes `g` in the edge-list format, one "u v" line per edge with u < v.
/// A "nodes n" header is emitted only when some node is isolated.
void write_edge_list(std::ostream &out, const Graph &g);

}  // namespace graphlet5

#endif  // GRAPHLET5_GRAPH_IO_HPP_
