//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace graphlet5 {
namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::int64_t parse_label(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, "expected a nonnegative integer node id, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

NodeLimitExceeded::NodeLimitExceeded(std::int64_t nodes, std::int64_t limit)
    : std::runtime_error("graph has at least " + std::to_string(nodes) +
                         " nodes, limit is " + std::to_string(limit)),
      nodes_(nodes),
      limit_(limit) {}

LabeledGraph from_edge_list(std::span<const LabelPair> pairs,
                            std::optional<std::int64_t> declared_nodes,
                            std::optional<std::int64_t> max_nodes) {
  const std::int64_t limit =
      max_nodes.value_or(std::numeric_limits<int>::max());
  if (declared_nodes && *declared_nodes > limit) {
    throw NodeLimitExceeded(*declared_nodes, limit);
  }
  std::vector<std::int64_t> labels;
  labels.reserve(2 * pairs.size());
  for (const auto &[u, v] : pairs) {
    if (u < 0 || v < 0) {
      throw std::invalid_argument("from_edge_list: negative node id");
    }
    labels.push_back(u);
    labels.push_back(v);
  }
  if (declared_nodes) {
    if (*declared_nodes < 0) {
      throw std::invalid_argument("from_edge_list: negative node count");
    }
    for (std::int64_t label = 0; label < *declared_nodes; ++label) {
      labels.push_back(label);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (static_cast<std::int64_t>(labels.size()) > limit) {
    throw NodeLimitExceeded(static_cast<std::int64_t>(labels.size()), limit);
  }

  const auto index_of = [&labels](std::int64_t label) {
    return static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };

  LabeledGraph result;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (const auto &[u, v] : pairs) {
    if (u == v) {
      ++result.stats.self_loops;
      continue;
    }
    const int a = index_of(std::min(u, v));
    const int b = index_of(std::max(u, v));
    if (!seen.emplace(a, b).second) {
      ++result.stats.duplicate_edges;
      continue;
    }
    edges.push_back({a, b});
  }
  result.graph = Graph(static_cast<int>(labels.size()), edges);
  result.labels = std::move(labels);
  return result;
}

LabeledGraph read_edge_list(std::istream &in,
                            std::optional<std::int64_t> max_nodes) {
  std::vector<LabelPair> pairs;
  std::vector<std::size_t> pair_lines;
  std::optional<std::int64_t> declared;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "nodes") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected 'nodes N'");
      }
      if (declared) {
        throw ParseError(line_no, "duplicate 'nodes' header");
      }
      declared = parse_label(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two node ids per line, found " +
                                    std::to_string(tokens.size()));
    }
    pairs.emplace_back(parse_label(tokens[0], line_no),
                       parse_label(tokens[1], line_no));
    pair_lines.push_back(line_no);
  }
  if (declared) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::int64_t largest = std::max(pairs[k].first, pairs[k].second);
      if (largest >= *declared) {
        throw ParseError(pair_lines[k], "node id " + std::to_string(largest) +
                                            " exceeds declared node count " +
                                            std::to_string(*declared));
      }
    }
  }
  return from_edge_list(pairs, declared, max_nodes);
}

LabeledGraph read_edge_list_file(const std::filesystem::path &path,
                                 std::optional<std::int64_t> max_nodes) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  return read_edge_list(in, max_nodes);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  const auto &deg = g.degrees();
  if (std::find(deg.begin(), deg.end(), 0) != deg.end()) {
    out << "nodes " << g.order() << '\n';
  }
  for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace graphlet5
