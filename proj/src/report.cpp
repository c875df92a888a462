//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/report.hpp"

#include <limits>
#include <sstream>

#include "graphlet5/generators.hpp"
#include "graphlet5/induced.hpp"
#include "json.hpp"

namespace graphlet5 {
namespace {

using Json = nlohmann::ordered_json;

// Counts that do not fit in 64 bits are written as decimal strings.
Json count_json(Count value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

std::string count_text(Count value) { return to_string(value); }

std::string real_text(double value) { return Json(value).dump(); }

std::string optional_text(const std::optional<double> &value) {
  return value ? real_text(*value) : "NA";
}

Json optional_json(const std::optional<double> &value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename Tag>
Json vector_json(const FiveNodeVector<Tag> &v) {
  Json out = Json::object();
  for (GraphletId id : kFiveGraphlets) out[id.key()] = count_json(v[id.code]);
  return out;
}

double null_mean(const NullModel &null_model, int slot) {
  return static_cast<double>(static_cast<long double>(null_model.sums(slot)) /
                             null_model.replicates);
}

}  // namespace

GraphSummary summarize(const Graph &g, const IngestStats &stats) {
  GraphSummary s;
  s.nodes = g.order();
  s.edges = g.size();
  if (s.nodes >= 2) {
    s.density = 2.0 * static_cast<double>(s.edges) /
                (static_cast<double>(s.nodes) * (s.nodes - 1));
  }
  s.stats = stats;
  return s;
}

CountReport make_count_report(const LabeledGraph &input, bool with_induced) {
  CountReport report;
  report.graph = summarize(input.graph, input.stats);
  report.noninduced = count_five(input.graph);
  if (with_induced) report.induced = induced_from_noninduced(report.noninduced);
  return report;
}

std::uint64_t replicate_seed(std::uint64_t master, int replicate) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(replicate) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NullModel run_null_model(const Graph &g, int replicates, std::uint64_t seed) {
  if (g.order() < 2) {
    throw DensityUndefined("null model needs at least 2 nodes to define a density");
  }
  if (replicates < 1) throw std::invalid_argument("null model needs at least 1 replicate");
  NullModel out;
  out.replicates = replicates;
  out.seed = seed;
  out.p = *summarize(g).density;
  for (int r = 0; r < replicates; ++r) {
    const Graph sample = erdos_renyi(g.order(), out.p, replicate_seed(seed, r));
    out.sums += count_five(sample).values;
  }
  return out;
}

std::optional<double> null_ratio(const NullModel &null_model, Count real, int slot) {
  const Count sum = null_model.sums(slot);
  if (sum == 0) return std::nullopt;
  return static_cast<double>(static_cast<long double>(real) * null_model.replicates /
                             static_cast<long double>(sum));
}

std::string to_json(const CountReport &report) {
  Json out = Json::object();
  Json graph = Json::object();
  graph["n"] = report.graph.nodes;
  graph["m"] = report.graph.edges;
  graph["density"] = optional_json(report.graph.density);
  graph["duplicate_edges"] = report.graph.stats.duplicate_edges;
  graph["self_loops"] = report.graph.stats.self_loops;
  out["graph"] = graph;
  out["noninduced"] = vector_json(report.noninduced);
  out["induced"] = report.induced ? vector_json(*report.induced) : Json(nullptr);
  if (report.null_model) {
    const NullModel &nm = *report.null_model;
    Json null_json = Json::object();
    null_json["replicates"] = nm.replicates;
    null_json["seed"] = nm.seed;
    null_json["p"] = nm.p;
    Json slots = Json::object();
    for (int s = 0; s < 21; ++s) {
      const GraphletId id = kFiveGraphlets[s];
      Json slot = Json::object();
      slot["sum"] = count_json(nm.sums(s));
      slot["mean"] = null_mean(nm, s);
      slot["ratio"] = optional_json(null_ratio(nm, report.noninduced.values(s), s));
      slots[id.key()] = slot;
    }
    null_json["slots"] = slots;
    out["null_model"] = null_json;
  } else {
    out["null_model"] = nullptr;
  }
  return out.dump(2) + "\n";
}

std::string to_csv(const CountReport &report) {
  std::ostringstream out;
  out << "section,key,value\n";
  out << "graph,n," << report.graph.nodes << "\n";
  out << "graph,m," << report.graph.edges << "\n";
  out << "graph,density," << optional_text(report.graph.density) << "\n";
  out << "graph,duplicate_edges," << report.graph.stats.duplicate_edges << "\n";
  out << "graph,self_loops," << report.graph.stats.self_loops << "\n";
  for (GraphletId id : kFiveGraphlets) {
    out << "noninduced," << id.key() << "," << count_text(report.noninduced[id.code]) << "\n";
  }
  if (report.induced) {
    for (GraphletId id : kFiveGraphlets) {
      out << "induced," << id.key() << "," << count_text((*report.induced)[id.code]) << "\n";
    }
  }
  if (report.null_model) {
    const NullModel &nm = *report.null_model;
    out << "null_model,replicates," << nm.replicates << "\n";
    out << "null_model,seed," << nm.seed << "\n";
    out << "null_model,p," << real_text(nm.p) << "\n";
    for (int s = 0; s < 21; ++s) {
      const std::string key = kFiveGraphlets[s].key();
      out << "null_model," << key << ".sum," << count_text(nm.sums(s)) << "\n";
      out << "null_model," << key << ".mean," << real_text(null_mean(nm, s)) << "\n";
      out << "null_model," << key << ".ratio,"
          << optional_text(null_ratio(nm, report.noninduced.values(s), s)) << "\n";
    }
  }
  return out.str();
}

}  // namespace graphlet5
