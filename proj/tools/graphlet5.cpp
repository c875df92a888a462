//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphlet5/analytic.hpp"
#include "graphlet5/counts_five.hpp"
#include "graphlet5/counts_small.hpp"
#include "graphlet5/generators.hpp"
#include "graphlet5/graph_io.hpp"
#include "graphlet5/induced.hpp"
#include "graphlet5/oracle.hpp"
#include "graphlet5/report.hpp"

namespace {

using namespace graphlet5;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kGuardRefusal = 3,
  kSelftestFailed = 4,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
T parse_number(const std::string &text, const char *what) {
  T value{};
  const char *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return value;
}

void expect_params(const std::vector<std::string> &params, std::size_t count,
                   const std::string &usage) {
  if (params.size() != count) throw UsageError("expected: " + usage);
}

struct CountOptions {
  std::string input;
  std::string format = "json";
  bool induced = false;
  std::int64_t max_nodes = 2000;
};

void add_count_options(CLI::App *cmd, CountOptions &opts) {
  cmd->add_option("input", opts.input, "Edge-list file")->required();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--induced", opts.induced, "Also report induced counts");
  cmd->add_option("--max-nodes", opts.max_nodes, "Refuse larger graphs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void emit(const CountReport &report, const std::string &format) {
  std::cout << (format == "csv" ? to_csv(report) : to_json(report));
}

int run_count(const CountOptions &opts) {
  const LabeledGraph input = read_edge_list_file(opts.input, opts.max_nodes);
  emit(make_count_report(input, opts.induced), opts.format);
  return kOk;
}

int run_compare(const CountOptions &opts, int replicates, std::uint64_t seed) {
  const LabeledGraph input = read_edge_list_file(opts.input, opts.max_nodes);
  CountReport report = make_count_report(input, opts.induced);
  report.null_model = run_null_model(input.graph, replicates, seed);
  emit(report, opts.format);
  return kOk;
}

Graph generate(const std::string &family, const std::vector<std::string> &params) {
  const auto arg = [&params](std::size_t i) { return parse_number<int>(params[i], "parameter"); };
  if (family == "complete" || family == "path" || family == "cycle" || family == "star") {
    expect_params(params, 1, family + " N");
    const int n = arg(0);
    if (family == "complete") return complete(n);
    if (family == "path") return path(n);
    if (family == "cycle") return cycle(n);
    return star(n);
  }
  if (family == "ring") {
    expect_params(params, 2, "ring N K");
    return ring_lattice(arg(0), arg(1));
  }
  if (family == "npartite") {
    expect_params(params, 2, "npartite GROUPS GROUP_SIZE");
    return n_partite(arg(0), arg(1));
  }
  if (family == "multipartite") {
    if (params.empty()) throw UsageError("expected: multipartite SIZE...");
    std::vector<int> sizes;
    for (std::size_t i = 0; i < params.size(); ++i) sizes.push_back(arg(i));
    return n_partite(sizes);
  }
  if (family == "er") {
    expect_params(params, 3, "er N P SEED");
    return erdos_renyi(arg(0), parse_number<double>(params[1], "probability"),
                       parse_number<std::uint64_t>(params[2], "seed"));
  }
  throw UsageError("unknown family '" + family + "'");
}

int run_generate(const std::string &family, const std::vector<std::string> &params,
                 const std::string &output) {
  const Graph g = generate(family, params);
  if (output.empty() || output == "-") {
    write_edge_list(std::cout, g);
    return kOk;
  }
  std::ofstream file(output);
  if (!file) {
    std::cerr << "error: cannot write '" << output << "'\n";
    return kInputError;
  }
  write_edge_list(file, g);
  return kOk;
}

int run_analytic(const std::string &formula, const std::vector<std::string> &params) {
  const auto arg = [&params](std::size_t i) { return parse_number<int>(params[i], "parameter"); };
  if (formula == "walks") {
    expect_params(params, 2, "walks N K");
    const CompleteWalks w = complete_walks(arg(0), arg(1));
    std::cout << "a=" << to_string(w.diagonal) << " b=" << to_string(w.off_diagonal) << "\n";
  } else if (formula == "fivepaths") {
    expect_params(params, 1, "fivepaths N");
    std::cout << to_string(five_paths_complete(arg(0))) << "\n";
  } else if (formula == "bulls") {
    expect_params(params, 2, "bulls GROUPS GROUP_SIZE");
    const BullCount bulls = bulls_balanced_npartite(arg(0), arg(1));
    std::cout << to_string(bulls.value) << "\n";
    if (!bulls.degree_assumption_holds) {
      std::cerr << "warning: node degree (N-1)*n_a <= 2, the closed form is "
                   "outside its stated range\n";
    }
  } else if (formula == "spintops") {
    expect_params(params, 2, "spintops N K");
    std::cout << to_string(spinning_tops_ring_lattice(arg(0), arg(1))) << "\n";
  } else {
    throw UsageError("unknown formula '" + formula + "'");
  }
  return kOk;
}

std::vector<std::pair<std::string, Graph>> selftest_graphs() {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("complete 5", complete(5));
  out.emplace_back("complete 7", complete(7));
  out.emplace_back("path 7", path(7));
  out.emplace_back("cycle 6", cycle(6));
  out.emplace_back("star 7", star(7));
  out.emplace_back("ring 9 2", ring_lattice(9, 2));
  out.emplace_back("ring 10 3", ring_lattice(10, 3));
  out.emplace_back("npartite 3 3", n_partite(3, 3));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const double p = 0.2 + 0.1 * static_cast<double>(seed);
    out.emplace_back("er 10 p=" + std::to_string(p).substr(0, 3) + " seed " + std::to_string(seed),
                     erdos_renyi(10, p, seed));
  }
  return out;
}

int run_selftest() {
  int failures = 0;
  int checks = 0;
  const auto graphs = selftest_graphs();
  for (const auto &[name, g] : graphs) {
    const SmallCountVector small = count_small(g);
    const FiveCountVector five = count_five(g, small);
    const auto check = [&](const std::string &what, Count got, Count want) {
      ++checks;
      if (got == want) return;
      ++failures;
      std::cout << "FAIL " << name << " " << what << ": formula " << to_string(got)
                << ", oracle " << to_string(want) << "\n";
    };
    for (GraphletId id : kSmallGraphlets) check(id.key(), small[id.code], oracle_noninduced(g, id));
    for (GraphletId id : kFiveGraphlets) check(id.key(), five[id.code], oracle_noninduced(g, id));
    const InducedCountVector induced = induced_from_noninduced(five);
    const InducedCountVector truth = oracle_induced(g);
    for (GraphletId id : kFiveGraphlets) {
      check("induced " + id.key(), induced[id.code], truth[id.code]);
    }
  }
  std::cout << "selftest: " << graphs.size() << " graphs, " << checks << " checks, "
            << failures << " failures\n";
  return failures == 0 ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact counts of the connected five-node graphlets of a graph"};
  app.require_subcommand(1);

  CountOptions count_opts;
  CLI::App *count_cmd = app.add_subcommand("count", "Count graphlets in an edge list");
  add_count_options(count_cmd, count_opts);

  CountOptions compare_opts;
  int replicates = 100;
  std::uint64_t seed = 0;
  CLI::App *compare_cmd =
      app.add_subcommand("compare", "Compare counts with density-matched G(n,p) graphs");
  add_count_options(compare_cmd, compare_opts);
  compare_cmd->add_option("--replicates", replicates, "Number of random graphs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();

  std::string family;
  std::vector<std::string> gen_params;
  std::string gen_output;
  CLI::App *gen_cmd = app.add_subcommand(
      "gen", "Write a generated graph as an edge list "
             "(complete|path|cycle|star N, ring N K, npartite GROUPS SIZE, "
             "multipartite SIZE..., er N P SEED)");
  gen_cmd->add_option("family", family, "Graph family")->required();
  gen_cmd->add_option("params", gen_params, "Family parameters");
  gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

  std::string formula;
  std::vector<std::string> analytic_params;
  CLI::App *analytic_cmd = app.add_subcommand(
      "analytic", "Evaluate a closed form (walks N K, fivepaths N, bulls GROUPS SIZE, "
                  "spintops N K)");
  analytic_cmd->add_option("formula", formula, "Formula name")->required();
  analytic_cmd->add_option("params", analytic_params, "Formula parameters");

  CLI::App *selftest_cmd =
      app.add_subcommand("selftest", "Check the formulas against brute force on small graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_opts);
    if (compare_cmd->parsed()) return run_compare(compare_opts, replicates, seed);
    if (gen_cmd->parsed()) return run_generate(family, gen_params, gen_output);
    if (analytic_cmd->parsed()) return run_analytic(formula, analytic_params);
    if (selftest_cmd->parsed()) return run_selftest();
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NodeLimitExceeded &e) {
    std::cerr << "error: " << e.what() << " (raise --max-nodes to allow it)\n";
    return kGuardRefusal;
  } catch (const DensityUndefined &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardRefusal;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}
