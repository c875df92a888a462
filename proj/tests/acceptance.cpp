//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
// the first few mismatches of a failing criterion, and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "graphlet5/analytic.hpp"
#include "graphlet5/counts_five.hpp"
#include "graphlet5/counts_small.hpp"
#include "graphlet5/generators.hpp"
#include "graphlet5/induced.hpp"
#include "graphlet5/oracle.hpp"
#include "graphlet5/report.hpp"

namespace {

using namespace graphlet5;
using graphlet5::testing::oracle_corpus;

class Criterion {
 public:
  void expect(bool ok, const std::string &what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 10) problems_ << "    " << what << "\n";
  }

  void expect_eq(Count got, Count want, const std::string &what) {
    expect(got == want, what + ": got " + to_string(got) + ", want " + to_string(want));
  }

  void note(const std::string &text) { detail_ = text; }

  bool report(int number, const std::string &title, double seconds) const {
    std::cout << (failures_ == 0 ? "PASS" : "FAIL") << "  AC" << number << "  " << title
              << "  (" << checks_ << " checks";
    if (failures_ != 0) std::cout << ", " << failures_ << " failed";
    if (!detail_.empty()) std::cout << "; " << detail_;
    std::cout << "; " << std::fixed;
    std::cout.precision(1);
    std::cout << seconds << " s)\n" << problems_.str();
    std::cout.flush();
    return failures_ == 0;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string detail_;
  std::ostringstream problems_;
};

void oracle_equivalence(Criterion &c) {
  const auto &corpus = oracle_corpus();
  for (const auto &[name, g] : corpus) {
    const SmallCountVector small = count_small(g);
    const FiveCountVector five = count_five(g, small);
    for (GraphletId id : kSmallGraphlets) {
      c.expect_eq(small[id.code], oracle_noninduced(g, id), name + " " + id.key());
    }
    for (GraphletId id : kFiveGraphlets) {
      c.expect_eq(five[id.code], oracle_noninduced(g, id), name + " " + id.key());
    }
  }
  c.note(std::to_string(corpus.size()) + " graphs");
}

void induced_pipeline(Criterion &c) {
  for (const auto &[name, g] : oracle_corpus()) {
    const InducedCountVector formula = induced_from_noninduced(count_five(g));
    const InducedCountVector truth = oracle_induced(g);
    for (GraphletId id : kFiveGraphlets) {
      c.expect_eq(formula[id.code], truth[id.code], name + " induced " + id.key());
    }
  }
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> value(-1'000'000, 1'000'000);
  for (int trial = 0; trial < 1000; ++trial) {
    FiveCountVector y;
    for (int s = 0; s < 21; ++s) y.values(s) = value(rng);
    c.expect(induced_explicit(y) == induced_from_noninduced(y),
             "random vector " + std::to_string(trial) + ": explicit and solved forms differ");
  }
  c.note("corpus plus 1000 random vectors");
}

void inclusion_table(Criterion &c) {
  const InclusionMatrix &a = inclusion_matrix();
  for (GraphletId container : kFiveGraphlets) {
    const Graph host = graphlet_graph(container);
    for (GraphletId contained : kFiveGraphlets) {
      const Count want = contained == container ? 0 : a(contained.code, container.code);
      const Count got =
          contained == container ? 0 : oracle_noninduced(host, contained);
      c.expect_eq(got, want, contained.key() + " in " + container.key());
    }
  }
}

void paper_numbers(Criterion &c) {
  const Graph k20 = complete(20);
  const CompleteWalks closed = complete_walks(20, 4);
  const CountMatrix w4 = walk_table<Count>(k20, 4).entries;
  c.expect_eq(closed.diagonal, 6517, "K20 closed 4-walks, closed form");
  c.expect_eq(closed.off_diagonal, 6516, "K20 open 4-walks, closed form");
  c.expect_eq(w4(0, 0), 6517, "K20 closed 4-walks, walk table");
  c.expect_eq(w4(0, 1), 6516, "K20 open 4-walks, walk table");

  for (int n = 5; n <= 10; ++n) {
    c.expect_eq(count_five(complete(n))[86], five_paths_complete(n),
                "5-paths in K" + std::to_string(n));
    c.expect_eq(five_paths_complete(n), 60 * choose(n, 5),
                "60 C(n,5) at n=" + std::to_string(n));
  }

  const BullCount bulls = bulls_balanced_npartite(5, 3);
  c.expect_eq(bulls.value, 74520, "bulls (5,3), closed form");
  c.expect_eq(count_five(n_partite(5, 3))[87], 74520, "bulls (5,3), count_five");

  c.expect_eq(spinning_tops_ring_lattice(29, 10), 912108, "spinning tops (29,10), closed form");
  for (int n = 21; n <= 40; ++n) {
    const Count general = count_five(ring_lattice(n, 10))[119];
    if (n == 29) c.expect_eq(general, 912108, "spinning tops (29,10), count_five");
    c.expect_eq(spinning_tops_ring_lattice(n, 10), general,
                "spinning tops (" + std::to_string(n) + ",10)");
  }

  for (int n = 5; n <= 50; ++n) {
    const Graph g = path(n);
    const FiveCountVector five = count_five(g);
    const std::string at = " on path " + std::to_string(n);
    for (GraphletId id : kFiveGraphlets) {
      c.expect_eq(five[id.code], id.code == 86 ? n - 4 : 0, id.key() + at);
    }
    c.expect_eq(five_path_formulation1(g), n - 4, "formulation 1" + at);
    c.expect_eq(five_path_formulation3(g), 2 * n - 4, "formulation 3" + at);
    c.expect(five_path_formulation3(g) != five[86], "formulation 3 should diverge" + at);
  }

  for (const auto &[name, g] : oracle_corpus()) {
    const SmallCountVector small = count_small(g);
    const FiveCountVector five = count_five(g, small);
    c.expect_eq(walk_table<Count>(g, 5).trace(), 10 * five[236] + 10 * small[15] + 30 * small[7],
                "tr(g^5) decomposition on " + name);
  }
  c.note("walks, 5-paths, bulls, spinning tops, path family, tr(g^5)");
}

void null_model_consistency(Criterion &c) {
  const Graph input = erdos_renyi(60, 0.5, 60);
  const int replicates = 200;
  const std::uint64_t seed = 2026;

  LabeledGraph labeled{input, {}, {}};
  CountReport first = make_count_report(labeled, true);
  first.null_model = run_null_model(input, replicates, seed);
  double worst = 0.0;
  for (int s = 0; s < 21; ++s) {
    const auto ratio = null_ratio(*first.null_model, first.noninduced.values(s), s);
    const std::string key = kFiveGraphlets[s].key();
    c.expect(ratio.has_value(), key + ": null mean is zero");
    if (!ratio) continue;
    worst = std::max(worst, std::abs(*ratio - 1.0));
    c.expect(std::abs(*ratio - 1.0) <= 0.25, key + ": ratio " + std::to_string(*ratio));
  }

  CountReport second = make_count_report(labeled, true);
  second.null_model = run_null_model(input, replicates, seed);
  c.expect(to_json(first) == to_json(second), "JSON output differs between runs");
  c.expect(to_csv(first) == to_csv(second), "CSV output differs between runs");

  std::ostringstream detail;
  detail << "G(60,0.5), R=200, max |ratio-1| = " << worst;
  c.note(detail.str());
}

void six_node_extensions(Criterion &c) {
  int graphs = 0;
  for (const auto &[name, g] : oracle_corpus()) {
    if (g.order() > 10) continue;
    ++graphs;
    c.expect_eq(count_m7919_six(g), oracle_noninduced(g, GraphletId{6, 7919}),
                name + " M7919_6");
    c.expect_eq(count_m1182_six(g), oracle_noninduced(g, GraphletId{6, 1182}),
                name + " M1182_6");
  }
  c.note(std::to_string(graphs) + " graphs with n <= 10");
}

}  // namespace

int main() {
  struct Entry {
    int number;
    std::string title;
    std::function<void(Criterion &)> run;
  };
  const std::vector<Entry> criteria = {
      {1, "oracle equivalence of 3-, 4- and 5-node counts", oracle_equivalence},
      {2, "induced counts and explicit inverse", induced_pipeline},
      {3, "inclusion matrix regenerated by the oracle", inclusion_table},
      {4, "published values reproduced", paper_numbers},
      {5, "null-model self-consistency and determinism", null_model_consistency},
      {6, "six-node extensions match the oracle", six_node_extensions},
  };
  bool all = true;
  for (const Entry &e : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception &ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    all = c.report(e.number, e.title, elapsed.count()) && all;
  }
  return all ? 0 : 1;
}
