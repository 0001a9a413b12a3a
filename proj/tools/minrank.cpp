// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minrank/errors.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/generators.hpp"
#include "minrank/hardness.hpp"
#include "minrank/instance.hpp"
#include "minrank/oracle.hpp"
#include "minrank/query_cache.hpp"
#include "minrank/solvers.hpp"
#include "minrank/verify.hpp"

namespace {

using namespace minrank;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

enum class Access { kOracleOnly, kHidden };

void log_access(Access access, const std::string& what) {
  std::cerr << "access: " << (access == Access::kOracleOnly ? "oracle-only" : "hidden") << " ("
            << what << ")\n";
}

std::string named_set(const Instance& instance, ElementSet set) {
  if (instance.names.empty()) return set.to_string();
  std::string out = "{";
  bool first = true;
  for (Element e : set) {
    if (!first) out += ',';
    out += instance.name(e);
    first = false;
  }
  return out + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::shared_ptr<const MatroidPair> shared_pair(const Instance& instance) {
  return std::make_shared<const MatroidPair>(instance.pair);
}

// solve subcommand

struct SolveArgs {
  std::string instance;
  std::string mode = "cardinality";
  std::string promise;
  int gamma = -1;
  bool trace = false;
};

int run_solve(const SolveArgs& args) {
  if (args.mode == "weighted" && args.promise != "no-circuit-inclusion") {
    std::cerr << "error: --mode weighted requires --promise no-circuit-inclusion\n";
    return kExitUsage;
  }
  if (args.mode == "fpt" && args.gamma < 0) {
    std::cerr << "error: --mode fpt requires --gamma K\n";
    return kExitUsage;
  }
  const Instance instance = load_instance(args.instance);
  const WeightFn w = instance.weights_or_ones();
  log_access(Access::kOracleOnly, "solve");
  MinRankOracle oracle(shared_pair(instance));

  SolveOptions options;
  if (args.trace) {
    options.trace = [](const TraceRecord& r) { std::cout << format_trace(r) << "\n"; };
  }

  std::cout << "mode " << args.mode << "\n";
  if (args.mode == "cardinality") {
    const CardinalityResult result = max_cardinality(oracle, options);
    std::cout << "size " << result.independent.size() << "\n"
              << "witness " << named_set(instance, result.independent) << "\n"
              << "dual " << named_set(instance, result.certificate) << "\n"
              << "queries " << result.queries << "\n";
    return kExitOk;
  }
  if (args.mode == "weighted" || args.mode == "fpt") {
    const LevelResult result = args.mode == "weighted"
                                   ? weighted_no_circuit_inclusion(oracle, w, options)
                                   : weighted_fpt_circuit(oracle, w, args.gamma, options);
    for (std::size_t k = 0; k < result.levels.size(); ++k) {
      std::cout << "level " << k << " weight "
                << format_rational(weight_of(w, result.levels[k])) << " set "
                << named_set(instance, result.levels[k]);
      if (args.mode == "fpt" && k > 0) std::cout << " guesses " << result.guesses[k - 1];
      std::cout << "\n";
    }
    const ElementSet best = best_level(result, w);
    std::cout << "size " << best.size() << "\n"
              << "weight " << format_rational(weight_of(w, best)) << "\n"
              << "witness " << named_set(instance, best) << "\n"
              << "dual " << named_set(instance, result.certificate) << "\n"
              << "queries " << result.queries << "\n";
    return kExitOk;
  }
  if (args.mode == "lexmax") {
    const ElementSet lex = lexicographic_max(oracle, w, options);
    const WeightClasses classes = weight_classes(w, oracle.ground());
    std::cout << "size " << lex.size() << "\n"
              << "weight " << format_rational(weight_of(w, lex)) << "\n"
              << "witness " << named_set(instance, lex) << "\n"
              << "class-counts";
    for (int c : class_counts(classes, lex)) std::cout << ' ' << c;
    std::cout << "\nqueries " << oracle.query_count() << "\n";
    return kExitOk;
  }
  if (args.mode == "approx") {
    const ApproxResult result = approx_max_weight(oracle, w, options);
    std::cout << "size " << result.set.size() << "\n"
              << "weight " << format_rational(result.weight) << "\n"
              << "witness " << named_set(instance, result.set) << "\n"
              << "alpha " << format_rational(result.alpha) << "\n"
              << "guarantee " << format_rational(result.guarantee) << "\n"
              << "queries " << oracle.query_count() << "\n";
    return kExitOk;
  }
  std::cerr << "error: unknown mode '" << args.mode << "'\n";
  return kExitUsage;
}

// verify subcommand

struct VerifyArgs {
  std::string instance;
  int random = 0;
  std::uint64_t seed = 1;
  int n = 8;
  std::vector<std::string> kinds;
  std::string weights = "positive";
  int jobs = 1;
  bool all_lines = false;
};

WeightStyle weight_style(const std::string& name) {
  if (name == "positive") return WeightStyle::kPositiveIntegers;
  if (name == "mixed") return WeightStyle::kMixedIntegers;
  if (name == "rational") return WeightStyle::kRationals;
  throw DataError("unknown weight style '" + name + "'");
}

int run_verify(const VerifyArgs& args) {
  struct Job {
    std::string id;
    Instance instance;
  };
  std::vector<Job> jobs;
  if (!args.instance.empty()) {
    jobs.push_back({args.instance, load_instance(args.instance)});
  } else {
    if (args.random <= 0) {
      std::cerr << "error: verify needs an instance file or --random N\n";
      return kExitUsage;
    }
    RandomSpec spec;
    spec.n = args.n;
    spec.weights = weight_style(args.weights);
    if (!args.kinds.empty()) {
      spec.kinds.clear();
      for (const auto& k : args.kinds) spec.kinds.push_back(kind_from_string(k));
    }
    Rng rng(args.seed);
    for (int i = 0; i < args.random; ++i) {
      jobs.push_back({"seed" + std::to_string(args.seed) + "#" + std::to_string(i),
                      random_instance(rng, spec)});
    }
  }
  log_access(Access::kHidden, "verify");

  auto check = [](const Job& job) {
    SuiteOptions options;
    options.instance = job.id;
    return verify_instance(job.instance.pair, job.instance.weights_or_ones(), options);
  };
  std::vector<std::vector<BruteReport>> results(jobs.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, args.jobs));
  for (std::size_t start = 0; start < jobs.size(); start += workers) {
    std::vector<std::future<std::vector<BruteReport>>> batch;
    for (std::size_t i = start; i < std::min(jobs.size(), start + workers); ++i) {
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 check, std::cref(jobs[i])));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }

  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t failed_instances = 0;
  for (const auto& reports : results) {
    bool instance_ok = true;
    for (const auto& r : reports) {
      ++checks;
      if (!r.agree) {
        ++failures;
        instance_ok = false;
      }
      if (!r.agree || args.all_lines || jobs.size() == 1) std::cout << format_report(r) << "\n";
    }
    if (!instance_ok) ++failed_instances;
  }
  std::cout << "summary instances=" << jobs.size() << " checks=" << checks
            << " failures=" << failures << " failed-instances=" << failed_instances << " "
            << (failures == 0 ? "ALL PASS" : "MISMATCH") << "\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

// graph subcommand

struct GraphArgs {
  std::string instance;
  std::string set = "{}";
  std::string which = "modified";
  std::string emit = "dot";
};

int run_graph(const GraphArgs& args) {
  if (args.emit != "dot") {
    std::cerr << "error: only --emit dot is supported\n";
    return kExitUsage;
  }
  const Instance instance = load_instance(args.instance);
  const ElementSet independent = parse_set(args.set, instance.n);
  const std::string title = args.which + " I=" + named_set(instance, independent);

  if (args.which == "true") {
    log_access(Access::kHidden, "graph --which true");
    std::cout << to_dot(build_true_graph(instance.pair, independent), instance.names, title);
    return kExitOk;
  }
  if (args.which != "modified" && args.which != "intersected" && args.which != "consistent") {
    std::cerr << "error: --which must be true, modified, intersected or consistent\n";
    return kExitUsage;
  }
  log_access(Access::kOracleOnly, "graph --which " + args.which);
  MinRankOracle oracle(shared_pair(instance));
  if (!oracle.is_common_independent(independent)) {
    std::cerr << "error: " << independent.to_string() << " is not common independent\n";
    return kExitUsage;
  }
  const StarPairOutcome outcome = find_star_pair(oracle, independent);
  if (outcome.kind == StarPairOutcome::Kind::kFlat) {
    std::cerr << "no star pair: I is a maximum common independent set\n";
    return kExitMismatch;
  }
  if (outcome.kind == StarPairOutcome::Kind::kDirectAugment) {
    std::cerr << "no star pair: element " << instance.name(outcome.direct)
              << " extends I directly\n";
    return kExitMismatch;
  }
  QueryCache cache(oracle);
  if (args.which == "modified") {
    std::cout << to_dot(build_modified_graph(cache, independent, outcome.pair), instance.names,
                        title);
  } else if (args.which == "intersected") {
    std::cout << to_dot(build_intersected_graph(cache, independent, outcome.pair),
                        instance.names, title);
  } else {
    const AlmostConsistentBuild build = almost_consistent_graph(cache, independent, outcome.pair);
    std::cout << to_dot(build.graph, instance.names, title);
  }
  std::cerr << "queries " << oracle.query_count() << "\n";
  return kExitOk;
}

// gadget subcommand

struct GadgetArgs {
  std::string graph;
  std::string coloring;
  std::string output;
  bool literal_defaults = false;
};

bool has_loop(const Matroid& m) {
  for (Element e = 0; e < m.ground_size(); ++e) {
    if (m.rank(ElementSet::singleton(e)) == 0) return true;
  }
  return false;
}

int run_gadget(const GadgetArgs& args) {
  ColoredGraph g = parse_colored_graph(read_file(args.graph));
  if (!args.coloring.empty()) g.coloring = parse_coloring(read_file(args.coloring));
  log_access(Access::kHidden, "gadget");

  const DefaultRule rule =
      args.literal_defaults ? DefaultRule::kSizeOnly : DefaultRule::kExchangeAware;
  if (!g.coloring) {
    const GadgetLayout layout = gadget_layout(g);
    const ColoringEnumeration found =
        colorings_from_consistent_graphs(layout, prescribe_gadget(layout, rule));
    const auto proper = proper_colorings(g);
    std::cout << "elements " << layout.n << "\n"
              << "vertex-situations " << found.vertex_situations << "\n"
              << "colorings " << found.colorings.size() << "\n"
              << "proper-colorings " << proper.size() << "\n";
    for (const auto& c : found.colorings) {
      std::cout << "coloring";
      for (int index : c) std::cout << ' ' << to_string(Color::from_index(index));
      std::cout << "\n";
    }
    const bool ok = found.projection_is_color && found.colorings == proper;
    std::cout << (ok ? "round-trip PASS" : "round-trip FAIL") << "\n";
    return ok ? kExitOk : kExitMismatch;
  }

  if (static_cast<int>(g.coloring->size()) != g.vertices) {
    throw DataError("coloring: expected one color per vertex");
  }
  const GadgetInstance gi = build_gadget(g);
  std::cout << "elements " << gi.layout.n << "\n"
            << "independent " << gi.layout.independent.size() << "\n"
            << "le-pairs " << gi.prescriptions.le_values.pairs().size() << "\n"
            << "designated " << gi.prescriptions.designated_pairs.size() << "\n";
  const auto reports = verify_gadget(gi);
  for (const auto& r : reports) std::cout << format_report(r) << "\n";
  if (!args.output.empty()) {
    save_instance(gadget_instance_file(gi), args.output);
    if (has_loop(gi.pair.first) || has_loop(gi.pair.second)) {
      std::cerr << "warning: gadget matroids have loops; loading the file needs validation "
                   "off\n";
    }
    std::cout << "wrote " << args.output << "\n";
  }
  return all_agree(reports) ? kExitOk : kExitMismatch;
}

// bench subcommand

struct BenchArgs {
  std::vector<int> sizes = {8, 16, 32, 48, 64};
  int trials = 3;
  std::uint64_t seed = 7;
  std::int64_t constant = 32;
  bool weighted = false;
  int weighted_max_n = 16;
};

int run_bench(const BenchArgs& args) {
  log_access(Access::kOracleOnly, "bench");
  Rng rng(args.seed);
  bool ok = true;
  double worst = 0;
  double worst_weighted = 0;
  std::cout << std::left << std::setw(10) << "mode" << std::setw(6) << "n" << std::setw(6)
            << "r" << std::setw(12) << "queries" << std::setw(14) << "envelope" << "ratio\n";
  for (int n : args.sizes) {
    for (int trial = 0; trial < args.trials; ++trial) {
      const Instance instance = random_partition_pair(rng, n);
      MinRankOracle oracle(shared_pair(instance));
      const CardinalityResult result = max_cardinality(oracle);
      const std::int64_t r = std::max(1, result.independent.size());
      const std::int64_t envelope = r * n * n;
      const double ratio = static_cast<double>(result.queries) / static_cast<double>(envelope);
      worst = std::max(worst, ratio);
      ok = ok && result.queries <= args.constant * envelope;
      std::cout << std::setw(10) << "card" << std::setw(6) << n << std::setw(6) << r
                << std::setw(12) << result.queries << std::setw(14) << "r*n^2" << std::fixed
                << std::setprecision(3) << ratio << "\n";

      if (args.weighted && n <= args.weighted_max_n) {
        const WeightFn w = random_weights(rng, n, WeightStyle::kPositiveIntegers);
        MinRankOracle weighted_oracle(shared_pair(instance));
        const LevelResult levels = weighted_no_circuit_inclusion(weighted_oracle, w);
        const std::int64_t wr = std::max<std::int64_t>(1, static_cast<std::int64_t>(levels.levels.size()) - 1);
        const std::int64_t wenvelope = wr * wr * wr * n * n;
        const double wratio =
            static_cast<double>(levels.queries) / static_cast<double>(wenvelope);
        worst_weighted = std::max(worst_weighted, wratio);
        ok = ok && levels.queries <= args.constant * wenvelope;
        std::cout << std::setw(10) << "weighted" << std::setw(6) << n << std::setw(6) << wr
                  << std::setw(12) << levels.queries << std::setw(14) << "r^3*n^2"
                  << std::fixed << std::setprecision(3) << wratio << "\n";
      }
    }
  }
  std::cout << "max-ratio card " << std::fixed << std::setprecision(3) << worst;
  if (args.weighted) std::cout << " weighted " << worst_weighted;
  std::cout << " C=" << args.constant << " " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid intersection under a minimum-rank oracle"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver on an instance file");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--mode", solve.mode, "Solver")
      ->check(CLI::IsMember({"cardinality", "weighted", "fpt", "lexmax", "approx"}));
  solve_cmd->add_option("--promise", solve.promise, "Structural promise for --mode weighted")
      ->check(CLI::IsMember({"no-circuit-inclusion"}));
  solve_cmd->add_option("--gamma", solve.gamma, "Circuit size bound for --mode fpt")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--trace", solve.trace, "Print one line per augmentation");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check solvers against brute force");
  verify_cmd->add_option("instance", verify.instance, "Instance JSON file");
  verify_cmd->add_option("--random", verify.random, "Number of seeded random instances");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--n", verify.n, "Ground set size of random instances")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--kinds", verify.kinds,
                         "Matroid kinds: uniform partition graphic linear explicit");
  verify_cmd->add_option("--weights", verify.weights, "positive, mixed or rational")
      ->check(CLI::IsMember({"positive", "mixed", "rational"}));
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--all", verify.all_lines, "Print passing checks too");

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "Emit an exchangeability graph");
  graph_cmd->add_option("instance", graph.instance, "Instance JSON file")->required();
  graph_cmd->add_option("--set", graph.set, "Common independent set: {0,3}, 0b1001 or 9");
  graph_cmd->add_option("--which", graph.which, "true, modified, intersected or consistent");
  graph_cmd->add_option("--emit", graph.emit, "Output format (dot)");

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Build or round-trip a coloring gadget");
  gadget_cmd->add_option("--graph", gadget.graph, "Graph JSON file")->required();
  gadget_cmd->add_option("--coloring", gadget.coloring, "Coloring JSON file");
  gadget_cmd->add_option("--output", gadget.output, "Write the gadget as an instance file");
  gadget_cmd->add_flag("--literal-defaults", gadget.literal_defaults,
                       "Value undesignated pairs by size alone");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Oracle-call counts against the envelopes");
  bench_cmd->add_option("--sizes", bench.sizes, "Ground set sizes")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Instances per size");
  bench_cmd->add_option("--seed", bench.seed, "Random seed");
  bench_cmd->add_option("--constant", bench.constant, "Envelope constant C");
  bench_cmd->add_flag("--weighted", bench.weighted, "Also run the weighted solver");
  bench_cmd->add_option("--weighted-max-n", bench.weighted_max_n,
                        "Largest n for weighted rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*graph_cmd) return run_graph(graph);
    if (*gadget_cmd) return run_gadget(gadget);
    if (*bench_cmd) return run_bench(bench);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
