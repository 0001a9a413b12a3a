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

#ifndef MINRANK_VERIFY_HPP
#define MINRANK_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minrank/element_set.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/hidden.hpp"
#include "minrank/matroid.hpp"
#include "minrank/rational.hpp"
#include "minrank/solvers.hpp"

namespace minrank {

/// One brute-force cross-check: a named quantity, the brute value, the
/// solver value, and whether they agree exactly.
struct BruteReport {
  std::string instance;
  std::string quantity;
  std::string brute;
  std::string solver;
  bool agree = false;
  std::vector<ElementSet> witnesses;
};

BruteReport make_report(std::string instance, std::string quantity, std::string brute,
                        std::string solver, std::vector<ElementSet> witnesses = {});

/// "PASS|FAIL instance quantity brute=... solver=... witnesses=..."
std::string format_report(const BruteReport& report);

bool all_agree(const std::vector<BruteReport>& reports);

/// Calls fn on every common independent set, growing sets in increasing
/// element order (each set visited once).
void for_each_common_independent(const MatroidPair& pair,
                                 const std::function<void(ElementSet)>& fn);

struct MaxCommon {
  int size = 0;
  ElementSet witness;
};

/// Largest common independent set by enumeration. Requires n <= 20.
MaxCommon brute_max_common(const MatroidPair& pair);

struct DualMinimum {
  int value = 0;
  ElementSet argmin;
};

struct BruteDual {
  DualMinimum rank_sum;  // min over Z of r1(Z) + r2(E \ Z)
  DualMinimum min_rank;  // min over Z of rmin(Z) + rmin(E \ Z)
};

/// Both dual forms by enumeration over all Z. Throws ContractViolation when
/// they disagree with each other or with brute_max_common. Requires n <= 20.
BruteDual brute_dual(const MatroidPair& pair);

struct WMaximal {
  std::optional<Rational> weight;  // empty when no common independent set has size k
  std::vector<ElementSet> argmax;
};

/// Maximum weight over common independent sets of size exactly k, with every
/// maximizer. Requires n <= 16.
WMaximal brute_w_maximal(const MatroidPair& pair, const WeightFn& w, int k);

struct BruteLexmax {
  ElementSet set;
  std::vector<int> counts;  // heaviest class first
};

/// A common independent set maximizing the class-count vector
/// lexicographically (first maximizer in mask order). Requires n <= 16.
BruteLexmax brute_lexmax(const MatroidPair& pair, const WeightFn& w,
                         std::optional<ElementSet> ground = std::nullopt);

/// Maximum weight of any common independent set. Requires n <= 16.
Rational brute_max_weight(const MatroidPair& pair, const WeightFn& w);

/// Definition-level exchangeability graph of the hidden pair: S = {x : I+x
/// independent in the first matroid}, T likewise in the second, arcs (y, x)
/// when I-y+x is independent in the first and (x, y) when in the second.
/// Throws PreconditionError unless I is common independent.
ExchangeGraph build_true_graph(const MatroidPair& pair, ElementSet independent,
                               std::optional<ElementSet> ground = std::nullopt);

/// The pair with its matroids ordered so that the first matroid's sources
/// equal `sources`, or nullopt when neither order does.
std::optional<MatroidPair> align_pair(const MatroidPair& pair, ElementSet independent,
                                      ElementSet sources,
                                      std::optional<ElementSet> ground = std::nullopt);

/// Every minimum-length S-T path, as vertex sequences in ascending order.
std::vector<std::vector<Element>> all_shortest_paths(const ExchangeGraph& g);

/// Every simple directed cycle, each listed once starting at its smallest
/// vertex.
std::vector<std::vector<Element>> all_simple_cycles(const ExchangeGraph& g);

/// Every simple S-T path.
std::vector<std::vector<Element>> all_simple_paths(const ExchangeGraph& g);

/// Whether the arcs from `left` into `right` (both sets of equal size)
/// contain a perfect matching, and how many (capped at `cap`).
int count_perfect_matchings(const ExchangeGraph& g, ElementSet left, ElementSet right,
                            int cap = 2);

/// The vertex set of a cycle splits into disjoint cycles of g.
bool splits_into_cycles(const ExchangeGraph& g, ElementSet vertices);

/// The vertex set of a path from s to t splits into an s-t path and cycles
/// of g.
bool splits_into_path_and_cycles(const ExchangeGraph& g, ElementSet vertices, Element s,
                                 Element t);

/// Fault to inject into a graph audit, to confirm the checks can fail.
struct AuditFault {
  enum class Kind { kNone, kDropShortestPathArc };
  Kind kind = Kind::kNone;
};

struct AuditOptions {
  std::string instance;
  /// Enables the negative-cycle and cheapest-path checks.
  std::optional<WeightFn> weights;
  std::optional<ElementSet> ground;
  AuditFault fault;
  CnfOptions cnf;
};

/// Checks of the oracle-built graphs around I against the true graph.
struct GraphAudit {
  /// False when I has an addable element or is already maximum, so that no
  /// star pair exists and no graph is built.
  bool applicable = false;
  /// The requested fault was applied (needs an S-T path in the true graph).
  bool fault_injected = false;
  std::vector<BruteReport> reports;
  bool ok() const { return all_agree(reports); }
};

/// Builds the true, modified, intersected and almost consistent graphs at
/// I (the oracle ones through `oracle`, the true one through the hidden
/// pair) and checks containments, the shortcut property of fake arcs,
/// shortest-path preservation, consistency of the true graph, the almost
/// consistent rules, cycle and path splitting by matching enumeration and,
/// with weights, the absence of negative cycles and the vertex set of the
/// cheapest path. Requires n <= 10.
GraphAudit audit_graphs(MinRankOracle& oracle, ElementSet independent,
                        const AuditOptions& options = {});

/// Exchange matchings: for every J independent in a matroid with |J| = |I|,
/// its arcs contain a perfect matching between I \ J and J \ I; whenever
/// that matching is unique for a pair (X, Y), I - Y + X is independent.
/// Exhaustive; requires n <= 10.
std::vector<BruteReport> check_exchange_matchings(const MatroidPair& pair,
                                                  ElementSet independent,
                                                  const std::string& instance = "");

/// Minimal dependent sets, in mask order. Requires n <= 14.
std::vector<ElementSet> circuits(const Matroid& m);

/// Size of a largest circuit, 0 when the matroid is free.
int largest_circuit(const Matroid& m);

struct CircuitInclusion {
  /// No circuit of the second matroid lies inside a circuit of the first.
  bool second_in_first_free = true;
  /// No circuit of the first matroid lies inside a circuit of the second.
  bool first_in_second_free = true;
  std::vector<ElementSet> witnesses;
  bool promise_holds() const { return second_in_first_free || first_in_second_free; }
};

CircuitInclusion circuit_inclusion(const MatroidPair& pair);

/// The no-circuit-inclusion promise, in either orientation of the pair.
bool check_promise_no_circuit_inclusion(const MatroidPair& pair);

/// Full cross-check suite on one instance: cardinality (both dual forms),
/// per-size weights for the weighted solvers whose promise holds, lexmax
/// and the approximation bound, and graph audits along the way.
struct SuiteOptions {
  std::string instance;
  bool audit = true;
  int fpt_gamma_limit = 3;
};
std::vector<BruteReport> verify_instance(const MatroidPair& pair, const WeightFn& w,
                                         const SuiteOptions& options = {});

}  // namespace minrank

#endif  // MINRANK_VERIFY_HPP
