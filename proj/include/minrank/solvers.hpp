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

#ifndef MINRANK_SOLVERS_HPP
#define MINRANK_SOLVERS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minrank/consistency.hpp"
#include "minrank/element_set.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/oracle.hpp"
#include "minrank/rational.hpp"

namespace minrank {

/// One augmentation step as seen by a trace consumer.
struct TraceRecord {
  std::string solver;
  int level = 0;        // |I| before the step
  std::string step;     // "flat", "direct", "path", "certificate"
  std::vector<Element> path;
  std::string cost;     // path cost, empty for cardinality steps
  std::int64_t queries = 0;  // oracle calls made by this step
  int guesses = 0;      // FPT guesses tried
};
using TraceSink = std::function<void(const TraceRecord&)>;

/// Prints one line per record: solver, level, step, path, cost, queries.
std::string format_trace(const TraceRecord& record);

struct SolveOptions {
  /// Work inside this subset of E (default: all of E).
  std::optional<ElementSet> ground;
  StarPairPolicy star_pair = first_star_pair;
  CnfOptions cnf;
  TraceSink trace;
  /// Check r_min(J) = |J| after each augmentation (one extra query).
  bool check_augmented = true;
};

/// Outcome of one augmentation: J with |J| = |I| + 1, or a certificate Z
/// with r_min(Z) + r_min(ground \ Z) = |I|.
struct SolveResult {
  enum class Step { kFlat, kDirect, kPath, kCertificate };
  Step step = Step::kFlat;
  bool augmented = false;
  ElementSet set;
  std::vector<Element> path;
  int guesses = 0;
};

/// Cardinality augmentation through the modified graph D^min[I; s*, t*].
SolveResult augment_min_rank(MinRankOracle& oracle, ElementSet independent,
                             const SolveOptions& options = {});

struct CardinalityResult {
  ElementSet independent;
  ElementSet certificate;
  std::int64_t queries = 0;
  int augmentations = 0;
};

/// Augments from the empty set until a certificate appears.
CardinalityResult max_cardinality(MinRankOracle& oracle, const SolveOptions& options = {});

/// Weighted augmentation through a 2-SAT almost consistent graph. Correct
/// when I is w-maximal among common independent sets of its size and the
/// instance has no circuit inclusion; on other instances it still runs and
/// the result should be audited.
SolveResult cheapest_path_augment(MinRankOracle& oracle, const WeightFn& w,
                                  ElementSet independent, const SolveOptions& options = {});

/// w-maximal sets of every size k = 0, 1, ..., r (index k).
struct LevelResult {
  std::vector<ElementSet> levels;
  ElementSet certificate;
  std::int64_t queries = 0;
  /// Guesses tried by the step starting at level k (index k), including the
  /// final step that returns the certificate; always 0 outside FPT.
  std::vector<int> guesses;
};

/// Per-size maxima under the promise that no circuit of one matroid lies
/// inside a circuit of the other.
LevelResult weighted_no_circuit_inclusion(MinRankOracle& oracle, const WeightFn& w,
                                          const SolveOptions& options = {});

/// One FPT augmentation step; guesses subsets of the elements of I with
/// suspicious incoming arcs on the side with fewer such elements. Throws
/// ContractViolation when that side has more than gamma elements.
SolveResult fpt_augment(MinRankOracle& oracle, const WeightFn& w, ElementSet independent,
                        int gamma, const SolveOptions& options = {});

/// Per-size maxima when one matroid has no circuit larger than gamma.
LevelResult weighted_fpt_circuit(MinRankOracle& oracle, const WeightFn& w, int gamma,
                                 const SolveOptions& options = {});

/// Largest-weight level of a per-size result.
ElementSet best_level(const LevelResult& result, const WeightFn& w);

/// Distinct weights in descending order and the class index of each
/// element (0 = heaviest).
struct WeightClasses {
  std::vector<Rational> values;
  std::vector<int> class_of;
};
WeightClasses weight_classes(const WeightFn& w, ElementSet ground);

/// Class-count vector of a set, heaviest class first.
std::vector<int> class_counts(const WeightClasses& classes, ElementSet set);

/// A lexicographically maximal common independent set.
ElementSet lexicographic_max(MinRankOracle& oracle, const WeightFn& w,
                             const SolveOptions& options = {});

struct ApproxResult {
  ElementSet set;
  Rational weight;
  /// Smallest ratio of consecutive distinct positive weights; 0 with fewer
  /// than two classes.
  Rational alpha;
  Rational guarantee;
};

/// Drops elements of weight <= 0, then takes a lexicographic maximum.
ApproxResult approx_max_weight(MinRankOracle& oracle, const WeightFn& w,
                               const SolveOptions& options = {});

/// Whether every even prefix ending in I and every even suffix starting in
/// I of the path keeps I common independent (one query each).
bool even_prefixes_independent(MinRankOracle& oracle, ElementSet independent,
                               const std::vector<Element>& path);

}  // namespace minrank

#endif  // MINRANK_SOLVERS_HPP
