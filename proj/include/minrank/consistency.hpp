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

#ifndef MINRANK_CONSISTENCY_HPP
#define MINRANK_CONSISTENCY_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minrank/element_set.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/query_cache.hpp"

namespace minrank {

/// A local exchange pair (X, Y) with its observed r_min((I u X) \ Y).
struct LEObservation {
  ElementSet x;  // outside I, S and T; one or two elements
  ElementSet y;  // inside I; one or two elements
  int value = 0;
};

/// Every LE-pair around I, in a fixed order (X by size then mask, Y the same).
class LEObservations {
 public:
  LEObservations() = default;
  LEObservations(ElementSet independent, ElementSet inner);

  ElementSet independent() const { return independent_; }
  ElementSet inner() const { return inner_; }
  int base() const { return independent_.size(); }
  const std::vector<LEObservation>& pairs() const { return pairs_; }

  void add(LEObservation obs);
  /// Value for (X, Y), or nullopt if that pair was not observed.
  std::optional<int> find(ElementSet x, ElementSet y) const;
  /// Value for (X, Y); throws PreconditionError if missing.
  int value(ElementSet x, ElementSet y) const;

 private:
  ElementSet independent_;
  ElementSet inner_;
  std::vector<LEObservation> pairs_;
  std::unordered_map<ElementSet, std::size_t> index_;  // keyed by X | Y
};

/// All X subsets of `inner` and Y subsets of I with one or two elements each.
std::vector<std::pair<ElementSet, ElementSet>> le_pair_shapes(ElementSet independent,
                                                              ElementSet inner);

/// Observes every LE-pair with X inside E \ (I u S u T).
LEObservations observe_le_pairs(QueryCache& q, ElementSet independent, ElementSet sources,
                                ElementSet sinks);
/// Same, against an arbitrary rank table (prescribed values, tests).
LEObservations observe_le_pairs(const std::function<int(ElementSet)>& rmin, ElementSet ground,
                                ElementSet independent, ElementSet sources, ElementSet sinks);

/// |X| = |Y| = 2, value |I| - 1, and every proper subpair (X', Y') has value
/// |I| - |Y'|. Throws PreconditionError when a subpair is missing.
bool is_evil(const LEObservations& obs, const LEObservation& pair);

/// Literal 2v is variable v, 2v + 1 its negation.
using Literal = int;
inline Literal positive(int var) { return 2 * var; }
inline Literal negative(int var) { return 2 * var + 1; }
inline int var_of(Literal lit) { return lit / 2; }
inline bool is_negated(Literal lit) { return (lit & 1) != 0; }

struct Clause {
  Literal a;
  Literal b;  // equal to a for a unit clause
};

/// A clause operand: an arc variable, or a constant for sure arcs (true)
/// and for pairs missing from the intersected graph (false).
struct ArcTerm {
  enum class Kind { kFalse, kTrue, kVar };
  Kind kind = Kind::kFalse;
  Literal literal = 0;
  ArcTerm negated() const;
};

/// Two-literal CNF over the suspicious arcs of an intersected graph.
struct Cnf2 {
  std::vector<std::pair<Element, Element>> arcs;  // variable v is arcs[v]
  std::vector<Clause> clauses;
  /// A clause whose terms are all constant false was added.
  bool contradiction = false;

  int var_count() const { return static_cast<int>(arcs.size()); }

  /// Adds (a or b) after constant folding.
  void add(ArcTerm a, ArcTerm b);

  /// DIMACS text, variables numbered from 1 in arc order.
  std::string to_dimacs() const;
};

/// Variable numbering of the suspicious arcs of D^min[I]: ascending by
/// tail, then head.
class ArcVariables {
 public:
  explicit ArcVariables(const ExchangeGraph& dmin);
  ArcTerm term(Element u, Element v) const;
  const std::vector<std::pair<Element, Element>>& arcs() const { return arcs_; }
  std::optional<int> variable(Element u, Element v) const;

 private:
  const ExchangeGraph* dmin_;
  std::vector<std::pair<Element, Element>> arcs_;
  std::unordered_map<int, int> index_;
};

struct CnfOptions {
  /// Also emit the clauses that one-by-one pairs already imply.
  bool emit_subsumed = false;
};

/// The clause sets of every LE-pair: forcing or mutual-exclusion clauses
/// for single exchanges, covering or crossing exclusions for 1x2 and 2x1
/// pairs, crossing exclusions for 2x2 pairs at |I| - 2, and equivalences
/// a(i,j) <-> b(3-i,3-j) for evil pairs. Throws DataError when a value is
/// outside what rank axioms allow.
Cnf2 build_cnf(const LEObservations& obs, const ExchangeGraph& dmin,
               const CnfOptions& options = {});

/// Satisfying assignment, or nullopt. Satisfiability is decided by strongly
/// connected components of the implication graph; the assignment prefers
/// false for each variable in index order, keeping a choice whenever unit
/// propagation does not conflict.
std::optional<std::vector<bool>> solve_2sat(const Cnf2& cnf);

/// Whether an assignment satisfies every clause.
bool satisfies(const Cnf2& cnf, const std::vector<bool>& assignment);

/// Sure arcs plus the suspicious arcs set true. Kept arcs keep their label.
ExchangeGraph apply_assignment(const ExchangeGraph& dmin, const Cnf2& cnf,
                               const std::vector<bool>& assignment);

enum class Consistency { kConsistent, kOverestimatedOnly, kUnderestimatedOnly, kNeither };
std::string to_string(Consistency c);

/// Classifies g against one LE-pair: at value >= |I| - |Y| + 1 it needs an
/// arc Y -> X and an arc X -> Y; at |I| - |Y| it must miss one direction.
Consistency check_consistency(const ExchangeGraph& g, const LEObservation& obs, int base);

/// A violated requirement of an almost consistent graph.
struct ConsistencyViolation {
  std::string rule;
  LEObservation pair;
  std::pair<Element, Element> arc{-1, -1};
};

/// Sure arcs of dmin kept, no arc outside dmin, consistent on non-evil
/// pairs, underestimated on evil pairs, and no X-Y arcs on an evil pair it
/// is inconsistent with.
std::vector<ConsistencyViolation> audit_almost_consistent(const ExchangeGraph& g,
                                                          const ExchangeGraph& dmin,
                                                          const LEObservations& obs);

/// Consistent with every LE-pair (no evil exemption).
bool is_consistent_with_all(const ExchangeGraph& g, const LEObservations& obs);

/// The pipeline behind one weighted augmentation: intersected graph,
/// observations, CNF and the graph picked by the 2-SAT assignment.
struct AlmostConsistentBuild {
  ExchangeGraph dmin;
  LEObservations observations;
  Cnf2 cnf;
  std::vector<bool> assignment;
  ExchangeGraph graph;
};

/// Throws ContractViolation when the CNF is unsatisfiable.
AlmostConsistentBuild almost_consistent_graph(QueryCache& q, ElementSet independent,
                                              StarPair sp, const CnfOptions& options = {});

}  // namespace minrank

#endif  // MINRANK_CONSISTENCY_HPP
