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

#ifndef MINRANK_MATROID_HPP
#define MINRANK_MATROID_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minrank/element_set.hpp"
#include "minrank/rational.hpp"

namespace minrank {

struct UniformKind {
  int rank = 0;
};

struct PartitionKind {
  std::vector<std::vector<Element>> blocks;
  std::vector<int> capacities;
};

struct GraphicKind {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // edge e is column e
};

struct LinearKind {
  std::vector<std::vector<Rational>> matrix;  // rows x n
};

/// A family of independent sets, given either as every member or as its
/// maximal members (bases).
struct ExplicitKind {
  enum class Form { kIndependentSets, kBases };
  Form form = Form::kIndependentSets;
  std::vector<ElementSet> family;
};

using MatroidKind =
    std::variant<UniformKind, PartitionKind, GraphicKind, LinearKind, ExplicitKind>;

/// An immutable matroid on {0, ..., n-1}, consumed only through its rank
/// function.
///
/// Construction checks structure (block partitions, edge endpoints, matrix
/// shape) and throws DataError. Rank axioms and looplessness are checked by
/// validate(), so that malformed families can still be inspected.
class Matroid {
 public:
  Matroid(int n, MatroidKind kind);

  static Matroid uniform(int n, int rank);
  static Matroid partition(int n, std::vector<std::vector<Element>> blocks,
                           std::vector<int> capacities);
  static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);
  static Matroid linear(std::vector<std::vector<Rational>> matrix, int n);
  static Matroid explicit_family(int n, std::vector<ElementSet> family,
                                 ExplicitKind::Form form = ExplicitKind::Form::kIndependentSets);

  int ground_size() const { return n_; }
  ElementSet ground() const { return ElementSet::universe(n_); }
  const MatroidKind& kind() const { return *kind_; }
  std::string kind_name() const;

  /// r(X). Throws DomainError when X leaves the ground set.
  int rank(ElementSet x) const;

  bool is_independent(ElementSet x) const { return rank(x) == x.size(); }

  /// C(I, x) = { y in I : I + x - y independent }. Requires I independent,
  /// x outside I and I + x dependent; throws PreconditionError otherwise.
  ElementSet fundamental_circuit(ElementSet independent, Element x) const;

 private:
  int n_ = 0;
  std::shared_ptr<const MatroidKind> kind_;
  // Rank of every subset for small explicit matroids; empty otherwise.
  std::shared_ptr<const std::vector<unsigned char>> rank_table_;
  std::vector<int> block_of_;  // partition kind only
};

/// The hidden pair behind a minimum-rank oracle.
struct MatroidPair {
  Matroid first;
  Matroid second;

  int ground_size() const { return first.ground_size(); }
  int rmin(ElementSet x) const;
};

/// First violated axiom of validate(), with witness sets.
struct ValidationReport {
  bool ok = true;
  std::string axiom;
  std::string message;
  std::vector<ElementSet> witnesses;
};

/// Checks r(empty) = 0, unit increase and local submodularity (exhaustive
/// for n <= 12), looplessness, and for explicit families downward closure
/// and the exchange axiom (n <= 16).
ValidationReport validate(const Matroid& m);

}  // namespace minrank

#endif  // MINRANK_MATROID_HPP
