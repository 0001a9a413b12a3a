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

#ifndef MINRANK_EXCHANGE_GRAPH_HPP
#define MINRANK_EXCHANGE_GRAPH_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minrank/element_set.hpp"
#include "minrank/query_cache.hpp"

namespace minrank {

/// Directed bipartite graph over (E \ I, I) with sources S and sinks T.
///
/// Arcs leaving a vertex of I point into E \ I (first-matroid exchanges);
/// arcs leaving a vertex of E \ I point into I (second-matroid exchanges).
/// Each arc is either sure or suspicious; suspicious(v) is a subset of out(v).
struct ExchangeGraph {
  int n = 0;
  ElementSet ground;  // vertex set, a subset of {0, ..., n-1}
  ElementSet independent;
  ElementSet sources;
  ElementSet sinks;
  std::vector<ElementSet> out;
  std::vector<ElementSet> suspicious;

  ExchangeGraph() = default;
  ExchangeGraph(int n, ElementSet independent);
  ExchangeGraph(int n, ElementSet ground, ElementSet independent);

  ElementSet outside() const { return ground - independent; }

  bool has_arc(Element u, Element v) const {
    return out[static_cast<std::size_t>(u)].contains(v);
  }
  bool is_suspicious(Element u, Element v) const {
    return suspicious[static_cast<std::size_t>(u)].contains(v);
  }
  /// Adds u -> v. Throws PreconditionError unless exactly one endpoint is in I.
  void add_arc(Element u, Element v, bool is_suspicious_arc = false);
  void remove_arc(Element u, Element v);
  void mark_sure(Element u, Element v) { suspicious[static_cast<std::size_t>(u)].erase(v); }

  int arc_count() const;
  int suspicious_count() const;
  ElementSet in_neighbors(Element v) const;

  /// Same vertex sets, sources, sinks and arcs (labels ignored).
  bool same_arcs(const ExchangeGraph& other) const;
  /// Every arc of this graph is an arc of other.
  bool arcs_subset_of(const ExchangeGraph& other) const;
};

/// A probe pair: r_min(I+s) = r_min(I+t) = |I| and r_min(I+s+t) = |I|+1.
struct StarPair {
  Element s = -1;
  Element t = -1;
  friend bool operator==(const StarPair&, const StarPair&) = default;
};

/// The singleton and pair probes around a common independent set.
struct PairProbe {
  int base = 0;                      // |I|
  ElementSet addable;                // x with r_min(I + x) = |I| + 1
  std::vector<StarPair> star_pairs;  // every valid ordered pair, ascending
  bool pairs_probed = false;

  /// No single or double extension raises r_min: I is maximum, Z = E.
  bool flat() const { return addable.empty() && pairs_probed && star_pairs.empty(); }
};

/// Queries r_min(I + x) for all x outside I, then, when no x is addable or
/// when always_probe_pairs is set, r_min(I + s + t) for all pairs of
/// non-addable outside elements.
PairProbe probe_pairs(QueryCache& q, ElementSet independent, bool always_probe_pairs);

/// Chooses one star pair from the ascending list; returns an index.
using StarPairPolicy = std::function<std::size_t(const std::vector<StarPair>&)>;

/// The lexicographically smallest pair.
inline std::size_t first_star_pair(const std::vector<StarPair>&) { return 0; }

struct StarPairOutcome {
  enum class Kind { kFlat, kDirectAugment, kPair };
  Kind kind = Kind::kFlat;
  Element direct = -1;
  StarPair pair;
};

/// Singleton/pair probe in the cardinality order: the smallest addable
/// element if any; otherwise the lexicographically smallest star pair; kFlat
/// when every pair extension keeps r_min at |I|.
StarPairOutcome find_star_pair(MinRankOracle& oracle, ElementSet independent);

/// S* = {s : r_min(I+s+t*) = |I|+1} and T* = {t : r_min(I+s*+t) = |I|+1}.
struct ProbeSides {
  ElementSet sources;
  ElementSet sinks;
};
ProbeSides probe_sides(QueryCache& q, ElementSet independent, StarPair sp);

/// D^min[I; s*, t*]. Arcs touching S* or T*, or whose first-side test fails
/// at (y, t*) (mirror: (s*, y)), are sure; the rest are suspicious.
ExchangeGraph build_modified_graph(QueryCache& q, ElementSet independent, StarPair sp);

/// D^min[I]: intersects the probe-padded arc sets over every sink t in
/// T* \ S* (first side) and every source s in S* \ T* (second side), with
/// S*, T* fixed by sp. An arc (y, x) is sure when it touches S* or T*, or
/// when (y, t) is missing for some sink t; mirror for (x, y).
ExchangeGraph build_intersected_graph(QueryCache& q, ElementSet independent, StarPair sp);

/// Minimum-length S-T path, ties broken by the lexicographically smallest
/// vertex sequence. A vertex in S and T is a one-vertex path.
std::optional<std::vector<Element>> shortest_augmenting_path(const ExchangeGraph& g);

/// Vertices that can reach T. Throws PreconditionError when some source
/// reaches T.
ElementSet reachability_certificate(const ExchangeGraph& g);

/// Vertices that can reach T, without the no-path precondition.
ElementSet reaching_sinks(const ExchangeGraph& g);

/// Set of vertices on a path.
ElementSet path_set(const std::vector<Element>& path);

/// Graphviz text. Sure arcs are solid, suspicious arcs dashed, S and T
/// filled. names may be empty.
std::string to_dot(const ExchangeGraph& g, const std::vector<std::string>& names,
                   const std::string& title);

}  // namespace minrank

#endif  // MINRANK_EXCHANGE_GRAPH_HPP
