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

#ifndef MINRANK_HARDNESS_HPP
#define MINRANK_HARDNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minrank/consistency.hpp"
#include "minrank/element_set.hpp"
#include "minrank/instance.hpp"
#include "minrank/matroid.hpp"
#include "minrank/rational.hpp"
#include "minrank/verify.hpp"

namespace minrank {

/// Colors are (i, j) with i, j in {1, 2}; index 2(i-1) + (j-1).
struct Color {
  int i = 1;
  int j = 1;
  int index() const { return 2 * (i - 1) + (j - 1); }
  static Color from_index(int index) { return Color{index / 2 + 1, index % 2 + 1}; }
  friend bool operator==(const Color&, const Color&) = default;
};

std::string to_string(Color c);

struct ColoredGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<Color>> coloring;
};

/// Element positions of the vertex and edge gadgets.
///
/// Vertex v owns x1, x2 (outside I) and y1, y2 (in I); edge e = {u, w} owns
/// x1^{e,u}, x1^{e,w}, x2^{e,u}, x2^{e,w} (outside I) and y1^e, y2^e (in I).
/// The source s and sink t come last.
struct GadgetLayout {
  struct VertexGadget {
    std::array<Element, 2> x{};
    std::array<Element, 2> y{};
  };
  struct EdgeGadget {
    int u = 0;
    int w = 0;
    /// x[i][0] belongs to u's side, x[i][1] to w's side (i = 0 for part 1).
    std::array<std::array<Element, 2>, 2> x{};
    std::array<Element, 2> y{};
  };
  int n = 0;
  std::vector<VertexGadget> vertex;
  std::vector<EdgeGadget> edge;
  Element s = -1;
  Element t = -1;
  ElementSet independent;
  ElementSet inner;  // outside I, S and T
  std::vector<std::string> names;
};

/// Throws PreconditionError on bad edges (self loops, repeats, out of
/// range) or when the gadgets need more than 64 elements.
GadgetLayout gadget_layout(const ColoredGraph& g);

/// A prescribed r_min value for a set outside the LE-pair family.
struct SetPrescription {
  std::string label;
  ElementSet set;
  int value = 0;
};

/// The prescribed LE-pair values (designated ones and the defaults) and the
/// source and sink prescriptions. Depends only on the layout.
struct GadgetPrescriptions {
  LEObservations le_values;
  /// The (X, Y) pairs whose value the construction fixes; the rest take
  /// default values.
  std::vector<std::pair<ElementSet, ElementSet>> designated_pairs;
  std::vector<SetPrescription> probes;
};

/// How LE-pairs outside the gadgets' designated subpairs get their values.
enum class DefaultRule {
  /// A pair containing some (x, y) with r_min(I + x - y) = |I| sits at
  /// |I| - |Y| + 1; a pair without one sits at |I| - |Y|. A 2x2 pair of the
  /// first kind drops to |I| - 1 when a three-element subpair sits at
  /// |I| - |Y'|.
  kExchangeAware,
  /// |I| - |Y| + 1 whenever |X| = 1 or |Y| = 1; 2x2 pairs at |I| - 1 when a
  /// designated three-element subpair sits at |I| - |Y'|, else |I|. Pairs
  /// that mix two gadgets then admit no consistent graph once an edge exists.
  kSizeOnly,
};

GadgetPrescriptions prescribe_gadget(const GadgetLayout& layout,
                                     DefaultRule rule = DefaultRule::kExchangeAware);

/// Arc selection of one consistent graph: a1[y][x] for (y, x), a2[x][y]
/// for (x, y), over all x outside I and y in I (s and t excluded).
struct GadgetArcs {
  std::vector<std::vector<bool>> a1;
  std::vector<std::vector<bool>> a2;
  /// Part i of edge e uses the first orientation, {(x^{e,u}, y^e), (y^e,
  /// x^{e,w})}, when orientation[e][i] is true.
  std::vector<std::array<bool, 2>> orientation;
};

struct GadgetInstance {
  ColoredGraph graph;
  GadgetLayout layout;
  GadgetPrescriptions prescriptions;
  GadgetArcs arcs;
  /// Rows are I in ascending order, then s, then t; columns are E.
  std::vector<Element> rows;
  std::vector<std::vector<Rational>> z1;
  std::vector<std::vector<Rational>> z2;
  MatroidPair pair;
};

/// Builds the gadget for a properly colored graph. Throws PreconditionError
/// when the coloring is missing or improper.
GadgetInstance build_gadget(const ColoredGraph& g);

/// Same construction without the properness check; an edge whose ends share
/// a color keeps the first orientation, so some prescription fails.
GadgetInstance realize_gadget(const ColoredGraph& g);

/// Exact-rank recomputation of every prescription, plus the unique source
/// and sink, consistency of the true graph with the prescribed values, and
/// nonsingularity of 2x2 blocks with a nonzero diagonal or antidiagonal.
std::vector<BruteReport> verify_gadget(const GadgetInstance& gi);

/// The gadget as a standard instance file with both matrices.
Instance gadget_instance_file(const GadgetInstance& gi);

struct ColoringEnumeration {
  /// Distinct vertex situations (arc sets on the vertex gadgets) that extend
  /// to a graph consistent with every prescribed LE-pair value.
  std::size_t vertex_situations = 0;
  /// Every situation reads as exactly one color per vertex.
  bool projection_is_color = true;
  /// Projected colorings, each a color index per vertex, sorted.
  std::vector<std::vector<int>> colorings;
};

/// Enumerates arc assignments consistent with the prescribed values (the
/// coloring of g is ignored) and projects them onto vertex colors. Requires
/// at most 4 vertices and 4 edges.
ColoringEnumeration colorings_from_consistent_graphs(const GadgetLayout& layout,
                                                     const GadgetPrescriptions& prescriptions);

/// Proper 4-colorings of g by enumeration, as color index vectors, sorted.
std::vector<std::vector<int>> proper_colorings(const ColoredGraph& g);

/// Reads a graph from JSON: {"vertices": 3, "edges": [[0,1],...]} with an
/// optional "coloring": [[1,1],[1,2],...]. Throws DataError.
ColoredGraph parse_colored_graph(const std::string& text);

/// Reads a coloring alone: [[1,1],[1,2],...]. Throws DataError.
std::vector<Color> parse_coloring(const std::string& text);

}  // namespace minrank

#endif  // MINRANK_HARDNESS_HPP
