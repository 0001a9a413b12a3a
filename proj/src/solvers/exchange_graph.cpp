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

#include "minrank/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "minrank/errors.hpp"

namespace minrank {

ExchangeGraph::ExchangeGraph(int n_, ElementSet independent_)
    : ExchangeGraph(n_, ElementSet::universe(n_), independent_) {}

ExchangeGraph::ExchangeGraph(int n_, ElementSet ground_, ElementSet independent_)
    : n(n_),
      ground(ground_),
      independent(independent_),
      out(static_cast<std::size_t>(n_)),
      suspicious(static_cast<std::size_t>(n_)) {}

void ExchangeGraph::add_arc(Element u, Element v, bool is_suspicious_arc) {
  if (u < 0 || u >= n || v < 0 || v >= n || !ground.contains(u) || !ground.contains(v) ||
      independent.contains(u) == independent.contains(v)) {
    throw PreconditionError("arc " + std::to_string(u) + "->" + std::to_string(v) +
                            " does not cross the bipartition");
  }
  out[static_cast<std::size_t>(u)].insert(v);
  if (is_suspicious_arc) {
    suspicious[static_cast<std::size_t>(u)].insert(v);
  } else {
    suspicious[static_cast<std::size_t>(u)].erase(v);
  }
}

void ExchangeGraph::remove_arc(Element u, Element v) {
  out[static_cast<std::size_t>(u)].erase(v);
  suspicious[static_cast<std::size_t>(u)].erase(v);
}

int ExchangeGraph::arc_count() const {
  int total = 0;
  for (ElementSet s : out) total += s.size();
  return total;
}

int ExchangeGraph::suspicious_count() const {
  int total = 0;
  for (ElementSet s : suspicious) total += s.size();
  return total;
}

ElementSet ExchangeGraph::in_neighbors(Element v) const {
  ElementSet result;
  for (Element u = 0; u < n; ++u) {
    if (has_arc(u, v)) result.insert(u);
  }
  return result;
}

bool ExchangeGraph::same_arcs(const ExchangeGraph& other) const {
  return n == other.n && ground == other.ground && independent == other.independent && sources == other.sources &&
         sinks == other.sinks && out == other.out;
}

bool ExchangeGraph::arcs_subset_of(const ExchangeGraph& other) const {
  if (n != other.n) return false;
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (!out[v].is_subset_of(other.out[v])) return false;
  }
  return true;
}

PairProbe probe_pairs(QueryCache& q, ElementSet independent, bool always_probe_pairs) {
  PairProbe probe;
  probe.base = independent.size();
  const ElementSet outside = q.ground() - independent;
  for (Element x : outside) {
    if (q.rmin(independent.with(x)) == probe.base + 1) probe.addable.insert(x);
  }
  if (!probe.addable.empty() && !always_probe_pairs) return probe;
  probe.pairs_probed = true;
  const ElementSet candidates = outside - probe.addable;
  std::vector<StarPair> unordered;
  for (Element s : candidates) {
    for (Element t : candidates) {
      if (t <= s) continue;
      if (q.rmin(independent.with(s).with(t)) == probe.base + 1) unordered.push_back({s, t});
    }
  }
  // Both orientations of each pair, in ascending (s, t) order.
  for (Element s : candidates) {
    for (const StarPair& p : unordered) {
      if (p.s == s) probe.star_pairs.push_back({s, p.t});
      if (p.t == s) probe.star_pairs.push_back({s, p.s});
    }
  }
  std::stable_sort(probe.star_pairs.begin(), probe.star_pairs.end(),
                   [](const StarPair& a, const StarPair& b) {
                     return a.s != b.s ? a.s < b.s : a.t < b.t;
                   });
  return probe;
}

StarPairOutcome find_star_pair(MinRankOracle& oracle, ElementSet independent) {
  QueryCache q(oracle);
  const PairProbe probe = probe_pairs(q, independent, false);
  StarPairOutcome outcome;
  if (!probe.addable.empty()) {
    outcome.kind = StarPairOutcome::Kind::kDirectAugment;
    outcome.direct = probe.addable.min();
  } else if (!probe.star_pairs.empty()) {
    outcome.kind = StarPairOutcome::Kind::kPair;
    outcome.pair = probe.star_pairs.front();
  }
  return outcome;
}

ProbeSides probe_sides(QueryCache& q, ElementSet independent, StarPair sp) {
  ProbeSides sides;
  const int base = independent.size();
  for (Element x : q.ground() - independent) {
    if (q.rmin(independent.with(x).with(sp.t)) == base + 1) sides.sources.insert(x);
    if (q.rmin(independent.with(sp.s).with(x)) == base + 1) sides.sinks.insert(x);
  }
  return sides;
}

namespace {

// The first two terms of each side: complete stars at S* (first side) and
// T* (second side), single-exchange tests elsewhere on S* and T*.
ExchangeGraph boundary_arcs(QueryCache& q, ElementSet independent, const ProbeSides& sides) {
  const int base = independent.size();
  ExchangeGraph g(q.ground_size(), q.ground(), independent);
  g.sources = sides.sources;
  g.sinks = sides.sinks;
  for (Element x : sides.sources | sides.sinks) {
    const bool both = sides.sources.contains(x) && sides.sinks.contains(x);
    for (Element y : independent) {
      const bool exchange = !both && q.rmin(independent.with(x).without(y)) == base;
      if (sides.sources.contains(x) || exchange) g.add_arc(y, x);
      if (sides.sinks.contains(x) || exchange) g.add_arc(x, y);
    }
  }
  return g;
}

// Arcs into the inner region are suspicious unless the probe star itself
// misses them.
void label_inner_arcs(ExchangeGraph& g, ElementSet probe_sinks, ElementSet probe_sources) {
  const ElementSet inner = g.outside() - g.sources - g.sinks;
  for (Element y : g.independent) {
    bool sink_star_complete = true;
    for (Element t : probe_sinks) sink_star_complete = sink_star_complete && g.has_arc(y, t);
    bool source_star_complete = true;
    for (Element s : probe_sources) source_star_complete = source_star_complete && g.has_arc(s, y);
    for (Element x : inner) {
      if (g.has_arc(y, x)) g.add_arc(y, x, sink_star_complete);
      if (g.has_arc(x, y)) g.add_arc(x, y, source_star_complete);
    }
  }
}

}  // namespace

ExchangeGraph build_modified_graph(QueryCache& q, ElementSet independent, StarPair sp) {
  const ProbeSides sides = probe_sides(q, independent, sp);
  ExchangeGraph g = boundary_arcs(q, independent, sides);
  const int base = independent.size();
  const ElementSet inner = g.outside() - sides.sources - sides.sinks;
  for (Element x : inner) {
    for (Element y : independent) {
      if (q.rmin(independent.with(sp.t).with(x).without(y)) == base) g.add_arc(y, x);
      if (q.rmin(independent.with(sp.s).with(x).without(y)) == base) g.add_arc(x, y);
    }
  }
  label_inner_arcs(g, ElementSet::singleton(sp.t), ElementSet::singleton(sp.s));
  return g;
}

ExchangeGraph build_intersected_graph(QueryCache& q, ElementSet independent, StarPair sp) {
  const ProbeSides sides = probe_sides(q, independent, sp);
  ExchangeGraph g = boundary_arcs(q, independent, sides);
  const int base = independent.size();
  const ElementSet inner = g.outside() - sides.sources - sides.sinks;
  const ElementSet pure_sinks = sides.sinks - sides.sources;
  const ElementSet pure_sources = sides.sources - sides.sinks;
  for (Element x : inner) {
    for (Element y : independent) {
      bool first = true;
      for (Element t : pure_sinks) {
        if (q.rmin(independent.with(t).with(x).without(y)) != base) {
          first = false;
          break;
        }
      }
      bool second = true;
      for (Element s : pure_sources) {
        if (q.rmin(independent.with(s).with(x).without(y)) != base) {
          second = false;
          break;
        }
      }
      if (first) g.add_arc(y, x);
      if (second) g.add_arc(x, y);
    }
  }
  label_inner_arcs(g, sides.sinks, sides.sources);
  return g;
}

namespace {

// dist[v] = arcs on a shortest v-T path, -1 when T is unreachable.
std::vector<int> distance_to_sinks(const ExchangeGraph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::vector<ElementSet> in(static_cast<std::size_t>(g.n));
  for (Element u = 0; u < g.n; ++u) {
    for (Element v : g.out[static_cast<std::size_t>(u)]) in[static_cast<std::size_t>(v)].insert(u);
  }
  std::deque<Element> queue;
  for (Element t : g.sinks) {
    dist[static_cast<std::size_t>(t)] = 0;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    for (Element u : in[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(u)] == -1) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::vector<Element>> shortest_augmenting_path(const ExchangeGraph& g) {
  const std::vector<int> dist = distance_to_sinks(g);
  Element start = -1;
  for (Element s : g.sources) {
    const int d = dist[static_cast<std::size_t>(s)];
    if (d >= 0 && (start == -1 || d < dist[static_cast<std::size_t>(start)])) start = s;
  }
  if (start == -1) return std::nullopt;
  std::vector<Element> path{start};
  Element v = start;
  while (dist[static_cast<std::size_t>(v)] > 0) {
    for (Element w : g.out[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

ElementSet reaching_sinks(const ExchangeGraph& g) {
  const std::vector<int> dist = distance_to_sinks(g);
  ElementSet z;
  for (Element v = 0; v < g.n; ++v) {
    if (dist[static_cast<std::size_t>(v)] >= 0) z.insert(v);
  }
  return z;
}

ElementSet reachability_certificate(const ExchangeGraph& g) {
  const ElementSet z = reaching_sinks(g);
  if (z.intersects(g.sources)) {
    throw PreconditionError("reachability_certificate: a source reaches the sinks");
  }
  return z;
}

ElementSet path_set(const std::vector<Element>& path) { return ElementSet::from_vector(path); }

std::string to_dot(const ExchangeGraph& g, const std::vector<std::string>& names,
                   const std::string& title) {
  auto label = [&](Element e) {
    return static_cast<std::size_t>(e) < names.size() ? names[static_cast<std::size_t>(e)]
                                                      : std::to_string(e);
  };
  std::ostringstream dot;
  dot << "digraph \"" << title << "\" {\n  rankdir=LR;\n";
  for (Element v = 0; v < g.n; ++v) {
    dot << "  v" << v << " [label=\"" << label(v) << "\"";
    if (g.independent.contains(v)) {
      dot << ", shape=box";
    } else {
      dot << ", shape=ellipse";
    }
    if (g.sources.contains(v) && g.sinks.contains(v)) {
      dot << ", style=filled, fillcolor=\"palegreen:lightblue\"";
    } else if (g.sources.contains(v)) {
      dot << ", style=filled, fillcolor=palegreen";
    } else if (g.sinks.contains(v)) {
      dot << ", style=filled, fillcolor=lightblue";
    }
    dot << "];\n";
  }
  for (Element u = 0; u < g.n; ++u) {
    for (Element v : g.out[static_cast<std::size_t>(u)]) {
      dot << "  v" << u << " -> v" << v;
      if (g.is_suspicious(u, v)) dot << " [style=dashed]";
      dot << ";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace minrank
