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

#include "minrank/hardness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "minrank/errors.hpp"

namespace minrank {

namespace {

using nlohmann::json;

std::size_t at(Element e) { return static_cast<std::size_t>(e); }

std::string vertex_name(const char* role, int i, int v) {
  return std::string(role) + std::to_string(i) + "[v" + std::to_string(v) + "]";
}

bool is_proper(const ColoredGraph& g, const std::vector<Color>& coloring) {
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return !(coloring[at(e.first)] == coloring[at(e.second)]);
  });
}

// The smallest `count` primes.
std::vector<long> first_primes(std::size_t count) {
  std::vector<long> primes;
  for (long candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

class ValueTable {
 public:
  explicit ValueTable(int base) : base_(base) {}

  void designate(ElementSet x, ElementSet y, int value) {
    const auto [it, inserted] = values_.emplace(key(x, y), value);
    if (!inserted && it->second != value) {
      throw ContractViolation("gadget designates " + x.to_string() + "|" + y.to_string() +
                              " twice with values " + std::to_string(it->second) + " and " +
                              std::to_string(value));
    }
    if (inserted) order_.emplace_back(x, y);
  }

  // Every subpair (X', Y') with nonempty sides, including (X, Y) itself.
  void designate_subpairs(ElementSet x, ElementSet y) {
    for_each_subset(x, [&](ElementSet xs) {
      for_each_subset(y, [&](ElementSet ys) {
        if (!xs.empty() && !ys.empty()) designate(xs, ys, base_ - ys.size());
      });
    });
  }

  std::optional<int> designated(ElementSet x, ElementSet y) const {
    const auto it = values_.find(key(x, y));
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::pair<ElementSet, ElementSet>>& order() const { return order_; }

 private:
  static std::pair<std::uint64_t, std::uint64_t> key(ElementSet x, ElementSet y) {
    return {x.bits(), y.bits()};
  }

  int base_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> values_;
  std::vector<std::pair<ElementSet, ElementSet>> order_;
};

// Arcs of one realization, before the matrices are filled in.
GadgetArcs choose_arcs(const GadgetLayout& layout,
                       const std::vector<Color>& coloring) {
  GadgetArcs arcs;
  const auto n = at(layout.n);
  arcs.a1.assign(n, std::vector<bool>(n, false));
  arcs.a2.assign(n, std::vector<bool>(n, false));
  for (Element x : layout.inner) {
    for (Element y : layout.independent) {
      arcs.a1[at(y)][at(x)] = true;
      arcs.a2[at(x)][at(y)] = true;
    }
  }
  auto set_pair = [&](Element x, Element y, bool forward, bool backward) {
    arcs.a2[at(x)][at(y)] = forward;
    arcs.a1[at(y)][at(x)] = backward;
  };

  for (std::size_t v = 0; v < layout.vertex.size(); ++v) {
    const auto& vg = layout.vertex[v];
    const Color c = coloring[v];
    for (int k = 1; k <= 2; ++k) {
      for (int l = 1; l <= 2; ++l) {
        const bool forward = k == c.i && l == c.j;
        const bool backward = k == 3 - c.i && l == 3 - c.j;
        set_pair(vg.x[at(k - 1)], vg.y[at(l - 1)], forward, backward);
      }
    }
  }

  arcs.orientation.resize(layout.edge.size());
  for (std::size_t e = 0; e < layout.edge.size(); ++e) {
    const auto& eg = layout.edge[e];
    const Color cu = coloring[at(eg.u)];
    const Color cw = coloring[at(eg.w)];
    for (int i = 1; i <= 2; ++i) {
      // A vertex colored (1,i) holds a(1,i) and cannot take a backward edge
      // arc in part i; a vertex colored (2,3-i) holds b(1,i) and cannot take
      // a forward one.
      const Color blocks_backward{1, i};
      const Color blocks_forward{2, 3 - i};
      const bool first_legal = !(cu == blocks_forward) && !(cw == blocks_backward);
      const bool second_legal = !(cw == blocks_forward) && !(cu == blocks_backward);
      const bool first = first_legal || !second_legal;
      arcs.orientation[e][at(i - 1)] = first;
      const auto& xs = eg.x[at(i - 1)];
      const Element y = eg.y[at(i - 1)];
      // The first orientation is (x^{e,u}, y^e) and (y^e, x^{e,w}).
      set_pair(xs[0], y, first, !first);
      set_pair(xs[1], y, !first, first);

      // The block pairs outside the vertex and edge arcs stay empty, so
      // pairs mixing two gadgets never see both directions.
      for (int side = 0; side < 2; ++side) {
        const auto& vg = layout.vertex[at(side == 0 ? eg.u : eg.w)];
        set_pair(xs[at(side)], vg.y[at(i - 1)], false, false);
        set_pair(vg.x[0], y, false, false);
      }
    }
  }
  return arcs;
}

GadgetInstance realize(const ColoredGraph& g, const std::vector<Color>& coloring) {
  GadgetLayout layout = gadget_layout(g);
  GadgetPrescriptions prescriptions = prescribe_gadget(layout);
  GadgetArcs arcs = choose_arcs(layout, coloring);

  std::vector<Element> rows = layout.independent.to_vector();
  rows.push_back(layout.s);
  rows.push_back(layout.t);
  std::vector<std::size_t> row_of(at(layout.n), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[at(rows[r])] = r;

  const auto n = at(layout.n);
  std::vector<std::vector<Rational>> z1(rows.size(), std::vector<Rational>(n, 0));
  std::vector<std::vector<Rational>> z2(rows.size(), std::vector<Rational>(n, 0));
  for (Element y : layout.independent) {
    z1[row_of[at(y)]][at(y)] = 1;
    z2[row_of[at(y)]][at(y)] = 1;
    z1[row_of[at(y)]][at(layout.t)] = 1;
    z2[row_of[at(y)]][at(layout.s)] = 1;
  }
  z1[row_of[at(layout.s)]][at(layout.s)] = 1;
  z2[row_of[at(layout.t)]][at(layout.t)] = 1;

  const auto primes = first_primes(static_cast<std::size_t>(layout.independent.size()) *
                                   static_cast<std::size_t>(layout.inner.size()));
  std::size_t k = 0;
  for (Element y : layout.independent) {
    for (Element x : layout.inner) {
      const long p = primes[k++];
      if (arcs.a1[at(y)][at(x)]) z1[row_of[at(y)]][at(x)] = p;
      if (arcs.a2[at(x)][at(y)]) z2[row_of[at(y)]][at(x)] = p;
    }
  }
  MatroidPair pair{Matroid::linear(z1, layout.n), Matroid::linear(z2, layout.n)};
  return GadgetInstance{g,
                        std::move(layout),
                        std::move(prescriptions),
                        std::move(arcs),
                        std::move(rows),
                        std::move(z1),
                        std::move(z2),
                        std::move(pair)};
}

BruteReport count_report(const std::string& quantity, std::size_t total, std::size_t matching,
                         std::vector<ElementSet> witnesses) {
  return make_report("gadget", quantity, std::to_string(total), std::to_string(matching),
                     std::move(witnesses));
}

int check_color_component(int value, const std::string& field) {
  if (value != 1 && value != 2) throw DataError(field + ": color components are 1 or 2");
  return value;
}

std::vector<Color> coloring_from_json(const json& value, const std::string& field) {
  if (!value.is_array()) throw DataError(field + ": expected an array of [i, j] pairs");
  std::vector<Color> coloring;
  for (std::size_t v = 0; v < value.size(); ++v) {
    const std::string f = field + "[" + std::to_string(v) + "]";
    const json& c = value[v];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer()) {
      throw DataError(f + ": expected [i, j]");
    }
    coloring.push_back(Color{check_color_component(c[0].get<int>(), f + "[0]"),
                             check_color_component(c[1].get<int>(), f + "[1]")});
  }
  return coloring;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_string(Color c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

GadgetLayout gadget_layout(const ColoredGraph& g) {
  if (g.vertices < 0) throw PreconditionError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, w] : g.edges) {
    if (u < 0 || w < 0 || u >= g.vertices || w >= g.vertices) {
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(w) +
                              "} leaves the vertex range");
    }
    if (u == w) throw PreconditionError("self loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, w), std::max(u, w)).second) {
      throw PreconditionError("repeated edge {" + std::to_string(u) + "," + std::to_string(w) +
                              "}");
    }
  }
  const long n = 4L * g.vertices + 6L * static_cast<long>(g.edges.size()) + 2;
  if (n > kMaxElements) {
    throw PreconditionError("gadget needs " + std::to_string(n) + " elements, more than " +
                            std::to_string(kMaxElements));
  }

  GadgetLayout layout;
  layout.n = static_cast<int>(n);
  layout.names.resize(at(layout.n));
  Element next = 0;
  for (int v = 0; v < g.vertices; ++v) {
    GadgetLayout::VertexGadget vg;
    for (int i = 0; i < 2; ++i) {
      vg.x[at(i)] = next;
      layout.names[at(next++)] = vertex_name("x", i + 1, v);
    }
    for (int i = 0; i < 2; ++i) {
      vg.y[at(i)] = next;
      layout.names[at(next++)] = vertex_name("y", i + 1, v);
    }
    layout.vertex.push_back(vg);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    GadgetLayout::EdgeGadget eg;
    eg.u = g.edges[e].first;
    eg.w = g.edges[e].second;
    const std::string tag = "[e" + std::to_string(e) + ",v";
    for (int i = 0; i < 2; ++i) {
      for (int side = 0; side < 2; ++side) {
        eg.x[at(i)][at(side)] = next;
        layout.names[at(next++)] = "x" + std::to_string(i + 1) + tag +
                                   std::to_string(side == 0 ? eg.u : eg.w) + "]";
      }
    }
    for (int i = 0; i < 2; ++i) {
      eg.y[at(i)] = next;
      layout.names[at(next++)] = "y" + std::to_string(i + 1) + "[e" + std::to_string(e) + "]";
    }
    layout.edge.push_back(eg);
  }
  layout.s = next;
  layout.names[at(next++)] = "s";
  layout.t = next;
  layout.names[at(next++)] = "t";

  for (const auto& vg : layout.vertex) {
    layout.independent |= ElementSet{vg.y[0], vg.y[1]};
    layout.inner |= ElementSet{vg.x[0], vg.x[1]};
  }
  for (const auto& eg : layout.edge) {
    layout.independent |= ElementSet{eg.y[0], eg.y[1]};
    layout.inner |= ElementSet{eg.x[0][0], eg.x[0][1], eg.x[1][0], eg.x[1][1]};
  }
  return layout;
}

GadgetPrescriptions prescribe_gadget(const GadgetLayout& layout, DefaultRule rule) {
  const ElementSet independent = layout.independent;
  const int base = independent.size();
  ValueTable table(base);

  for (const auto& vg : layout.vertex) {
    const ElementSet x{vg.x[0], vg.x[1]};
    const ElementSet y{vg.y[0], vg.y[1]};
    table.designate(x, y, base - 1);
    for_each_subset(x, [&](ElementSet xs) {
      for_each_subset(y, [&](ElementSet ys) {
        if (xs.empty() || ys.empty() || (xs == x && ys == y)) return;
        table.designate(xs, ys, base - ys.size());
      });
    });
  }
  for (const auto& eg : layout.edge) {
    for (int i = 0; i < 2; ++i) {
      const auto& xs = eg.x[at(i)];
      const ElementSet y = ElementSet::singleton(eg.y[at(i)]);
      table.designate(ElementSet{xs[0], xs[1]}, y, base);
      table.designate(ElementSet::singleton(xs[0]), y, base - 1);
      table.designate(ElementSet::singleton(xs[1]), y, base - 1);
      for (int side = 0; side < 2; ++side) {
        const auto& vg = layout.vertex[at(side == 0 ? eg.u : eg.w)];
        table.designate_subpairs(ElementSet{xs[at(side)], vg.x[0]},
                                 ElementSet{eg.y[at(i)], vg.y[at(i)]});
      }
    }
  }

  GadgetPrescriptions out;
  out.designated_pairs = table.order();
  out.le_values = LEObservations(independent, layout.inner);
  const auto shapes = le_pair_shapes(independent, layout.inner);
  std::map<std::pair<std::uint64_t, std::uint64_t>, int> values;
  auto value_of = [&](ElementSet x, ElementSet y) {
    return values.at({x.bits(), y.bits()});
  };
  auto has_double_exchange = [&](ElementSet x, ElementSet y) {
    for (Element a : x) {
      for (Element b : y) {
        if (value_of(ElementSet::singleton(a), ElementSet::singleton(b)) == base) return true;
      }
    }
    return false;
  };
  // Shapes come ordered by size, so every subpair is valued before its pair.
  auto ordered = shapes;
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    return l.first.size() + l.second.size() < r.first.size() + r.second.size();
  });
  for (const auto& [x, y] : ordered) {
    int value = 0;
    if (const auto fixed = table.designated(x, y)) {
      value = *fixed;
    } else if (x.size() == 1 && y.size() == 1) {
      value = base;
    } else if (rule == DefaultRule::kExchangeAware && !has_double_exchange(x, y)) {
      value = base - y.size();
    } else if (x.size() == 1 || y.size() == 1) {
      value = base - y.size() + 1;
    } else {
      bool tight = false;
      for (Element e : x | y) {
        const ElementSet xs = x - ElementSet::singleton(e);
        const ElementSet ys = y - ElementSet::singleton(e);
        if (rule == DefaultRule::kSizeOnly) {
          const auto sub = table.designated(xs, ys);
          tight = tight || (sub && *sub == base - ys.size());
        } else {
          tight = tight || value_of(xs, ys) == base - ys.size();
        }
      }
      value = tight ? base - 1 : base;
    }
    values.emplace(std::make_pair(x.bits(), y.bits()), value);
  }
  for (const auto& [x, y] : shapes) out.le_values.add(LEObservation{x, y, value_of(x, y)});

  const Element s = layout.s;
  const Element t = layout.t;
  out.probes.push_back({"I+s", independent.with(s), base});
  out.probes.push_back({"I+t", independent.with(t), base});
  out.probes.push_back({"I+s+t", independent.with(s).with(t), base + 1});
  for (Element y : independent) {
    out.probes.push_back({"I+s-y", independent.with(s).without(y), base});
    out.probes.push_back({"I+t-y", independent.with(t).without(y), base});
  }
  for (Element x : layout.inner) {
    for (Element y : independent) {
      out.probes.push_back({"I+s+x-y", independent.with(s).with(x).without(y), base});
      out.probes.push_back({"I+t+x-y", independent.with(t).with(x).without(y), base});
    }
  }
  return out;
}

GadgetInstance build_gadget(const ColoredGraph& g) {
  if (!g.coloring) throw PreconditionError("gadget construction needs a coloring");
  if (static_cast<int>(g.coloring->size()) != g.vertices) {
    throw PreconditionError("coloring has " + std::to_string(g.coloring->size()) +
                            " entries for " + std::to_string(g.vertices) + " vertices");
  }
  for (const auto& [u, w] : g.edges) {
    if (u >= 0 && w >= 0 && u < g.vertices && w < g.vertices &&
        (*g.coloring)[at(u)] == (*g.coloring)[at(w)]) {
      throw PreconditionError("coloring is improper on edge {" + std::to_string(u) + "," +
                              std::to_string(w) + "}");
    }
  }
  return realize(g, *g.coloring);
}

GadgetInstance realize_gadget(const ColoredGraph& g) {
  if (!g.coloring || static_cast<int>(g.coloring->size()) != g.vertices) {
    throw PreconditionError("gadget construction needs one color per vertex");
  }
  return realize(g, *g.coloring);
}

std::vector<BruteReport> verify_gadget(const GadgetInstance& gi) {
  std::vector<BruteReport> reports;
  const auto& layout = gi.layout;
  const auto& pair = gi.pair;
  const ElementSet independent = layout.independent;

  {
    std::size_t matching = 0;
    std::vector<ElementSet> witnesses;
    LEObservations actual(independent, layout.inner);
    for (const auto& obs : gi.prescriptions.le_values.pairs()) {
      const int value = pair.rmin((independent | obs.x) - obs.y);
      actual.add(LEObservation{obs.x, obs.y, value});
      if (value == obs.value) {
        ++matching;
      } else if (witnesses.size() < 4) {
        witnesses.push_back(obs.x);
        witnesses.push_back(obs.y);
      }
    }
    reports.push_back(count_report("LE-pair values match prescription",
                                   gi.prescriptions.le_values.pairs().size(), matching,
                                   std::move(witnesses)));
  }
  {
    std::size_t matching = 0;
    std::vector<ElementSet> witnesses;
    for (const auto& probe : gi.prescriptions.probes) {
      if (pair.rmin(probe.set) == probe.value) {
        ++matching;
      } else if (witnesses.size() < 4) {
        witnesses.push_back(probe.set);
      }
    }
    reports.push_back(count_report("source and sink values match prescription",
                                   gi.prescriptions.probes.size(), matching,
                                   std::move(witnesses)));
  }

  const ExchangeGraph truth = build_true_graph(pair, independent);
  reports.push_back(make_report("gadget", "true sources",
                                ElementSet::singleton(layout.s).to_string(),
                                truth.sources.to_string()));
  reports.push_back(make_report("gadget", "true sinks",
                                ElementSet::singleton(layout.t).to_string(),
                                truth.sinks.to_string()));
  reports.push_back(make_report(
      "gadget", "true graph consistent with prescription", "true",
      is_consistent_with_all(truth, gi.prescriptions.le_values) ? "true" : "false"));

  std::size_t checked = 0;
  std::size_t nonsingular = 0;
  std::vector<ElementSet> witnesses;
  const auto rows = independent.to_vector();
  const auto cols = layout.inner.to_vector();
  for (const auto* z : {&gi.z1, &gi.z2}) {
    for (std::size_t r1 = 0; r1 < rows.size(); ++r1) {
      for (std::size_t r2 = r1 + 1; r2 < rows.size(); ++r2) {
        for (std::size_t c1 = 0; c1 < cols.size(); ++c1) {
          for (std::size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
            const Rational& a = (*z)[r1][at(cols[c1])];
            const Rational& b = (*z)[r1][at(cols[c2])];
            const Rational& c = (*z)[r2][at(cols[c1])];
            const Rational& d = (*z)[r2][at(cols[c2])];
            if ((a == 0 || d == 0) && (b == 0 || c == 0)) continue;
            ++checked;
            if (a * d - b * c != 0) {
              ++nonsingular;
            } else if (witnesses.size() < 4) {
              witnesses.push_back(ElementSet{rows[r1], rows[r2], cols[c1], cols[c2]});
            }
          }
        }
      }
    }
  }
  reports.push_back(count_report("2x2 blocks with a full diagonal are nonsingular", checked,
                                 nonsingular, std::move(witnesses)));
  return reports;
}

Instance gadget_instance_file(const GadgetInstance& gi) {
  return Instance{gi.layout.n, gi.layout.names, std::nullopt, gi.pair};
}

ColoringEnumeration colorings_from_consistent_graphs(const GadgetLayout& layout,
                                                     const GadgetPrescriptions& prescriptions) {
  if (layout.vertex.size() > 4 || layout.edge.size() > 4) {
    throw PreconditionError("coloring enumeration supports at most 4 vertices and 4 edges");
  }
  const auto& obs = prescriptions.le_values;
  const int base = obs.base();

  // Arc states of an (x, y) pair.
  enum : int { kNone = 0, kForward = 1, kBackward = 2, kBoth = 3 };

  // A pair whose single exchange sits at |I| - 1 is free (it may not carry
  // both arcs); every other pair is forced to carry both.
  std::vector<std::pair<Element, Element>> free_pairs;
  for (Element x : layout.inner) {
    for (Element y : layout.independent) {
      if (obs.value(ElementSet::singleton(x), ElementSet::singleton(y)) < base) {
        free_pairs.emplace_back(x, y);
      }
    }
  }
  std::sort(free_pairs.begin(), free_pairs.end(), [](const auto& a, const auto& b) {
    const auto ka = std::make_pair(std::max(a.first, a.second), std::min(a.first, a.second));
    const auto kb = std::make_pair(std::max(b.first, b.second), std::min(b.first, b.second));
    return ka < kb;
  });
  std::unordered_map<int, int> position;
  for (std::size_t p = 0; p < free_pairs.size(); ++p) {
    position[free_pairs[p].first * kMaxElements + free_pairs[p].second] = static_cast<int>(p);
  }
  const Element vertex_end = 4 * static_cast<Element>(layout.vertex.size());
  std::size_t vertex_positions = 0;
  while (vertex_positions < free_pairs.size() &&
         std::max(free_pairs[vertex_positions].first, free_pairs[vertex_positions].second) <
             vertex_end) {
    ++vertex_positions;
  }

  struct Constraint {
    std::vector<int> vars;
    bool forced_forward = false;
    bool forced_backward = false;
    bool needs_both = false;
  };
  auto satisfied = [](const Constraint& c, const std::vector<int>& state) {
    bool forward = c.forced_forward;
    bool backward = c.forced_backward;
    for (int v : c.vars) {
      forward = forward || (state[at(v)] & kForward) != 0;
      backward = backward || (state[at(v)] & kBackward) != 0;
    }
    return c.needs_both == (forward && backward);
  };

  ColoringEnumeration out;
  std::vector<std::vector<Constraint>> attached(free_pairs.size());
  std::vector<int> state(free_pairs.size(), kNone);
  for (const auto& p : obs.pairs()) {
    if (p.x.size() + p.y.size() < 3) continue;
    Constraint c;
    c.needs_both = p.value >= base - p.y.size() + 1;
    int last = -1;
    for (Element x : p.x) {
      for (Element y : p.y) {
        const auto it = position.find(x * kMaxElements + y);
        if (it == position.end()) {
          c.forced_forward = c.forced_backward = true;
        } else {
          c.vars.push_back(it->second);
          last = std::max(last, it->second);
        }
      }
    }
    if (last < 0) {
      if (!satisfied(c, state)) return out;  // no consistent graph at all
      continue;
    }
    attached[at(last)].push_back(std::move(c));
  }

  auto fits = [&](std::size_t p) {
    return std::all_of(attached[p].begin(), attached[p].end(),
                       [&](const Constraint& c) { return satisfied(c, state); });
  };
  // First completion of positions [p, end), or false.
  std::function<bool(std::size_t)> extend = [&](std::size_t p) {
    if (p == free_pairs.size()) return true;
    for (int s : {kNone, kForward, kBackward}) {
      state[p] = s;
      if (fits(p) && extend(p + 1)) return true;
    }
    state[p] = kNone;
    return false;
  };

  auto graph_of_state = [&]() {
    ExchangeGraph g(layout.n, layout.independent | layout.inner, layout.independent);
    for (Element x : layout.inner) {
      for (Element y : layout.independent) {
        const auto it = position.find(x * kMaxElements + y);
        const int s = it == position.end() ? kBoth : state[at(it->second)];
        if ((s & kForward) != 0) g.add_arc(x, y);
        if ((s & kBackward) != 0) g.add_arc(y, x);
      }
    }
    return g;
  };

  std::set<std::vector<int>> colorings;
  std::function<void(std::size_t)> situations = [&](std::size_t p) {
    if (p == vertex_positions) {
      if (!extend(p)) return;
      if (!is_consistent_with_all(graph_of_state(), obs)) {
        throw ContractViolation("coloring enumeration produced an inconsistent graph");
      }
      ++out.vertex_situations;
      std::vector<int> coloring;
      for (const auto& vg : layout.vertex) {
        int found = -1;
        for (int index = 0; index < 4; ++index) {
          const Color c = Color::from_index(index);
          bool matches = true;
          for (int k = 1; k <= 2; ++k) {
            for (int l = 1; l <= 2; ++l) {
              const auto it = position.find(vg.x[at(k - 1)] * kMaxElements + vg.y[at(l - 1)]);
              const int s = it == position.end() ? kBoth : state[at(it->second)];
              int expected = kNone;
              if (k == c.i && l == c.j) expected = kForward;
              if (k == 3 - c.i && l == 3 - c.j) expected = kBackward;
              matches = matches && s == expected;
            }
          }
          if (matches) found = index;
        }
        if (found < 0) out.projection_is_color = false;
        coloring.push_back(found);
      }
      if (!colorings.insert(coloring).second) out.projection_is_color = false;
      return;
    }
    for (int s : {kNone, kForward, kBackward}) {
      state[p] = s;
      if (fits(p)) situations(p + 1);
    }
    state[p] = kNone;
  };
  situations(0);
  out.colorings.assign(colorings.begin(), colorings.end());
  return out;
}

std::vector<std::vector<int>> proper_colorings(const ColoredGraph& g) {
  if (g.vertices > 10) throw PreconditionError("proper coloring enumeration needs <= 10 vertices");
  std::vector<std::vector<int>> out;
  std::vector<Color> coloring(at(g.vertices));
  long total = 1;
  for (int v = 0; v < g.vertices; ++v) total *= 4;
  for (long code = 0; code < total; ++code) {
    std::vector<int> indices;
    long rest = code;
    for (int v = g.vertices - 1; v >= 0; --v) {
      coloring[at(v)] = Color::from_index(static_cast<int>(rest % 4));
      rest /= 4;
    }
    if (!is_proper(g, coloring)) continue;
    for (const Color& c : coloring) indices.push_back(c.index());
    out.push_back(std::move(indices));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColoredGraph parse_colored_graph(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DataError("graph: expected an object");
  ColoredGraph g;
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
    throw DataError("graph.vertices: expected an integer");
  }
  g.vertices = doc["vertices"].get<int>();
  if (g.vertices < 0) throw DataError("graph.vertices: must be nonnegative");
  const json edges = doc.value("edges", json::array());
  if (!edges.is_array()) throw DataError("graph.edges: expected an array");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string field = "graph.edges[" + std::to_string(e) + "]";
    const json& edge = edges[e];
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() ||
        !edge[1].is_number_integer()) {
      throw DataError(field + ": expected [u, w]");
    }
    const int u = edge[0].get<int>();
    const int w = edge[1].get<int>();
    if (u < 0 || w < 0 || u >= g.vertices || w >= g.vertices || u == w) {
      throw DataError(field + ": endpoints must be distinct vertices");
    }
    g.edges.emplace_back(u, w);
  }
  if (doc.contains("coloring")) {
    g.coloring = coloring_from_json(doc["coloring"], "graph.coloring");
    if (static_cast<int>(g.coloring->size()) != g.vertices) {
      throw DataError("graph.coloring: expected one color per vertex");
    }
  }
  return g;
}

std::vector<Color> parse_coloring(const std::string& text) {
  return coloring_from_json(parse_json(text), "coloring");
}

}  // namespace minrank
