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

#include "minrank/consistency.hpp"

#include <algorithm>
#include <sstream>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

std::vector<ElementSet> small_subsets(ElementSet base) {
  std::vector<ElementSet> result;
  for (Element a : base) result.push_back(ElementSet::singleton(a));
  for (Element a : base) {
    for (Element b : base) {
      if (a < b) result.push_back(ElementSet{a, b});
    }
  }
  return result;
}

}  // namespace

LEObservations::LEObservations(ElementSet independent, ElementSet inner)
    : independent_(independent), inner_(inner) {}

void LEObservations::add(LEObservation obs) {
  index_[obs.x | obs.y] = pairs_.size();
  pairs_.push_back(obs);
}

std::optional<int> LEObservations::find(ElementSet x, ElementSet y) const {
  const auto it = index_.find(x | y);
  if (it == index_.end()) return std::nullopt;
  const LEObservation& obs = pairs_[it->second];
  if (obs.x != x || obs.y != y) return std::nullopt;
  return obs.value;
}

int LEObservations::value(ElementSet x, ElementSet y) const {
  const auto v = find(x, y);
  if (!v) {
    throw PreconditionError("LE-pair (" + x.to_string() + ", " + y.to_string() +
                            ") was not observed");
  }
  return *v;
}

std::vector<std::pair<ElementSet, ElementSet>> le_pair_shapes(ElementSet independent,
                                                              ElementSet inner) {
  std::vector<std::pair<ElementSet, ElementSet>> shapes;
  const auto xs = small_subsets(inner);
  const auto ys = small_subsets(independent);
  shapes.reserve(xs.size() * ys.size());
  for (ElementSet x : xs) {
    for (ElementSet y : ys) shapes.emplace_back(x, y);
  }
  return shapes;
}

LEObservations observe_le_pairs(const std::function<int(ElementSet)>& rmin, ElementSet ground,
                                ElementSet independent, ElementSet sources, ElementSet sinks) {
  const ElementSet inner = ground - independent - sources - sinks;
  LEObservations obs(independent, inner);
  for (auto [x, y] : le_pair_shapes(independent, inner)) {
    obs.add({x, y, rmin((independent | x) - y)});
  }
  return obs;
}

LEObservations observe_le_pairs(QueryCache& q, ElementSet independent, ElementSet sources,
                                ElementSet sinks) {
  return observe_le_pairs([&](ElementSet s) { return q.rmin(s); }, q.ground(), independent,
                        sources, sinks);
}

bool is_evil(const LEObservations& obs, const LEObservation& pair) {
  if (pair.x.size() != 2 || pair.y.size() != 2) return false;
  const int base = obs.base();
  if (pair.value != base - 1) return false;
  bool evil = true;
  for_each_subset(pair.x, [&](ElementSet xs) {
    if (xs.empty()) return;
    for_each_subset(pair.y, [&](ElementSet ys) {
      if (ys.empty() || (xs == pair.x && ys == pair.y)) return;
      if (obs.value(xs, ys) != base - ys.size()) evil = false;
    });
  });
  return evil;
}

ArcTerm ArcTerm::negated() const {
  switch (kind) {
    case Kind::kFalse:
      return {Kind::kTrue, 0};
    case Kind::kTrue:
      return {Kind::kFalse, 0};
    case Kind::kVar:
      break;
  }
  return {Kind::kVar, literal ^ 1};
}

void Cnf2::add(ArcTerm a, ArcTerm b) {
  using K = ArcTerm::Kind;
  if (a.kind == K::kTrue || b.kind == K::kTrue) return;
  if (a.kind == K::kFalse && b.kind == K::kFalse) {
    contradiction = true;
    return;
  }
  if (a.kind == K::kFalse) a = b;
  if (b.kind == K::kFalse) b = a;
  clauses.push_back({a.literal, b.literal});
}

std::string Cnf2::to_dimacs() const {
  std::ostringstream out;
  out << "c variables are suspicious arcs\n";
  for (std::size_t v = 0; v < arcs.size(); ++v) {
    out << "c " << v + 1 << " = " << arcs[v].first << "->" << arcs[v].second << "\n";
  }
  const std::size_t extra = contradiction ? 1 : 0;
  out << "p cnf " << arcs.size() << " " << clauses.size() + extra << "\n";
  auto lit = [](Literal l) { return (is_negated(l) ? -1 : 1) * (var_of(l) + 1); };
  for (const Clause& c : clauses) {
    if (c.a == c.b) {
      out << lit(c.a) << " 0\n";
    } else {
      out << lit(c.a) << " " << lit(c.b) << " 0\n";
    }
  }
  if (contradiction) out << "0\n";
  return out.str();
}

ArcVariables::ArcVariables(const ExchangeGraph& dmin) : dmin_(&dmin) {
  for (Element u = 0; u < dmin.n; ++u) {
    for (Element v : dmin.suspicious[static_cast<std::size_t>(u)]) {
      index_[u * kMaxElements + v] = static_cast<int>(arcs_.size());
      arcs_.emplace_back(u, v);
    }
  }
}

std::optional<int> ArcVariables::variable(Element u, Element v) const {
  const auto it = index_.find(u * kMaxElements + v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArcTerm ArcVariables::term(Element u, Element v) const {
  if (const auto var = variable(u, v)) return {ArcTerm::Kind::kVar, positive(*var)};
  if (dmin_->has_arc(u, v)) return {ArcTerm::Kind::kTrue, 0};
  return {ArcTerm::Kind::kFalse, 0};
}

Cnf2 build_cnf(const LEObservations& obs, const ExchangeGraph& dmin, const CnfOptions& options) {
  const ArcVariables vars(dmin);
  Cnf2 cnf;
  cnf.arcs = vars.arcs();
  const int base = obs.base();
  auto a = [&](Element x, Element y) { return vars.term(x, y); };  // x -> y
  auto b = [&](Element x, Element y) { return vars.term(y, x); };  // y -> x
  auto no = [](ArcTerm t) { return t.negated(); };

  for (const LEObservation& p : obs.pairs()) {
    const int lo = base - p.y.size();
    const int hi = lo + std::min(p.x.size(), p.y.size());
    if (p.value < lo || p.value > hi) {
      throw DataError("LE-pair (" + p.x.to_string() + ", " + p.y.to_string() + ") has value " +
                      std::to_string(p.value) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
    }
    const auto xs = p.x.to_vector();
    const auto ys = p.y.to_vector();
    if (xs.size() == 1 && ys.size() == 1) {
      const ArcTerm ta = a(xs[0], ys[0]);
      const ArcTerm tb = b(xs[0], ys[0]);
      if (p.value == base) {
        cnf.add(ta, tb);
        cnf.add(no(ta), tb);
        cnf.add(ta, no(tb));
      } else {
        cnf.add(no(ta), no(tb));
      }
    } else if (xs.size() == 1 || ys.size() == 1) {
      // a1, a2 and b1, b2 run over the two-element side.
      ArcTerm a1, a2, b1, b2;
      if (xs.size() == 1) {
        a1 = a(xs[0], ys[0]), a2 = a(xs[0], ys[1]);
        b1 = b(xs[0], ys[0]), b2 = b(xs[0], ys[1]);
      } else {
        a1 = a(xs[0], ys[0]), a2 = a(xs[1], ys[0]);
        b1 = b(xs[0], ys[0]), b2 = b(xs[1], ys[0]);
      }
      if (p.value == hi) {
        cnf.add(a1, a2);
        cnf.add(b1, b2);
      } else {
        cnf.add(no(a1), no(b2));
        cnf.add(no(a2), no(b1));
        if (options.emit_subsumed) {
          cnf.add(no(a1), no(b1));
          cnf.add(no(a2), no(b2));
        }
      }
    } else {
      // a(i,j) = (x_i, y_j), b(i,j) = (y_j, x_i); pair a(i,j) with b(3-i,3-j).
      auto aij = [&](int i, int j) { return a(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]); };
      auto bij = [&](int i, int j) { return b(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]); };
      if (p.value == base - 2) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) cnf.add(no(aij(i, j)), no(bij(1 - i, 1 - j)));
        }
      } else if (p.value == base - 1 && is_evil(obs, p)) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) cnf.add(no(aij(i, j)), bij(1 - i, 1 - j));
        }
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) cnf.add(aij(i, j), no(bij(1 - i, 1 - j)));
        }
      }
    }
  }
  return cnf;
}

namespace {

class TwoSat {
 public:
  explicit TwoSat(const Cnf2& cnf)
      : vars_(cnf.var_count()), implications_(static_cast<std::size_t>(2 * vars_)) {
    for (const Clause& c : cnf.clauses) {
      implications_[static_cast<std::size_t>(c.a ^ 1)].push_back(c.b);
      if (c.a != c.b) implications_[static_cast<std::size_t>(c.b ^ 1)].push_back(c.a);
    }
  }

  bool satisfiable() const {
    const std::vector<int> comp = components();
    for (int v = 0; v < vars_; ++v) {
      if (comp[static_cast<std::size_t>(positive(v))] == comp[static_cast<std::size_t>(negative(v))]) {
        return false;
      }
    }
    return true;
  }

  // Requires satisfiable().
  std::vector<bool> assignment() {
    value_.assign(static_cast<std::size_t>(vars_), -1);
    for (int v = 0; v < vars_; ++v) {
      if (value_[static_cast<std::size_t>(v)] != -1) continue;
      if (!propagate(negative(v))) {
        if (!propagate(positive(v))) {
          throw ContractViolation("2-SAT propagation failed on a satisfiable formula");
        }
      }
    }
    std::vector<bool> result(static_cast<std::size_t>(vars_));
    for (int v = 0; v < vars_; ++v) result[static_cast<std::size_t>(v)] = value_[static_cast<std::size_t>(v)] == 1;
    return result;
  }

 private:
  int literal_value(Literal l) const {
    const int v = value_[static_cast<std::size_t>(var_of(l))];
    if (v == -1) return -1;
    return is_negated(l) ? 1 - v : v;
  }

  // Sets lit true and everything it implies; undoes and returns false on
  // conflict.
  bool propagate(Literal lit) {
    std::vector<int> trail;
    std::vector<Literal> stack{lit};
    while (!stack.empty()) {
      const Literal l = stack.back();
      stack.pop_back();
      const int current = literal_value(l);
      if (current == 1) continue;
      if (current == 0) {
        for (int v : trail) value_[static_cast<std::size_t>(v)] = -1;
        return false;
      }
      value_[static_cast<std::size_t>(var_of(l))] = is_negated(l) ? 0 : 1;
      trail.push_back(var_of(l));
      for (Literal next : implications_[static_cast<std::size_t>(l)]) stack.push_back(next);
    }
    return true;
  }

  // Tarjan's algorithm with an explicit stack.
  std::vector<int> components() const {
    const int nodes = 2 * vars_;
    std::vector<int> index(static_cast<std::size_t>(nodes), -1);
    std::vector<int> low(static_cast<std::size_t>(nodes), 0);
    std::vector<int> comp(static_cast<std::size_t>(nodes), -1);
    std::vector<bool> on_stack(static_cast<std::size_t>(nodes), false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0;
    int comps = 0;
    for (int root = 0; root < nodes; ++root) {
      if (index[static_cast<std::size_t>(root)] != -1) continue;
      call.emplace_back(root, 0);
      while (!call.empty()) {
        auto& [v, edge] = call.back();
        const auto vi = static_cast<std::size_t>(v);
        if (edge == 0 && index[vi] == -1) {
          index[vi] = low[vi] = counter++;
          stack.push_back(v);
          on_stack[vi] = true;
        }
        const auto& succ = implications_[vi];
        if (edge < succ.size()) {
          const int w = succ[edge++];
          const auto wi = static_cast<std::size_t>(w);
          if (index[wi] == -1) {
            call.emplace_back(w, 0);
          } else if (on_stack[wi]) {
            low[vi] = std::min(low[vi], index[wi]);
          }
          continue;
        }
        if (low[vi] == index[vi]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            comp[static_cast<std::size_t>(w)] = comps;
          } while (w != v);
          ++comps;
        }
        const int finished = v;
        call.pop_back();
        if (!call.empty()) {
          const auto pi = static_cast<std::size_t>(call.back().first);
          low[pi] = std::min(low[pi], low[static_cast<std::size_t>(finished)]);
        }
      }
    }
    return comp;
  }

  int vars_;
  std::vector<std::vector<Literal>> implications_;
  std::vector<int> value_;
};

}  // namespace

std::optional<std::vector<bool>> solve_2sat(const Cnf2& cnf) {
  if (cnf.contradiction) return std::nullopt;
  TwoSat solver(cnf);
  if (!solver.satisfiable()) return std::nullopt;
  return solver.assignment();
}

bool satisfies(const Cnf2& cnf, const std::vector<bool>& assignment) {
  if (cnf.contradiction) return false;
  auto holds = [&](Literal l) {
    return assignment[static_cast<std::size_t>(var_of(l))] != is_negated(l);
  };
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(),
                     [&](const Clause& c) { return holds(c.a) || holds(c.b); });
}

ExchangeGraph apply_assignment(const ExchangeGraph& dmin, const Cnf2& cnf,
                               const std::vector<bool>& assignment) {
  ExchangeGraph g = dmin;
  for (std::size_t v = 0; v < cnf.arcs.size(); ++v) {
    if (!assignment[v]) g.remove_arc(cnf.arcs[v].first, cnf.arcs[v].second);
  }
  return g;
}

std::string to_string(Consistency c) {
  switch (c) {
    case Consistency::kConsistent:
      return "consistent";
    case Consistency::kOverestimatedOnly:
      return "overestimated-only";
    case Consistency::kUnderestimatedOnly:
      return "underestimated-only";
    case Consistency::kNeither:
      return "neither";
  }
  return "neither";
}

namespace {

struct CrossArcs {
  bool first = false;   // some y -> x
  bool second = false;  // some x -> y
};

CrossArcs cross_arcs(const ExchangeGraph& g, ElementSet x, ElementSet y) {
  CrossArcs c;
  for (Element yy : y) c.first = c.first || g.out[static_cast<std::size_t>(yy)].intersects(x);
  for (Element xx : x) c.second = c.second || g.out[static_cast<std::size_t>(xx)].intersects(y);
  return c;
}

}  // namespace

Consistency check_consistency(const ExchangeGraph& g, const LEObservation& obs, int base) {
  const CrossArcs c = cross_arcs(g, obs.x, obs.y);
  if (obs.value >= base - obs.y.size() + 1) {
    // Needs both directions; only adding arcs can repair.
    return c.first && c.second ? Consistency::kConsistent : Consistency::kUnderestimatedOnly;
  }
  // Needs a missing direction; only removing arcs can repair.
  return c.first && c.second ? Consistency::kOverestimatedOnly : Consistency::kConsistent;
}

std::vector<ConsistencyViolation> audit_almost_consistent(const ExchangeGraph& g,
                                                          const ExchangeGraph& dmin,
                                                          const LEObservations& obs) {
  std::vector<ConsistencyViolation> violations;
  for (Element u = 0; u < g.n; ++u) {
    for (Element v : dmin.out[static_cast<std::size_t>(u)]) {
      if (!dmin.is_suspicious(u, v) && !g.has_arc(u, v)) {
        violations.push_back({"sure arc dropped", {}, {u, v}});
      }
    }
    for (Element v : g.out[static_cast<std::size_t>(u)]) {
      if (!dmin.has_arc(u, v)) violations.push_back({"arc outside D^min", {}, {u, v}});
    }
  }
  const int base = obs.base();
  for (const LEObservation& p : obs.pairs()) {
    const Consistency c = check_consistency(g, p, base);
    if (c == Consistency::kConsistent) continue;
    if (!is_evil(obs, p)) {
      violations.push_back({"non-evil pair " + to_string(c), p, {}});
      continue;
    }
    if (c != Consistency::kUnderestimatedOnly) {
      violations.push_back({"evil pair not underestimated", p, {}});
    }
    const CrossArcs arcs = cross_arcs(g, p.x, p.y);
    if (arcs.first || arcs.second) {
      violations.push_back({"inconsistent evil pair keeps X-Y arcs", p, {}});
    }
  }
  return violations;
}

bool is_consistent_with_all(const ExchangeGraph& g, const LEObservations& obs) {
  const int base = obs.base();
  return std::all_of(obs.pairs().begin(), obs.pairs().end(), [&](const LEObservation& p) {
    return check_consistency(g, p, base) == Consistency::kConsistent;
  });
}

AlmostConsistentBuild almost_consistent_graph(QueryCache& q, ElementSet independent,
                                              StarPair sp, const CnfOptions& options) {
  AlmostConsistentBuild build;
  build.dmin = build_intersected_graph(q, independent, sp);
  build.observations =
      observe_le_pairs(q, independent, build.dmin.sources, build.dmin.sinks);
  build.cnf = build_cnf(build.observations, build.dmin, options);
  auto assignment = solve_2sat(build.cnf);
  if (!assignment) {
    throw ContractViolation("consistency CNF is unsatisfiable at I = " +
                            independent.to_string());
  }
  build.assignment = std::move(*assignment);
  build.graph = apply_assignment(build.dmin, build.cnf, build.assignment);
  return build;
}

}  // namespace minrank
