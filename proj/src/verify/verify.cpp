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

#include "minrank/verify.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/path_search.hpp"
#include "minrank/query_cache.hpp"

namespace minrank {

BruteReport make_report(std::string instance, std::string quantity, std::string brute,
                        std::string solver, std::vector<ElementSet> witnesses) {
  BruteReport r;
  r.instance = std::move(instance);
  r.quantity = std::move(quantity);
  r.agree = brute == solver;
  r.brute = std::move(brute);
  r.solver = std::move(solver);
  r.witnesses = std::move(witnesses);
  return r;
}

std::string format_report(const BruteReport& r) {
  std::ostringstream out;
  out << (r.agree ? "PASS" : "FAIL") << ' ' << (r.instance.empty() ? "-" : r.instance) << ' '
      << r.quantity << " brute=" << r.brute << " solver=" << r.solver;
  if (!r.witnesses.empty()) {
    out << " witnesses=";
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      out << (i > 0 ? ";" : "") << r.witnesses[i].to_string();
    }
  }
  return out.str();
}

bool all_agree(const std::vector<BruteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BruteReport& r) { return r.agree; });
}

namespace {

void require_small(int n, int limit, const char* what) {
  if (n > limit) {
    throw PreconditionError(std::string(what) + " enumerates subsets and needs n <= " +
                            std::to_string(limit) + ", got " + std::to_string(n));
  }
}

bool common_independent(const MatroidPair& pair, ElementSet x) {
  return pair.first.is_independent(x) && pair.second.is_independent(x);
}

void grow(const MatroidPair& pair, ElementSet ground, ElementSet current, Element next,
          const std::function<void(ElementSet)>& fn) {
  fn(current);
  for (Element e : ground) {
    if (e < next) continue;
    const ElementSet bigger = current.with(e);
    if (common_independent(pair, bigger)) grow(pair, ground, bigger, e + 1, fn);
  }
}

void for_each_common_independent_in(const MatroidPair& pair, ElementSet ground,
                                    const std::function<void(ElementSet)>& fn) {
  grow(pair, ground, ElementSet{}, 0, fn);
}

std::string count_text(std::size_t count) { return std::to_string(count); }

// Report of a zero-violation check.
BruteReport violations_report(const std::string& instance, const std::string& quantity,
                              const std::vector<ElementSet>& witnesses) {
  return make_report(instance, quantity, "0", count_text(witnesses.size()),
                     std::vector<ElementSet>(witnesses.begin(),
                                             witnesses.begin() +
                                                 static_cast<std::ptrdiff_t>(
                                                     std::min<std::size_t>(witnesses.size(), 4))));
}

ElementSet arc_set(Element u, Element v) { return ElementSet{u, v}; }

}  // namespace

void for_each_common_independent(const MatroidPair& pair,
                                 const std::function<void(ElementSet)>& fn) {
  for_each_common_independent_in(pair, ElementSet::universe(pair.ground_size()), fn);
}

MaxCommon brute_max_common(const MatroidPair& pair) {
  require_small(pair.ground_size(), 20, "brute_max_common");
  MaxCommon best;
  for_each_common_independent(pair, [&](ElementSet s) {
    if (s.size() > best.size || (s.size() == best.size && s.bits() < best.witness.bits())) {
      best.size = s.size();
      best.witness = s;
    }
  });
  return best;
}

BruteDual brute_dual(const MatroidPair& pair) {
  const int n = pair.ground_size();
  require_small(n, 20, "brute_dual");
  const ElementSet all = ElementSet::universe(n);
  BruteDual dual;
  dual.rank_sum.value = dual.min_rank.value = n + 1;
  for (std::uint64_t mask = 0; mask <= all.bits(); ++mask) {
    const ElementSet z(mask);
    const int sum = pair.first.rank(z) + pair.second.rank(all - z);
    if (sum < dual.rank_sum.value) dual.rank_sum = {sum, z};
    const int mins = pair.rmin(z) + pair.rmin(all - z);
    if (mins < dual.min_rank.value) dual.min_rank = {mins, z};
    if (mask == all.bits()) break;
  }
  const int primal = brute_max_common(pair).size;
  if (dual.rank_sum.value != primal || dual.min_rank.value != primal) {
    throw ContractViolation("dual minima " + std::to_string(dual.rank_sum.value) + " and " +
                            std::to_string(dual.min_rank.value) +
                            " differ from the maximum common independent size " +
                            std::to_string(primal));
  }
  return dual;
}

WMaximal brute_w_maximal(const MatroidPair& pair, const WeightFn& w, int k) {
  require_small(pair.ground_size(), 16, "brute_w_maximal");
  WMaximal result;
  for_each_common_independent(pair, [&](ElementSet s) {
    if (s.size() != k) return;
    const Rational weight = weight_of(w, s);
    if (!result.weight || weight > *result.weight) {
      result.weight = weight;
      result.argmax.clear();
    }
    if (weight == *result.weight) result.argmax.push_back(s);
  });
  std::sort(result.argmax.begin(), result.argmax.end());
  return result;
}

BruteLexmax brute_lexmax(const MatroidPair& pair, const WeightFn& w,
                         std::optional<ElementSet> ground) {
  require_small(pair.ground_size(), 16, "brute_lexmax");
  const ElementSet g = ground ? *ground : ElementSet::universe(pair.ground_size());
  const WeightClasses classes = weight_classes(w, g);
  BruteLexmax best;
  best.counts.assign(classes.values.size(), 0);
  bool found = false;
  for_each_common_independent_in(pair, g, [&](ElementSet s) {
    const std::vector<int> counts = class_counts(classes, s);
    if (!found || counts > best.counts ||
        (counts == best.counts && s.bits() < best.set.bits())) {
      best.counts = counts;
      best.set = s;
      found = true;
    }
  });
  return best;
}

Rational brute_max_weight(const MatroidPair& pair, const WeightFn& w) {
  require_small(pair.ground_size(), 16, "brute_max_weight");
  Rational best = 0;
  for_each_common_independent(pair, [&](ElementSet s) {
    const Rational weight = weight_of(w, s);
    if (weight > best) best = weight;
  });
  return best;
}

ExchangeGraph build_true_graph(const MatroidPair& pair, ElementSet independent,
                               std::optional<ElementSet> ground) {
  const int n = pair.ground_size();
  const ElementSet g = ground ? (*ground & ElementSet::universe(n)) : ElementSet::universe(n);
  if (!independent.is_subset_of(g) || !common_independent(pair, independent)) {
    throw PreconditionError("true graph needs a common independent set, got " +
                            independent.to_string());
  }
  ExchangeGraph graph(n, g, independent);
  for (Element x : graph.outside()) {
    if (pair.first.is_independent(independent.with(x))) graph.sources.insert(x);
    if (pair.second.is_independent(independent.with(x))) graph.sinks.insert(x);
    for (Element y : independent) {
      const ElementSet swapped = independent.without(y).with(x);
      if (pair.first.is_independent(swapped)) graph.add_arc(y, x);
      if (pair.second.is_independent(swapped)) graph.add_arc(x, y);
    }
  }
  return graph;
}

std::optional<MatroidPair> align_pair(const MatroidPair& pair, ElementSet independent,
                                      ElementSet sources, std::optional<ElementSet> ground) {
  const ElementSet g = ground ? *ground : ElementSet::universe(pair.ground_size());
  auto sources_of = [&](const Matroid& m) {
    ElementSet s;
    for (Element x : g - independent) {
      if (m.is_independent(independent.with(x))) s.insert(x);
    }
    return s;
  };
  if (sources_of(pair.first) == sources) return pair;
  if (sources_of(pair.second) == sources) return MatroidPair{pair.second, pair.first};
  return std::nullopt;
}

namespace {

// Edge count distance to the nearest sink; -1 when T is unreachable.
std::vector<int> distance_to_sinks(const ExchangeGraph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::vector<Element> frontier;
  for (Element t : g.sinks) {
    dist[static_cast<std::size_t>(t)] = 0;
    frontier.push_back(t);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Element v = frontier[head];
    for (Element u : g.in_neighbors(v)) {
      if (dist[static_cast<std::size_t>(u)] == -1) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<Element>> all_shortest_paths(const ExchangeGraph& g) {
  const std::vector<int> dist = distance_to_sinks(g);
  int best = -1;
  for (Element s : g.sources) {
    const int d = dist[static_cast<std::size_t>(s)];
    if (d >= 0 && (best == -1 || d < best)) best = d;
  }
  std::vector<std::vector<Element>> paths;
  if (best == -1) return paths;
  std::vector<Element> path;
  std::function<void(Element)> walk = [&](Element v) {
    path.push_back(v);
    if (dist[static_cast<std::size_t>(v)] == 0) {
      paths.push_back(path);
    } else {
      for (Element w : g.out[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1) walk(w);
      }
    }
    path.pop_back();
  };
  for (Element s : g.sources) {
    if (dist[static_cast<std::size_t>(s)] == best) walk(s);
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<std::vector<Element>> all_simple_cycles(const ExchangeGraph& g) {
  std::vector<std::vector<Element>> cycles;
  std::vector<Element> path;
  ElementSet on_path;
  Element root = -1;
  std::function<void(Element)> walk = [&](Element v) {
    path.push_back(v);
    on_path.insert(v);
    for (Element w : g.out[static_cast<std::size_t>(v)]) {
      if (w == root) {
        cycles.push_back(path);
      } else if (w > root && !on_path.contains(w)) {
        walk(w);
      }
    }
    on_path.erase(v);
    path.pop_back();
  };
  for (Element v : g.ground) {
    root = v;
    walk(v);
  }
  return cycles;
}

std::vector<std::vector<Element>> all_simple_paths(const ExchangeGraph& g) {
  std::vector<std::vector<Element>> paths;
  std::vector<Element> path;
  ElementSet on_path;
  std::function<void(Element)> walk = [&](Element v) {
    path.push_back(v);
    on_path.insert(v);
    if (g.sinks.contains(v)) paths.push_back(path);
    for (Element w : g.out[static_cast<std::size_t>(v)]) {
      if (!on_path.contains(w)) walk(w);
    }
    on_path.erase(v);
    path.pop_back();
  };
  for (Element s : g.sources) walk(s);
  return paths;
}

int count_perfect_matchings(const ExchangeGraph& g, ElementSet left, ElementSet right,
                            int cap) {
  if (left.size() != right.size()) return 0;
  const std::vector<Element> order = left.to_vector();
  int count = 0;
  std::function<void(std::size_t, ElementSet)> match = [&](std::size_t i, ElementSet free) {
    if (count >= cap) return;
    if (i == order.size()) {
      ++count;
      return;
    }
    for (Element v : g.out[static_cast<std::size_t>(order[i])] & free) {
      match(i + 1, free.without(v));
      if (count >= cap) return;
    }
  };
  match(0, right);
  return count;
}

bool splits_into_cycles(const ExchangeGraph& g, ElementSet vertices) {
  const ElementSet inside = vertices & g.independent;
  const ElementSet outside = vertices - g.independent;
  return count_perfect_matchings(g, outside, inside, 1) == 1 &&
         count_perfect_matchings(g, inside, outside, 1) == 1;
}

bool splits_into_path_and_cycles(const ExchangeGraph& g, ElementSet vertices, Element s,
                                 Element t) {
  if (!g.sources.contains(s) || !g.sinks.contains(t)) return false;
  const ElementSet inside = vertices & g.independent;
  const ElementSet outside = vertices - g.independent;
  return count_perfect_matchings(g, outside.without(t), inside, 1) == 1 &&
         count_perfect_matchings(g, inside, outside.without(s), 1) == 1;
}

GraphAudit audit_graphs(MinRankOracle& oracle, ElementSet independent,
                        const AuditOptions& options) {
  const int n = oracle.ground_size();
  require_small(n, 10, "audit_graphs");
  GraphAudit audit;
  const ElementSet ground = options.ground ? (*options.ground & oracle.ground()) : oracle.ground();
  QueryCache q(oracle, ground);
  const PairProbe probe = probe_pairs(q, independent, false);
  if (!probe.addable.empty() || probe.flat()) return audit;
  audit.applicable = true;
  const MatroidPair& hidden = hidden_pair(oracle);
  const std::string& id = options.instance;

  std::vector<ElementSet> orientation, sinks_mismatch, modified_missing, extra_touching,
      modified_shortcut, path_mismatch, intersected_missing, intersected_shortcut,
      sure_not_true, no_suspicious_differs, true_inconsistent, unsatisfiable,
      almost_rules, assignment_fails, cycle_splits, path_splits, negative_cycles,
      cheapest_mismatch;

  for (const StarPair& sp : probe.star_pairs) {
    const ExchangeGraph modified = build_modified_graph(q, independent, sp);
    const auto aligned = align_pair(hidden, independent, modified.sources, ground);
    if (!aligned) {
      orientation.push_back(modified.sources);
      continue;
    }
    ExchangeGraph truth = build_true_graph(*aligned, independent, ground);
    if (truth.sinks != modified.sinks) sinks_mismatch.push_back(modified.sinks);

    // Modified graph: containment, extra arcs away from S and T, shortcut
    // through the probe pair, and identical shortest paths.
    const ElementSet ends = truth.sources | truth.sinks;
    for (Element u : ground) {
      for (Element v : truth.out[static_cast<std::size_t>(u)]) {
        if (!modified.has_arc(u, v)) modified_missing.push_back(arc_set(u, v));
      }
      for (Element v : modified.out[static_cast<std::size_t>(u)]) {
        if (truth.has_arc(u, v)) continue;
        if (ends.contains(u) || ends.contains(v)) extra_touching.push_back(arc_set(u, v));
        const bool shortcut = independent.contains(u) ? truth.has_arc(u, sp.t)
                                                      : truth.has_arc(sp.s, v);
        if (!shortcut) modified_shortcut.push_back(arc_set(u, v));
      }
    }
    if (all_shortest_paths(truth) != all_shortest_paths(modified)) {
      path_mismatch.push_back(ElementSet{sp.s, sp.t});
    }

    // Intersected graph: containment, shortcut through every sink or
    // source, and sure arcs that are true arcs.
    const ExchangeGraph intersected = build_intersected_graph(q, independent, sp);
    for (Element u : ground) {
      for (Element v : truth.out[static_cast<std::size_t>(u)]) {
        if (!intersected.has_arc(u, v)) intersected_missing.push_back(arc_set(u, v));
      }
      for (Element v : intersected.out[static_cast<std::size_t>(u)]) {
        if (!intersected.is_suspicious(u, v) && !truth.has_arc(u, v)) {
          sure_not_true.push_back(arc_set(u, v));
        }
        if (truth.has_arc(u, v)) continue;
        bool shortcut = true;
        if (independent.contains(u)) {
          for (Element t : truth.sinks) shortcut = shortcut && truth.has_arc(u, t);
        } else {
          for (Element s : truth.sources) shortcut = shortcut && truth.has_arc(s, v);
        }
        if (!shortcut) intersected_shortcut.push_back(arc_set(u, v));
      }
    }
    if (intersected.suspicious_count() == 0 && !intersected.same_arcs(truth)) {
      no_suspicious_differs.push_back(ElementSet{sp.s, sp.t});
    }

    // Consistency of the true graph and the almost consistent rules.
    const LEObservations obs =
        observe_le_pairs(q, independent, intersected.sources, intersected.sinks);
    for (const LEObservation& p : obs.pairs()) {
      if (check_consistency(truth, p, obs.base()) != Consistency::kConsistent) {
        true_inconsistent.push_back(p.x | p.y);
      }
    }
    std::optional<AlmostConsistentBuild> build;
    try {
      build = almost_consistent_graph(q, independent, sp, options.cnf);
    } catch (const ContractViolation&) {
      unsatisfiable.push_back(ElementSet{sp.s, sp.t});
      continue;
    }
    for (const ConsistencyViolation& v : audit_almost_consistent(build->graph, build->dmin,
                                                                 build->observations)) {
      almost_rules.push_back(v.arc.first >= 0 ? arc_set(v.arc.first, v.arc.second)
                                              : (v.pair.x | v.pair.y));
    }
    if (!satisfies(build->cnf, build->assignment)) {
      assignment_fails.push_back(ElementSet{sp.s, sp.t});
    }

    // Matching checks against the true graph, optionally with a fault.
    std::vector<std::vector<Element>> candidate_paths = all_simple_paths(build->graph);
    const auto true_shortest = all_shortest_paths(truth);
    candidate_paths.insert(candidate_paths.end(), true_shortest.begin(), true_shortest.end());
    ExchangeGraph reference = truth;
    if (options.fault.kind == AuditFault::Kind::kDropShortestPathArc && !true_shortest.empty() &&
        true_shortest.front().size() > 1) {
      reference.remove_arc(true_shortest.front()[0], true_shortest.front()[1]);
      audit.fault_injected = true;
    }
    for (const auto& cycle : all_simple_cycles(build->graph)) {
      const ElementSet vertices = path_set(cycle);
      if (!splits_into_cycles(reference, vertices)) cycle_splits.push_back(vertices);
    }
    for (const auto& path : candidate_paths) {
      const ElementSet vertices = path_set(path);
      if (!splits_into_path_and_cycles(reference, vertices, path.front(), path.back())) {
        path_splits.push_back(vertices);
      }
    }

    if (options.weights) {
      const std::vector<Rational> costs = vertex_costs(*options.weights, independent);
      const Rational zero(0);
      if (has_negative_cycle(build->graph, costs, zero)) {
        negative_cycles.push_back(ElementSet{sp.s, sp.t});
      }
      if (has_negative_cycle(truth, costs, zero)) negative_cycles.push_back(independent);
      if (negative_cycles.empty()) {
        const auto found = shortest_cheapest_path(build->graph, costs, zero);
        const auto best = shortest_cheapest_path(truth, costs, zero);
        if (found.has_value() != best.has_value()) {
          cheapest_mismatch.push_back(found ? path_set(*found) : path_set(*best));
        } else if (found) {
          const PathLabel<Rational> a{path_cost(*found, costs, zero),
                                      static_cast<int>(found->size())};
          const PathLabel<Rational> b{path_cost(*best, costs, zero),
                                      static_cast<int>(best->size())};
          if (!(a == b) ||
              !splits_into_path_and_cycles(truth, path_set(*found), found->front(),
                                           found->back())) {
            cheapest_mismatch.push_back(path_set(*found));
          }
        }
      }
    }
  }

  auto add = [&](const char* quantity, const std::vector<ElementSet>& witnesses) {
    audit.reports.push_back(violations_report(id, quantity, witnesses));
  };
  add("probe sides match true sources", orientation);
  add("probe sinks match true sinks", sinks_mismatch);
  add("true arcs within modified graph", modified_missing);
  add("modified extra arcs avoid sources and sinks", extra_touching);
  add("modified fake arcs shortcut through probe pair", modified_shortcut);
  add("shortest paths preserved", path_mismatch);
  add("true arcs within intersected graph", intersected_missing);
  add("intersected fake arcs shortcut through every end", intersected_shortcut);
  add("sure arcs are true arcs", sure_not_true);
  add("graph without suspicious arcs equals true graph", no_suspicious_differs);
  add("true graph consistent", true_inconsistent);
  add("consistency clauses satisfiable", unsatisfiable);
  add("almost consistent rules", almost_rules);
  add("assignment satisfies clauses", assignment_fails);
  add("cycles split into true cycles", cycle_splits);
  add("paths split into true path and cycles", path_splits);
  if (options.weights) {
    add("no negative cycle", negative_cycles);
    add("cheapest path vertex set in true graph", cheapest_mismatch);
  }
  return audit;
}

std::vector<BruteReport> check_exchange_matchings(const MatroidPair& pair,
                                                  ElementSet independent,
                                                  const std::string& instance) {
  const int n = pair.ground_size();
  require_small(n, 10, "check_exchange_matchings");
  const ExchangeGraph truth = build_true_graph(pair, independent);
  const ElementSet all = ElementSet::universe(n);
  const ElementSet outside = all - independent;
  std::vector<ElementSet> missing_matching, unique_dependent;
  for (int side = 0; side < 2; ++side) {
    const Matroid& m = side == 0 ? pair.first : pair.second;
    // The first matroid's arcs leave I, the second's enter it.
    auto matchings = [&](ElementSet x, ElementSet y) {
      return side == 0 ? count_perfect_matchings(truth, y, x, 2)
                       : count_perfect_matchings(truth, x, y, 2);
    };
    for_each_subset(outside, [&](ElementSet x) {
      for_each_subset(independent, [&](ElementSet y) {
        if (x.size() != y.size()) return;
        const ElementSet j = (independent - y) | x;
        const int count = matchings(x, y);
        if (m.is_independent(j) && count == 0) missing_matching.push_back(j);
        if (count == 1 && !m.is_independent(j)) unique_dependent.push_back(j);
      });
    });
  }
  return {violations_report(instance, "equal-size independent sets have exchange matchings",
                            missing_matching),
          violations_report(instance, "unique exchange matching keeps independence",
                            unique_dependent)};
}

std::vector<ElementSet> circuits(const Matroid& m) {
  const int n = m.ground_size();
  require_small(n, 14, "circuits");
  const std::size_t count = std::size_t{1} << n;
  std::vector<int> rank(count);
  for (std::size_t mask = 0; mask < count; ++mask) rank[mask] = m.rank(ElementSet(mask));
  std::vector<ElementSet> result;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const ElementSet c(mask);
    if (rank[mask] != c.size() - 1) continue;
    bool minimal = true;
    for (Element e : c) {
      const ElementSet rest = c.without(e);
      if (rank[rest.bits()] != rest.size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(c);
  }
  return result;
}

int largest_circuit(const Matroid& m) {
  int best = 0;
  for (ElementSet c : circuits(m)) best = std::max(best, c.size());
  return best;
}

CircuitInclusion circuit_inclusion(const MatroidPair& pair) {
  const std::vector<ElementSet> c1 = circuits(pair.first);
  const std::vector<ElementSet> c2 = circuits(pair.second);
  CircuitInclusion result;
  for (ElementSet a : c1) {
    for (ElementSet b : c2) {
      if (b.is_subset_of(a) && result.second_in_first_free) {
        result.second_in_first_free = false;
        result.witnesses.push_back(b);
        result.witnesses.push_back(a);
      }
      if (a.is_subset_of(b) && result.first_in_second_free) {
        result.first_in_second_free = false;
        result.witnesses.push_back(a);
        result.witnesses.push_back(b);
      }
    }
  }
  return result;
}

bool check_promise_no_circuit_inclusion(const MatroidPair& pair) {
  return circuit_inclusion(pair).promise_holds();
}

namespace {

std::string weight_text(const std::optional<Rational>& w) {
  return w ? format_rational(*w) : std::string("none");
}

std::string counts_text(const std::vector<int>& counts) {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(counts[i]);
  }
  return out + ")";
}

// Per-size maxima from one enumeration.
std::vector<std::optional<Rational>> level_maxima(const MatroidPair& pair, const WeightFn& w) {
  std::vector<std::optional<Rational>> best(static_cast<std::size_t>(pair.ground_size()) + 1);
  for_each_common_independent(pair, [&](ElementSet s) {
    auto& slot = best[static_cast<std::size_t>(s.size())];
    const Rational weight = weight_of(w, s);
    if (!slot || weight > *slot) slot = weight;
  });
  while (best.size() > 1 && !best.back()) best.pop_back();
  return best;
}

void compare_levels(std::vector<BruteReport>& out, const std::string& id, const char* solver,
                    const MatroidPair& pair, const WeightFn& w, const LevelResult& levels,
                    const std::vector<std::optional<Rational>>& maxima) {
  out.push_back(make_report(id, std::string(solver) + " level count",
                            std::to_string(maxima.size()),
                            std::to_string(levels.levels.size())));
  for (std::size_t k = 0; k < std::min(maxima.size(), levels.levels.size()); ++k) {
    const ElementSet level = levels.levels[k];
    const bool valid = level.size() == static_cast<int>(k) && common_independent(pair, level);
    out.push_back(make_report(id, std::string(solver) + " weight k=" + std::to_string(k),
                              weight_text(maxima[k]),
                              valid ? format_rational(weight_of(w, level)) : "invalid",
                              {level}));
  }
}

}  // namespace

std::vector<BruteReport> verify_instance(const MatroidPair& pair, const WeightFn& w,
                                         const SuiteOptions& options) {
  const std::string& id = options.instance;
  const int n = pair.ground_size();
  const auto shared = std::make_shared<const MatroidPair>(pair);
  std::vector<BruteReport> out;

  // Cardinality against both dual forms.
  MinRankOracle oracle(shared);
  const CardinalityResult card = max_cardinality(oracle);
  const MaxCommon brute = brute_max_common(pair);
  out.push_back(make_report(id, "max common size", std::to_string(brute.size),
                            std::to_string(card.independent.size()), {card.independent}));
  out.push_back(make_report(id, "solver set common independent", "true",
                            common_independent(pair, card.independent) ? "true" : "false",
                            {card.independent}));
  const BruteDual dual = brute_dual(pair);
  out.push_back(make_report(id, "dual rank-sum form", std::to_string(dual.rank_sum.value),
                            std::to_string(card.independent.size()), {dual.rank_sum.argmin}));
  out.push_back(make_report(id, "dual min-rank form", std::to_string(dual.min_rank.value),
                            std::to_string(card.independent.size()), {dual.min_rank.argmin}));
  const ElementSet all = ElementSet::universe(n);
  out.push_back(make_report(
      id, "certificate value", std::to_string(card.independent.size()),
      std::to_string(pair.rmin(card.certificate) + pair.rmin(all - card.certificate)),
      {card.certificate}));

  // Graph audits along a cardinality run.
  if (options.audit && n <= 10) {
    ElementSet current;
    MinRankOracle audit_oracle(shared);
    while (true) {
      AuditOptions ao;
      ao.instance = id + " I=" + current.to_string();
      const GraphAudit audit = audit_graphs(audit_oracle, current, ao);
      if (audit.applicable) {
        for (const BruteReport& r : audit.reports) {
          if (!r.agree) out.push_back(r);
        }
      }
      const SolveResult r = augment_min_rank(audit_oracle, current);
      if (!r.augmented) break;
      current = r.set;
    }
    out.push_back(make_report(id, "graph audits", "pass", "pass"));
  }

  if (n > 16) return out;
  const auto maxima = level_maxima(pair, w);

  // A contract violation inside a solver is a failed check, not a crash.
  auto guarded = [&](const char* quantity, const std::function<void()>& body) {
    try {
      body();
    } catch (const ContractViolation& e) {
      out.push_back(make_report(id, quantity, "no violation", e.what()));
    }
  };
  if (check_promise_no_circuit_inclusion(pair)) {
    guarded("no-circuit-inclusion run", [&] {
      MinRankOracle o(shared);
      const LevelResult levels = weighted_no_circuit_inclusion(o, w);
      compare_levels(out, id, "no-circuit-inclusion", pair, w, levels, maxima);
    });
  }
  if (n <= 14) {
    const int gamma = std::min(largest_circuit(pair.first), largest_circuit(pair.second));
    if (gamma <= options.fpt_gamma_limit) {
      guarded("fpt run", [&] {
        MinRankOracle o(shared);
        const LevelResult levels = weighted_fpt_circuit(o, w, gamma);
        compare_levels(out, id, "fpt", pair, w, levels, maxima);
        int worst = 0;
        for (int g : levels.guesses) worst = std::max(worst, g);
        out.push_back(make_report(id, "fpt guesses within bound", "true",
                                  worst <= (1 << gamma) ? "true" : "false"));
      });
    }
  }

  guarded("lexmax run", [&] {
    MinRankOracle lex_oracle(shared);
    const ElementSet lex = lexicographic_max(lex_oracle, w);
    const BruteLexmax brute_lex = brute_lexmax(pair, w);
    const WeightClasses classes = weight_classes(w, all);
    out.push_back(make_report(id, "lexmax class counts", counts_text(brute_lex.counts),
                              common_independent(pair, lex)
                                  ? counts_text(class_counts(classes, lex))
                                  : "invalid",
                              {lex, brute_lex.set}));
  });
  guarded("approximation run", [&] {
    MinRankOracle approx_oracle(shared);
    const ApproxResult approx = approx_max_weight(approx_oracle, w);
    const Rational opt = brute_max_weight(pair, w);
    const bool meets =
        common_independent(pair, approx.set) && approx.weight >= approx.guarantee * opt;
    out.push_back(make_report(id, "approximation guarantee", "true", meets ? "true" : "false",
                              {approx.set}));
  });
  return out;
}

}  // namespace minrank
