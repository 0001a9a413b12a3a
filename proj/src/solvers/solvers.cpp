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

#include "minrank/solvers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/path_search.hpp"
#include "minrank/query_cache.hpp"

namespace minrank {

std::string format_trace(const TraceRecord& r) {
  std::ostringstream out;
  out << r.solver << " level=" << r.level << " step=" << r.step << " path=";
  for (std::size_t i = 0; i < r.path.size(); ++i) out << (i > 0 ? "," : "") << r.path[i];
  if (r.path.empty()) out << "-";
  if (!r.cost.empty()) out << " cost=" << r.cost;
  out << " queries=" << r.queries;
  if (r.guesses > 0) out << " guesses=" << r.guesses;
  return out.str();
}

namespace {

const char* step_name(SolveResult::Step s) {
  switch (s) {
    case SolveResult::Step::kFlat:
      return "flat";
    case SolveResult::Step::kDirect:
      return "direct";
    case SolveResult::Step::kPath:
      return "path";
    case SolveResult::Step::kCertificate:
      return "certificate";
  }
  return "?";
}

ElementSet ground_of(const MinRankOracle& oracle, const SolveOptions& options) {
  return options.ground ? (*options.ground & oracle.ground()) : oracle.ground();
}

void emit(const SolveOptions& options, const char* solver, ElementSet independent,
          const SolveResult& result, std::string cost, std::int64_t queries) {
  if (!options.trace) return;
  TraceRecord r;
  r.solver = solver;
  r.level = independent.size();
  r.step = step_name(result.step);
  r.path = result.path;
  r.cost = std::move(cost);
  r.queries = queries;
  r.guesses = result.guesses;
  options.trace(r);
}

StarPair pick_star_pair(const PairProbe& probe, const SolveOptions& options) {
  const std::size_t index = options.star_pair ? options.star_pair(probe.star_pairs) : 0;
  if (index >= probe.star_pairs.size()) {
    throw PreconditionError("star pair policy chose index " + std::to_string(index) + " of " +
                            std::to_string(probe.star_pairs.size()));
  }
  return probe.star_pairs[index];
}

SolveResult augmented(SolveResult::Step step, ElementSet j, std::vector<Element> path) {
  SolveResult r;
  r.step = step;
  r.augmented = true;
  r.set = j;
  r.path = std::move(path);
  return r;
}

SolveResult certificate(SolveResult::Step step, ElementSet z) {
  SolveResult r;
  r.step = step;
  r.set = z;
  return r;
}

void check_common_independent(QueryCache& q, ElementSet j) {
  if (q.rmin(j) != j.size()) {
    throw ContractViolation("augmented set " + j.to_string() + " is not common independent");
  }
}

std::string cost_text(const Rational& c) { return format_rational(c); }
std::string cost_text(const LexCost& c) { return c.to_string(); }

// Steps 1 and 2 of the weighted augmentation, shared by every weighted
// solver. Returns a result when the step ends there.
template <class Cost>
std::optional<SolveResult> weighted_prelude(const PairProbe& probe, ElementSet independent,
                                            const std::vector<Cost>& costs) {
  if (probe.flat()) return std::nullopt;
  if (!probe.star_pairs.empty()) return std::nullopt;
  Element best = -1;
  for (Element x : probe.addable) {
    if (best == -1 || costs[static_cast<std::size_t>(x)] < costs[static_cast<std::size_t>(best)]) {
      best = x;
    }
  }
  return augmented(SolveResult::Step::kDirect, independent.with(best), {best});
}

template <class Cost>
SolveResult weighted_step(QueryCache& q, ElementSet independent, const std::vector<Cost>& costs,
                          const Cost& zero, const SolveOptions& options, Cost* step_cost) {
  const PairProbe probe = probe_pairs(q, independent, true);
  if (probe.flat()) return certificate(SolveResult::Step::kFlat, q.ground());
  if (auto direct = weighted_prelude(probe, independent, costs)) {
    *step_cost = path_cost(direct->path, costs, zero);
    if (options.check_augmented) check_common_independent(q, direct->set);
    return *direct;
  }
  const StarPair sp = pick_star_pair(probe, options);
  const AlmostConsistentBuild build = almost_consistent_graph(q, independent, sp, options.cnf);
  if (has_negative_cycle(build.graph, costs, zero)) {
    throw ContractViolation("almost consistent graph at I = " + independent.to_string() +
                            " has a negative-cost cycle");
  }
  const auto path = shortest_cheapest_path(build.graph, costs, zero);
  if (!path) return certificate(SolveResult::Step::kCertificate, reaching_sinks(build.graph));
  *step_cost = path_cost(*path, costs, zero);
  const ElementSet j = independent ^ path_set(*path);
  if (options.check_augmented) check_common_independent(q, j);
  return augmented(SolveResult::Step::kPath, j, *path);
}

std::vector<LexCost> lex_costs(const WeightClasses& classes, ElementSet independent) {
  const std::size_t dims = classes.values.size();
  std::vector<LexCost> costs(classes.class_of.size(), LexCost(dims));
  for (std::size_t e = 0; e < classes.class_of.size(); ++e) {
    const int c = classes.class_of[e];
    if (c < 0) continue;
    costs[e] = LexCost::unit(dims, static_cast<std::size_t>(c),
                             independent.contains(static_cast<Element>(e)) ? 1 : -1);
  }
  return costs;
}

template <class Step>
LevelResult run_levels(MinRankOracle& oracle, Step&& step) {
  const std::int64_t before = oracle.query_count();
  LevelResult result;
  ElementSet current;
  result.levels.push_back(current);
  while (true) {
    const SolveResult r = step(current);
    result.guesses.push_back(r.guesses);
    if (!r.augmented) {
      result.certificate = r.set;
      break;
    }
    current = r.set;
    result.levels.push_back(current);
  }
  result.queries = oracle.query_count() - before;
  return result;
}

}  // namespace

SolveResult augment_min_rank(MinRankOracle& oracle, ElementSet independent,
                             const SolveOptions& options) {
  const std::int64_t before = oracle.query_count();
  QueryCache q(oracle, ground_of(oracle, options));
  const PairProbe probe = probe_pairs(q, independent, false);
  SolveResult result;
  if (!probe.addable.empty()) {
    const Element x = probe.addable.min();
    result = augmented(SolveResult::Step::kDirect, independent.with(x), {x});
  } else if (probe.flat()) {
    result = certificate(SolveResult::Step::kFlat, q.ground());
  } else {
    const StarPair sp = pick_star_pair(probe, options);
    const ExchangeGraph g = build_modified_graph(q, independent, sp);
    if (const auto path = shortest_augmenting_path(g)) {
      result = augmented(SolveResult::Step::kPath, independent ^ path_set(*path), *path);
      if (options.check_augmented) check_common_independent(q, result.set);
    } else {
      result = certificate(SolveResult::Step::kCertificate, reachability_certificate(g));
    }
  }
  emit(options, "cardinality", independent, result, "", oracle.query_count() - before);
  return result;
}

CardinalityResult max_cardinality(MinRankOracle& oracle, const SolveOptions& options) {
  const std::int64_t before = oracle.query_count();
  CardinalityResult result;
  while (true) {
    const SolveResult r = augment_min_rank(oracle, result.independent, options);
    if (!r.augmented) {
      result.certificate = r.set;
      break;
    }
    result.independent = r.set;
    ++result.augmentations;
  }
  result.queries = oracle.query_count() - before;
  return result;
}

SolveResult cheapest_path_augment(MinRankOracle& oracle, const WeightFn& w,
                                  ElementSet independent, const SolveOptions& options) {
  const std::int64_t before = oracle.query_count();
  QueryCache q(oracle, ground_of(oracle, options));
  const std::vector<Rational> costs = vertex_costs(w, independent);
  Rational cost = 0;
  const SolveResult r = weighted_step<Rational>(q, independent, costs, Rational(0), options, &cost);
  emit(options, "weighted", independent, r, r.augmented ? cost_text(cost) : "",
       oracle.query_count() - before);
  return r;
}

LevelResult weighted_no_circuit_inclusion(MinRankOracle& oracle, const WeightFn& w,
                                          const SolveOptions& options) {
  return run_levels(oracle, [&](ElementSet current) {
    return cheapest_path_augment(oracle, w, current, options);
  });
}

SolveResult fpt_augment(MinRankOracle& oracle, const WeightFn& w, ElementSet independent,
                        int gamma, const SolveOptions& options) {
  const std::int64_t before = oracle.query_count();
  QueryCache q(oracle, ground_of(oracle, options));
  const std::vector<Rational> costs = vertex_costs(w, independent);
  const Rational zero(0);
  auto finish = [&](SolveResult r, const std::string& cost) {
    emit(options, "fpt", independent, r, cost, oracle.query_count() - before);
    return r;
  };

  const PairProbe probe = probe_pairs(q, independent, true);
  if (probe.flat()) return finish(certificate(SolveResult::Step::kFlat, q.ground()), "");
  if (auto direct = weighted_prelude(probe, independent, costs)) {
    if (options.check_augmented) check_common_independent(q, direct->set);
    return finish(*direct, cost_text(path_cost(direct->path, costs, zero)));
  }
  const StarPair sp = pick_star_pair(probe, options);
  const ExchangeGraph dmin = build_intersected_graph(q, independent, sp);
  const LEObservations obs = observe_le_pairs(q, independent, dmin.sources, dmin.sinks);
  const Cnf2 base_cnf = build_cnf(obs, dmin, options.cnf);
  const ArcVariables vars(dmin);

  // Elements of I with a suspicious incoming arc, per side.
  ElementSet into_second, into_first;
  for (Element y : independent) {
    for (Element x : dmin.outside()) {
      if (dmin.is_suspicious(x, y)) into_second.insert(y);
      if (dmin.is_suspicious(y, x)) into_first.insert(y);
    }
  }
  const bool second_side = into_second.size() <= into_first.size();
  const ElementSet guessable = second_side ? into_second : into_first;
  if (guessable.size() > gamma) {
    throw ContractViolation("circuit bound " + std::to_string(gamma) + " violated: " +
                            std::to_string(guessable.size()) +
                            " elements carry suspicious arcs on the smaller side");
  }
  // The arc from x_i towards y_j on the guessed side.
  auto arc = [&](Element x, Element y) {
    return second_side ? std::make_pair(x, y) : std::make_pair(y, x);
  };
  auto term = [&](Element x, Element y) {
    const auto [u, v] = arc(x, y);
    return vars.term(u, v);
  };

  std::vector<LEObservation> evil;
  for (const LEObservation& p : obs.pairs()) {
    if (is_evil(obs, p)) evil.push_back(p);
  }

  struct Candidate {
    PathLabel<Rational> label;
    std::vector<Element> path;
  };
  std::optional<Candidate> best;
  int guesses = 0;
  for_each_subset(guessable, [&](ElementSet guess) {
    ++guesses;
    Cnf2 cnf = base_cnf;
    for (const LEObservation& p : evil) {
      const auto xs = p.x.to_vector();
      const auto ys = p.y.to_vector();
      int free_index = -1;  // y_j whose arcs the guess forbids or lacks
      if (!p.y.is_subset_of(guessable)) {
        const int j = guessable.contains(ys[0]) ? 1 : 0;
        const auto [u0, v0] = arc(xs[0], ys[static_cast<std::size_t>(j)]);
        const auto [u1, v1] = arc(xs[1], ys[static_cast<std::size_t>(j)]);
        if (dmin.has_arc(u0, v0) || dmin.has_arc(u1, v1)) continue;
        free_index = j;
      } else if (p.y.is_subset_of(guess)) {
        return;  // wrong guess: an evil pair needs one of its arcs
      } else if (p.y.intersects(guess)) {
        free_index = guess.contains(ys[0]) ? 0 : 1;
      } else {
        continue;
      }
      const auto other = static_cast<std::size_t>(1 - free_index);
      cnf.add(term(xs[0], ys[other]), term(xs[1], ys[other]));
    }
    const auto assignment = solve_2sat(cnf);
    if (!assignment) return;
    const ExchangeGraph graph = apply_assignment(dmin, cnf, *assignment);
    if (has_negative_cycle(graph, costs, zero)) return;
    const auto path = shortest_cheapest_path(graph, costs, zero);
    if (!path) return;
    const PathLabel<Rational> label{path_cost(*path, costs, zero),
                                    static_cast<int>(path->size())};
    if (!best || label < best->label) best = Candidate{label, *path};
  });

  if (!best) {
    SolveOptions fallback = options;
    fallback.trace = nullptr;
    SolveResult r = augment_min_rank(oracle, independent, fallback);
    if (r.augmented) {
      throw ContractViolation("no guess produced an augmenting path although one exists");
    }
    r.guesses = guesses;
    return finish(r, "");
  }
  if (!even_prefixes_independent(oracle, independent, best->path)) {
    throw ContractViolation("chosen path at I = " + independent.to_string() +
                            " fails the even-prefix check");
  }
  const ElementSet j = independent ^ path_set(best->path);
  if (options.check_augmented) check_common_independent(q, j);
  SolveResult r = augmented(SolveResult::Step::kPath, j, best->path);
  r.guesses = guesses;
  return finish(r, cost_text(best->label.cost));
}

LevelResult weighted_fpt_circuit(MinRankOracle& oracle, const WeightFn& w, int gamma,
                                 const SolveOptions& options) {
  return run_levels(oracle, [&](ElementSet current) {
    return fpt_augment(oracle, w, current, gamma, options);
  });
}

ElementSet best_level(const LevelResult& result, const WeightFn& w) {
  ElementSet best;
  Rational best_weight = 0;
  for (ElementSet level : result.levels) {
    const Rational weight = weight_of(w, level);
    if (weight > best_weight) {
      best = level;
      best_weight = weight;
    }
  }
  return best;
}

WeightClasses weight_classes(const WeightFn& w, ElementSet ground) {
  WeightClasses classes;
  for (Element e : ground) classes.values.push_back(w[static_cast<std::size_t>(e)]);
  std::sort(classes.values.begin(), classes.values.end(), std::greater<>());
  classes.values.erase(std::unique(classes.values.begin(), classes.values.end()),
                       classes.values.end());
  classes.class_of.assign(w.size(), -1);
  for (Element e : ground) {
    const auto it = std::find(classes.values.begin(), classes.values.end(),
                              w[static_cast<std::size_t>(e)]);
    classes.class_of[static_cast<std::size_t>(e)] =
        static_cast<int>(it - classes.values.begin());
  }
  return classes;
}

std::vector<int> class_counts(const WeightClasses& classes, ElementSet set) {
  std::vector<int> counts(classes.values.size(), 0);
  for (Element e : set) {
    const int c = classes.class_of[static_cast<std::size_t>(e)];
    if (c >= 0) ++counts[static_cast<std::size_t>(c)];
  }
  return counts;
}

ElementSet lexicographic_max(MinRankOracle& oracle, const WeightFn& w,
                             const SolveOptions& options) {
  const ElementSet ground = ground_of(oracle, options);
  const WeightClasses classes = weight_classes(w, ground);
  const LexCost zero(classes.values.size());
  ElementSet current;
  ElementSet phase_ground;
  for (std::size_t i = 0; i < classes.values.size(); ++i) {
    for (Element e : ground) {
      if (classes.class_of[static_cast<std::size_t>(e)] == static_cast<int>(i)) {
        phase_ground.insert(e);
      }
    }
    // Augment inside E_1 u ... u E_i while that gains an element of E_i.
    while (true) {
      const std::int64_t before = oracle.query_count();
      QueryCache q(oracle, phase_ground);
      const std::vector<LexCost> costs = lex_costs(classes, current);
      LexCost cost = zero;
      const SolveResult r = weighted_step<LexCost>(q, current, costs, zero, options, &cost);
      emit(options, "lexmax", current, r, r.augmented ? cost_text(cost) : "",
           oracle.query_count() - before);
      if (!r.augmented || !cost.is_negative()) break;
      current = r.set;
    }
  }
  return current;
}

ApproxResult approx_max_weight(MinRankOracle& oracle, const WeightFn& w,
                               const SolveOptions& options) {
  ElementSet positive;
  for (Element e : ground_of(oracle, options)) {
    if (w[static_cast<std::size_t>(e)] > 0) positive.insert(e);
  }
  SolveOptions restricted = options;
  restricted.ground = positive;
  ApproxResult result;
  result.set = lexicographic_max(oracle, w, restricted);
  result.weight = weight_of(w, result.set);
  const WeightClasses classes = weight_classes(w, positive);
  result.alpha = 0;
  for (std::size_t i = 0; i + 1 < classes.values.size(); ++i) {
    const Rational ratio = classes.values[i] / classes.values[i + 1];
    if (result.alpha == 0 || ratio < result.alpha) result.alpha = ratio;
  }
  result.guarantee = 1;
  if (result.alpha != 0 && result.alpha / 2 < 1) result.guarantee = result.alpha / 2;
  return result;
}

bool even_prefixes_independent(MinRankOracle& oracle, ElementSet independent,
                               const std::vector<Element>& path) {
  const int k = independent.size();
  // path[0] is outside I, so prefixes ending in I end at odd indices and
  // suffixes starting in I start at odd indices.
  for (std::size_t end = 1; end < path.size(); end += 2) {
    ElementSet prefix;
    for (std::size_t i = 0; i <= end; ++i) prefix.insert(path[i]);
    ElementSet suffix;
    for (std::size_t i = end; i < path.size(); ++i) suffix.insert(path[i]);
    if (oracle.rmin(independent ^ prefix) != k) return false;
    if (oracle.rmin(independent ^ suffix) != k) return false;
  }
  return true;
}

}  // namespace minrank
