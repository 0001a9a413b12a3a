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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "minrank/consistency.hpp"
#include "minrank/errors.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/query_cache.hpp"

using namespace minrank;

namespace {

// Every arc between inner elements X and independent elements Y, in a fixed
// order: all x -> y first, then all y -> x.
std::vector<std::pair<Element, Element>> cross_pairs(ElementSet xs, ElementSet ys) {
  std::vector<std::pair<Element, Element>> arcs;
  for (Element x : xs) {
    for (Element y : ys) arcs.emplace_back(x, y);
  }
  for (Element y : ys) {
    for (Element x : xs) arcs.emplace_back(y, x);
  }
  return arcs;
}

// Arc sets (as sorted arc lists) consistent with every observation.
std::set<std::vector<std::pair<Element, Element>>> consistent_arc_sets(
    int n, const LEObservations& obs) {
  const auto arcs = cross_pairs(obs.inner(), obs.independent());
  std::set<std::vector<std::pair<Element, Element>>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    ExchangeGraph g(n, obs.independent());
    std::vector<std::pair<Element, Element>> chosen;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if ((mask >> k) & 1U) {
        g.add_arc(arcs[k].first, arcs[k].second);
        chosen.push_back(arcs[k]);
      }
    }
    if (is_consistent_with_all(g, obs)) {
      std::sort(chosen.begin(), chosen.end());
      found.insert(chosen);
    }
  }
  return found;
}

// x1 = 0, x2 = 1, y = 2.
LEObservations single_y_table() {
  LEObservations obs(ElementSet{2}, ElementSet{0, 1});
  obs.add({ElementSet{0, 1}, ElementSet{2}, 1});
  obs.add({ElementSet{0}, ElementSet{2}, 0});
  obs.add({ElementSet{1}, ElementSet{2}, 0});
  return obs;
}

// x1 = 0, x2 = 1, y1 = 2, y2 = 3.
LEObservations evil_table() {
  LEObservations obs(ElementSet{2, 3}, ElementSet{0, 1});
  obs.add({ElementSet{0, 1}, ElementSet{2, 3}, 1});
  obs.add({ElementSet{0, 1}, ElementSet{2}, 1});
  obs.add({ElementSet{0, 1}, ElementSet{3}, 1});
  obs.add({ElementSet{0}, ElementSet{2, 3}, 0});
  obs.add({ElementSet{1}, ElementSet{2, 3}, 0});
  for (Element x : {0, 1}) {
    for (Element y : {2, 3}) obs.add({ElementSet{x}, ElementSet{y}, 1});
  }
  return obs;
}

ExchangeGraph all_suspicious(int n, ElementSet independent, ElementSet inner) {
  ExchangeGraph g(n, independent);
  for (auto [u, v] : cross_pairs(inner, independent)) g.add_arc(u, v, true);
  return g;
}

bool has_clause(const Cnf2& cnf, Literal a, Literal b) {
  return std::any_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& c) {
    return (c.a == a && c.b == b) || (c.a == b && c.b == a);
  });
}

}  // namespace

TEST_CASE("observation shapes") {
  CHECK(le_pair_shapes(ElementSet{1}, ElementSet{0}).size() == 1);
  CHECK(le_pair_shapes(ElementSet{2, 3}, ElementSet{0, 1}).size() == 9);
  CHECK(le_pair_shapes(ElementSet{}, ElementSet{0, 1}).empty());
}

TEST_CASE("observed values match direct ranks") {
  const MatroidPair pair = testing::crossed_pair();
  MinRankOracle o = testing::oracle_for(pair);
  QueryCache q(o);
  const LEObservations obs = observe_le_pairs(q, ElementSet{0, 3}, {}, {});
  CHECK(obs.pairs().size() == 9);
  for (const LEObservation& p : obs.pairs()) {
    CHECK(p.value == pair.rmin((ElementSet{0, 3} | p.x) - p.y));
  }
  CHECK_THROWS_AS(obs.value(ElementSet{0}, ElementSet{1}), PreconditionError);
}

TEST_CASE("one inner element against two independent elements") {
  const LEObservations obs = single_y_table();
  const auto sets = consistent_arc_sets(3, obs);
  const std::set<std::vector<std::pair<Element, Element>>> expected = {
      {{0, 2}, {2, 1}},
      {{1, 2}, {2, 0}},
  };
  CHECK(sets == expected);
  CHECK_FALSE(is_evil(obs, obs.pairs().front()));

  ExchangeGraph over(3, ElementSet{2});
  over.add_arc(0, 2);
  over.add_arc(2, 0);
  over.add_arc(2, 1);
  CHECK(check_consistency(over, obs.pairs()[1], 1) == Consistency::kOverestimatedOnly);
  const ExchangeGraph empty(3, ElementSet{2});
  CHECK(check_consistency(empty, obs.pairs()[0], 1) == Consistency::kUnderestimatedOnly);
  CHECK(check_consistency(empty, obs.pairs()[1], 1) == Consistency::kConsistent);
}

TEST_CASE("evil pair admits four arc configurations") {
  const LEObservations obs = evil_table();
  CHECK(is_evil(obs, obs.pairs().front()));
  const auto sets = consistent_arc_sets(4, obs);
  const std::set<std::vector<std::pair<Element, Element>>> expected = {
      {{0, 2}, {3, 1}},
      {{1, 3}, {2, 0}},
      {{0, 3}, {2, 1}},
      {{1, 2}, {3, 0}},
  };
  CHECK(sets == expected);

  LEObservations broken = evil_table();
  LEObservations raised(ElementSet{2, 3}, ElementSet{0, 1});
  for (LEObservation p : broken.pairs()) {
    if (p.x == ElementSet{0} && p.y == ElementSet{2, 3}) p.value = 1;
    raised.add(p);
  }
  CHECK_FALSE(is_evil(raised, raised.pairs().front()));
  LEObservations partial(ElementSet{2, 3}, ElementSet{0, 1});
  partial.add(broken.pairs().front());
  CHECK_THROWS_AS(is_evil(partial, partial.pairs().front()), PreconditionError);
}

TEST_CASE("clauses for a single exchange") {
  const ExchangeGraph dmin = all_suspicious(2, ElementSet{1}, ElementSet{0});
  const ArcVariables vars(dmin);
  const Literal a = positive(*vars.variable(0, 1));
  const Literal b = positive(*vars.variable(1, 0));

  LEObservations both(ElementSet{1}, ElementSet{0});
  both.add({ElementSet{0}, ElementSet{1}, 1});
  const Cnf2 forced = build_cnf(both, dmin);
  CHECK(forced.clauses.size() == 3);
  CHECK(has_clause(forced, a, b));
  CHECK(has_clause(forced, a ^ 1, b));
  CHECK(has_clause(forced, a, b ^ 1));

  LEObservations either(ElementSet{1}, ElementSet{0});
  either.add({ElementSet{0}, ElementSet{1}, 0});
  const Cnf2 exclusive = build_cnf(either, dmin);
  CHECK(exclusive.clauses.size() == 1);
  CHECK(has_clause(exclusive, a ^ 1, b ^ 1));

  LEObservations bad(ElementSet{1}, ElementSet{0});
  bad.add({ElementSet{0}, ElementSet{1}, 2});
  CHECK_THROWS_AS(build_cnf(bad, dmin), DataError);
}

TEST_CASE("clauses for an evil pair pair each arc with its partner") {
  const ExchangeGraph dmin = all_suspicious(4, ElementSet{2, 3}, ElementSet{0, 1});
  const ArcVariables vars(dmin);
  const Cnf2 cnf = build_cnf(evil_table(), dmin);
  auto lit = [&](Element u, Element v) { return positive(*vars.variable(u, v)); };
  for (auto [a, b] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
           {{0, 2}, {3, 1}}, {{1, 3}, {2, 0}}, {{0, 3}, {2, 1}}, {{1, 2}, {3, 0}}}) {
    CHECK(has_clause(cnf, lit(a.first, a.second) ^ 1, lit(b.first, b.second)));
    CHECK(has_clause(cnf, lit(a.first, a.second), lit(b.first, b.second) ^ 1));
  }
  const auto assignment = solve_2sat(cnf);
  REQUIRE(assignment);
  const ExchangeGraph g = apply_assignment(dmin, cnf, *assignment);
  CHECK(audit_almost_consistent(g, dmin, evil_table()).empty());
}

TEST_CASE("constant arcs fold away") {
  ExchangeGraph dmin(2, ElementSet{1});
  dmin.add_arc(0, 1);
  dmin.add_arc(1, 0);
  LEObservations obs(ElementSet{1}, ElementSet{0});
  obs.add({ElementSet{0}, ElementSet{1}, 1});
  const Cnf2 cnf = build_cnf(obs, dmin);
  CHECK(cnf.var_count() == 0);
  CHECK(cnf.clauses.empty());
  CHECK_FALSE(cnf.contradiction);
  LEObservations exclusive(ElementSet{1}, ElementSet{0});
  exclusive.add({ElementSet{0}, ElementSet{1}, 0});
  CHECK(build_cnf(exclusive, dmin).contradiction);
  CHECK_FALSE(solve_2sat(build_cnf(exclusive, dmin)));
}

TEST_CASE("2-SAT small cases") {
  Cnf2 cnf;
  cnf.arcs = {{0, 1}, {1, 0}};
  const ArcTerm a{ArcTerm::Kind::kVar, positive(0)};
  const ArcTerm b{ArcTerm::Kind::kVar, positive(1)};
  cnf.add(a, b);
  cnf.add(a.negated(), b);
  auto sol = solve_2sat(cnf);
  REQUIRE(sol);
  CHECK((*sol)[1]);
  CHECK_FALSE((*sol)[0]);
  CHECK(cnf.to_dimacs().find("p cnf 2 2") != std::string::npos);

  Cnf2 unsat;
  unsat.arcs = {{0, 1}};
  const ArcTerm c{ArcTerm::Kind::kVar, positive(0)};
  unsat.add(c, c);
  unsat.add(c.negated(), c.negated());
  CHECK_FALSE(solve_2sat(unsat));
}

TEST_CASE("2-SAT agrees with truth tables") {
  std::mt19937_64 rng(2024);
  int sat = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int vars = 1 + static_cast<int>(rng() % 12);
    const int clauses = static_cast<int>(rng() % (3 * vars + 1));
    Cnf2 cnf;
    cnf.arcs.assign(static_cast<std::size_t>(vars), {0, 0});
    for (int k = 0; k < clauses; ++k) {
      const Literal x = static_cast<Literal>(rng() % (2 * vars));
      const Literal y = static_cast<Literal>(rng() % (2 * vars));
      cnf.add({ArcTerm::Kind::kVar, x}, {ArcTerm::Kind::kVar, y});
    }
    bool brute = false;
    for (std::uint32_t mask = 0; mask < (1U << vars) && !brute; ++mask) {
      std::vector<bool> assignment(static_cast<std::size_t>(vars));
      for (int v = 0; v < vars; ++v) assignment[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
      brute = satisfies(cnf, assignment);
    }
    const auto solved = solve_2sat(cnf);
    CHECK(solved.has_value() == brute);
    if (solved) {
      CHECK(satisfies(cnf, *solved));
      ++sat;
    }
  }
  CHECK(sat > 100);
  CHECK(sat < 1000);
}
