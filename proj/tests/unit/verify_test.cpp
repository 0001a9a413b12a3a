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

#include "doctest.h"
#include "helpers.hpp"
#include "minrank/generators.hpp"
#include "minrank/verify.hpp"

using namespace minrank;

TEST_CASE("brute-force references on the crossed partition pair") {
  const MatroidPair pair = testing::crossed_pair();
  const MaxCommon best = brute_max_common(pair);
  CHECK(best.size == 2);
  const BruteDual dual = brute_dual(pair);
  CHECK(dual.rank_sum.value == 2);
  CHECK(dual.min_rank.value == 2);
  const WeightFn w = testing::crossed_weights();
  CHECK(brute_max_weight(pair, w) == 8);
  const WMaximal one = brute_w_maximal(pair, w, 1);
  CHECK(*one.weight == 5);
  CHECK(one.argmax == std::vector<ElementSet>{ElementSet{0}});
  CHECK_FALSE(brute_w_maximal(pair, w, 3).weight);
  const BruteLexmax lex = brute_lexmax(pair, w);
  CHECK(lex.set == ElementSet{0, 3});
  CHECK(lex.counts == std::vector<int>{1, 0, 1});
  int count = 0;
  for_each_common_independent(pair, [&](ElementSet) { ++count; });
  CHECK(count == 7);  // empty, four singletons, {0,3} and {1,2}
}

TEST_CASE("circuits and the inclusion promise") {
  CHECK(circuits(testing::triangle()) == std::vector<ElementSet>{ElementSet{0, 1, 2}});
  CHECK(largest_circuit(Matroid::uniform(5, 2)) == 3);
  CHECK(largest_circuit(Matroid::uniform(3, 3)) == 0);
  // U(2,3) has the triangle as its only circuit too.
  CHECK_FALSE(check_promise_no_circuit_inclusion({testing::triangle(), Matroid::uniform(3, 2)}));
  const Matroid p = Matroid::partition(4, {{0, 1}, {2, 3}}, {1, 1});
  CHECK_FALSE(check_promise_no_circuit_inclusion({p, p}));
  CHECK(check_promise_no_circuit_inclusion(testing::crossed_pair()));
  const CircuitInclusion inc = circuit_inclusion({testing::triangle(), Matroid::uniform(3, 1)});
  CHECK(inc.second_in_first_free == false);
  CHECK(inc.first_in_second_free == true);
  CHECK(inc.promise_holds());
}

TEST_CASE("matching enumeration helpers") {
  ExchangeGraph g(4, ElementSet{2, 3});
  g.add_arc(2, 0);
  g.add_arc(2, 1);
  g.add_arc(3, 1);
  CHECK(count_perfect_matchings(g, ElementSet{2, 3}, ElementSet{0, 1}) == 1);
  g.add_arc(3, 0);
  CHECK(count_perfect_matchings(g, ElementSet{2, 3}, ElementSet{0, 1}) == 2);
  g.add_arc(0, 2);
  g.add_arc(1, 3);
  CHECK(all_simple_cycles(g).size() >= 1);
  CHECK(check_exchange_matchings(testing::crossed_pair(), ElementSet{0, 3}).size() > 0);
  CHECK(all_agree(check_exchange_matchings(testing::crossed_pair(), ElementSet{0, 3})));
}

TEST_CASE("graph audit passes and catches an injected fault") {
  // Graphic triangle plus a pendant edge against a partition matroid.
  const MatroidPair pair{Matroid::graphic(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}}),
                         Matroid::partition(5, {{0, 3}, {1, 4}, {2}}, {1, 1, 1})};
  int applicable = 0;
  int caught = 0;
  for_each_common_independent(pair, [&](ElementSet i) {
    MinRankOracle o(std::make_shared<const MatroidPair>(pair));
    const GraphAudit clean = audit_graphs(o, i);
    if (!clean.applicable) return;
    ++applicable;
    for (const BruteReport& r : clean.reports) CHECK_MESSAGE(r.agree, format_report(r));
    AuditOptions faulty;
    faulty.fault.kind = AuditFault::Kind::kDropShortestPathArc;
    MinRankOracle o2(std::make_shared<const MatroidPair>(pair));
    const GraphAudit bad = audit_graphs(o2, i, faulty);
    if (bad.fault_injected) {
      CHECK_FALSE(bad.ok());
      ++caught;
    }
  });
  CHECK(applicable > 0);
  CHECK(caught > 0);
}

TEST_CASE("full verification suite on random instances") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    RandomSpec spec;
    spec.n = 6;
    spec.weights = WeightStyle::kRationals;
    const Instance inst = random_instance(rng, spec);
    SuiteOptions options;
    options.instance = "random-" + std::to_string(trial);
    for (const BruteReport& r : verify_instance(inst.pair, *inst.weights, options)) {
      CHECK_MESSAGE(r.agree, format_report(r));
    }
  }
}
