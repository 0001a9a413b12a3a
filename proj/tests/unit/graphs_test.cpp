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
#include "minrank/errors.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/generators.hpp"
#include "minrank/query_cache.hpp"
#include "minrank/verify.hpp"

using namespace minrank;

TEST_CASE("true graph of the crossed partition pair at a basis") {
  const ExchangeGraph g = build_true_graph(testing::crossed_pair(), ElementSet{0, 3});
  CHECK(g.sources.empty());
  CHECK(g.sinks.empty());
  // y -> x when I - y + x stays independent in the first matroid.
  CHECK(g.out[0] == ElementSet{1});
  CHECK(g.out[3] == ElementSet{2});
  // x -> y when I - y + x stays independent in the second matroid.
  CHECK(g.out[1] == ElementSet{3});
  CHECK(g.out[2] == ElementSet{0});
  CHECK(g.arc_count() == 4);
}

TEST_CASE("true graph at the empty set and on the triangle") {
  const ExchangeGraph empty = build_true_graph(testing::crossed_pair(), ElementSet{});
  CHECK(empty.sources == ElementSet::universe(4));
  CHECK(empty.sinks == ElementSet::universe(4));
  CHECK(empty.arc_count() == 0);

  const MatroidPair tri{testing::triangle(), Matroid::uniform(3, 2)};
  const ExchangeGraph g = build_true_graph(tri, ElementSet{0, 1});
  CHECK(g.has_arc(0, 2));
  CHECK(g.has_arc(1, 2));
  CHECK(g.has_arc(2, 0));
  CHECK(g.has_arc(2, 1));
  CHECK(g.arc_count() == 4);
  CHECK_THROWS_AS(build_true_graph(tri, ElementSet{0, 1, 2}), PreconditionError);
}

TEST_CASE("arcs need exactly one endpoint in I") {
  ExchangeGraph g(3, ElementSet{1});
  g.add_arc(0, 1, true);
  CHECK(g.is_suspicious(0, 1));
  g.mark_sure(0, 1);
  CHECK_FALSE(g.is_suspicious(0, 1));
  CHECK_THROWS_AS(g.add_arc(0, 2), PreconditionError);
  CHECK(g.in_neighbors(1) == ElementSet{0});
  g.remove_arc(0, 1);
  CHECK(g.arc_count() == 0);
}

TEST_CASE("star pair search") {
  MinRankOracle o = testing::oracle_for(testing::crossed_pair());
  const StarPairOutcome direct = find_star_pair(o, ElementSet{0});
  CHECK(direct.kind == StarPairOutcome::Kind::kDirectAugment);
  CHECK(direct.direct == 3);
  const StarPairOutcome first = find_star_pair(o, ElementSet{});
  CHECK(first.kind == StarPairOutcome::Kind::kDirectAugment);
  CHECK(first.direct == 0);
  // {0,3} is a basis of both; every pair {s,t} outside I is {1,2}, and
  // r_min({0,1,2,3}) = 2, so no extension of size two raises the rank.
  CHECK(find_star_pair(o, ElementSet{0, 3}).kind == StarPairOutcome::Kind::kFlat);
}

TEST_CASE("shortest paths and certificates") {
  ExchangeGraph g(5, ElementSet{1, 3});
  g.sources = ElementSet{0};
  g.sinks = ElementSet{4};
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  g.add_arc(3, 4);
  g.add_arc(0, 3);
  const auto path = shortest_augmenting_path(g);
  REQUIRE(path);
  CHECK(*path == std::vector<Element>{0, 3, 4});
  CHECK(path_set(*path) == ElementSet{0, 3, 4});

  g.remove_arc(3, 4);
  CHECK_FALSE(shortest_augmenting_path(g));
  CHECK(reachability_certificate(g) == ElementSet{4});

  ExchangeGraph same(3, ElementSet{});
  same.sources = ElementSet{1, 2};
  same.sinks = ElementSet{2};
  CHECK(*shortest_augmenting_path(same) == std::vector<Element>{2});

  ExchangeGraph none(3, ElementSet{1});
  none.sources = ElementSet{0};
  CHECK(reachability_certificate(none).empty());
}

TEST_CASE("modified and intersected graphs contain the true graph") {
  Rng rng(3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RandomSpec spec;
    spec.n = 7;
    spec.kinds = {KindChoice::kPartition, KindChoice::kGraphic, KindChoice::kUniform};
    const Instance inst = random_instance(rng, spec);
    MinRankOracle o(std::make_shared<const MatroidPair>(inst.pair));
    for_each_common_independent(inst.pair, [&](ElementSet i) {
      QueryCache q(o);
      const PairProbe probe = probe_pairs(q, i, false);
      if (!probe.addable.empty() || probe.star_pairs.empty()) return;
      const StarPair sp = probe.star_pairs.front();
      const ExchangeGraph modified = build_modified_graph(q, i, sp);
      const ExchangeGraph meet = build_intersected_graph(q, i, sp);
      const auto aligned = align_pair(inst.pair, i, modified.sources);
      REQUIRE(aligned);
      const ExchangeGraph truth = build_true_graph(*aligned, i);
      CHECK(truth.sources == modified.sources);
      CHECK(truth.sinks == modified.sinks);
      CHECK(truth.arcs_subset_of(meet));
      CHECK(meet.arcs_subset_of(modified));
      CHECK(all_shortest_paths(truth) == all_shortest_paths(meet));
      ++checked;
    });
  }
  CHECK(checked > 20);
}

TEST_CASE("dot output marks suspicious arcs") {
  ExchangeGraph g(2, ElementSet{1});
  g.sources = ElementSet{0};
  g.add_arc(0, 1, true);
  const std::string dot = to_dot(g, {"a", "b"}, "demo");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot.find("\"a\"") != std::string::npos);
}
