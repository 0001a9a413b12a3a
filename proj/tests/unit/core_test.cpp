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

#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "minrank/element_set.hpp"
#include "minrank/errors.hpp"
#include "minrank/matroid.hpp"
#include "minrank/rational.hpp"

using namespace minrank;

TEST_CASE("element sets behave as bit sets") {
  ElementSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.to_string() == "{0,3,5}");
  CHECK((s - ElementSet{3}).to_vector() == std::vector<Element>{0, 5});
  CHECK(ElementSet::universe(64).size() == 64);
  CHECK(ElementSet{1, 2}.is_subset_of(ElementSet{0, 1, 2}));
  int count = 0;
  for_each_subset(ElementSet{1, 4, 6}, [&](ElementSet) { ++count; });
  CHECK(count == 8);
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-2/1")) == "-2");
  CHECK(format_rational(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), DataError);
  CHECK_THROWS_AS(parse_rational("1.5"), DataError);
  CHECK_THROWS_AS(parse_rational("3/-4"), DataError);
  CHECK(weight_of({Rational(1, 2), Rational(1, 3), 1}, ElementSet{0, 1}) == Rational(5, 6));
}

TEST_CASE("exact column rank") {
  const std::vector<std::vector<Rational>> m = {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
  CHECK(rational_column_rank(m, ElementSet{0, 1}) == 1);
  CHECK(rational_column_rank(m, ElementSet{0, 1, 2}) == 2);
  CHECK(rational_column_rank(m, ElementSet{}) == 0);
}

TEST_CASE("rank of each kind") {
  CHECK(Matroid::uniform(4, 2).rank(ElementSet{0, 1, 2}) == 2);
  CHECK(testing::triangle().rank(ElementSet{0, 1, 2}) == 2);
  CHECK(testing::triangle().rank(ElementSet{}) == 0);
  const Matroid p = Matroid::partition(4, {{0, 1}, {2, 3}}, {1, 1});
  CHECK(p.rank(ElementSet{}) == 0);
  CHECK(p.is_independent(ElementSet{0, 3}));
  CHECK_FALSE(p.is_independent(ElementSet{0, 1}));
  CHECK(p.is_independent(ElementSet{}));
  const Matroid lin = Matroid::linear({{1, 0, 1}, {0, 1, 1}}, 3);
  CHECK(lin.rank(ElementSet{0, 1, 2}) == 2);
  CHECK(lin.rank(ElementSet{2}) == 1);
  const Matroid ex = Matroid::explicit_family(
      3, {ElementSet{0, 1}, ElementSet{1, 2}}, ExplicitKind::Form::kBases);
  CHECK(ex.rank(ElementSet{0, 2}) == 1);
  CHECK(ex.rank(ElementSet{0, 1, 2}) == 2);
  CHECK_THROWS_AS(p.rank(ElementSet{7}), DomainError);
}

TEST_CASE("fundamental circuits") {
  const Matroid p = Matroid::partition(4, {{0, 1}, {2, 3}}, {1, 1});
  CHECK(p.fundamental_circuit(ElementSet{0, 3}, 1) == ElementSet{0});
  CHECK(testing::triangle().fundamental_circuit(ElementSet{0, 1}, 2) == ElementSet{0, 1});
  CHECK(Matroid::uniform(3, 1).fundamental_circuit(ElementSet{0}, 2) == ElementSet{0});
  CHECK_THROWS_AS(p.fundamental_circuit(ElementSet{0, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(p.fundamental_circuit(ElementSet{0}, 2), PreconditionError);
}

TEST_CASE("validation reports axiom violations") {
  const auto loops = validate(Matroid::explicit_family(3, {ElementSet{}, ElementSet{0}, ElementSet{1}}));
  CHECK_FALSE(loops.ok);
  CHECK(loops.axiom == "loopless");
  CHECK(loops.witnesses == std::vector<ElementSet>{ElementSet{2}});
  CHECK(validate(Matroid::uniform(4, 2)).ok);
  const auto closure = validate(Matroid::explicit_family(2, {ElementSet{}, ElementSet{0, 1}}));
  CHECK_FALSE(closure.ok);
  CHECK(closure.axiom == "downward-closed");
}

TEST_CASE("structural errors throw at construction") {
  CHECK_THROWS_AS(Matroid::partition(4, {{0, 1}, {1, 2, 3}}, {1, 1}), DataError);
  CHECK_THROWS_AS(Matroid::graphic(2, {{0, 5}}), DataError);
  CHECK_THROWS_AS(Matroid::linear({{1, 0}, {0}}, 2), DataError);
}
