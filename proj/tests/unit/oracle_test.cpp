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
#include "minrank/oracle.hpp"
#include "minrank/query_cache.hpp"

using namespace minrank;

TEST_CASE("minimum rank of the pair") {
  const MatroidPair uni{Matroid::uniform(3, 1), Matroid::uniform(3, 2)};
  CHECK(uni.rmin(ElementSet{0, 1}) == 1);
  CHECK(uni.rmin(ElementSet{}) == 0);
  CHECK(testing::crossed_pair().rmin(ElementSet{0, 3}) == 2);
  CHECK(testing::crossed_pair().rmin(ElementSet{0, 1}) == 1);
}

TEST_CASE("oracle counts every query") {
  MinRankOracle o = testing::oracle_for(testing::crossed_pair());
  CHECK(o.query_count() == 0);
  CHECK(o.rmin(ElementSet{0, 3}) == 2);
  CHECK(o.query_count() == 1);
  CHECK(o.is_common_independent(ElementSet{0, 3}));
  CHECK_FALSE(o.is_common_independent(ElementSet{0, 1}));
  CHECK(o.is_common_independent(ElementSet{}));
  CHECK(o.query_count() == 4);
  for (int k = 0; k < 5; ++k) o.rmin(ElementSet{1});
  CHECK(o.query_count() == 9);
  CHECK_THROWS_AS(o.rmin(ElementSet{4}), DomainError);
  MinRankOracle fresh = o.clone();
  CHECK(fresh.query_count() == 0);
  CHECK(fresh.rmin(ElementSet{1, 2}) == 2);
}

TEST_CASE("query cache charges each set once") {
  MinRankOracle o = testing::oracle_for(testing::crossed_pair());
  QueryCache q(o);
  CHECK(q.rmin(ElementSet{0, 3}) == 2);
  CHECK(q.rmin(ElementSet{0, 3}) == 2);
  CHECK(o.query_count() == 1);
  CHECK_THROWS_AS(q.rmin(ElementSet{9}), DomainError);
  CHECK(q.rmin(ElementSet{0, 1}) == 1);
  CHECK(o.query_count() == 2);
}
