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

#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "minrank/errors.hpp"
#include "minrank/generators.hpp"
#include "minrank/instance.hpp"

using namespace minrank;

namespace {

std::string fixture(const std::string& name) {
  return std::string(MINRANK_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("crossed partition fixture loads") {
  const Instance inst = load_instance(fixture("crossed_partition.json"));
  CHECK(inst.n == 4);
  CHECK(inst.name(0) == "a");
  REQUIRE(inst.weights);
  CHECK(*inst.weights == testing::crossed_weights());
  CHECK(inst.pair.rmin(ElementSet{0, 3}) == 2);
}

TEST_CASE("loop element is rejected with its witness") {
  try {
    load_instance(fixture("loop_element.json"));
    FAIL("loaded a matroid with a loop");
  } catch (const DataError& e) {
    const std::string what = e.what();
    CHECK(what.find("instance.matroids[0]") != std::string::npos);
    CHECK(what.find("loop") != std::string::npos);
    CHECK(what.find("{2}") != std::string::npos);
  }
  LoadOptions lax;
  lax.validate = false;
  CHECK(load_instance(fixture("loop_element.json"), lax).n == 3);
}

TEST_CASE("linear fixture keeps exact rationals") {
  const Instance inst = load_instance(fixture("linear_rational.json"));
  const auto& lin = std::get<LinearKind>(inst.pair.first.kind());
  CHECK(lin.matrix[0][3] == Rational(2, 3));
  CHECK(lin.matrix[1][2] == Rational(-1, 3));
  CHECK((*inst.weights)[3] == Rational(7, 3));
  const Instance again = parse_instance(emit_instance(inst));
  CHECK(emit_instance(again) == emit_instance(inst));
  CHECK(std::get<LinearKind>(again.pair.first.kind()).matrix == lin.matrix);
}

TEST_CASE("emit and parse round trip on random instances") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    RandomSpec spec;
    spec.n = 7;
    spec.weights = WeightStyle::kRationals;
    const Instance inst = random_instance(rng, spec);
    const std::string text = emit_instance(inst);
    const Instance back = parse_instance(text);
    CHECK(emit_instance(back) == text);
    for_each_subset(ElementSet::universe(inst.n), [&](ElementSet x) {
      CHECK(back.pair.rmin(x) == inst.pair.rmin(x));
    });
  }
}

TEST_CASE("malformed files name the field or line") {
  auto message = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const DataError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message("{\"version\": 1, \"n\": 2,\n \"matroids\": [}").find("line 2") !=
        std::string::npos);
  CHECK(message(R"({"version": 9, "n": 2, "matroids": []})").find("version") != std::string::npos);
  CHECK(message(R"({"version": 1, "n": 2, "matroids": [{"kind": "uniform", "rank": 1},
      {"kind": "partition", "blocks": [[0, 7]], "capacities": [1]}]})")
            .find("instance.matroids[1].blocks[0]") != std::string::npos);
  CHECK(message(R"({"version": 1, "n": 2, "weights": ["1", "x"], "matroids": [
      {"kind": "uniform", "rank": 1}, {"kind": "uniform", "rank": 1}]})")
            .find("instance.weights[1]") != std::string::npos);
}

TEST_CASE("set literals") {
  CHECK(parse_set("{0,3}", 4) == ElementSet{0, 3});
  CHECK(parse_set("0b1001", 4) == ElementSet{0, 3});
  CHECK(parse_set("0x9", 4) == ElementSet{0, 3});
  CHECK(parse_set("9", 4) == ElementSet{0, 3});
  CHECK(parse_set("{}", 4) == ElementSet{});
  CHECK_THROWS_AS(parse_set("{5}", 4), DataError);
  CHECK_THROWS_AS(parse_set("0b10000", 4), DataError);
  CHECK_THROWS_AS(parse_set("{1,x}", 4), DataError);
}

TEST_CASE("generators are deterministic and loopless") {
  for (KindChoice kind : {KindChoice::kUniform, KindChoice::kPartition, KindChoice::kGraphic,
                          KindChoice::kLinear, KindChoice::kExplicit}) {
    Rng a(5);
    Rng b(5);
    for (int i = 0; i < 10; ++i) {
      const Matroid ma = random_matroid(a, 8, kind);
      const Matroid mb = random_matroid(b, 8, kind);
      CHECK(validate(ma).ok);
      for_each_subset(ElementSet::universe(8), [&](ElementSet x) {
        CHECK(ma.rank(x) == mb.rank(x));
      });
    }
    CHECK(kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(kind_from_string("ternary"), DataError);
  const Instance crossed = crossed_partition_instance();
  CHECK(crossed.pair.rmin(ElementSet{0, 3}) == 2);
  CHECK(*crossed.weights == testing::crossed_weights());
}
