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

#ifndef MINRANK_GENERATORS_HPP
#define MINRANK_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minrank/instance.hpp"
#include "minrank/matroid.hpp"

namespace minrank {

using Rng = std::mt19937_64;

enum class KindChoice { kUniform, kPartition, kGraphic, kLinear, kExplicit };

std::string to_string(KindChoice kind);
/// Throws DataError on an unknown name.
KindChoice kind_from_string(const std::string& name);

/// A random loopless matroid of the given kind on n elements. Explicit
/// matroids list the independent sets or bases of a random linear matroid
/// and need n <= 12.
Matroid random_matroid(Rng& rng, int n, KindChoice kind);

enum class WeightStyle {
  kPositiveIntegers,  // 1..9
  kMixedIntegers,     // -2..9
  kRationals,         // p/q with p in -2..9, q in 1..3
};

WeightFn random_weights(Rng& rng, int n, WeightStyle style);

struct RandomSpec {
  int n = 6;
  std::vector<KindChoice> kinds = {KindChoice::kUniform, KindChoice::kPartition,
                                   KindChoice::kGraphic, KindChoice::kLinear,
                                   KindChoice::kExplicit};
  WeightStyle weights = WeightStyle::kPositiveIntegers;
};

/// Two matroids drawn independently from spec.kinds, plus weights.
Instance random_instance(Rng& rng, const RandomSpec& spec);

/// Two random partition matroids with about n / 3 blocks each and
/// capacities in {1, 2}; the benchmark family.
Instance random_partition_pair(Rng& rng, int n);

/// The four-element crossed partition pair: blocks {0,1},{2,3} against
/// {0,2},{1,3}, capacities 1, weights (5, 4, 4, 1).
Instance crossed_partition_instance();

}  // namespace minrank

#endif  // MINRANK_GENERATORS_HPP
