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

#ifndef MINRANK_TESTS_HELPERS_HPP
#define MINRANK_TESTS_HELPERS_HPP

#include <memory>
#include <vector>

#include "minrank/matroid.hpp"
#include "minrank/oracle.hpp"
#include "minrank/rational.hpp"

namespace minrank::testing {

inline MatroidPair crossed_pair() {
  return MatroidPair{Matroid::partition(4, {{0, 1}, {2, 3}}, {1, 1}),
                     Matroid::partition(4, {{0, 2}, {1, 3}}, {1, 1})};
}

inline WeightFn crossed_weights() { return {5, 4, 4, 1}; }

/// Triangle graph on 3 vertices with edges 0 = {0,1}, 1 = {1,2}, 2 = {0,2}.
inline Matroid triangle() { return Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline MinRankOracle oracle_for(const MatroidPair& pair) {
  return MinRankOracle(std::make_shared<const MatroidPair>(pair));
}

}  // namespace minrank::testing

#endif  // MINRANK_TESTS_HELPERS_HPP
