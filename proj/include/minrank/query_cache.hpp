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

#ifndef MINRANK_QUERY_CACHE_HPP
#define MINRANK_QUERY_CACHE_HPP

#include <unordered_map>

#include "minrank/element_set.hpp"
#include "minrank/oracle.hpp"

namespace minrank {

/// Memoizes r_min answers for one augmentation step, so that sets reached
/// by several constructions (pair probes, graph arcs, LE-pairs) are asked
/// only once. The underlying oracle ledger counts distinct queries.
///
/// An optional ground mask restricts every construction to a subset of E;
/// r_min restricted to subsets of it is the minimum rank of the restricted
/// matroids.
class QueryCache {
 public:
  explicit QueryCache(MinRankOracle& oracle) : oracle_(&oracle), ground_(oracle.ground()) {}
  QueryCache(MinRankOracle& oracle, ElementSet ground)
      : oracle_(&oracle), ground_(ground & oracle.ground()) {}

  int rmin(ElementSet x) {
    if (const auto it = memo_.find(x); it != memo_.end()) return it->second;
    const int value = oracle_->rmin(x);
    memo_.emplace(x, value);
    return value;
  }

  MinRankOracle& oracle() { return *oracle_; }
  int ground_size() const { return oracle_->ground_size(); }
  ElementSet ground() const { return ground_; }

 private:
  MinRankOracle* oracle_;
  ElementSet ground_;
  std::unordered_map<ElementSet, int> memo_;
};

}  // namespace minrank

#endif  // MINRANK_QUERY_CACHE_HPP
