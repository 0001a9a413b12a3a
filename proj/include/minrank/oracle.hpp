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

#ifndef MINRANK_ORACLE_HPP
#define MINRANK_ORACLE_HPP

#include <cstdint>
#include <memory>

#include "minrank/element_set.hpp"

namespace minrank {

struct MatroidPair;

/// Query-counted access to r_min(X) = min(r1(X), r2(X)) of a hidden pair.
///
/// This is the only interface the solvers see. The matroid pair type is
/// incomplete here, so solver translation units cannot evaluate either rank
/// on its own; the build audits that they never include matroid.hpp.
class MinRankOracle {
 public:
  explicit MinRankOracle(std::shared_ptr<const MatroidPair> pair);

  int ground_size() const { return n_; }
  ElementSet ground() const { return ElementSet::universe(n_); }

  /// r_min(X); counts one query. Throws DomainError when X leaves E.
  int rmin(ElementSet x);

  /// r_min(I) == |I|; counts one query.
  bool is_common_independent(ElementSet i) { return rmin(i) == i.size(); }

  std::int64_t query_count() const { return queries_; }

  /// Same hidden pair, fresh ledger.
  MinRankOracle clone() const { return MinRankOracle(pair_); }

 private:
  friend const MatroidPair& hidden_pair(const MinRankOracle& oracle);

  std::shared_ptr<const MatroidPair> pair_;
  int n_ = 0;
  std::int64_t queries_ = 0;
};

}  // namespace minrank

#endif  // MINRANK_ORACLE_HPP
