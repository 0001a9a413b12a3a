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

#include "minrank/oracle.hpp"

#include <string>

#include "minrank/errors.hpp"
#include "minrank/matroid.hpp"

namespace minrank {

MinRankOracle::MinRankOracle(std::shared_ptr<const MatroidPair> pair)
    : pair_(std::move(pair)) {
  if (!pair_) throw PreconditionError("MinRankOracle needs a matroid pair");
  n_ = pair_->ground_size();
  if (pair_->second.ground_size() != n_) {
    throw DataError("matroids have ground sets of different sizes");
  }
}

int MinRankOracle::rmin(ElementSet x) {
  if (!x.is_subset_of(ground())) {
    throw DomainError("set " + x.to_string() + " leaves ground set of size " +
                      std::to_string(n_));
  }
  ++queries_;
  return pair_->rmin(x);
}

const MatroidPair& hidden_pair(const MinRankOracle& oracle) { return *oracle.pair_; }

}  // namespace minrank
