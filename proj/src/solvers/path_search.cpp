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

#include "minrank/path_search.hpp"

namespace minrank {

std::string LexCost::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Rational> vertex_costs(const WeightFn& w, ElementSet independent) {
  std::vector<Rational> costs(w.size());
  for (std::size_t e = 0; e < w.size(); ++e) {
    costs[e] = independent.contains(static_cast<Element>(e)) ? w[e] : Rational(-w[e]);
  }
  return costs;
}

}  // namespace minrank
