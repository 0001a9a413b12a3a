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

#ifndef MINRANK_HIDDEN_HPP
#define MINRANK_HIDDEN_HPP

#include "minrank/matroid.hpp"
#include "minrank/oracle.hpp"

namespace minrank {

/// The matroid pair behind an oracle. Verification and graph emission of
/// the true graph use this; solver sources must not include this header.
const MatroidPair& hidden_pair(const MinRankOracle& oracle);

}  // namespace minrank

#endif  // MINRANK_HIDDEN_HPP
