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

#ifndef MINRANK_RATIONAL_HPP
#define MINRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "minrank/element_set.hpp"

namespace minrank {

/// Exact arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q". Throws DataError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Per-element weights w: E -> Q.
using WeightFn = std::vector<Rational>;

/// w(X) = sum of w(e) over e in X.
Rational weight_of(const WeightFn& w, ElementSet set);

/// Rank of a dense rational matrix restricted to the given columns, by
/// exact Gaussian elimination.
int rational_column_rank(const std::vector<std::vector<Rational>>& matrix,
                         ElementSet columns);

}  // namespace minrank

#endif  // MINRANK_RATIONAL_HPP
