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

#ifndef MINRANK_INSTANCE_HPP
#define MINRANK_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "minrank/matroid.hpp"
#include "minrank/rational.hpp"

namespace minrank {

inline constexpr int kInstanceVersion = 1;

/// A matroid intersection instance as stored on disk: two matroid specs on
/// {0, ..., n-1}, optional element names and optional exact weights.
struct Instance {
  int n = 0;
  std::vector<std::string> names;
  std::optional<WeightFn> weights;
  MatroidPair pair;

  /// Stored weights, or all ones.
  WeightFn weights_or_ones() const;
  /// Name of element e, or its index as text.
  std::string name(Element e) const;
};

struct LoadOptions {
  /// Reject matroids failing validate() (loops, broken axioms).
  bool validate = true;
};

/// Parses the JSON text form. Throws DataError naming the field (and the
/// line for syntax errors) on malformed input or failed validation.
Instance parse_instance(const std::string& text, const LoadOptions& options = {});

/// Reads and parses a file. Throws DataError when it cannot be read.
Instance load_instance(const std::string& path, const LoadOptions& options = {});

/// JSON text form; parse_instance(emit_instance(x)) reproduces x.
std::string emit_instance(const Instance& instance);

void save_instance(const Instance& instance, const std::string& path);

/// Parses "0b1011", "0x1f", a decimal mask or a set literal "{0,3}".
ElementSet parse_set(const std::string& text, int n);

}  // namespace minrank

#endif  // MINRANK_INSTANCE_HPP
