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

#ifndef MINRANK_ERRORS_HPP
#define MINRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minrank {

/// An element index or set falls outside the ground set.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A caller broke a documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input data is malformed or inconsistent with the rank axioms.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal guarantee failed (negative cycle at a w-maximal set,
/// unsatisfiable consistency CNF, violated promise). Maps to CLI exit code 3.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minrank

#endif  // MINRANK_ERRORS_HPP
