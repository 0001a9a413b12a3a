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

#include "minrank/rational.hpp"

#include <cctype>
#include <utility>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw DataError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw DataError("zero denominator in '" + std::string(text) + "'");
  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational weight_of(const WeightFn& w, ElementSet set) {
  Rational total = 0;
  for (Element e : set) total += w[static_cast<std::size_t>(e)];
  return total;
}

int rational_column_rank(const std::vector<std::vector<Rational>>& matrix,
                         ElementSet columns) {
  if (matrix.empty() || columns.empty()) return 0;
  // Column-major copy of the selected columns; eliminate column by column.
  std::vector<std::vector<Rational>> cols;
  cols.reserve(static_cast<std::size_t>(columns.size()));
  for (Element c : columns) {
    std::vector<Rational> col;
    col.reserve(matrix.size());
    for (const auto& row : matrix) col.push_back(row[static_cast<std::size_t>(c)]);
    cols.push_back(std::move(col));
  }
  const std::size_t rows = matrix.size();
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  int rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    // Reduce against the pivots found so far.
    for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
      const std::size_t r = pivot_rows[p];
      if (col[r] == 0) continue;
      const auto& pivot = cols[pivot_cols[p]];
      const Rational factor = col[r] / pivot[r];
      for (std::size_t i = 0; i < rows; ++i) {
        if (pivot[i] != 0) col[i] -= factor * pivot[i];
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (col[i] != 0) {
        pivot_rows.push_back(i);
        pivot_cols.push_back(j);
        ++rank;
        break;
      }
    }
    if (rank == static_cast<int>(rows)) break;
  }
  return rank;
}

}  // namespace minrank
