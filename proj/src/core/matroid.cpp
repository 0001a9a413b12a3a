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

#include "minrank/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

constexpr int kRankTableLimit = 20;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

int explicit_rank_scan(const ExplicitKind& k, ElementSet x) {
  int best = 0;
  for (ElementSet g : k.family) best = std::max(best, (g & x).size());
  return best;
}

// rank[X] for the downward closure of the family, by two sweeps over 2^n.
std::vector<unsigned char> explicit_rank_table(int n, const ExplicitKind& k) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<unsigned char> independent(count, 0);
  for (ElementSet g : k.family) independent[g.bits()] = 1;
  // Downward closure: X is independent if some X + e is.
  for (std::size_t mask = count; mask-- > 0;) {
    if (independent[mask]) continue;
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((mask & bit) == 0 && independent[mask | bit]) {
        independent[mask] = 1;
        break;
      }
    }
  }
  std::vector<unsigned char> rank(count, 0);
  for (std::size_t mask = 1; mask < count; ++mask) {
    if (independent[mask]) {
      rank[mask] = static_cast<unsigned char>(std::popcount(mask));
      continue;
    }
    unsigned char best = 0;
    for (std::size_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::size_t bit = rest & (~rest + 1);
      best = std::max(best, rank[mask & ~bit]);
    }
    rank[mask] = best;
  }
  return rank;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw DataError(message);
}

}  // namespace

Matroid::Matroid(int n, MatroidKind kind) : n_(n) {
  require(n >= 0 && n <= kMaxElements,
          "ground set size " + std::to_string(n) + " outside [0, 64]");
  const ElementSet all = ElementSet::universe(n);
  std::visit(
      [&](auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UniformKind>) {
          require(k.rank >= 0, "uniform rank must be nonnegative");
        } else if constexpr (std::is_same_v<K, PartitionKind>) {
          require(k.blocks.size() == k.capacities.size(),
                  "partition needs one capacity per block");
          block_of_.assign(static_cast<std::size_t>(n), -1);
          for (std::size_t b = 0; b < k.blocks.size(); ++b) {
            require(k.capacities[b] >= 0, "partition capacity must be nonnegative");
            for (Element e : k.blocks[b]) {
              require(e >= 0 && e < n, "partition element out of range");
              require(block_of_[static_cast<std::size_t>(e)] == -1,
                      "element " + std::to_string(e) + " appears in two blocks");
              block_of_[static_cast<std::size_t>(e)] = static_cast<int>(b);
            }
          }
          for (int e = 0; e < n; ++e) {
            require(block_of_[static_cast<std::size_t>(e)] != -1,
                    "element " + std::to_string(e) + " belongs to no block");
          }
        } else if constexpr (std::is_same_v<K, GraphicKind>) {
          require(static_cast<int>(k.edges.size()) == n, "graphic matroid needs one edge per element");
          for (auto [u, v] : k.edges) {
            require(u >= 0 && u < k.vertices && v >= 0 && v < k.vertices,
                    "edge endpoint out of range");
          }
        } else if constexpr (std::is_same_v<K, LinearKind>) {
          for (const auto& row : k.matrix) {
            require(static_cast<int>(row.size()) == n, "matrix row length differs from n");
          }
        } else if constexpr (std::is_same_v<K, ExplicitKind>) {
          for (ElementSet g : k.family) {
            require(g.is_subset_of(all), "explicit family member leaves the ground set");
          }
          require(k.form == ExplicitKind::Form::kBases || !k.family.empty(),
                  "explicit family must list at least the empty set");
          if (n <= kRankTableLimit) {
            rank_table_ = std::make_shared<const std::vector<unsigned char>>(
                explicit_rank_table(n, k));
          }
        }
      },
      kind);
  kind_ = std::make_shared<const MatroidKind>(std::move(kind));
}

Matroid Matroid::uniform(int n, int rank) { return Matroid(n, UniformKind{rank}); }

Matroid Matroid::partition(int n, std::vector<std::vector<Element>> blocks,
                           std::vector<int> capacities) {
  return Matroid(n, PartitionKind{std::move(blocks), std::move(capacities)});
}

Matroid Matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  const int n = static_cast<int>(edges.size());
  return Matroid(n, GraphicKind{vertices, std::move(edges)});
}

Matroid Matroid::linear(std::vector<std::vector<Rational>> matrix, int n) {
  return Matroid(n, LinearKind{std::move(matrix)});
}

Matroid Matroid::explicit_family(int n, std::vector<ElementSet> family,
                                 ExplicitKind::Form form) {
  return Matroid(n, ExplicitKind{form, std::move(family)});
}

std::string Matroid::kind_name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UniformKind>) return "uniform";
        if constexpr (std::is_same_v<K, PartitionKind>) return "partition";
        if constexpr (std::is_same_v<K, GraphicKind>) return "graphic";
        if constexpr (std::is_same_v<K, LinearKind>) return "linear";
        return "explicit";
      },
      *kind_);
}

int Matroid::rank(ElementSet x) const {
  if (!x.is_subset_of(ground())) {
    throw DomainError("set " + x.to_string() + " leaves ground set of size " +
                      std::to_string(n_));
  }
  if (x.empty()) return 0;
  return std::visit(
      [&](const auto& k) -> int {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UniformKind>) {
          return std::min(x.size(), k.rank);
        } else if constexpr (std::is_same_v<K, PartitionKind>) {
          std::vector<int> used(k.blocks.size(), 0);
          for (Element e : x) ++used[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(e)])];
          int r = 0;
          for (std::size_t b = 0; b < used.size(); ++b) r += std::min(used[b], k.capacities[b]);
          return r;
        } else if constexpr (std::is_same_v<K, GraphicKind>) {
          UnionFind forest(k.vertices);
          int r = 0;
          for (Element e : x) {
            const auto [u, v] = k.edges[static_cast<std::size_t>(e)];
            if (forest.unite(u, v)) ++r;
          }
          return r;
        } else if constexpr (std::is_same_v<K, LinearKind>) {
          return rational_column_rank(k.matrix, x);
        } else {
          if (rank_table_) return (*rank_table_)[x.bits()];
          return explicit_rank_scan(k, x);
        }
      },
      *kind_);
}

ElementSet Matroid::fundamental_circuit(ElementSet independent, Element x) const {
  if (x < 0 || x >= n_) throw DomainError("element " + std::to_string(x) + " out of range");
  if (!is_independent(independent)) {
    throw PreconditionError("fundamental_circuit: base set is not independent");
  }
  if (independent.contains(x)) {
    throw PreconditionError("fundamental_circuit: element already in the set");
  }
  const ElementSet grown = independent.with(x);
  if (is_independent(grown)) {
    throw PreconditionError("fundamental_circuit: " + grown.to_string() +
                            " is independent, no circuit");
  }
  ElementSet circuit;
  for (Element y : independent) {
    if (is_independent(grown.without(y))) circuit.insert(y);
  }
  return circuit;
}

int MatroidPair::rmin(ElementSet x) const {
  return std::min(first.rank(x), second.rank(x));
}

ValidationReport validate(const Matroid& m) {
  const int n = m.ground_size();
  auto fail = [](std::string axiom, std::string message, std::vector<ElementSet> witnesses) {
    return ValidationReport{false, std::move(axiom), std::move(message), std::move(witnesses)};
  };

  if (const auto* ex = std::get_if<ExplicitKind>(&m.kind()); ex != nullptr && n <= 16) {
    std::unordered_set<ElementSet> members(ex->family.begin(), ex->family.end());
    if (ex->form == ExplicitKind::Form::kIndependentSets) {
      if (!members.contains(ElementSet{})) {
        return fail("downward-closed", "family does not contain the empty set", {ElementSet{}});
      }
      for (ElementSet s : ex->family) {
        for (Element e : s) {
          if (!members.contains(s.without(e))) {
            return fail("downward-closed",
                        s.to_string() + " is listed but " + s.without(e).to_string() + " is not",
                        {s, s.without(e)});
          }
        }
      }
      for (ElementSet a : ex->family) {
        for (ElementSet b : ex->family) {
          if (a.size() >= b.size()) continue;
          bool extends = false;
          for (Element e : b - a) {
            if (members.contains(a.with(e))) {
              extends = true;
              break;
            }
          }
          if (!extends) {
            return fail("exchange", a.to_string() + " cannot be extended from " + b.to_string(),
                        {a, b});
          }
        }
      }
    } else {
      if (ex->family.empty()) return fail("bases", "no bases listed", {});
      for (ElementSet b1 : ex->family) {
        if (b1.size() != ex->family.front().size()) {
          return fail("bases", "bases differ in size", {ex->family.front(), b1});
        }
        for (ElementSet b2 : ex->family) {
          for (Element x : b1 - b2) {
            bool exchanges = false;
            for (Element y : b2 - b1) {
              if (members.contains(b1.without(x).with(y))) {
                exchanges = true;
                break;
              }
            }
            if (!exchanges) {
              return fail("exchange", "no basis exchange for element " + std::to_string(x),
                          {b1, b2});
            }
          }
        }
      }
    }
  }

  if (m.rank(ElementSet{}) != 0) return fail("normalization", "r(empty) != 0", {ElementSet{}});

  for (Element e = 0; e < n; ++e) {
    if (m.rank(ElementSet::singleton(e)) != 1) {
      return fail("loopless", "element " + std::to_string(e) + " is a loop",
                  {ElementSet::singleton(e)});
    }
  }

  if (n <= 12) {
    const std::size_t count = std::size_t{1} << n;
    std::vector<int> r(count);
    for (std::size_t mask = 0; mask < count; ++mask) r[mask] = m.rank(ElementSet(mask));
    for (std::size_t mask = 0; mask < count; ++mask) {
      const ElementSet x(mask);
      for (Element a = 0; a < n; ++a) {
        if (x.contains(a)) continue;
        const int ra = r[x.with(a).bits()];
        if (ra < r[mask] || ra > r[mask] + 1) {
          return fail("unit-increase", "r(X + e) - r(X) not in {0, 1}", {x, x.with(a)});
        }
        for (Element b = a + 1; b < n; ++b) {
          if (x.contains(b)) continue;
          if (ra + r[x.with(b).bits()] < r[x.with(a).with(b).bits()] + r[mask]) {
            return fail("submodular", "local submodularity fails", {x.with(a), x.with(b)});
          }
        }
      }
    }
  }
  return {};
}

}  // namespace minrank
