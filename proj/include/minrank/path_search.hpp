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

#ifndef MINRANK_PATH_SEARCH_HPP
#define MINRANK_PATH_SEARCH_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "minrank/errors.hpp"
#include "minrank/exchange_graph.hpp"
#include "minrank/rational.hpp"

namespace minrank {

/// Signed element counts per weight class, heaviest class first, compared
/// lexicographically. Stands in for costs (n+1)^(l-i) without big numbers.
class LexCost {
 public:
  LexCost() = default;
  explicit LexCost(std::size_t classes) : parts_(classes, 0) {}
  static LexCost unit(std::size_t classes, std::size_t index, int sign) {
    LexCost c(classes);
    c.parts_[index] = sign;
    return c;
  }

  const std::vector<long long>& parts() const { return parts_; }
  bool is_negative() const {
    for (long long p : parts_) {
      if (p != 0) return p < 0;
    }
    return false;
  }

  LexCost& operator+=(const LexCost& o) {
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += o.parts_[i];
    return *this;
  }
  LexCost& operator-=(const LexCost& o) {
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= o.parts_[i];
    return *this;
  }
  friend LexCost operator+(LexCost a, const LexCost& b) { return a += b; }
  friend LexCost operator-(LexCost a, const LexCost& b) { return a -= b; }
  friend bool operator==(const LexCost&, const LexCost&) = default;
  friend auto operator<=>(const LexCost& a, const LexCost& b) { return a.parts_ <=> b.parts_; }

  std::string to_string() const;

 private:
  std::vector<long long> parts_;
};

/// Vertex costs c(e) = w(e) on I and -w(e) outside I.
std::vector<Rational> vertex_costs(const WeightFn& w, ElementSet independent);

/// (cost, length) label of a path, compared cost first.
template <class Cost>
struct PathLabel {
  Cost cost;
  int length = 0;
  bool operator<(const PathLabel& o) const {
    if (cost < o.cost) return true;
    if (o.cost < cost) return false;
    return length < o.length;
  }
  bool operator==(const PathLabel& o) const { return cost == o.cost && length == o.length; }
};

template <class Cost>
Cost path_cost(const std::vector<Element>& path, const std::vector<Cost>& costs, Cost zero) {
  for (Element v : path) zero += costs[static_cast<std::size_t>(v)];
  return zero;
}

/// Whether some cycle has negative total vertex cost (Bellman-Ford from a
/// virtual root: n relaxation rounds, then one probe round).
template <class Cost>
bool has_negative_cycle(const ExchangeGraph& g, const std::vector<Cost>& costs,
                        const Cost& zero) {
  std::vector<Cost> dist(static_cast<std::size_t>(g.n), zero);
  auto round = [&]() {
    bool changed = false;
    for (Element u = 0; u < g.n; ++u) {
      for (Element v : g.out[static_cast<std::size_t>(u)]) {
        Cost candidate = dist[static_cast<std::size_t>(u)] + costs[static_cast<std::size_t>(v)];
        if (candidate < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = candidate;
          changed = true;
        }
      }
    }
    return changed;
  };
  for (int i = 0; i < g.n; ++i) {
    if (!round()) return false;
  }
  return round();
}

/// Cheapest S-T path, then shortest among those, then lexicographically
/// smallest vertex sequence. Costs are summed over every vertex, endpoints
/// included. Throws ContractViolation when a negative cycle reaches T.
template <class Cost>
std::optional<std::vector<Element>> shortest_cheapest_path(const ExchangeGraph& g,
                                                           const std::vector<Cost>& costs,
                                                           const Cost& /*zero*/) {
  using Label = PathLabel<Cost>;
  const auto n = static_cast<std::size_t>(g.n);
  // label[v]: best (cost, length) of a path from v ending in T.
  std::vector<std::optional<Label>> label(n);
  for (Element t : g.sinks) label[static_cast<std::size_t>(t)] = Label{costs[static_cast<std::size_t>(t)], 0};
  auto round = [&]() {
    bool changed = false;
    for (Element u = 0; u < g.n; ++u) {
      for (Element v : g.out[static_cast<std::size_t>(u)]) {
        const auto& lv = label[static_cast<std::size_t>(v)];
        if (!lv) continue;
        Label candidate{costs[static_cast<std::size_t>(u)] + lv->cost, lv->length + 1};
        auto& lu = label[static_cast<std::size_t>(u)];
        if (!lu || candidate < *lu) {
          lu = candidate;
          changed = true;
        }
      }
    }
    return changed;
  };
  bool stable = false;
  for (int i = 0; i <= g.n && !stable; ++i) stable = !round();
  if (!stable && round()) {
    throw ContractViolation("negative-cost cycle reaches the sinks");
  }
  Element start = -1;
  for (Element s : g.sources) {
    const auto& ls = label[static_cast<std::size_t>(s)];
    if (ls && (start == -1 || *ls < *label[static_cast<std::size_t>(start)])) start = s;
  }
  if (start == -1) return std::nullopt;
  std::vector<Element> path{start};
  Element v = start;
  Label want = *label[static_cast<std::size_t>(v)];
  while (want.length > 0) {
    const Cost rest = want.cost - costs[static_cast<std::size_t>(v)];
    Element next = -1;
    for (Element w : g.out[static_cast<std::size_t>(v)]) {
      const auto& lw = label[static_cast<std::size_t>(w)];
      if (lw && lw->cost == rest && lw->length == want.length - 1) {
        next = w;
        break;
      }
    }
    if (next == -1) throw ContractViolation("cheapest path reconstruction failed");
    v = next;
    want = Label{rest, want.length - 1};
    path.push_back(v);
  }
  return path;
}

}  // namespace minrank

#endif  // MINRANK_PATH_SEARCH_HPP
