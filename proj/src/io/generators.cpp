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

#include "minrank/generators.hpp"

#include <algorithm>

#include "minrank/errors.hpp"

namespace minrank {

std::string to_string(KindChoice kind) {
  switch (kind) {
    case KindChoice::kUniform:
      return "uniform";
    case KindChoice::kPartition:
      return "partition";
    case KindChoice::kGraphic:
      return "graphic";
    case KindChoice::kLinear:
      return "linear";
    case KindChoice::kExplicit:
      return "explicit";
  }
  return "?";
}

KindChoice kind_from_string(const std::string& name) {
  for (KindChoice k : {KindChoice::kUniform, KindChoice::kPartition, KindChoice::kGraphic,
                       KindChoice::kLinear, KindChoice::kExplicit}) {
    if (to_string(k) == name) return k;
  }
  throw DataError("unknown matroid kind '" + name + "'");
}

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Matroid random_linear(Rng& rng, int n) {
  const int rows = uniform_int(rng, 1, std::max(1, std::min(n, 4)));
  std::vector<std::vector<Rational>> matrix(static_cast<std::size_t>(rows),
                                            std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c) {
    bool nonzero = false;
    while (!nonzero) {
      for (int r = 0; r < rows; ++r) {
        const int v = uniform_int(rng, -2, 2);
        matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        nonzero = nonzero || v != 0;
      }
    }
  }
  return Matroid::linear(std::move(matrix), n);
}

}  // namespace

Matroid random_matroid(Rng& rng, int n, KindChoice kind) {
  switch (kind) {
    case KindChoice::kUniform:
      return Matroid::uniform(n, n == 0 ? 0 : uniform_int(rng, 1, n));
    case KindChoice::kPartition: {
      const int count = n == 0 ? 0 : uniform_int(rng, 1, n);
      std::vector<std::vector<Element>> blocks(static_cast<std::size_t>(count));
      for (Element e = 0; e < n; ++e) {
        blocks[static_cast<std::size_t>(uniform_int(rng, 0, count - 1))].push_back(e);
      }
      std::erase_if(blocks, [](const auto& b) { return b.empty(); });
      std::vector<int> caps;
      for (const auto& b : blocks) caps.push_back(uniform_int(rng, 1, static_cast<int>(b.size())));
      return Matroid::partition(n, std::move(blocks), std::move(caps));
    }
    case KindChoice::kGraphic: {
      const int vertices = uniform_int(rng, 2, std::max(2, n / 2 + 2));
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        const int u = uniform_int(rng, 0, vertices - 1);
        int v = uniform_int(rng, 0, vertices - 2);
        if (v >= u) ++v;
        edges.emplace_back(u, v);
      }
      return Matroid::graphic(vertices, std::move(edges));
    }
    case KindChoice::kLinear:
      return random_linear(rng, n);
    case KindChoice::kExplicit: {
      if (n > 12) throw PreconditionError("random explicit matroids need n <= 12");
      const Matroid base = random_linear(rng, n);
      const bool as_bases = uniform_int(rng, 0, 1) == 1;
      const int r = base.rank(base.ground());
      std::vector<ElementSet> family;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const ElementSet s(mask);
        if (!base.is_independent(s)) continue;
        if (!as_bases || s.size() == r) family.push_back(s);
      }
      return Matroid::explicit_family(
          n, std::move(family),
          as_bases ? ExplicitKind::Form::kBases : ExplicitKind::Form::kIndependentSets);
    }
  }
  throw PreconditionError("unknown matroid kind");
}

WeightFn random_weights(Rng& rng, int n, WeightStyle style) {
  WeightFn w;
  for (int e = 0; e < n; ++e) {
    switch (style) {
      case WeightStyle::kPositiveIntegers:
        w.emplace_back(uniform_int(rng, 1, 9));
        break;
      case WeightStyle::kMixedIntegers:
        w.emplace_back(uniform_int(rng, -2, 9));
        break;
      case WeightStyle::kRationals: {
        Rational v(uniform_int(rng, -2, 9), uniform_int(rng, 1, 3));
        v.canonicalize();
        w.push_back(v);
        break;
      }
    }
  }
  return w;
}

Instance random_instance(Rng& rng, const RandomSpec& spec) {
  if (spec.kinds.empty()) throw PreconditionError("random_instance needs at least one kind");
  auto pick = [&] {
    KindChoice k = spec.kinds[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<int>(spec.kinds.size()) - 1))];
    return random_matroid(rng, spec.n, k);
  };
  Matroid first = pick();
  Matroid second = pick();
  Instance inst{spec.n, {}, random_weights(rng, spec.n, spec.weights),
                MatroidPair{std::move(first), std::move(second)}};
  return inst;
}

Instance random_partition_pair(Rng& rng, int n) {
  auto one = [&] {
    const int count = std::max(1, n / 3);
    std::vector<std::vector<Element>> blocks(static_cast<std::size_t>(count));
    std::vector<Element> order(static_cast<std::size_t>(n));
    for (Element e = 0; e < n; ++e) order[static_cast<std::size_t>(e)] = e;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) blocks[i % blocks.size()].push_back(order[i]);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    std::vector<int> caps;
    for (const auto& b : blocks) caps.push_back(std::min<int>(uniform_int(rng, 1, 2), static_cast<int>(b.size())));
    return Matroid::partition(n, std::move(blocks), std::move(caps));
  };
  Matroid first = one();
  Matroid second = one();
  return Instance{n, {}, std::nullopt, MatroidPair{std::move(first), std::move(second)}};
}

Instance crossed_partition_instance() {
  return Instance{4,
                  {},
                  WeightFn{5, 4, 4, 1},
                  MatroidPair{Matroid::partition(4, {{0, 1}, {2, 3}}, {1, 1}),
                              Matroid::partition(4, {{0, 2}, {1, 3}}, {1, 1})}};
}

}  // namespace minrank
