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

#ifndef MINRANK_ELEMENT_SET_HPP
#define MINRANK_ELEMENT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace minrank {

/// Dense element index in [0, n).
using Element = int;

/// Ground sets are capped at this many elements.
inline constexpr int kMaxElements = 64;

/// Fixed-width subset of the ground set, one bit per element.
///
/// Set algebra is exact bit arithmetic. The width is implicit: callers keep
/// every mask inside the universe of the instance they work on.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  static constexpr ElementSet universe(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Element e) {
    return ElementSet(std::uint64_t{1} << e);
  }
  static ElementSet from_vector(const std::vector<Element>& elements) {
    ElementSet s;
    for (Element e : elements) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr Element min() const { return std::countr_zero(bits_); }
  /// One past the largest element, 0 when empty.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr ElementSet with(Element e) const {
    return ElementSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(Element e) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Orders by bit pattern; used only for deterministic container ordering.
  constexpr auto operator<=>(const ElementSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  /// Iterates members in increasing order.
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  /// "{0,3,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element e : *this) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls `fn` on every subset of `base`, including the empty set and `base`.
template <class Fn>
void for_each_subset(ElementSet base, Fn&& fn) {
  const std::uint64_t b = base.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == b) break;
    sub = (sub - b) & b;
  }
}

}  // namespace minrank

template <>
struct std::hash<minrank::ElementSet> {
  std::size_t operator()(minrank::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // MINRANK_ELEMENT_SET_HPP
