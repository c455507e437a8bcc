#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace qposet {

/// Index of a carrier element. Valid range is [0, n) for the owning poset.
using Element = std::size_t;

/// Largest carrier the bitset representation supports.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of the carrier, stored as a 64-bit mask.
class ElementSet {
public:
  class iterator {
  public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(Element e) { return from_bits(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  /// Smallest member; undefined on the empty set.
  constexpr Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }

  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to the carrier [0, n).
  constexpr ElementSet complement(std::size_t n) const { return from_bits(~bits_ & full(n).bits_); }

  constexpr ElementSet operator&(ElementSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return from_bits(bits_ | o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Orders by index mask; used only for deterministic sorting.
  constexpr auto operator<=>(const ElementSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace qposet
