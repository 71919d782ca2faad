#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "loopnr/table.hpp"

namespace loopnr {

/// Subset of the carrier 0..ambient-1 with bitset storage.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(std::size_t ambient) : ambient_(ambient), words_((ambient + 63) / 64, 0) {}

  static ElementSubset of(std::size_t ambient, std::initializer_list<Elem> elems);
  static ElementSubset of(std::size_t ambient, std::span<const Elem> elems);
  static ElementSubset full(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Elem x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  /// Sorted member list.
  std::vector<Elem> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSubset& other) const noexcept;
  bool is_full() const noexcept { return size() == ambient_; }

  ElementSubset complement() const;
  ElementSubset& operator|=(const ElementSubset& other) noexcept;
  ElementSubset& operator&=(const ElementSubset& other) noexcept;
  friend ElementSubset operator|(ElementSubset a, const ElementSubset& b) { return a |= b; }
  friend ElementSubset operator&(ElementSubset a, const ElementSubset& b) { return a &= b; }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical enumeration order: by size, then lexicographically on the sorted members.
bool canonical_less(const ElementSubset& a, const ElementSubset& b);

void sort_canonical(std::vector<ElementSubset>& subsets);

}  // namespace loopnr

template <>
struct std::hash<loopnr::ElementSubset> {
  std::size_t operator()(const loopnr::ElementSubset& s) const noexcept { return s.hash(); }
};
