#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "loopnr/errors.hpp"
#include "loopnr/limits.hpp"
#include "loopnr/subset.hpp"
#include "loopnr/table.hpp"

namespace loopnr {

/// A finite loop given by its addition table on 0..n-1, zero at index 0.
///
/// Instances only come out of validate_loop, so every CayleyLoop is a Latin
/// square with a two-sided zero. Both difference tables are solved once at
/// validation time. Copies share the immutable tables.
class CayleyLoop {
 public:
  CayleyLoop() = default;

  std::size_t size() const noexcept { return tables_ ? tables_->add.size() : 0; }
  static constexpr Elem zero() noexcept { return 0; }

  Elem add(Elem a, Elem b) const noexcept { return tables_->add(a, b); }
  /// a \ b: the unique x with a + x = b.
  Elem ldiff(Elem a, Elem b) const noexcept { return tables_->ldiff(a, b); }
  /// b / a: the unique y with y + a = b.
  Elem rdiff(Elem b, Elem a) const noexcept { return tables_->rdiff(b, a); }

  const Table& add_table() const noexcept { return tables_->add; }
  const Table& ldiff_table() const noexcept { return tables_->ldiff; }
  const Table& rdiff_table() const noexcept { return tables_->rdiff; }

  friend bool operator==(const CayleyLoop& a, const CayleyLoop& b) {
    return a.tables_ == b.tables_ || (a.tables_ && b.tables_ && a.tables_->add == b.tables_->add);
  }

 private:
  struct Tables {
    Table add;
    Table ldiff;
    Table rdiff;
  };
  std::shared_ptr<const Tables> tables_;

  friend CayleyLoop validate_loop(const Table& add);
};

/// Every loop axiom the table violates, one entry per axiom with its first witness.
std::vector<Violation> loop_violations(const Table& add);

/// Throws ValidationError (NotLatinSquare, NoTwoSidedZero) on the first failure.
CayleyLoop validate_loop(const Table& add);
CayleyLoop validate_loop(const std::vector<std::vector<Elem>>& rows);

std::optional<std::array<Elem, 3>> associativity_witness(const CayleyLoop& loop);
bool is_associative(const CayleyLoop& loop);
bool is_commutative(const CayleyLoop& loop);

/// Smallest subset containing s and zero that is closed under +, \ and /.
ElementSubset subloop_closure(const CayleyLoop& loop, const ElementSubset& s);
bool is_subloop(const CayleyLoop& loop, const ElementSubset& s);

/// All subloops in canonical order. Throws BoundExceeded above limits.max_subloop_n.
std::vector<ElementSubset> enumerate_subloops(const CayleyLoop& loop, const Limits& limits = {});

/// Throws ValidationError(NotASubloop) if k is not a subloop.
bool is_normal_subloop(const CayleyLoop& loop, const ElementSubset& k);

/// A validated loop homomorphism stored as a dense element map.
class LoopHom {
 public:
  const CayleyLoop& source() const noexcept { return source_; }
  const CayleyLoop& target() const noexcept { return target_; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  Elem operator()(Elem a) const noexcept { return map_[a]; }

  ElementSubset kernel() const;
  ElementSubset image() const;

 private:
  CayleyLoop source_;
  CayleyLoop target_;
  std::vector<Elem> map_;

  friend LoopHom validate_loop_hom(std::vector<Elem> map, const CayleyLoop& source, const CayleyLoop& target);
};

/// Throws ValidationError(NotAHomomorphism) with the offending pair, or
/// (SizeMismatch / EntryOutOfRange) when the map is not total into the target.
LoopHom validate_loop_hom(std::vector<Elem> map, const CayleyLoop& source, const CayleyLoop& target);

namespace detail {

/// Grows `closed` (already closed) by `extra` until closed under +, \, / and,
/// when left_mul is given, under x -> n*x for every n.
ElementSubset grow_closure(const CayleyLoop& loop, const Table* left_mul, const ElementSubset& closed,
                           const ElementSubset& extra);

/// Full lattice of closed subsets (subloops, or N-subloops when left_mul is set),
/// built from principal closures and iterated joins. Canonical order.
std::vector<ElementSubset> closed_lattice(const CayleyLoop& loop, const Table* left_mul, const Limits& limits);

}  // namespace detail

}  // namespace loopnr
