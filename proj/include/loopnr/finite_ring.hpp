#pragma once

#include <vector>

#include "loopnr/nearrings.hpp"

namespace loopnr {

/// A loop near-ring whose addition is an abelian group and whose
/// multiplication distributes on both sides: a finite unital ring.
class FiniteRing {
 public:
  FiniteRing() = default;

  const LoopNearRing& as_lnr() const noexcept { return lnr_; }
  operator const LoopNearRing&() const noexcept { return lnr_; }  // NOLINT(google-explicit-constructor)

  std::size_t size() const noexcept { return lnr_.size(); }
  static constexpr Elem zero() noexcept { return 0; }
  Elem one() const noexcept { return lnr_.one(); }

  Elem add(Elem a, Elem b) const noexcept { return lnr_.add(a, b); }
  Elem mul(Elem a, Elem b) const noexcept { return lnr_.mul(a, b); }
  /// a - b
  Elem sub(Elem a, Elem b) const noexcept { return lnr_.ldiff(b, a); }
  Elem neg(Elem a) const noexcept { return lnr_.ldiff(a, 0); }
  /// k * a for a non-negative integer k.
  Elem scale(std::size_t k, Elem a) const noexcept {
    Elem acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc = add(acc, a);
    return acc;
  }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.lnr_ == b.lnr_; }

 private:
  LoopNearRing lnr_;
  friend FiniteRing validate_ring(const LoopNearRing& nr);
};

/// Ring axioms beyond the near-ring ones that fail (abelian addition, left distributivity).
std::vector<Violation> ring_violations(const LoopNearRing& nr, const Limits& limits = {});

/// Throws ValidationError(AdditionNotAbelianGroup / LeftDistributivityFails).
FiniteRing validate_ring(const LoopNearRing& nr);
FiniteRing make_ring(const Table& add, const Table& mul, Elem one, const Limits& limits = {});

/// Operation tables of the sub-structure on `carrier` (sorted, containing 0),
/// re-indexed by position in `carrier`.
struct Restriction {
  Table add;
  Table mul;
  Elem one = 0;
};
Restriction restrict_tables(const LoopNearRing& nr, const std::vector<Elem>& carrier, Elem one);

}  // namespace loopnr
