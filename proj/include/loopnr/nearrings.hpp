#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "loopnr/loops.hpp"

namespace loopnr {

/// A finite right loop near-ring: a loop (N,+), a monoid (N,*) with identity
/// `one`, and (a+b)*c = a*c + b*c.
///
/// Structures without n*0 = 0 are still accepted (the full map near-ring M(G)
/// is the standard example); zero_symmetric() records which convention holds and
/// the locality procedures refuse the non-zero-symmetric ones.
class LoopNearRing {
 public:
  LoopNearRing() = default;

  const CayleyLoop& additive() const noexcept { return additive_; }
  std::size_t size() const noexcept { return additive_.size(); }
  static constexpr Elem zero() noexcept { return 0; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return additive_.add(a, b); }
  Elem ldiff(Elem a, Elem b) const noexcept { return additive_.ldiff(a, b); }
  Elem rdiff(Elem b, Elem a) const noexcept { return additive_.rdiff(b, a); }
  Elem mul(Elem a, Elem b) const noexcept { return (*mul_)(a, b); }

  const Table& add_table() const noexcept { return additive_.add_table(); }
  const Table& mul_table() const noexcept { return *mul_; }

  bool zero_symmetric() const noexcept { return zero_symmetric_; }

  friend bool operator==(const LoopNearRing& a, const LoopNearRing& b) {
    return a.one_ == b.one_ && a.additive_ == b.additive_ && (a.mul_ == b.mul_ || *a.mul_ == *b.mul_);
  }

 private:
  CayleyLoop additive_;
  std::shared_ptr<const Table> mul_;
  Elem one_ = 0;
  bool zero_symmetric_ = false;

  friend LoopNearRing validate_lnr(const CayleyLoop& additive, const Table& mul, Elem one, const Limits& limits);
};

/// Every violated near-ring axiom (loop axioms included), one entry per axiom.
std::vector<Violation> lnr_violations(const Table& add, const Table& mul, Elem one, const Limits& limits = {});

/// Exhaustive O(n^3) validation. Throws ValidationError with the first failing axiom.
LoopNearRing validate_lnr(const CayleyLoop& additive, const Table& mul, Elem one, const Limits& limits = {});
LoopNearRing validate_lnr(const Table& add, const Table& mul, Elem one, const Limits& limits = {});

struct UnitGroup {
  ElementSubset members;
  /// inverse[u] for members u; kNoInverse elsewhere.
  std::vector<Elem> inverse;
  static constexpr Elem kNoInverse = ~Elem{0};
};

UnitGroup units(const LoopNearRing& nr);
ElementSubset idempotents(const LoopNearRing& nr);
/// N*e = {m*e : m in N}.
ElementSubset left_multiples(const LoopNearRing& nr, Elem e);

bool is_N_subloop(const LoopNearRing& nr, const ElementSubset& s);
ElementSubset N_subloop_closure(const LoopNearRing& nr, const ElementSubset& s);
std::vector<ElementSubset> enumerate_N_subloops(const LoopNearRing& nr, const Limits& limits = {});
std::vector<ElementSubset> maximal_N_subloops(const LoopNearRing& nr, const Limits& limits = {});

/// Proper members of a lattice that no other proper member strictly contains.
std::vector<ElementSubset> maximal_proper(const std::vector<ElementSubset>& lattice);

/// Ann(e) = {y : y*e = 0}. Throws ValidationError(NotIdempotent).
/// Also checks N = Ann(e) + N*e and, for zero-symmetric N, that Ann(e) is an
/// N-subloop; a failure of either throws TheoremFalsified.
ElementSubset annihilator(const LoopNearRing& nr, Elem e);

/// True when every element is a + m for some a in Ann(e), m in N*e.
bool annihilator_sum_covers(const LoopNearRing& nr, Elem e);

struct LocalityReport {
  bool via_maximal = false;  ///< exactly one maximal N-subloop
  bool via_units = false;    ///< N \ U(N) is an N-subloop
  std::vector<ElementSubset> maximal;
  ElementSubset non_units;
  std::size_t n_subloop_count = 0;
  std::size_t unit_count = 0;
  /// The unique maximal N-subloop when local.
  std::optional<ElementSubset> radical;

  bool local() const noexcept { return via_maximal && via_units; }
};

/// Decides locality two independent ways. Requires zero symmetry
/// (PreconditionFailed otherwise); disagreement throws TheoremFalsified.
LocalityReport is_local_lnr(const LoopNearRing& nr, const Limits& limits = {});

}  // namespace loopnr
