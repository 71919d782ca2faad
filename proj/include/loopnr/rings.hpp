#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "loopnr/homs.hpp"

namespace loopnr {

struct TwoSidedIdeal {
  ElementSubset members;
};

/// Checks the additive-subgroup and two-sided absorption conditions.
/// Throws ValidationError(NotAnIdeal).
TwoSidedIdeal make_ideal(const FiniteRing& ring, const ElementSubset& members);
bool is_left_ideal(const FiniteRing& ring, const ElementSubset& s);
bool is_two_sided_ideal(const FiniteRing& ring, const ElementSubset& s);

/// {a : 1 - x*a is left invertible for every x}.
ElementSubset radical_by_quasi_regularity(const FiniteRing& ring);
/// Intersection of the maximal left ideals (the whole ring when there are none).
ElementSubset radical_by_maximal_left_ideals(const FiniteRing& ring, const Limits& limits = {});

/// J(A), computed both ways; disagreement or a one-sided result throws TheoremFalsified.
TwoSidedIdeal jacobson_radical(const FiniteRing& ring, const Limits& limits = {});

struct QuotientRing {
  FiniteRing ring;
  LnrHom projection;
  std::vector<Elem> representative;  ///< coset index -> least element of the coset
};

/// Cosets indexed by their least element's order, so the zero coset is 0.
QuotientRing quotient_ring(const FiniteRing& ring, const TwoSidedIdeal& ideal);

bool is_division_ring(const FiniteRing& ring);

/// Non-units form a left ideal. Cross-checked against A/J(A) being a division
/// ring; disagreement throws TheoremFalsified.
bool is_local_ring(const FiniteRing& ring, const Limits& limits = {});
/// Non-units form a left ideal (the single test, no cross-check).
bool non_units_form_left_ideal(const FiniteRing& ring);

bool is_semisimple(const FiniteRing& ring, const Limits& limits = {});
/// A/J semisimple and every idempotent of A/J lifts along the projection.
bool is_semiperfect(const FiniteRing& ring, const Limits& limits = {});

struct LiftResult {
  Elem idempotent = 0;
  unsigned iterations = 0;
  bool coset_checked = false;
  /// All idempotents of x + J when coset_checked.
  std::vector<Elem> coset_idempotents;
};

/// Lifts x with x^2 - x in J by iterating x <- 3x^2 - 2x^3. When |J| <= 2^16
/// the result is checked against brute force over x + J.
/// Throws ValidationError(NotApproximatelyIdempotent).
LiftResult lift_idempotent_traced(const FiniteRing& ring, const TwoSidedIdeal& radical, Elem x);
Elem lift_idempotent(const FiniteRing& ring, const TwoSidedIdeal& radical, Elem x);

/// Brute-force oracle: the idempotents in the coset x + J.
std::vector<Elem> idempotents_in_coset(const FiniteRing& ring, const ElementSubset& ideal, Elem x);

/// eA and fA are isomorphic right modules: a in eAf, b in fAe with ab = e, ba = f.
std::optional<std::pair<Elem, Elem>> isomorphism_witness(const FiniteRing& ring, Elem e, Elem f);
bool idempotents_isomorphic(const FiniteRing& ring, Elem e, Elem f);
/// f = u^-1 e u for some unit u.
std::optional<Elem> conjugating_unit(const FiniteRing& ring, Elem e, Elem f);
bool idempotents_conjugate(const FiniteRing& ring, Elem e, Elem f);

}  // namespace loopnr
