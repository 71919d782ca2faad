#include "loopnr/rings.hpp"

#include <algorithm>
#include <string>

namespace loopnr {

namespace {

void require_idempotent(const FiniteRing& ring, Elem e) {
  if (e >= ring.size() || ring.mul(e, e) != e) throw ValidationError(ErrorKind::NotIdempotent, {e}, "e*e != e");
}

ElementSubset sandwich(const FiniteRing& ring, Elem left, Elem right) {
  ElementSubset out(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) out.insert(ring.mul(ring.mul(left, x), right));
  return out;
}

}  // namespace

bool is_left_ideal(const FiniteRing& ring, const ElementSubset& s) { return is_N_subloop(ring.as_lnr(), s); }

bool is_two_sided_ideal(const FiniteRing& ring, const ElementSubset& s) {
  if (!is_subloop(ring.as_lnr().additive(), s)) return false;
  bool absorbs = true;
  s.for_each([&](Elem i) {
    for (Elem r = 0; r < ring.size() && absorbs; ++r)
      absorbs = s.contains(ring.mul(r, i)) && s.contains(ring.mul(i, r));
  });
  return absorbs;
}

TwoSidedIdeal make_ideal(const FiniteRing& ring, const ElementSubset& members) {
  if (members.ambient() != ring.size() || !is_two_sided_ideal(ring, members))
    throw ValidationError(ErrorKind::NotAnIdeal, members.members(), "not a two-sided ideal");
  return TwoSidedIdeal{members};
}

ElementSubset radical_by_quasi_regularity(const FiniteRing& ring) {
  const auto n = static_cast<Elem>(ring.size());
  ElementSubset left_invertible(n);
  for (Elem z = 0; z < n; ++z)
    for (Elem y = 0; y < n; ++y)
      if (ring.mul(y, z) == ring.one()) {
        left_invertible.insert(z);
        break;
      }
  ElementSubset out(n);
  for (Elem a = 0; a < n; ++a) {
    bool quasi_regular = true;
    for (Elem x = 0; x < n && quasi_regular; ++x)
      quasi_regular = left_invertible.contains(ring.sub(ring.one(), ring.mul(x, a)));
    if (quasi_regular) out.insert(a);
  }
  return out;
}

ElementSubset radical_by_maximal_left_ideals(const FiniteRing& ring, const Limits& limits) {
  ElementSubset out = ElementSubset::full(ring.size());
  for (const auto& m : maximal_N_subloops(ring.as_lnr(), limits)) out &= m;
  return out;
}

TwoSidedIdeal jacobson_radical(const FiniteRing& ring, const Limits& limits) {
  const auto by_units = radical_by_quasi_regularity(ring);
  const auto by_ideals = radical_by_maximal_left_ideals(ring, limits);
  if (by_units != by_ideals) throw TheoremFalsified("Jacobson radical computations disagree");
  if (!is_two_sided_ideal(ring, by_units)) throw TheoremFalsified("Jacobson radical is not a two-sided ideal");
  return TwoSidedIdeal{by_units};
}

QuotientRing quotient_ring(const FiniteRing& ring, const TwoSidedIdeal& ideal) {
  if (ideal.members.ambient() != ring.size() || !is_two_sided_ideal(ring, ideal.members))
    throw ValidationError(ErrorKind::NotAnIdeal, ideal.members.members(), "not a two-sided ideal");
  const auto n = static_cast<Elem>(ring.size());
  const auto members = ideal.members.members();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset_of(n, kUnset);
  std::vector<Elem> representative;
  for (Elem a = 0; a < n; ++a) {
    if (coset_of[a] != kUnset) continue;
    const auto c = static_cast<Elem>(representative.size());
    representative.push_back(a);
    for (Elem i : members) coset_of[ring.add(a, i)] = c;
  }
  const std::size_t k = representative.size();
  Table add(k), mul(k);
  for (Elem c = 0; c < k; ++c)
    for (Elem d = 0; d < k; ++d) {
      add.set(c, d, coset_of[ring.add(representative[c], representative[d])]);
      mul.set(c, d, coset_of[ring.mul(representative[c], representative[d])]);
    }
  QuotientRing q;
  q.ring = make_ring(add, mul, coset_of[ring.one()]);
  q.projection = validate_lnr_hom(coset_of, ring.as_lnr(), q.ring.as_lnr());
  q.representative = std::move(representative);
  return q;
}

bool is_division_ring(const FiniteRing& ring) {
  if (ring.size() < 2) return false;
  return units(ring.as_lnr()).members.size() == ring.size() - 1;
}

bool non_units_form_left_ideal(const FiniteRing& ring) {
  return is_left_ideal(ring, units(ring.as_lnr()).members.complement());
}

bool is_local_ring(const FiniteRing& ring, const Limits& limits) {
  const bool by_non_units = non_units_form_left_ideal(ring);
  const auto quotient = quotient_ring(ring, jacobson_radical(ring, limits));
  const bool by_quotient = is_division_ring(quotient.ring);
  if (by_non_units != by_quotient)
    throw TheoremFalsified("ring locality disagreement: non-units left ideal = " + std::to_string(by_non_units) +
                           ", A/J division ring = " + std::to_string(by_quotient));
  return by_non_units;
}

bool is_semisimple(const FiniteRing& ring, const Limits& limits) {
  return jacobson_radical(ring, limits).members.size() == 1;
}

bool is_semiperfect(const FiniteRing& ring, const Limits& limits) {
  const auto quotient = quotient_ring(ring, jacobson_radical(ring, limits));
  return is_semisimple(quotient.ring, limits) && is_idempotent_lifting(quotient.projection).holds;
}

std::vector<Elem> idempotents_in_coset(const FiniteRing& ring, const ElementSubset& ideal, Elem x) {
  std::vector<Elem> out;
  ideal.for_each([&](Elem j) {
    const Elem y = ring.add(x, j);
    if (ring.mul(y, y) == y) out.push_back(y);
  });
  std::sort(out.begin(), out.end());
  return out;
}

LiftResult lift_idempotent_traced(const FiniteRing& ring, const TwoSidedIdeal& radical, Elem x) {
  const auto& j = radical.members;
  if (x >= ring.size() || !j.contains(ring.sub(ring.mul(x, x), x)))
    throw ValidationError(ErrorKind::NotApproximatelyIdempotent, {x}, "x^2 - x is not in the ideal");

  LiftResult r;
  Elem y = x;
  while (ring.mul(y, y) != y) {
    const Elem y2 = ring.mul(y, y);
    const Elem y3 = ring.mul(y2, y);
    y = ring.sub(ring.scale(3, y2), ring.scale(2, y3));
    if (++r.iterations > 64) throw TheoremFalsified("idempotent lifting iteration did not converge");
  }
  if (!j.contains(ring.sub(y, x))) throw TheoremFalsified("lifted idempotent left the coset x + J");
  r.idempotent = y;

  if (j.size() <= (std::size_t{1} << 16)) {
    r.coset_checked = true;
    r.coset_idempotents = idempotents_in_coset(ring, j, x);
    if (!std::binary_search(r.coset_idempotents.begin(), r.coset_idempotents.end(), y))
      throw TheoremFalsified("iterated lift is not among the brute-force idempotents of x + J");
  }
  return r;
}

Elem lift_idempotent(const FiniteRing& ring, const TwoSidedIdeal& radical, Elem x) {
  return lift_idempotent_traced(ring, radical, x).idempotent;
}

std::optional<std::pair<Elem, Elem>> isomorphism_witness(const FiniteRing& ring, Elem e, Elem f) {
  require_idempotent(ring, e);
  require_idempotent(ring, f);
  const auto eaf = sandwich(ring, e, f).members();
  const auto fae = sandwich(ring, f, e).members();
  for (Elem a : eaf)
    for (Elem b : fae)
      if (ring.mul(a, b) == e && ring.mul(b, a) == f) return std::pair{a, b};
  return std::nullopt;
}

bool idempotents_isomorphic(const FiniteRing& ring, Elem e, Elem f) {
  return isomorphism_witness(ring, e, f).has_value();
}

std::optional<Elem> conjugating_unit(const FiniteRing& ring, Elem e, Elem f) {
  require_idempotent(ring, e);
  require_idempotent(ring, f);
  const auto u = units(ring.as_lnr());
  std::optional<Elem> found;
  u.members.for_each([&](Elem unit) {
    if (!found && ring.mul(ring.mul(u.inverse[unit], e), unit) == f) found = unit;
  });
  return found;
}

bool idempotents_conjugate(const FiniteRing& ring, Elem e, Elem f) { return conjugating_unit(ring, e, f).has_value(); }

}  // namespace loopnr
