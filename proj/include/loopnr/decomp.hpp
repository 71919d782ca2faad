#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopnr/rings.hpp"

namespace loopnr {

/// Pairwise orthogonal idempotents summing to 1, members ascending.
struct IdempotentFamily {
  FiniteRing ring;
  std::vector<Elem> members;
};

/// Orthogonality, idempotence and completeness of a candidate family.
bool is_complete_orthogonal(const FiniteRing& ring, const std::vector<Elem>& members);

/// eAe with unit e, re-indexed onto carrier positions.
struct CornerRing {
  FiniteRing ring;
  FiniteRing parent;
  Elem idempotent = 0;
  std::vector<Elem> carrier;  ///< corner index -> parent element (sorted)
};

/// Throws ValidationError(NotIdempotent).
CornerRing corner_ring(const FiniteRing& ring, Elem e);

/// eAe has no idempotents besides 0 and e. Also computed from the parent's
/// idempotents; the two answers must agree. Throws ValidationError(ZeroIdempotent)
/// for e = 0 and NotIdempotent for non-idempotents.
bool is_primitive(const FiniteRing& ring, Elem e);
/// eAe is a local ring.
bool is_strongly_indecomposable_corner(const FiniteRing& ring, Elem e, const Limits& limits = {});

/// Canonical primitive family: starting from 1, repeatedly split the current
/// idempotent e into (f, e - f) where f is the least nontrivial idempotent of eAe.
IdempotentFamily decompose_regular(const FiniteRing& ring, const Limits& limits = {});

struct FamilyEnumeration {
  std::vector<IdempotentFamily> families;
  bool truncated = false;  ///< `limit` families were produced before the search finished
};

/// Every complete orthogonal family of primitive idempotents, each sorted
/// ascending, listed in lexicographic order. Requires |A| <= limits.max_family_n.
FamilyEnumeration enumerate_complete_primitive_families(const FiniteRing& ring, std::size_t limit,
                                                         const Limits& limits = {});

/// Isomorphism-invariant summary of a ring, used as a cheap pre-filter.
struct CornerSignature {
  std::size_t size = 0;
  std::size_t units = 0;
  std::size_t idempotents = 0;
  std::uint64_t hash = 0;

  friend auto operator<=>(const CornerSignature&, const CornerSignature&) = default;
};

CornerSignature corner_signature(const FiniteRing& ring);

struct KSReport {
  std::vector<Elem> canonical;
  std::size_t family_count = 0;
  bool truncated = false;
  std::size_t family_length = 0;
  bool lengths_equal = true;
  bool isomorphism_matched = true;
  /// Whether the same families can also be matched member-by-member by unit conjugacy.
  bool conjugacy_matched = true;
  /// Corner signatures of the canonical family, sorted.
  std::vector<CornerSignature> signatures;
};

/// Requires every canonical member to be strongly indecomposable
/// (PreconditionFailed with the offending idempotent). Every pair of enumerated
/// families must have equal length and admit an isomorphism-respecting
/// bijection; a failure throws TheoremFalsified.
KSReport verify_ks_uniqueness(const FiniteRing& ring, const Limits& limits = {});

struct RetractReport {
  std::size_t primitive_count = 0;
  /// For each primitive idempotent (ascending), a canonical member isomorphic to it.
  std::vector<std::pair<Elem, Elem>> matches;
};

/// Every primitive idempotent is isomorphic to some canonical-family member.
/// Throws TheoremFalsified with the first unmatched idempotent.
RetractReport verify_retract_matching(const FiniteRing& ring, const Limits& limits = {});

/// Primitive idempotents of the ring, ascending.
std::vector<Elem> primitive_idempotents(const FiniteRing& ring);

}  // namespace loopnr
