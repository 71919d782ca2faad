#pragma once

#include <optional>
#include <vector>

#include "loopnr/finite_ring.hpp"

namespace loopnr {

/// A validated homomorphism of loop near-rings (f(1)=1, additive, multiplicative),
/// stored as a dense element map with its analysis flags computed on construction.
class LnrHom {
 public:
  const LoopNearRing& source() const noexcept { return source_; }
  const LoopNearRing& target() const noexcept { return target_; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  Elem operator()(Elem a) const noexcept { return map_[a]; }

  bool nontrivial() const noexcept { return nontrivial_; }
  bool unit_reflecting() const noexcept { return unit_reflecting_; }
  bool idempotent_lifting() const noexcept { return idempotent_lifting_; }

  ElementSubset kernel() const;
  ElementSubset image() const;

 private:
  LoopNearRing source_;
  LoopNearRing target_;
  std::vector<Elem> map_;
  bool nontrivial_ = false;
  bool unit_reflecting_ = false;
  bool idempotent_lifting_ = false;

  friend LnrHom validate_lnr_hom(std::vector<Elem> map, const LoopNearRing& source, const LoopNearRing& target);
};

/// Throws ValidationError(NotAHomomorphism) with a witness: {a} for f(1) != 1,
/// {a,b} for a failing sum or product.
LnrHom validate_lnr_hom(std::vector<Elem> map, const LoopNearRing& source, const LoopNearRing& target);

struct Witnessed {
  bool holds = true;
  std::optional<Elem> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// f(n) a unit in the target implies n a unit. Witness: a non-unit n with f(n) a unit.
Witnessed is_unit_reflecting(const LnrHom& f);
/// Every idempotent of the form f(n) equals f(e) for an idempotent e. Witness: such an n.
Witnessed is_idempotent_lifting(const LnrHom& f);

/// Image of f as a ring on a re-indexed carrier.
struct ImageSubring {
  FiniteRing ring;
  std::vector<Elem> carrier;     ///< ring index -> target element (sorted)
  std::vector<Elem> surjection;  ///< source element -> ring index
};

/// Throws ValidationError(TargetNotARing) when the target is not a ring.
ImageSubring image_subring(const LnrHom& f);

struct TransferReport {
  bool source_local = false;
  bool image_local = false;
  bool target_local = false;
  bool unit_reflecting_into_target = false;
  bool unit_reflecting_onto_image = false;
  std::size_t source_units = 0;
  std::size_t image_units = 0;
  std::size_t target_units = 0;
  std::size_t image_size = 0;
  /// Converse read with the target ring: target local implies source local.
  bool converse_via_target_holds = true;
  bool agree() const noexcept { return source_local == image_local; }
};

/// Requires f nontrivial, unit-reflecting into a ring, source zero-symmetric
/// (PreconditionFailed names the missing one). Source locality and image
/// locality are computed independently; disagreement throws TheoremFalsified.
TransferReport verify_local_transfer(const LnrHom& f, const Limits& limits = {});

/// For unit-reflecting f: no nonzero idempotent of the source maps to 0.
/// Throws PreconditionFailed if f is not unit-reflecting.
bool idempotent_kill_check(const LnrHom& f);

struct DetectionReport {
  bool source_trivial_idempotents = false;
  bool image_trivial_idempotents = false;
  bool source_local = false;
  bool image_local = false;
  bool agree() const noexcept {
    return source_trivial_idempotents == image_trivial_idempotents && source_local == image_local;
  }
};

/// For f unit-reflecting and idempotent-lifting into a ring: compares
/// "only trivial idempotents" and locality between the source and the image.
DetectionReport verify_detection(const LnrHom& f, const Limits& limits = {});

}  // namespace loopnr
