#include "loopnr/homs.hpp"

#include <string>

#include "loopnr/rings.hpp"

namespace loopnr {

namespace {

std::optional<FiniteRing> as_ring(const LoopNearRing& nr) {
  if (!ring_violations(nr).empty()) return std::nullopt;
  return validate_ring(nr);
}

bool only_trivial_idempotents(const LoopNearRing& nr) {
  bool trivial = true;
  idempotents(nr).for_each([&](Elem e) { trivial = trivial && (e == 0 || e == nr.one()); });
  return trivial;
}

}  // namespace

LnrHom validate_lnr_hom(std::vector<Elem> map, const LoopNearRing& source, const LoopNearRing& target) {
  const auto n = static_cast<Elem>(source.size());
  if (map.size() != n)
    throw ValidationError(ErrorKind::SizeMismatch, {}, "map has " + std::to_string(map.size()) + " entries, source has " +
                                                           std::to_string(n));
  for (Elem a = 0; a < n; ++a)
    if (map[a] >= target.size()) throw ValidationError(ErrorKind::EntryOutOfRange, {a, map[a]}, "image outside target");
  if (map[source.one()] != target.one())
    throw ValidationError(ErrorKind::NotAHomomorphism, {source.one()}, "f(1) != 1");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (map[source.add(a, b)] != target.add(map[a], map[b]))
        throw ValidationError(ErrorKind::NotAHomomorphism, {a, b}, "f(a+b) != f(a)+f(b)");
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw ValidationError(ErrorKind::NotAHomomorphism, {a, b}, "f(ab) != f(a)f(b)");
    }

  LnrHom f;
  f.source_ = source;
  f.target_ = target;
  f.map_ = std::move(map);
  f.nontrivial_ = false;
  for (Elem v : f.map_) f.nontrivial_ = f.nontrivial_ || v != 0;
  f.unit_reflecting_ = is_unit_reflecting(f).holds;
  f.idempotent_lifting_ = is_idempotent_lifting(f).holds;
  return f;
}

ElementSubset LnrHom::kernel() const {
  ElementSubset k(source_.size());
  for (Elem a = 0; a < map_.size(); ++a)
    if (map_[a] == 0) k.insert(a);
  return k;
}

ElementSubset LnrHom::image() const {
  ElementSubset im(target_.size());
  for (Elem v : map_) im.insert(v);
  return im;
}

Witnessed is_unit_reflecting(const LnrHom& f) {
  const auto source_units = units(f.source()).members;
  const auto target_units = units(f.target()).members;
  for (Elem a = 0; a < f.source().size(); ++a)
    if (target_units.contains(f(a)) && !source_units.contains(a)) return {false, a};
  return {};
}

Witnessed is_idempotent_lifting(const LnrHom& f) {
  ElementSubset lifted(f.target().size());
  idempotents(f.source()).for_each([&](Elem e) { lifted.insert(f(e)); });
  for (Elem a = 0; a < f.source().size(); ++a) {
    const Elem y = f(a);
    if (f.target().mul(y, y) == y && !lifted.contains(y)) return {false, a};
  }
  return {};
}

ImageSubring image_subring(const LnrHom& f) {
  const auto target = as_ring(f.target());
  if (!target) throw ValidationError(ErrorKind::TargetNotARing, {}, "homomorphism target is not a ring");

  // Close the image under +, -, * (a homomorphic image is already closed; the
  // closure is computed rather than assumed).
  const ElementSubset image = f.image();
  ElementSubset closed(target->size());
  std::vector<Elem> processed;
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (!closed.contains(x)) {
      closed.insert(x);
      queue.push_back(x);
    }
  };
  push(0);
  push(target->one());
  image.for_each(push);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    processed.push_back(x);
    for (std::size_t i = 0; i < processed.size(); ++i) {
      const Elem y = processed[i];
      push(target->add(x, y));
      push(target->sub(x, y));
      push(target->sub(y, x));
      push(target->mul(x, y));
      push(target->mul(y, x));
    }
  }
  if (closed != image) throw TheoremFalsified("image of a near-ring homomorphism is not closed under ring operations");

  ImageSubring out;
  out.carrier = closed.members();
  auto tables = restrict_tables(*target, out.carrier, target->one());
  out.ring = make_ring(tables.add, tables.mul, tables.one);
  std::vector<Elem> index(target->size(), 0);
  for (std::size_t i = 0; i < out.carrier.size(); ++i) index[out.carrier[i]] = static_cast<Elem>(i);
  out.surjection.resize(f.source().size());
  for (Elem a = 0; a < f.source().size(); ++a) out.surjection[a] = index[f(a)];
  return out;
}

TransferReport verify_local_transfer(const LnrHom& f, const Limits& limits) {
  const auto target = as_ring(f.target());
  if (!target) throw PreconditionFailed("target is a ring");
  if (!f.nontrivial()) throw PreconditionFailed("homomorphism is nontrivial");
  if (auto w = is_unit_reflecting(f); !w) throw PreconditionFailed("homomorphism is unit-reflecting", {*w.witness});
  if (!f.source().zero_symmetric()) throw PreconditionFailed("source is zero-symmetric");

  TransferReport r;
  r.unit_reflecting_into_target = true;
  const auto locality = is_local_lnr(f.source(), limits);
  r.source_local = locality.local();
  r.source_units = locality.unit_count;

  const auto image = image_subring(f);
  r.image_size = image.carrier.size();
  r.image_local = is_local_ring(image.ring, limits);
  r.target_local = is_local_ring(*target, limits);

  const auto image_units = units(image.ring).members;
  r.image_units = image_units.size();
  r.target_units = units(*target).members.size();
  const auto source_units = units(f.source()).members;
  r.unit_reflecting_onto_image = true;
  for (Elem a = 0; a < f.source().size(); ++a)
    if (image_units.contains(image.surjection[a]) && !source_units.contains(a)) r.unit_reflecting_onto_image = false;

  r.converse_via_target_holds = !r.target_local || r.source_local;
  if (!r.agree()) {
    throw TheoremFalsified("local transfer disagreement: source local = " + std::to_string(r.source_local) +
                           ", image local = " + std::to_string(r.image_local));
  }
  return r;
}

bool idempotent_kill_check(const LnrHom& f) {
  if (auto w = is_unit_reflecting(f); !w) throw PreconditionFailed("homomorphism is unit-reflecting", {*w.witness});
  bool holds = true;
  idempotents(f.source()).for_each([&](Elem e) { holds = holds && (f(e) != 0 || e == 0); });
  return holds;
}

DetectionReport verify_detection(const LnrHom& f, const Limits& limits) {
  if (!as_ring(f.target())) throw PreconditionFailed("target is a ring");
  if (auto w = is_unit_reflecting(f); !w) throw PreconditionFailed("homomorphism is unit-reflecting", {*w.witness});
  if (auto w = is_idempotent_lifting(f); !w)
    throw PreconditionFailed("homomorphism is idempotent-lifting", {*w.witness});
  if (!f.source().zero_symmetric()) throw PreconditionFailed("source is zero-symmetric");

  const auto image = image_subring(f);
  DetectionReport r;
  r.source_trivial_idempotents = only_trivial_idempotents(f.source());
  r.image_trivial_idempotents = only_trivial_idempotents(image.ring);
  r.source_local = is_local_lnr(f.source(), limits).local();
  r.image_local = is_local_ring(image.ring, limits);
  if (!r.agree()) throw TheoremFalsified("idempotent/locality detection disagrees between source and image");
  return r;
}

}  // namespace loopnr
