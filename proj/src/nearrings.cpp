#include "loopnr/nearrings.hpp"

#include <array>
#include <string>

namespace loopnr {

namespace {

/// Lexicographically first (a,b,c) with bad(a,b,c), scanning a in parallel.
template <class Pred>
std::optional<std::array<Elem, 3>> first_bad_triple(std::size_t n, unsigned threads, Pred bad) {
  std::vector<std::optional<std::array<Elem, 3>>> per_row(n);
  parallel_for(n, threads, [&](std::size_t ai) {
    const auto a = static_cast<Elem>(ai);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (bad(a, b, c)) {
          per_row[ai] = std::array<Elem, 3>{a, b, c};
          return;
        }
  });
  for (auto& w : per_row)
    if (w) return w;
  return std::nullopt;
}

std::vector<Violation> monoid_and_distributivity(const Table& add, const Table& mul, Elem one, const Limits& limits) {
  std::vector<Violation> out;
  const std::size_t n = add.size();
  if (mul.size() != n) {
    out.push_back({ErrorKind::SizeMismatch, {}, "multiplication table size differs from addition table"});
    return out;
  }
  if (one >= n) {
    out.push_back({ErrorKind::NotIdentity, {one}, "identity index outside carrier"});
    return out;
  }
  for (Elem a = 0; a < n; ++a) {
    if (mul(one, a) != a || mul(a, one) != a) {
      out.push_back({ErrorKind::NotIdentity, {one, a}, "one*a or a*one differs from a"});
      break;
    }
  }
  if (auto w = first_bad_triple(n, limits.threads,
                                [&](Elem a, Elem b, Elem c) { return mul(mul(a, b), c) != mul(a, mul(b, c)); })) {
    out.push_back({ErrorKind::MulNotAssociative, {(*w)[0], (*w)[1], (*w)[2]}, "(ab)c != a(bc)"});
  }
  if (auto w = first_bad_triple(n, limits.threads, [&](Elem a, Elem b, Elem c) {
        return mul(add(a, b), c) != add(mul(a, c), mul(b, c));
      })) {
    out.push_back({ErrorKind::RightDistributivityFails, {(*w)[0], (*w)[1], (*w)[2]}, "(a+b)c != ac+bc"});
  }
  for (Elem a = 0; a < n; ++a) {
    if (mul(0, a) != 0) {
      out.push_back({ErrorKind::ZeroNotLeftAbsorbing, {a}, "0*a != 0"});
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> lnr_violations(const Table& add, const Table& mul, Elem one, const Limits& limits) {
  auto out = loop_violations(add);
  auto rest = monoid_and_distributivity(add, mul, one, limits);
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

LoopNearRing validate_lnr(const CayleyLoop& additive, const Table& mul, Elem one, const Limits& limits) {
  require_within("near-ring size", additive.size(), limits.max_n);
  auto violations = monoid_and_distributivity(additive.add_table(), mul, one, limits);
  if (!violations.empty()) throw ValidationError(std::move(violations.front()));

  LoopNearRing nr;
  nr.additive_ = additive;
  nr.mul_ = std::make_shared<const Table>(mul);
  nr.one_ = one;
  nr.zero_symmetric_ = true;
  for (Elem a = 0; a < additive.size(); ++a) {
    if (mul(a, 0) != 0) {
      nr.zero_symmetric_ = false;
      break;
    }
  }
  return nr;
}

LoopNearRing validate_lnr(const Table& add, const Table& mul, Elem one, const Limits& limits) {
  return validate_lnr(validate_loop(add), mul, one, limits);
}

UnitGroup units(const LoopNearRing& nr) {
  const auto n = static_cast<Elem>(nr.size());
  UnitGroup u{ElementSubset(n), std::vector<Elem>(n, UnitGroup::kNoInverse)};
  for (Elem a = 0; a < n; ++a) {
    if (u.members.contains(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (nr.mul(a, b) == nr.one() && nr.mul(b, a) == nr.one()) {
        u.members.insert(a);
        u.members.insert(b);
        u.inverse[a] = b;
        u.inverse[b] = a;
        break;
      }
    }
  }
  return u;
}

ElementSubset idempotents(const LoopNearRing& nr) {
  ElementSubset out(nr.size());
  for (Elem a = 0; a < nr.size(); ++a)
    if (nr.mul(a, a) == a) out.insert(a);
  return out;
}

ElementSubset left_multiples(const LoopNearRing& nr, Elem e) {
  ElementSubset out(nr.size());
  for (Elem m = 0; m < nr.size(); ++m) out.insert(nr.mul(m, e));
  return out;
}

bool is_N_subloop(const LoopNearRing& nr, const ElementSubset& s) {
  if (!is_subloop(nr.additive(), s)) return false;
  bool closed = true;
  s.for_each([&](Elem i) {
    if (!closed) return;
    for (Elem m = 0; m < nr.size(); ++m)
      if (!s.contains(nr.mul(m, i))) {
        closed = false;
        return;
      }
  });
  return closed;
}

ElementSubset N_subloop_closure(const LoopNearRing& nr, const ElementSubset& s) {
  return detail::grow_closure(nr.additive(), &nr.mul_table(), ElementSubset(nr.size()), s);
}

std::vector<ElementSubset> enumerate_N_subloops(const LoopNearRing& nr, const Limits& limits) {
  require_within("near-ring size for N-subloop enumeration", nr.size(), limits.max_n);
  return detail::closed_lattice(nr.additive(), &nr.mul_table(), limits);
}

std::vector<ElementSubset> maximal_proper(const std::vector<ElementSubset>& lattice) {
  std::vector<ElementSubset> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& x = lattice[i];
    if (x.is_full()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < lattice.size() && maximal; ++j) {
      const auto& y = lattice[j];
      if (j != i && !y.is_full() && x != y && x.is_subset_of(y)) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<ElementSubset> maximal_N_subloops(const LoopNearRing& nr, const Limits& limits) {
  return maximal_proper(enumerate_N_subloops(nr, limits));
}

bool annihilator_sum_covers(const LoopNearRing& nr, Elem e) {
  const auto n = static_cast<Elem>(nr.size());
  std::vector<Elem> ann;
  for (Elem y = 0; y < n; ++y)
    if (nr.mul(y, e) == 0) ann.push_back(y);
  const auto ne = left_multiples(nr, e).members();
  ElementSubset reached(n);
  for (Elem a : ann)
    for (Elem m : ne) reached.insert(nr.add(a, m));
  return reached.is_full();
}

ElementSubset annihilator(const LoopNearRing& nr, Elem e) {
  if (e >= nr.size() || nr.mul(e, e) != e) throw ValidationError(ErrorKind::NotIdempotent, {e}, "e*e != e");
  ElementSubset ann(nr.size());
  for (Elem y = 0; y < nr.size(); ++y)
    if (nr.mul(y, e) == 0) ann.insert(y);
  if (nr.zero_symmetric() && !is_N_subloop(nr, ann))
    throw TheoremFalsified("Ann(" + std::to_string(e) + ") is not an N-subloop of a zero-symmetric near-ring");
  if (!annihilator_sum_covers(nr, e))
    throw TheoremFalsified("Ann(" + std::to_string(e) + ") + N*e does not cover N");
  return ann;
}

LocalityReport is_local_lnr(const LoopNearRing& nr, const Limits& limits) {
  if (!nr.zero_symmetric()) {
    for (Elem a = 0; a < nr.size(); ++a)
      if (nr.mul(a, 0) != 0) throw PreconditionFailed("near-ring is not zero-symmetric (n*0 != 0)", {a});
  }
  LocalityReport r;
  const auto lattice = enumerate_N_subloops(nr, limits);
  r.n_subloop_count = lattice.size();
  r.maximal = maximal_proper(lattice);
  r.via_maximal = r.maximal.size() == 1;

  const auto u = units(nr);
  r.unit_count = u.members.size();
  r.non_units = u.members.complement();
  r.via_units = is_N_subloop(nr, r.non_units);

  if (r.via_maximal != r.via_units) {
    throw TheoremFalsified("locality disagreement: unique maximal N-subloop = " + std::to_string(r.via_maximal) +
                           ", non-units form an N-subloop = " + std::to_string(r.via_units));
  }
  if (r.via_maximal) {
    if (r.maximal.front() != r.non_units)
      throw TheoremFalsified("local near-ring whose maximal N-subloop differs from N \\ U(N)");
    r.radical = r.maximal.front();
  }
  return r;
}

}  // namespace loopnr
