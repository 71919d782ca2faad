#include "loopnr/decomp.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

namespace loopnr {

namespace {

void require_idempotent(const FiniteRing& ring, Elem e) {
  if (e >= ring.size() || ring.mul(e, e) != e) throw ValidationError(ErrorKind::NotIdempotent, {e}, "e*e != e");
}

bool in_corner(const FiniteRing& ring, Elem e, Elem x) { return ring.mul(ring.mul(e, x), e) == x; }

bool orthogonal(const FiniteRing& ring, Elem a, Elem b) { return ring.mul(a, b) == 0 && ring.mul(b, a) == 0; }

// Kuhn's augmenting-path matching on a square boolean relation.
bool perfect_matching(const std::vector<std::vector<bool>>& related) {
  const std::size_t k = related.size();
  std::vector<std::size_t> owner(k, k);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t left, std::vector<bool>& seen) {
    for (std::size_t right = 0; right < k; ++right) {
      if (!related[left][right] || seen[right]) continue;
      seen[right] = true;
      if (owner[right] == k || augment(owner[right], seen)) {
        owner[right] = left;
        return true;
      }
    }
    return false;
  };
  for (std::size_t left = 0; left < k; ++left) {
    std::vector<bool> seen(k, false);
    if (!augment(left, seen)) return false;
  }
  return true;
}

void split(const FiniteRing& ring, const std::vector<Elem>& idems, Elem e, std::vector<Elem>& out) {
  for (Elem f : idems) {
    if (f == 0 || f == e || !in_corner(ring, e, f)) continue;
    split(ring, idems, f, out);
    split(ring, idems, ring.sub(e, f), out);
    return;
  }
  out.push_back(e);
}

}  // namespace

bool is_complete_orthogonal(const FiniteRing& ring, const std::vector<Elem>& members) {
  Elem sum = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem e = members[i];
    if (e >= ring.size() || ring.mul(e, e) != e) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!orthogonal(ring, e, members[j])) return false;
    sum = ring.add(sum, e);
  }
  return sum == ring.one();
}

CornerRing corner_ring(const FiniteRing& ring, Elem e) {
  require_idempotent(ring, e);
  ElementSubset carrier(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) carrier.insert(ring.mul(ring.mul(e, x), e));
  CornerRing c;
  c.parent = ring;
  c.idempotent = e;
  c.carrier = carrier.members();
  auto tables = restrict_tables(ring, c.carrier, e);
  c.ring = make_ring(tables.add, tables.mul, tables.one);
  return c;
}

bool is_primitive(const FiniteRing& ring, Elem e) {
  if (e == 0) throw ValidationError(ErrorKind::ZeroIdempotent, {0}, "primitivity is defined for nonzero idempotents");
  const auto corner = corner_ring(ring, e);
  const bool by_corner = idempotents(corner.ring).size() == 2;

  bool by_parent = true;
  idempotents(ring).for_each([&](Elem f) {
    if (f != 0 && f != e && in_corner(ring, e, f)) by_parent = false;
  });
  if (by_corner != by_parent) throw TheoremFalsified("primitivity of idempotent " + std::to_string(e) + " disagrees");
  return by_corner;
}

bool is_strongly_indecomposable_corner(const FiniteRing& ring, Elem e, const Limits& limits) {
  if (e == 0) throw ValidationError(ErrorKind::ZeroIdempotent, {0}, "strong indecomposability needs e != 0");
  return is_local_ring(corner_ring(ring, e).ring, limits);
}

std::vector<Elem> primitive_idempotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  idempotents(ring).for_each([&](Elem e) {
    if (e != 0 && is_primitive(ring, e)) out.push_back(e);
  });
  return out;
}

IdempotentFamily decompose_regular(const FiniteRing& ring, const Limits& limits) {
  require_within("ring size", ring.size(), limits.max_n);
  IdempotentFamily family{ring, {}};
  if (ring.size() == 1) return family;  // 1 = 0: the empty family

  const auto idems = idempotents(ring).members();
  split(ring, idems, ring.one(), family.members);
  std::sort(family.members.begin(), family.members.end());
  if (!is_complete_orthogonal(ring, family.members))
    throw TheoremFalsified("recursive splitting produced a family that is not complete and orthogonal");
  return family;
}

FamilyEnumeration enumerate_complete_primitive_families(const FiniteRing& ring, std::size_t limit,
                                                         const Limits& limits) {
  require_within("ring size for family enumeration", ring.size(), limits.max_family_n);
  FamilyEnumeration result;
  if (ring.size() == 1) {
    result.families.push_back({ring, {}});
    return result;
  }
  const auto prims = primitive_idempotents(ring);
  const std::size_t k = prims.size();

  // Each first member is an independent branch; branches fill their own slot
  // and are concatenated in order, which keeps the output lexicographic.
  std::vector<std::vector<std::vector<Elem>>> branches(k);
  std::vector<bool> branch_truncated(k, false);
  parallel_for(k, limits.threads, [&](std::size_t first) {
    auto& found = branches[first];
    std::vector<Elem> chosen{prims[first]};
    std::function<void(std::size_t, Elem)> extend = [&](std::size_t next, Elem sum) {
      if (found.size() >= limit) {
        branch_truncated[first] = true;
        return;
      }
      if (sum == ring.one()) {
        found.push_back(chosen);
        return;
      }
      for (std::size_t i = next; i < k; ++i) {
        const Elem p = prims[i];
        bool ok = true;
        for (Elem c : chosen) ok = ok && orthogonal(ring, p, c);
        if (!ok) continue;
        chosen.push_back(p);
        extend(i + 1, ring.add(sum, p));
        chosen.pop_back();
      }
    };
    extend(first + 1, prims[first]);
  });

  for (std::size_t b = 0; b < k; ++b) {
    for (auto& members : branches[b]) {
      if (result.families.size() >= limit) {
        result.truncated = true;
        break;
      }
      result.families.push_back({ring, std::move(members)});
    }
    result.truncated = result.truncated || branch_truncated[b];
  }
  for (const auto& f : result.families)
    if (!is_complete_orthogonal(ring, f.members))
      throw TheoremFalsified("enumerated family is not complete and orthogonal");
  return result;
}

CornerSignature corner_signature(const FiniteRing& ring) {
  const auto n = static_cast<Elem>(ring.size());
  CornerSignature sig;
  sig.size = n;
  const auto u = units(ring).members;
  const auto idem = idempotents(ring);
  sig.units = u.size();
  sig.idempotents = idem.size();

  // Per-element invariants preserved by every ring isomorphism.
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, bool, bool>;
  std::vector<Key> keys;
  keys.reserve(n);
  for (Elem x = 0; x < n; ++x) {
    std::size_t additive_order = 1;
    for (Elem acc = x; acc != 0; acc = ring.add(acc, x)) ++additive_order;
    std::size_t nil_index = 0;
    Elem power = x;
    for (std::size_t i = 1; i <= n; ++i, power = ring.mul(power, x))
      if (power == 0) {
        nil_index = i;
        break;
      }
    std::size_t left_ann = 0;
    std::size_t right_ann = 0;
    for (Elem y = 0; y < n; ++y) {
      left_ann += ring.mul(y, x) == 0;
      right_ann += ring.mul(x, y) == 0;
    }
    keys.emplace_back(additive_order, nil_index, left_ann, right_ann, u.contains(x), idem.contains(x));
  }
  std::sort(keys.begin(), keys.end());

  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [a, b, c, d, e, f] : keys) {
    mix(a);
    mix(b);
    mix(c);
    mix(d);
    mix(static_cast<std::uint64_t>(e) | (static_cast<std::uint64_t>(f) << 1));
  }
  sig.hash = h;
  return sig;
}

KSReport verify_ks_uniqueness(const FiniteRing& ring, const Limits& limits) {
  require_within("ring size for family enumeration", ring.size(), limits.max_family_n);
  KSReport report;
  report.canonical = decompose_regular(ring, limits).members;
  for (Elem e : report.canonical) {
    if (!is_strongly_indecomposable_corner(ring, e, limits))
      throw PreconditionFailed("every factor is strongly indecomposable", {e});
    report.signatures.push_back(corner_signature(corner_ring(ring, e).ring));
  }
  std::sort(report.signatures.begin(), report.signatures.end());

  const auto enumeration = enumerate_complete_primitive_families(ring, limits.max_families, limits);
  report.family_count = enumeration.families.size();
  report.truncated = enumeration.truncated;
  report.family_length = report.canonical.size();

  // Both relations are computed once over the primitive idempotents.
  const auto prims = primitive_idempotents(ring);
  std::vector<Elem> slot(ring.size(), 0);
  for (std::size_t i = 0; i < prims.size(); ++i) slot[prims[i]] = static_cast<Elem>(i);
  std::vector<CornerSignature> sigs;
  for (Elem p : prims) sigs.push_back(corner_signature(corner_ring(ring, p).ring));
  std::vector<std::vector<bool>> iso(prims.size(), std::vector<bool>(prims.size()));
  std::vector<std::vector<bool>> conj(prims.size(), std::vector<bool>(prims.size()));
  for (std::size_t i = 0; i < prims.size(); ++i)
    for (std::size_t j = 0; j < prims.size(); ++j) {
      iso[i][j] = sigs[i] == sigs[j] && idempotents_isomorphic(ring, prims[i], prims[j]);
      conj[i][j] = idempotents_conjugate(ring, prims[i], prims[j]);
      if (conj[i][j] && !iso[i][j]) throw TheoremFalsified("conjugate idempotents that are not isomorphic");
    }

  auto relation = [&](const std::vector<std::vector<bool>>& rel, const std::vector<Elem>& f,
                      const std::vector<Elem>& g) {
    std::vector<std::vector<bool>> r(f.size(), std::vector<bool>(g.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) r[i][j] = rel[slot[f[i]]][slot[g[j]]];
    return r;
  };

  const auto& fams = enumeration.families;
  for (std::size_t a = 0; a < fams.size(); ++a)
    for (std::size_t b = a; b < fams.size(); ++b) {
      const auto& f = fams[a].members;
      const auto& g = fams[b].members;
      if (f.size() != g.size()) {
        report.lengths_equal = false;
        report.isomorphism_matched = false;
        report.conjugacy_matched = false;
        continue;
      }
      if (!perfect_matching(relation(iso, f, g))) report.isomorphism_matched = false;
      if (!perfect_matching(relation(conj, f, g))) report.conjugacy_matched = false;
    }
  if (!report.lengths_equal || !report.isomorphism_matched)
    throw TheoremFalsified("complete primitive families are not matched up to isomorphism");
  return report;
}

RetractReport verify_retract_matching(const FiniteRing& ring, const Limits& limits) {
  require_within("ring size for family enumeration", ring.size(), limits.max_family_n);
  const auto canonical = decompose_regular(ring, limits).members;
  RetractReport report;
  for (Elem f : primitive_idempotents(ring)) {
    ++report.primitive_count;
    std::optional<Elem> partner;
    for (Elem e : canonical)
      if (idempotents_isomorphic(ring, f, e)) {
        partner = e;
        break;
      }
    if (!partner)
      throw TheoremFalsified("primitive idempotent " + std::to_string(f) + " matches no canonical factor");
    report.matches.emplace_back(f, *partner);
  }
  return report;
}

}  // namespace loopnr
