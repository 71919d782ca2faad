#include "loopnr/loops.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace loopnr {

std::vector<Violation> loop_violations(const Table& add) {
  std::vector<Violation> out;
  const std::size_t n = add.size();

  // Rows: a + x = b uniquely solvable.
  std::vector<Elem> seen(n);
  bool reported = false;
  for (Elem a = 0; a < n && !reported; ++a) {
    std::fill(seen.begin(), seen.end(), static_cast<Elem>(n));
    for (Elem b = 0; b < n; ++b) {
      const Elem v = add(a, b);
      if (seen[v] != n) {
        out.push_back({ErrorKind::NotLatinSquare, {a, seen[v], b, v},
                       "row " + std::to_string(a) + " repeats " + std::to_string(v) + " in columns " +
                           std::to_string(seen[v]) + " and " + std::to_string(b)});
        reported = true;
        break;
      }
      seen[v] = b;
    }
  }
  // Columns: y + a = b uniquely solvable.
  reported = false;
  for (Elem b = 0; b < n && !reported; ++b) {
    std::fill(seen.begin(), seen.end(), static_cast<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
      const Elem v = add(a, b);
      if (seen[v] != n) {
        out.push_back({ErrorKind::NotLatinSquare, {seen[v], a, b, v},
                       "column " + std::to_string(b) + " repeats " + std::to_string(v) + " in rows " +
                           std::to_string(seen[v]) + " and " + std::to_string(a)});
        reported = true;
        break;
      }
      seen[v] = a;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a || add(a, 0) != a) {
      out.push_back({ErrorKind::NoTwoSidedZero, {a}, "index 0 is not a two-sided zero at " + std::to_string(a)});
      break;
    }
  }
  return out;
}

CayleyLoop validate_loop(const Table& add) {
  auto violations = loop_violations(add);
  if (!violations.empty()) throw ValidationError(std::move(violations.front()));

  const std::size_t n = add.size();
  auto tables = std::make_shared<CayleyLoop::Tables>();
  tables->add = add;
  tables->ldiff = Table(n);
  tables->rdiff = Table(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem x = 0; x < n; ++x) {
      const Elem s = add(a, x);
      tables->ldiff.set(a, s, x);  // a + x = s
      tables->rdiff.set(s, x, a);  // a + x = s, so s / x = a
    }
  }
  CayleyLoop loop;
  loop.tables_ = std::move(tables);
  return loop;
}

CayleyLoop validate_loop(const std::vector<std::vector<Elem>>& rows) { return validate_loop(Table::from_rows(rows)); }

std::optional<std::array<Elem, 3>> associativity_witness(const CayleyLoop& loop) {
  const auto n = static_cast<Elem>(loop.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = loop.add(a, b);
      for (Elem c = 0; c < n; ++c)
        if (loop.add(ab, c) != loop.add(a, loop.add(b, c))) return std::array<Elem, 3>{a, b, c};
    }
  return std::nullopt;
}

bool is_associative(const CayleyLoop& loop) { return !associativity_witness(loop).has_value(); }

bool is_commutative(const CayleyLoop& loop) {
  const auto n = static_cast<Elem>(loop.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (loop.add(a, b) != loop.add(b, a)) return false;
  return true;
}

namespace detail {

ElementSubset grow_closure(const CayleyLoop& loop, const Table* left_mul, const ElementSubset& closed,
                           const ElementSubset& extra) {
  const std::size_t n = loop.size();
  ElementSubset set = closed;
  std::vector<Elem> processed = closed.members();
  std::vector<Elem> queue;
  auto push = [&](Elem x) {
    if (!set.contains(x)) {
      set.insert(x);
      queue.push_back(x);
    }
  };
  push(CayleyLoop::zero());
  extra.for_each(push);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    processed.push_back(x);
    for (std::size_t i = 0; i < processed.size(); ++i) {
      const Elem y = processed[i];
      push(loop.add(x, y));
      push(loop.add(y, x));
      push(loop.ldiff(x, y));
      push(loop.ldiff(y, x));
      push(loop.rdiff(x, y));
      push(loop.rdiff(y, x));
    }
    if (left_mul != nullptr)
      for (Elem m = 0; m < n; ++m) push((*left_mul)(m, x));
  }
  return set;
}

std::vector<ElementSubset> closed_lattice(const CayleyLoop& loop, const Table* left_mul, const Limits& limits) {
  const std::size_t n = loop.size();
  const ElementSubset nothing(n);

  // Principal seeds. With a left action, x and every y with N*y == N*x generate
  // the same closed subset, so seeds are deduplicated by their orbit N*x.
  std::vector<ElementSubset> seeds;
  {
    std::unordered_set<ElementSubset> seen;
    for (Elem x = 0; x < n; ++x) {
      ElementSubset seed(n);
      if (left_mul != nullptr) {
        for (Elem m = 0; m < n; ++m) seed.insert((*left_mul)(m, x));
      } else {
        seed.insert(x);
      }
      if (seen.insert(seed).second) seeds.push_back(std::move(seed));
    }
  }

  std::vector<ElementSubset> principal_raw(seeds.size());
  parallel_for(seeds.size(), limits.threads,
               [&](std::size_t i) { principal_raw[i] = grow_closure(loop, left_mul, nothing, seeds[i]); });

  std::vector<ElementSubset> principals;
  std::unordered_set<ElementSubset> lattice_set;
  std::vector<ElementSubset> lattice;
  auto admit = [&](ElementSubset s) -> bool {
    if (!lattice_set.insert(s).second) return false;
    lattice.push_back(std::move(s));
    if (lattice.size() > limits.max_subloops) throw BoundExceeded("closed-subset lattice size", lattice.size(), limits.max_subloops);
    return true;
  };
  admit(grow_closure(loop, left_mul, nothing, nothing));
  for (auto& p : principal_raw) {
    if (admit(p)) principals.push_back(std::move(p));
  }

  // Every closed subset is a join of principal ones; closing the lattice under
  // joins with principals reaches all of them.
  std::vector<ElementSubset> joins(principals.size());
  for (std::size_t head = 0; head < lattice.size(); ++head) {
    const ElementSubset current = lattice[head];
    parallel_for(principals.size(), limits.threads, [&](std::size_t i) {
      if (principals[i].is_subset_of(current)) {
        joins[i] = ElementSubset();
      } else {
        joins[i] = grow_closure(loop, left_mul, current, principals[i]);
      }
    });
    for (auto& j : joins)
      if (j.ambient() != 0) admit(std::move(j));
  }

  sort_canonical(lattice);
  return lattice;
}

}  // namespace detail

ElementSubset subloop_closure(const CayleyLoop& loop, const ElementSubset& s) {
  return detail::grow_closure(loop, nullptr, ElementSubset(loop.size()), s);
}

bool is_subloop(const CayleyLoop& loop, const ElementSubset& s) {
  if (!s.contains(CayleyLoop::zero())) return false;
  const auto members = s.members();
  for (Elem a : members)
    for (Elem b : members) {
      if (!s.contains(loop.add(a, b)) || !s.contains(loop.ldiff(a, b)) || !s.contains(loop.rdiff(a, b))) return false;
    }
  return true;
}

std::vector<ElementSubset> enumerate_subloops(const CayleyLoop& loop, const Limits& limits) {
  require_within("loop order for subloop enumeration", loop.size(), limits.max_subloop_n);
  return detail::closed_lattice(loop, nullptr, limits);
}

bool is_normal_subloop(const CayleyLoop& loop, const ElementSubset& k) {
  if (!is_subloop(loop, k)) throw ValidationError(ErrorKind::NotASubloop, k.members(), "argument is not a subloop");
  const auto n = static_cast<Elem>(loop.size());
  const auto members = k.members();
  ElementSubset lhs(n), rhs(n);
  auto reset = [&] {
    lhs = ElementSubset(n);
    rhs = ElementSubset(n);
  };
  for (Elem a = 0; a < n; ++a) {
    reset();
    for (Elem x : members) {
      lhs.insert(loop.add(a, x));
      rhs.insert(loop.add(x, a));
    }
    if (lhs != rhs) return false;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = loop.add(a, b);
      reset();
      for (Elem x : members) {
        lhs.insert(loop.add(ab, x));
        rhs.insert(loop.add(a, loop.add(b, x)));
      }
      if (lhs != rhs) return false;
      reset();
      for (Elem x : members) {
        lhs.insert(loop.add(loop.add(x, a), b));
        rhs.insert(loop.add(x, ab));
      }
      if (lhs != rhs) return false;
    }
  return true;
}

LoopHom validate_loop_hom(std::vector<Elem> map, const CayleyLoop& source, const CayleyLoop& target) {
  const auto n = static_cast<Elem>(source.size());
  if (map.size() != n)
    throw ValidationError(ErrorKind::SizeMismatch, {}, "map has " + std::to_string(map.size()) + " entries, source has " +
                                                           std::to_string(n));
  for (Elem a = 0; a < n; ++a)
    if (map[a] >= target.size()) throw ValidationError(ErrorKind::EntryOutOfRange, {a, map[a]}, "image outside target");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (map[source.add(a, b)] != target.add(map[a], map[b]))
        throw ValidationError(ErrorKind::NotAHomomorphism, {a, b}, "f(a+b) != f(a)+f(b)");
  LoopHom f;
  f.source_ = source;
  f.target_ = target;
  f.map_ = std::move(map);
  return f;
}

ElementSubset LoopHom::kernel() const {
  ElementSubset k(source_.size());
  for (Elem a = 0; a < map_.size(); ++a)
    if (map_[a] == CayleyLoop::zero()) k.insert(a);
  return k;
}

ElementSubset LoopHom::image() const {
  ElementSubset im(target_.size());
  for (Elem v : map_) im.insert(v);
  return im;
}

}  // namespace loopnr
