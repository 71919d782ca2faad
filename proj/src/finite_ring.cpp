#include "loopnr/finite_ring.hpp"

#include <algorithm>

namespace loopnr {

std::vector<Violation> ring_violations(const LoopNearRing& nr, const Limits& limits) {
  std::vector<Violation> out;
  const auto n = static_cast<Elem>(nr.size());

  bool abelian = true;
  for (Elem a = 0; a < n && abelian; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (nr.add(a, b) != nr.add(b, a)) {
        out.push_back({ErrorKind::AdditionNotAbelianGroup, {a, b}, "a+b != b+a"});
        abelian = false;
        break;
      }
  if (abelian) {
    if (auto w = associativity_witness(nr.additive()))
      out.push_back({ErrorKind::AdditionNotAbelianGroup, {(*w)[0], (*w)[1], (*w)[2]}, "(a+b)+c != a+(b+c)"});
  }

  std::vector<std::optional<std::array<Elem, 3>>> per_row(n);
  parallel_for(n, limits.threads, [&](std::size_t ai) {
    const auto a = static_cast<Elem>(ai);
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (nr.mul(a, nr.add(b, c)) != nr.add(nr.mul(a, b), nr.mul(a, c))) {
          per_row[ai] = std::array<Elem, 3>{a, b, c};
          return;
        }
  });
  for (auto& w : per_row)
    if (w) {
      out.push_back({ErrorKind::LeftDistributivityFails, {(*w)[0], (*w)[1], (*w)[2]}, "a(b+c) != ab+ac"});
      break;
    }
  return out;
}

FiniteRing validate_ring(const LoopNearRing& nr) {
  auto violations = ring_violations(nr);
  if (!violations.empty()) throw ValidationError(std::move(violations.front()));
  FiniteRing r;
  r.lnr_ = nr;
  return r;
}

FiniteRing make_ring(const Table& add, const Table& mul, Elem one, const Limits& limits) {
  return validate_ring(validate_lnr(add, mul, one, limits));
}

Restriction restrict_tables(const LoopNearRing& nr, const std::vector<Elem>& carrier, Elem one) {
  const std::size_t k = carrier.size();
  std::vector<Elem> index(nr.size(), ~Elem{0});
  for (std::size_t i = 0; i < k; ++i) index[carrier[i]] = static_cast<Elem>(i);
  auto lookup = [&](Elem parent) {
    const Elem i = index[parent];
    if (i == ~Elem{0}) throw ValidationError(ErrorKind::NotASubloop, {parent}, "carrier not closed under operations");
    return i;
  };
  Restriction r{Table(k), Table(k), lookup(one)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      r.add.set(static_cast<Elem>(i), static_cast<Elem>(j), lookup(nr.add(carrier[i], carrier[j])));
      r.mul.set(static_cast<Elem>(i), static_cast<Elem>(j), lookup(nr.mul(carrier[i], carrier[j])));
    }
  return r;
}

}  // namespace loopnr
