#include <doctest.h>

#include "oracles.hpp"

using namespace loopnr;

namespace {

std::vector<std::vector<Elem>> members(const std::vector<ElementSubset>& family) { return oracle::as_lists(family); }

LoopNearRing m0(std::size_t n, std::size_t i) { return *generate("m0:latin:" + std::to_string(n) + "," + std::to_string(i)).nr; }

}  // namespace

TEST_CASE("validation of near-ring tables") {
  const auto z4 = cyclic_ring(4).as_lnr();
  CHECK(z4.zero_symmetric());
  CHECK(z4.one() == 1);

  const auto full = map_near_ring(cyclic_loop(2), false);
  CHECK(full.size() == 4);
  CHECK_FALSE(full.zero_symmetric());
  const auto zs = map_near_ring(cyclic_loop(2), true);
  CHECK(zs.size() == 2);
  CHECK(zs.zero_symmetric());

  // Z/3 with 2*2 changed from 1 to 2 keeps the identity but loses distributivity.
  const auto z3 = cyclic_ring(3);
  Table bad = z3.as_lnr().mul_table();
  bad.set(2, 2, 2);
  const auto found = lnr_violations(z3.as_lnr().add_table(), bad, 1);
  bool saw_rd = false;
  for (const auto& v : found) {
    if (v.kind != ErrorKind::RightDistributivityFails) continue;
    saw_rd = true;
    REQUIRE(v.witness.size() == 3);
    const Elem a = v.witness[0], b = v.witness[1], c = v.witness[2];
    CHECK(bad(z3.add(a, b), c) != z3.add(bad(a, c), bad(b, c)));
  }
  CHECK(saw_rd);
  CHECK_THROWS_AS(validate_lnr(z3.as_lnr().add_table(), bad, 1), ValidationError);

  // Wrong identity.
  try {
    validate_lnr(z3.as_lnr().add_table(), z3.as_lnr().mul_table(), 2);
    FAIL("2 is not the multiplicative identity");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotIdentity);
  }
}

TEST_CASE("units and idempotents") {
  CHECK(units(cyclic_ring(4)).members.members() == std::vector<Elem>{1, 3});
  const auto u9 = units(cyclic_ring(9));
  CHECK(u9.members.size() == 6);
  for (Elem u : u9.members.members()) CHECK(cyclic_ring(9).mul(u, u9.inverse[u]) == 1);
  CHECK(u9.inverse[3] == UnitGroup::kNoInverse);

  CHECK(units(cyclic_ring(1)).members.members() == std::vector<Elem>{0});
  CHECK(units(map_near_ring(cyclic_loop(3), true)).members.size() == 2);

  CHECK(idempotents(cyclic_ring(4)).members() == std::vector<Elem>{0, 1});
  CHECK(idempotents(cyclic_ring(6)).members() == std::vector<Elem>{0, 1, 3, 4});

  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i = 0; i < enumerate_loops(n).size(); ++i) {
      const auto nr = m0(n, i);
      CHECK(units(nr).members.members() == oracle::units(nr));
      CHECK(idempotents(nr).members() == oracle::idempotents(nr));
    }
  const auto m2 = generate("matrix:cyclic:2,2").ring;
  CHECK(units(*m2).members.members() == oracle::units(*m2));
  CHECK(idempotents(*m2).members() == oracle::idempotents(*m2));
}

TEST_CASE("N-subloops") {
  const auto z4 = cyclic_ring(4).as_lnr();
  const auto z6 = cyclic_ring(6).as_lnr();
  CHECK(is_N_subloop(z4, ElementSubset::of(4, {0, 2})));
  CHECK(is_N_subloop(z6, ElementSubset::of(6, {0, 3})));
  CHECK_FALSE(is_N_subloop(z4, ElementSubset::of(4, {0, 1, 3})));
  CHECK(N_subloop_closure(z6, ElementSubset::of(6, {2})).members() == std::vector<Elem>{0, 2, 4});

  CHECK(members(maximal_N_subloops(z4)) == std::vector<std::vector<Elem>>{{0, 2}});
  CHECK(members(maximal_N_subloops(z6)) == std::vector<std::vector<Elem>>{{0, 3}, {0, 2, 4}});
  CHECK(members(maximal_N_subloops(map_near_ring(cyclic_loop(2), true))) == std::vector<std::vector<Elem>>{{0}});

  std::vector<LoopNearRing> corpus;
  for (std::size_t n = 1; n <= 16; ++n) corpus.push_back(cyclic_ring(n));
  corpus.push_back(*generate("product:cyclic:2+cyclic:2").nr);
  corpus.push_back(*generate("matrix:cyclic:2,2").nr);
  corpus.push_back(*generate("upper:cyclic:2,2").nr);
  corpus.push_back(m0(2, 0));
  corpus.push_back(m0(3, 0));
  for (const auto& nr : corpus) {
    const auto expected = oracle::n_subloops(nr);
    CHECK(members(enumerate_N_subloops(nr)) == expected);
    CHECK(members(maximal_N_subloops(nr)) == oracle::maximal_proper(expected, nr.size()));
  }
}

TEST_CASE("N-subloops of the 64-element M0(G) for loops G of order 4") {
  // Too large for the power set. Every reported set must be an N-subloop, the
  // list must hold the closure of every single element, and be closed under joins.
  for (std::size_t i = 0; i < enumerate_loops(4).size(); ++i) {
    const auto nr = m0(4, i);
    const auto lattice = enumerate_N_subloops(nr);
    for (const auto& k : lattice) {
      const auto m = k.members();
      std::vector<bool> in(nr.size(), false);
      for (Elem x : m) in[x] = true;
      CHECK(oracle::closed_subloop(nr.additive(), m, in));
      for (Elem r = 0; r < nr.size(); ++r)
        for (Elem x : m) CHECK(in[nr.mul(r, x)]);
    }
    const auto listed = [&](const ElementSubset& s) { return std::find(lattice.begin(), lattice.end(), s) != lattice.end(); };
    for (Elem x = 0; x < nr.size(); ++x) {
      const auto c = oracle::n_closure(nr, {x});
      CHECK(listed(ElementSubset::of(nr.size(), c)));
      CHECK(N_subloop_closure(nr, ElementSubset::of(nr.size(), {x})).members() == c);
    }
    for (const auto& a : lattice)
      for (const auto& b : lattice) CHECK(listed(ElementSubset::of(nr.size(), oracle::n_closure(nr, (a | b).members()))));
    const auto maxes = maximal_N_subloops(nr);
    CHECK(maxes == maximal_proper(lattice));
  }
}

TEST_CASE("annihilators of idempotents") {
  const auto z6 = cyclic_ring(6).as_lnr();
  CHECK(annihilator(z6, 1).members() == std::vector<Elem>{0});
  CHECK(annihilator(z6, 0).is_full());
  CHECK(annihilator(z6, 3).members() == std::vector<Elem>{0, 2, 4});
  CHECK(annihilator(z6, 4).members() == std::vector<Elem>{0, 3});
  CHECK(annihilator_sum_covers(z6, 3));
  try {
    annihilator(z6, 2);
    FAIL("2 is not idempotent in Z/6");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotIdempotent);
  }

  // Every idempotent of every small M0(G).
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i = 0; i < enumerate_loops(n).size(); ++i) {
      const auto nr = m0(n, i);
      for (Elem e : idempotents(nr).members()) {
        const auto ann = annihilator(nr, e);
        for (Elem y = 0; y < nr.size(); ++y) CHECK(ann.contains(y) == (nr.mul(y, e) == 0));
        CHECK(is_N_subloop(nr, ann));
        CHECK(annihilator_sum_covers(nr, e));
      }
    }
}

TEST_CASE("locality of near-rings") {
  const auto z4 = is_local_lnr(cyclic_ring(4));
  CHECK(z4.local());
  REQUIRE(z4.radical.has_value());
  CHECK(z4.radical->members() == std::vector<Elem>{0, 2});
  CHECK(z4.non_units.members() == std::vector<Elem>{0, 2});
  CHECK(z4.unit_count == 2);

  const auto z6 = is_local_lnr(cyclic_ring(6));
  CHECK_FALSE(z6.local());
  CHECK_FALSE(z6.via_maximal);
  CHECK_FALSE(z6.via_units);
  CHECK(z6.maximal.size() == 2);

  CHECK(is_local_lnr(galois_field(4)).local());
  CHECK(is_local_lnr(cyclic_ring(9)).local());
  CHECK_FALSE(is_local_lnr(*generate("matrix:cyclic:2,2").nr).local());
  CHECK_THROWS_AS(is_local_lnr(map_near_ring(cyclic_loop(2), false)), PreconditionFailed);

  // The two criteria agree on every small M0(G) and on the ring side with the oracle.
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i = 0; i < enumerate_loops(n).size(); ++i) {
      const auto r = is_local_lnr(m0(n, i));
      CHECK(r.via_maximal == r.via_units);
    }
  for (std::size_t n = 2; n <= 16; ++n) CHECK(is_local_lnr(cyclic_ring(n)).local() == oracle::ring_local(cyclic_ring(n)));
}

TEST_CASE("near-ring scans are independent of the thread count") {
  const auto nr = m0(4, 1);
  Limits one, four;
  four.threads = 4;
  CHECK(enumerate_N_subloops(nr, one) == enumerate_N_subloops(nr, four));
  const auto a = is_local_lnr(nr, one), b = is_local_lnr(nr, four);
  CHECK(a.maximal == b.maximal);
  CHECK(a.local() == b.local());
}
