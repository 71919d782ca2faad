#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"

using namespace loopnr;

namespace {

// S3 as a loop: permutations of {0,1,2} in lexicographic order, identity first,
// with composition (p + q)(x) = p(q(x)).
CayleyLoop symmetric_group_3() {
  std::vector<std::array<Elem, 3>> perms;
  std::array<Elem, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(perms.size());
  for (Elem a = 0; a < perms.size(); ++a)
    for (Elem b = 0; b < perms.size(); ++b) {
      std::array<Elem, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t.set(a, b, static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  return validate_loop(t);
}

std::vector<std::vector<Elem>> members(const std::vector<ElementSubset>& family) { return oracle::as_lists(family); }

}  // namespace

TEST_CASE("validate_loop accepts Latin squares with zero at index 0") {
  const auto z2 = validate_loop(std::vector<std::vector<Elem>>{{0, 1}, {1, 0}});
  CHECK(z2.size() == 2);
  CHECK(z2.add(1, 1) == 0);
  CHECK(validate_loop(std::vector<std::vector<Elem>>{{0}}).size() == 1);
}

TEST_CASE("validate_loop reports the duplicate") {
  try {
    validate_loop(std::vector<std::vector<Elem>>{{0, 1}, {1, 1}});
    FAIL("expected NotLatinSquare");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotLatinSquare);
    CHECK(e.witness() == std::vector<Elem>{1, 0, 1, 1});
  }
  const auto found = loop_violations(Table::from_rows({{0, 1}, {1, 1}}));
  REQUIRE(found.size() == 2);
  CHECK(found[1].kind == ErrorKind::NotLatinSquare);  // the column duplicate

  try {
    validate_loop(std::vector<std::vector<Elem>>{{1, 0}, {0, 1}});
    FAIL("expected NoTwoSidedZero");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NoTwoSidedZero);
  }
  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), ValidationError);
  CHECK_THROWS_AS(Table::from_rows({{0, 2}, {1, 0}}), ValidationError);
}

TEST_CASE("difference tables agree with scanning the addition table") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_loop(3 + seed % 6, seed);
    for (Elem a = 0; a < g.size(); ++a)
      for (Elem b = 0; b < g.size(); ++b) {
        CHECK(g.ldiff(a, b) == oracle::solve_left(g, a, b));
        CHECK(g.rdiff(b, a) == oracle::solve_right(g, b, a));
        CHECK(g.add(a, g.ldiff(a, b)) == b);
        CHECK(g.add(g.rdiff(b, a), a) == b);
      }
  }
}

TEST_CASE("associativity and commutativity") {
  const auto z4 = cyclic_loop(4);
  CHECK(is_associative(z4));
  CHECK(is_commutative(z4));

  const auto& g = smallest_nonassociative_loop();
  CHECK(g.size() == 5);
  CHECK_FALSE(is_associative(g));
  const auto w = associativity_witness(g);
  REQUIRE(w.has_value());
  const auto [a, b, c] = *w;
  CHECK(g.add(g.add(a, b), c) != g.add(a, g.add(b, c)));
  CHECK_FALSE(is_commutative(symmetric_group_3()));

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& loop : enumerate_loops(n)) CHECK(is_associative(loop));
}

TEST_CASE("subloop_closure") {
  const auto z4 = cyclic_loop(4);
  CHECK(subloop_closure(z4, ElementSubset(4)).members() == std::vector<Elem>{0});
  CHECK(subloop_closure(z4, ElementSubset::of(4, {1})).members() == std::vector<Elem>{0, 1, 2, 3});
  CHECK(subloop_closure(z4, ElementSubset::of(4, {2})).members() == std::vector<Elem>{0, 2});

  // Every subset of the order-5 nonassociative loop against the brute-force closure.
  const auto& g = smallest_nonassociative_loop();
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const auto s = oracle::from_mask(5, mask);
    auto expected = s.members();
    if (expected.empty() || expected[0] != 0) expected.insert(expected.begin(), 0);
    CHECK(subloop_closure(g, s).members() == oracle::closure(g, expected));
  }
}

TEST_CASE("enumerate_subloops") {
  CHECK(members(enumerate_subloops(cyclic_loop(4))) ==
        std::vector<std::vector<Elem>>{{0}, {0, 2}, {0, 1, 2, 3}});
  CHECK(enumerate_subloops(generate("product:cyclic:2+cyclic:2").loop).size() == 5);
  CHECK(enumerate_subloops(symmetric_group_3()).size() == 6);

  // The lexicographically least nonassociative order-5 loop has 1 + 1 = 0, so
  // {0, 1} is a subloop besides the trivial ones.
  const auto& g = smallest_nonassociative_loop();
  CHECK(members(enumerate_subloops(g)) == std::vector<std::vector<Elem>>{{0}, {0, 1}, {0, 1, 2, 3, 4}});

  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& loop : enumerate_loops(n)) CHECK(members(enumerate_subloops(loop)) == oracle::subloops(loop));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto loop = random_loop(7 + seed % 3, seed);
    CHECK(members(enumerate_subloops(loop)) == oracle::subloops(loop));
  }
  CHECK_THROWS_AS(enumerate_subloops(cyclic_loop(25)), BoundExceeded);
  CHECK(enumerate_subloops(cyclic_loop(1)).size() == 1);
}

TEST_CASE("enumerate_subloops is independent of the thread count") {
  const auto loop = random_loop(10, 3);
  Limits one, four;
  four.threads = 4;
  CHECK(enumerate_subloops(loop, one) == enumerate_subloops(loop, four));
}

TEST_CASE("is_normal_subloop") {
  const auto z4 = cyclic_loop(4);
  CHECK(is_normal_subloop(z4, ElementSubset::of(4, {0, 2})));
  CHECK(is_normal_subloop(z4, ElementSubset::of(4, {0})));
  CHECK(is_normal_subloop(z4, ElementSubset::full(4)));
  CHECK_THROWS_AS(is_normal_subloop(z4, ElementSubset::of(4, {0, 1})), ValidationError);

  const auto s3 = symmetric_group_3();
  std::size_t normal = 0;
  for (const auto& k : enumerate_subloops(s3)) normal += is_normal_subloop(s3, k);
  CHECK(normal == 3);  // {id}, A3, S3; the three order-2 subgroups are not normal
  // Indices 0 and 1 are 012 and 021: the identity and the transposition of 1 and 2.
  CHECK_FALSE(is_normal_subloop(s3, ElementSubset::of(6, {0, 1})));
}

TEST_CASE("loop homomorphisms") {
  const auto z4 = cyclic_loop(4);
  const auto z2 = cyclic_loop(2);
  const auto id = validate_loop_hom({0, 1, 2, 3}, z4, z4);
  CHECK(id.kernel().members() == std::vector<Elem>{0});
  CHECK(id.image().is_full());

  const auto red = validate_loop_hom({0, 1, 0, 1}, z4, z2);
  CHECK(red.kernel().members() == std::vector<Elem>{0, 2});
  CHECK(is_normal_subloop(z4, red.kernel()));

  try {
    validate_loop_hom({1, 0}, z2, z2);
    FAIL("swap is not a homomorphism");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ErrorKind::NotAHomomorphism);
    CHECK(e.witness().size() == 2);
  }
  CHECK_THROWS_AS(validate_loop_hom({0, 1}, z4, z2), ValidationError);
  CHECK_THROWS_AS(validate_loop_hom({0, 1, 0, 5}, z4, z2), ValidationError);
}

TEST_CASE("projections of product loops preserve differences and have normal kernels") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto a = random_loop(3 + seed % 3, seed);
    const auto b = random_loop(2 + seed % 2, seed + 100);
    const auto p = product(a, b);
    std::vector<Elem> map(p.size());
    for (Elem x = 0; x < p.size(); ++x) map[x] = static_cast<Elem>(x % a.size());
    const auto f = validate_loop_hom(map, p, a);
    for (Elem x = 0; x < p.size(); ++x)
      for (Elem y = 0; y < p.size(); ++y) {
        CHECK(f(p.ldiff(x, y)) == a.ldiff(f(x), f(y)));
        CHECK(f(p.rdiff(x, y)) == a.rdiff(f(x), f(y)));
      }
    CHECK(f(0) == 0);
    CHECK(is_subloop(a, f.image()));
    CHECK(is_normal_subloop(p, f.kernel()));
    CHECK(f.kernel().size() == b.size());
  }
}
