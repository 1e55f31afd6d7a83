#include <doctest.h>

#include <random>

#include "grplat/coset_poset.hpp"
#include "grplat/standard_groups.hpp"
#include "grplat/totient.hpp"
#include "helpers.hpp"

using namespace grplat;
using grplat::test::fixture_group;

namespace {

SubgroupInterval full_lattice(const PermGroup& g) {
  return SubgroupInterval::build(g, PermGroup::trivial(g.degree()));
}

SubgroupInterval stab_interval(const PermGroup& g) {
  return SubgroupInterval::build(g, stabilizer(g, 0));
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("boundary ranks on hand-checked matrices") {
  IntMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 2;
  m.at(2, 2) = 3;
  CHECK(rank_fraction_free(m) == 3);

  IntMatrix r(3, 3);  // rank 2: row3 = row1 + row2
  int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {5, 7, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = vals[i][j];
  CHECK(rank_fraction_free(r) == 2);

  CHECK(rank_fraction_free(IntMatrix(0, 5)) == 0);
  CHECK(rank_fraction_free(IntMatrix(4, 4)) == 0);  // zero matrix
}

TEST_CASE("rank of constructed products is exact") {
  // M = A * B with an identity block pinning rank(M) = r exactly
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = 4 + rng() % 5, n = 4 + rng() % 5;
    const std::size_t r = 1 + rng() % std::min(m, n);
    IntMatrix a(m, r), b(r, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < r; ++j) a.at(i, j) = static_cast<int>(rng() % 7) - 3;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) b.at(i, j) = static_cast<int>(rng() % 7) - 3;
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) a.at(k, j) = (k == j) ? 1 : 0;
      for (std::size_t i = 0; i < r; ++i) b.at(i, k) = (i == k) ? 1 : 0;
    }
    CHECK(rank_fraction_free(a * b) == r);
  }
}

TEST_CASE("order complex of the proper part of B_4") {
  FinitePoset b4 = FinitePoset::boolean_lattice(4);
  OrderComplex k = OrderComplex::of_poset(b4.proper_part());
  CHECK(k.f_vector() == std::vector<std::uint64_t>{1, 14, 36, 24});
  CHECK(k.reduced_euler_characteristic() == 1);
  HomologyReport h = homology(k);
  CHECK(h.betti == std::vector<std::uint64_t>{0, 0, 0, 1});  // S^2
}

TEST_CASE("degenerate complexes") {
  HomologyReport point = homology_of_poset(FinitePoset::antichain(1));
  CHECK(point.reduced_euler_char == 0);
  for (std::uint64_t b : point.betti) CHECK(b == 0);

  HomologyReport empty = homology_of_poset(FinitePoset::antichain(0));
  CHECK(empty.reduced_euler_char == -1);
  CHECK(empty.betti == std::vector<std::uint64_t>{1});  // beta_{-1}

  OrderComplex anti = OrderComplex::of_poset(FinitePoset::antichain(5));
  CHECK(anti.f_vector() == std::vector<std::uint64_t>{1, 5});  // no edges
  CHECK(homology(anti).betti == std::vector<std::uint64_t>{0, 4});
}

TEST_CASE("coset poset of [1,C6]") {
  SubgroupInterval I = full_lattice(cyclic_group(6));
  CosetPoset c = CosetPoset::build(I, false);
  CHECK(c.size() == 11);  // 6 + 3 + 2

  OrderComplex k = OrderComplex::of_poset(c.poset());
  CHECK(k.face_count(0) == 11);
  CHECK(k.face_count(1) == 12);  // each singleton under its two covering cosets

  HomologyReport h = homology(k);
  CHECK(h.betti_at(0) == 0);
  CHECK(h.betti_at(1) == 2);  // wedge of two circles
  CHECK(h.reduced_euler_char == -2);
  CHECK(h.reduced_euler_char == coset_poset_moebius(I));  // mu(P^) = chi~(Delta(P))
}

TEST_CASE("coset poset of [D8, PSL(3,2)]") {
  SubgroupInterval I = stab_interval(fixture_group(21, 1));
  CosetPoset c = CosetPoset::build(I, false);
  CHECK(c.size() == 35);  // 21 + 7 + 7

  HomologyReport h = homology_of_poset(c.poset());
  CHECK(h.betti_at(0) == 0);
  CHECK(h.betti_at(1) == 8);  // = phi^

  CosetPoset chat = CosetPoset::build(I, true);
  CHECK(chat.size() == 37);
  CHECK(proper_part_connected(chat));
  CohenMacaulayReport cm = is_cohen_macaulay(chat.poset());
  CHECK(cm.cohen_macaulay);
}

TEST_CASE("maximal H gives an antichain") {
  PermGroup l32 = fixture_group(7, 5);  // stabilizer S4 is maximal
  SubgroupInterval I = stab_interval(l32);
  REQUIRE(I.size() == 2);
  CosetPoset c = CosetPoset::build(I, false);
  CHECK(c.size() == 7);
  for (const auto& cover : c.poset().covers()) CHECK(cover.first == cover.second);  // none
  CHECK(c.poset().covers().empty());

  CosetPoset chat = CosetPoset::build(I, true);
  CHECK_FALSE(proper_part_connected(chat));
}

TEST_CASE("degenerate interval [H,H]") {
  SubgroupInterval I = full_lattice(cyclic_group(6));
  SubgroupInterval hh = I.subinterval(I.top(), I.top());
  CosetPoset chat = CosetPoset::build(hh, true);
  CHECK(chat.size() == 2);  // empty set < G
  HomologyReport h = homology_of_poset(chat.poset().proper_part());
  CHECK(h.betti == std::vector<std::uint64_t>{1});
  CHECK(h.reduced_euler_char == -1);
  CHECK(is_cohen_macaulay(chat.poset()).cohen_macaulay);
}

TEST_CASE("cohen-macaulay on abstract posets") {
  CHECK(is_cohen_macaulay(FinitePoset::boolean_lattice(3)).cohen_macaulay);
  SubgroupInterval c6 = full_lattice(cyclic_group(6));
  CHECK(is_cohen_macaulay(CosetPoset::build(c6, true).poset()).cohen_macaulay);

  // C^(1,S4) is not graded: maximal coset chains through S3 have length 4,
  // through the 2-subgroup tower length 5
  SubgroupInterval s4 = full_lattice(symmetric_group(4));
  CosetPoset s4hat = CosetPoset::build(s4, true);
  CHECK_FALSE(s4hat.poset().is_pure());
  CHECK_THROWS_AS(is_cohen_macaulay(s4hat.poset()), Error);

  // disconnected proper part at length 3 fails the homology criterion:
  // two disjoint 2-chains glued at bounds
  FinitePoset two_chains = FinitePoset::from_relation(4, [](int a, int b) {
    return (a == 0 && b == 1) || (a == 2 && b == 3);
  }).bounded_extension();
  REQUIRE(two_chains.is_graded());
  CohenMacaulayReport bad = is_cohen_macaulay(two_chains);
  CHECK_FALSE(bad.cohen_macaulay);
  CHECK(bad.witness.has_value());
  CHECK(bad.witness->first == 0);  // the full open interval (0^,1^) is the witness
}

TEST_CASE("boundary composition vanishes") {
  SubgroupInterval I = full_lattice(cyclic_group(6));
  OrderComplex k = OrderComplex::of_poset(CosetPoset::build(I, false).poset());
  for (int d = 1; d <= k.dim(); ++d) CHECK((k.boundary(d - 1) * k.boundary(d)).is_zero());
}

TEST_CASE("quillen reduction") {
  // [1,C12]: T = C2; Betti vectors of C(1,C12) and C(C2,C12) agree
  QuillenCheck q = quillen_reduction_check(full_lattice(cyclic_group(12)));
  CHECK_FALSE(q.trivial);
  CHECK(q.equal);

  QuillenCheck t = quillen_reduction_check(full_lattice(symmetric_group(3)));
  CHECK(t.trivial);  // T = 1

  QuillenCheck q8 = quillen_reduction_check(full_lattice(dicyclic_group(2)));
  CHECK_FALSE(q8.trivial);
  CHECK(q8.equal);
}

TEST_CASE("face cap") {
  SubgroupInterval I = full_lattice(symmetric_group(4));
  CosetPoset c = CosetPoset::build(I, false);
  CHECK_THROWS_AS(OrderComplex::of_poset(c.poset(), 10), Error);
  try {
    OrderComplex::of_poset(c.poset(), 10);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::face_cap_exceeded);
  }
}

}  // TEST_SUITE
