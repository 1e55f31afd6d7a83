#include <doctest.h>

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

TEST_SUITE("totient") {

TEST_CASE("euler totient, direct count") {
  CHECK(euler_totient_direct(PermGroup::trivial(6), cyclic_group(6)) == 2);  // phi(6)
  PermGroup c6 = cyclic_group(6);
  CHECK(euler_totient_direct(c6, c6) == 1);  // [H,H]

  PermGroup l32 = fixture_group(21, 1);
  CHECK(euler_totient_direct(stabilizer(l32, 0), l32) == 16);
}

TEST_CASE("direct equals Moebius") {
  for (const PermGroup& g :
       {cyclic_group(6), cyclic_group(12), symmetric_group(3), symmetric_group(4),
        dicyclic_group(2), alternating_group(4)}) {
    SubgroupInterval I = full_lattice(g);
    CHECK(euler_totient_direct(I) == euler_totient_moebius(I));
  }
  SubgroupInterval L = stab_interval(fixture_group(21, 1));
  CHECK(euler_totient_moebius(L) == 16);
  CHECK(euler_totient_direct(L) == 16);
}

TEST_CASE("dual euler totient") {
  CHECK(dual_euler_totient(stab_interval(fixture_group(21, 1))) == 8);
  CHECK(dual_euler_totient(stab_interval(fixture_group(28, 1))) == 15);
  // four-term oracle on [1,C6]: 6 - 3 - 2 + 1
  CHECK(dual_euler_totient(full_lattice(cyclic_group(6))) == 6 - 3 - 2 + 1);
}

TEST_CASE("cyclic groups recover the classical totient") {
  auto classical = [](int n) {
    int out = 0;
    for (int k = 1; k <= n; ++k) {
      int a = k, b = n;
      while (b) {
        int t = a % b;
        a = b;
        b = t;
      }
      if (a == 1) ++out;
    }
    return out;
  };
  for (int n : {2, 3, 4, 6, 8, 9, 10, 12, 16, 18, 24, 30})
    CHECK(euler_totient_moebius(full_lattice(cyclic_group(n))) == classical(n));
}

TEST_CASE("coset poset moebius") {
  CHECK(coset_poset_moebius(full_lattice(cyclic_group(6))) == -2);
  SubgroupInterval c6 = full_lattice(cyclic_group(6));
  SubgroupInterval hh = c6.subinterval(c6.top(), c6.top());
  CHECK(coset_poset_moebius(hh) == -1);  // degenerate [H,H]
  // Boolean rank 2: mu(C^) = -(-1)^2 phi^ = -8
  CHECK(coset_poset_moebius(stab_interval(fixture_group(21, 1))) == -8);
}

TEST_CASE("crosscut factorizations") {
  // [1,C12]: T = C2, phi(12) = 4 = |T:1| phi(T,C12) = 2*2
  SubgroupInterval c12 = full_lattice(cyclic_group(12));
  CrosscutCheck cc = crosscut_factorizations(c12);
  CHECK(cc.ok());
  CHECK(cc.phi == 4);

  // [1,Q8]: phi^ = |Q8:C2| phi^(1,C2) = 4
  SubgroupInterval q8 = full_lattice(dicyclic_group(2));
  CrosscutCheck qq = crosscut_factorizations(q8);
  CHECK(qq.ok());
  CHECK(qq.phi_hat == 4);

  SubgroupInterval hh = c12.subinterval(c12.top(), c12.top());
  CrosscutCheck dd = crosscut_factorizations(hh);
  CHECK(dd.ok());
  CHECK(dd.phi == 1);
  CHECK(dd.phi_hat == 1);
}

TEST_CASE("prime power criterion") {
  CHECK_FALSE(prime_power_criterion(full_lattice(cyclic_group(4))));  // mu = 0
  CHECK(prime_power_criterion(full_lattice(cyclic_group(2))));
  // 6 is not a prime power, although phi^ = 2 != 0: sufficient only
  CHECK_FALSE(prime_power_criterion(full_lattice(cyclic_group(6))));
  CHECK(dual_euler_totient(full_lattice(cyclic_group(6))) == 2);
}

TEST_CASE("moebius table on subgroup lattices") {
  SubgroupInterval s3 = full_lattice(symmetric_group(3));
  MoebiusTable t(s3.poset());
  CHECK(t.invariant() == 3);  // mu(1,S3)
  CHECK(moebius_from_bottom_of(s3, s3.bottom())[static_cast<std::size_t>(s3.top())] == 3);
}

TEST_CASE("totient report asserts the sign relation") {
  TotientReport rep = totient_report(stab_interval(fixture_group(21, 1)));
  CHECK(rep.phi_direct == 16);
  CHECK(rep.phi_hat == 8);
  CHECK(rep.coset_poset_mu == -8);
  CHECK(rep.boolean_rank == 2);
}

TEST_CASE("hall identity") {
  CHECK(hall_identity_holds(full_lattice(cyclic_group(6))));
  CHECK(hall_identity_holds(full_lattice(symmetric_group(4))));
  CHECK(hall_identity_holds(stab_interval(fixture_group(21, 1))));
}

}  // TEST_SUITE
