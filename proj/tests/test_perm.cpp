#include <doctest.h>

#include "grplat/perm.hpp"
#include "helpers.hpp"

using namespace grplat;
using grplat::test::perm;

TEST_SUITE("perm") {

TEST_CASE("image arrays must be bijections") {
  CHECK_NOTHROW(perm({1, 2, 0}));
  CHECK_THROWS_AS(perm({0, 0, 1}), Error);
  CHECK_THROWS_AS(perm({0, 3, 1}), Error);
  try {
    perm({1, 1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_permutation);
  }
}

TEST_CASE("composition applies the left factor first") {
  Permutation a = perm({1, 0, 2});  // (0 1)
  Permutation b = perm({0, 2, 1});  // (1 2)
  // (a*b)(0) = b(a(0)) = b(1) = 2
  CHECK((a * b).apply(0) == 2);
  CHECK((b * a).apply(0) == 1);
  CHECK(a * a.inverse() == Permutation::identity(3));
}

TEST_CASE("inverse and order") {
  Permutation c = perm({1, 2, 3, 4, 5, 0});
  CHECK(c.order() == 6);
  CHECK(c.inverse().order() == 6);
  CHECK((c * c).order() == 3);
  CHECK(perm({1, 0, 3, 2}).order() == 2);
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(perm({1, 0, 3, 4, 2}).order() == 6);  // 2-cycle * 3-cycle
}

TEST_CASE("cycle notation") {
  CHECK(perm({1, 2, 0}).to_cycle_string() == "(0 1 2)");
  CHECK(perm({1, 0, 2, 4, 3}).to_cycle_string() == "(0 1)(3 4)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
}

TEST_CASE("ordering is lexicographic on image arrays") {
  CHECK(Permutation::identity(3) < perm({0, 2, 1}));
  CHECK(perm({0, 2, 1}) < perm({1, 0, 2}));
  // the identity is minimal among all permutations of its degree
  auto all = grplat::test::naive_closure(4, {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  CHECK(*all.begin() == Permutation::identity(4));
  CHECK(all.size() == 24);
}

}  // TEST_SUITE
