#include <doctest.h>

#include <map>
#include <set>

#include "grplat/labeling.hpp"
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

TEST_SUITE("labeling") {

TEST_CASE("classic EL-labeling of B_3") {
  FinitePoset b3 = FinitePoset::boolean_lattice(3);
  EdgeLabeling l = boolean_lattice_labeling(b3);
  CHECK(l.label.size() == b3.covers().size());
  ElVerification v = verify_el_labeling(b3, l);
  CHECK(v.ok);
  // counted on the dual orientation there is exactly one decreasing chain
  CHECK(count_decreasing_maximal_chains(b3.dual(), l.dual()) == 1);
  for (int n = 2; n <= 5; ++n) {
    FinitePoset bn = FinitePoset::boolean_lattice(n);
    CHECK(verify_el_labeling(bn, boolean_lattice_labeling(bn)).ok);
  }
}

TEST_CASE("el labeling of C^(1,C6)") {
  SubgroupInterval I = full_lattice(cyclic_group(6));
  CosetPoset chat = CosetPoset::build(I, true);
  EdgeLabeling el = el_labeling(I, chat);

  // one label per cover, all within {0, +-1, +-2}
  CHECK(el.label.size() == chat.poset().covers().size());
  for (const auto& [edge, v] : el.label) {
    CHECK(v >= -2);
    CHECK(v <= 2);
    if (edge.first == chat.bottom_node()) CHECK(v == 0);
  }

  // covers into the top from a coatom coset carry the complementary atom index
  for (const auto& [x, y] : chat.poset().covers()) {
    if (y != chat.top_node() || x == chat.bottom_node()) continue;
    int i = std::abs(el.at(x, y));
    int atom = I.atoms()[static_cast<std::size_t>(i - 1)];
    CHECK(I.join(chat.member_of(x), atom) == I.top());
  }

  ElVerification v = verify_dual_el_labeling(chat, el);
  CHECK(v.ok);
  CHECK(count_decreasing_maximal_chains(chat.poset().dual(), el.dual()) == 2);

  // the labeled diagram's multiset, up to renumbering the two atoms:
  // six 0s and, in one numbering, four -2s, four +2s, three -1s, six +1s
  std::multiset<int> got;
  for (const auto& [edge, value] : el.label) got.insert(value);
  std::multiset<int> reference{0, 0, 0, 0, 0, 0, -2, -2, -2, -2, 2, 2, 2, 2,
                               -1, -1, -1, 1, 1, 1, 1, 1, 1};
  std::multiset<int> renumbered;  // atom indices 1 and 2 swapped
  for (int value : reference) {
    int magnitude = std::abs(value);
    int other = magnitude == 0 ? 0 : 3 - magnitude;
    renumbered.insert(value < 0 ? -other : other);
  }
  CHECK((got == reference || got == renumbered));
}

TEST_CASE("el labels are representative independent") {
  SubgroupInterval I = stab_interval(fixture_group(21, 1));
  CosetPoset chat = CosetPoset::build(I, true);
  const BooleanCheck bc = I.boolean_structure();
  REQUIRE(bc.ok());

  // recompute each label from every element of the lower coset: same sign
  for (const auto& [x, y] : chat.poset().covers()) {
    if (x == chat.bottom_node() || y == chat.top_node()) continue;
    const std::uint64_t gained = bc.structure->atom_mask[static_cast<std::size_t>(chat.member_of(y))] &
                                 ~bc.structure->atom_mask[static_cast<std::size_t>(chat.member_of(x))];
    const int i = std::countr_zero(gained);
    const int complement =
        bc.structure->complement[static_cast<std::size_t>(I.atoms()[static_cast<std::size_t>(i)])];
    const ElemMask& mi = I.member(complement).elems;
    const ElemMask& coset = chat.coset_elems(x);
    bool first = mi.test(static_cast<ElementId>(coset.find_first()));
    for (auto r = coset.find_first(); r != ElemMask::npos; r = coset.find_next(r))
      CHECK(mi.test(r) == first);
  }
}

TEST_CASE("dual-EL fails exactly off the group-complemented case") {
  SubgroupInterval I = stab_interval(fixture_group(21, 1));
  CosetPoset chat = CosetPoset::build(I, true);
  EdgeLabeling el = el_labeling(I, chat);
  ElVerification v = verify_dual_el_labeling(chat, el);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness.has_value());
  // the witness interval is of the form [empty, Lg]
  CHECK(v.witness->first == chat.bottom_node());
  CHECK(v.reason == "no strictly increasing maximal chain");

  // coset-to-coset intervals always carry the EL structure: within [L1g, L2g]
  // every permutation of the label multiset occurs exactly once
  const FinitePoset& p = chat.poset();
  for (int x = 0; x < p.size(); ++x) {
    if (x == chat.bottom_node()) continue;
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      std::map<std::vector<int>, int> words;
      std::multiset<int> multiset_ref;
      bool first_chain = true;
      p.visit_maximal_chains_between(x, y, [&](const std::vector<int>& chain) {
        std::vector<int> word;
        for (std::size_t i = 1; i < chain.size(); ++i)
          word.push_back(el.at(chain[i - 1], chain[i]));
        if (first_chain) {
          multiset_ref = std::multiset<int>(word.begin(), word.end());
          first_chain = false;
        } else {
          CHECK(std::multiset<int>(word.begin(), word.end()) == multiset_ref);
        }
        ++words[word];
      });
      for (const auto& [word, count] : words) CHECK(count == 1);
    }
  }
}

TEST_CASE("decreasing chains on [1,C2]") {
  SubgroupInterval I = full_lattice(cyclic_group(2));
  CosetPoset chat = CosetPoset::build(I, true);
  EdgeLabeling el = el_labeling(I, chat);
  CHECK(count_decreasing_maximal_chains(chat.poset().dual(), el.dual()) == 1);
  CHECK(verify_dual_el_labeling(chat, el).ok);
}

TEST_CASE("shellability crosscheck") {
  ShellabilityReport c6 = shellability_crosscheck(full_lattice(cyclic_group(6)));
  CHECK(c6.all_equal);
  CHECK(c6.phi_hat == 2);
  CHECK(c6.dim == 1);

  ShellabilityReport c2 = shellability_crosscheck(full_lattice(cyclic_group(2)));
  CHECK(c2.all_equal);
  CHECK(c2.phi_hat == 1);

  ShellabilityReport grid = shellability_crosscheck(stab_interval(fixture_group(6, 3)));
  CHECK(grid.all_equal);
  CHECK(grid.phi_hat == 2);

  CHECK_THROWS_AS(shellability_crosscheck(full_lattice(symmetric_group(3))), Error);
  CHECK_THROWS_AS(shellability_crosscheck(stab_interval(fixture_group(21, 1))), Error);
  try {
    shellability_crosscheck(stab_interval(fixture_group(21, 1)));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_group_complemented);
  }
}

TEST_CASE("el labeling requires a Boolean interval") {
  CHECK_THROWS_AS(
      el_labeling(full_lattice(symmetric_group(3)),
                  CosetPoset::build(full_lattice(symmetric_group(3)), true)),
      Error);
}

}  // TEST_SUITE
