#include "grplat/labeling.hpp"

#include <algorithm>
#include <bit>

#include "grplat/totient.hpp"

namespace grplat {

int EdgeLabeling::at(int lower, int upper) const {
  auto it = label.find({lower, upper});
  internal_check(it != label.end(), "cover relation has no label");
  return it->second;
}

EdgeLabeling EdgeLabeling::dual() const {
  EdgeLabeling d;
  for (const auto& [edge, v] : label) d.label.emplace(std::make_pair(edge.second, edge.first), v);
  return d;
}

EdgeLabeling el_labeling(const SubgroupInterval& I, const CosetPoset& C) {
  const BooleanCheck bc = I.boolean_structure();
  const BooleanStructure& bs = bc.require();
  internal_check(C.bounded(), "el labeling lives on the bounded coset poset");

  EdgeLabeling el;
  const FinitePoset& P = C.poset();
  for (const auto& [x, y] : P.covers()) {
    if (x == C.bottom_node()) {
      el.label[{x, y}] = 0;
      continue;
    }
    const std::uint64_t below = bs.atom_mask[static_cast<std::size_t>(C.member_of(x))];
    const std::uint64_t above = bs.atom_mask[static_cast<std::size_t>(C.member_of(y))];
    const std::uint64_t gained = above & ~below;
    internal_check(std::popcount(gained) == 1, "cover must gain exactly one atom");
    const int i = std::countr_zero(gained) + 1;  // atoms numbered from 1
    const int atom = I.atoms()[static_cast<std::size_t>(i - 1)];
    const int complement = bs.complement[static_cast<std::size_t>(atom)];
    // Xg = Yg cap M_i iff the representative lies in M_i; independent of the
    // choice of representative because X <= M_i
    const bool inside = I.member(complement).elems.test(C.rep_of(x));
    el.label[{x, y}] = inside ? -i : i;
  }
  return el;
}

namespace {

struct ChainScan {
  bool found_increasing = false;
  bool unique = true;
  std::vector<int> best_word;      // lexicographically first word seen
  std::vector<int> increasing_word;

  void add(const std::vector<int>& word) {
    if (best_word.empty() || word < best_word) best_word = word;
    bool strictly_increasing = true;
    for (std::size_t i = 1; i < word.size(); ++i)
      if (word[i] <= word[i - 1]) {
        strictly_increasing = false;
        break;
      }
    if (strictly_increasing) {
      if (found_increasing) unique = false;
      found_increasing = true;
      increasing_word = word;
    }
  }
};

}  // namespace

ElVerification verify_el_labeling(const FinitePoset& P, const EdgeLabeling& L) {
  if (!P.is_graded()) throw Error(Errc::not_graded, "EL verification requires a graded poset");

  ElVerification out;
  const int n = P.size();
  for (int x = 0; x < n && out.ok; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!P.less(x, y)) continue;
      ChainScan scan;
      std::vector<int> word;
      P.visit_maximal_chains_between(x, y, [&](const std::vector<int>& chain) {
        word.clear();
        for (std::size_t i = 1; i < chain.size(); ++i)
          word.push_back(L.at(chain[i - 1], chain[i]));
        scan.add(word);
      });
      std::string fail;
      if (!scan.found_increasing)
        fail = "no strictly increasing maximal chain";
      else if (!scan.unique)
        fail = "strictly increasing maximal chain is not unique";
      else if (scan.increasing_word != scan.best_word)
        fail = "increasing chain is not lexicographically first";
      if (!fail.empty()) {
        out.ok = false;
        out.witness = std::make_pair(x, y);
        out.reason = fail;
        break;
      }
    }
  }
  return out;
}

ElVerification verify_dual_el_labeling(const CosetPoset& C, const EdgeLabeling& L) {
  ElVerification res = verify_el_labeling(C.poset().dual(), L.dual());
  if (res.witness) res.witness = std::make_pair(res.witness->second, res.witness->first);
  return res;
}

Integer count_decreasing_maximal_chains(const FinitePoset& P, const EdgeLabeling& L) {
  if (!P.is_graded())
    throw Error(Errc::not_graded, "decreasing-chain count requires a graded poset");
  Integer count = 0;
  std::vector<int> word;
  P.visit_maximal_chains([&](const std::vector<int>& chain) {
    word.clear();
    for (std::size_t i = 1; i < chain.size(); ++i)
      word.push_back(L.at(chain[i - 1], chain[i]));
    for (std::size_t i = 1; i < word.size(); ++i)
      if (word[i] > word[i - 1]) return;
    ++count;
  });
  return count;
}

ShellabilityReport shellability_crosscheck(const SubgroupInterval& I, std::uint64_t face_cap) {
  I.boolean_structure().require();
  if (!I.is_group_complemented())
    throw Error(Errc::not_group_complemented,
                "shellability crosscheck expects a group-complemented interval");

  ShellabilityReport rep;
  CosetPoset C = CosetPoset::build(I, true);
  EdgeLabeling el = el_labeling(I, C);

  const FinitePoset proper = C.poset().proper_part();
  rep.dim = proper.size() == 0 ? -1 : proper.length();  // dim of Delta(C)
  const Integer sign = (rep.dim % 2 == 0) ? Integer(1) : Integer(-1);

  // the sphere count of a dual EL-labeling counts on the dual orientation
  rep.decreasing_chains = count_decreasing_maximal_chains(C.poset().dual(), el.dual());
  rep.signed_moebius = sign * coset_poset_moebius(I);

  HomologyReport h = homology_of_poset(proper, face_cap);
  rep.top_betti = Integer(h.betti_at(rep.dim));
  rep.signed_euler = sign * h.reduced_euler_char;

  rep.phi = euler_totient_moebius(I);
  rep.phi_hat = dual_euler_totient(I);
  rep.all_equal = rep.decreasing_chains == rep.signed_moebius &&
                  rep.signed_moebius == rep.top_betti && rep.top_betti == rep.signed_euler &&
                  rep.signed_euler == rep.phi_hat && rep.phi == rep.phi_hat;
  internal_check(rep.all_equal, "Theorem: sphere-count quantities disagree");
  return rep;
}

EdgeLabeling boolean_lattice_labeling(const FinitePoset& bn) {
  EdgeLabeling l;
  for (const auto& [x, y] : bn.covers()) {
    const unsigned gained = static_cast<unsigned>(y) & ~static_cast<unsigned>(x);
    internal_check(std::popcount(gained) == 1, "not a Boolean lattice cover");
    l.label[{x, y}] = std::countr_zero(gained) + 1;
  }
  return l;
}

}  // namespace grplat
