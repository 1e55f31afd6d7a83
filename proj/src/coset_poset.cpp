#include "grplat/coset_poset.hpp"

#include <algorithm>

namespace grplat {

struct CosetPoset::Impl {
  SubgroupInterval interval;
  bool bounded = false;
  std::vector<int> member;        // per proper coset
  std::vector<ElementId> rep;     // canonical representative
  std::vector<ElemMask> elems;    // coset contents
  FinitePoset poset;
};

CosetPoset CosetPoset::build(const SubgroupInterval& I, bool bounded) {
  auto impl = std::make_shared<Impl>();
  impl->interval = I;
  impl->bounded = bounded;

  const PermGroup& G = I.group();
  const ElemMask& universe = I.member(I.top()).elems;
  for (int k = 0; k < I.size(); ++k) {
    if (k == I.top()) continue;  // proper members only
    const SubgroupMask& K = I.member(k);
    for (ElementId rep : mask::coset_reps_within(G, K.elems, universe)) {
      impl->member.push_back(k);
      impl->rep.push_back(rep);
      impl->elems.push_back(mask::coset_mask(G, K.elems, rep));
    }
  }
  // members are ordered by (order, mask) already and coset reps ascend, so the
  // (member, rep) order is established; keep it explicit anyway
  std::vector<std::size_t> perm(impl->member.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (impl->member[a] != impl->member[b]) return impl->member[a] < impl->member[b];
    return impl->rep[a] < impl->rep[b];
  });
  std::vector<int> member(perm.size());
  std::vector<ElementId> rep(perm.size());
  std::vector<ElemMask> elems(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    member[i] = impl->member[perm[i]];
    rep[i] = impl->rep[perm[i]];
    elems[i] = std::move(impl->elems[perm[i]]);
  }
  impl->member = std::move(member);
  impl->rep = std::move(rep);
  impl->elems = std::move(elems);

  const int n = static_cast<int>(impl->member.size());
  const int shift = bounded ? 1 : 0;
  const int total = bounded ? n + 2 : n;
  impl->poset = FinitePoset::from_relation(total, [&](int x, int y) {
    if (bounded) {
      if (x == 0) return true;            // empty set below everything
      if (y == 0) return false;
      if (y == n + 1) return true;        // G above everything
      if (x == n + 1) return false;
    }
    return impl->elems[static_cast<std::size_t>(x - shift)].is_subset_of(
        impl->elems[static_cast<std::size_t>(y - shift)]);
  });

  CosetPoset out;
  out.impl_ = std::move(impl);
  return out;
}

const SubgroupInterval& CosetPoset::interval() const { return impl_->interval; }
bool CosetPoset::bounded() const { return impl_->bounded; }
int CosetPoset::size() const { return impl_->poset.size(); }
int CosetPoset::proper_coset_count() const { return static_cast<int>(impl_->member.size()); }
const FinitePoset& CosetPoset::poset() const { return impl_->poset; }

bool CosetPoset::is_proper_coset(int node) const {
  if (!impl_->bounded) return true;
  return node != 0 && node != size() - 1;
}

int CosetPoset::member_of(int node) const {
  if (impl_->bounded && node == size() - 1) return impl_->interval.top();
  internal_check(is_proper_coset(node), "node is not a coset");
  return impl_->member[static_cast<std::size_t>(node - (impl_->bounded ? 1 : 0))];
}

ElementId CosetPoset::rep_of(int node) const {
  if (impl_->bounded && node == size() - 1)
    return static_cast<ElementId>(impl_->interval.member(impl_->interval.top()).elems.find_first());
  internal_check(is_proper_coset(node), "node is not a coset");
  return impl_->rep[static_cast<std::size_t>(node - (impl_->bounded ? 1 : 0))];
}

const ElemMask& CosetPoset::coset_elems(int node) const {
  if (impl_->bounded && node == size() - 1) return impl_->interval.member(impl_->interval.top()).elems;
  internal_check(is_proper_coset(node), "node is not a coset");
  return impl_->elems[static_cast<std::size_t>(node - (impl_->bounded ? 1 : 0))];
}

int CosetPoset::bottom_node() const {
  internal_check(impl_->bounded, "bottom node exists only in the bounded variant");
  return 0;
}

int CosetPoset::top_node() const {
  internal_check(impl_->bounded, "top node exists only in the bounded variant");
  return size() - 1;
}

CosetPoset build_coset_poset(const SubgroupInterval& I, bool bounded) {
  return CosetPoset::build(I, bounded);
}

bool proper_part_connected(const CosetPoset& bounded) {
  internal_check(bounded.bounded(), "proper_part_connected expects the bounded variant");
  return bounded.poset().proper_part().comparability_connected();
}

QuillenCheck quillen_reduction_check(const SubgroupInterval& I, std::uint64_t face_cap) {
  QuillenCheck check;
  const int t = I.top_meet();
  if (t == I.bottom()) {
    check.trivial = true;
    return check;
  }
  CosetPoset full = CosetPoset::build(I, false);
  CosetPoset reduced = CosetPoset::build(I.subinterval(t, I.top()), false);
  check.betti_full = homology_of_poset(full.poset(), face_cap).betti;
  check.betti_top = homology_of_poset(reduced.poset(), face_cap).betti;
  // homotopy equivalence: compare up to trailing zeros
  auto trimmed = [](std::vector<std::uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  check.equal = trimmed(check.betti_full) == trimmed(check.betti_top);
  return check;
}

}  // namespace grplat
