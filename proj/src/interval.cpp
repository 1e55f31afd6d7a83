#include "grplat/interval.hpp"

#include <algorithm>
#include <mutex>

namespace grplat {

const BooleanStructure& BooleanCheck::require() const {
  if (!structure) throw Error(Errc::not_boolean, failure);
  return *structure;
}

struct SubgroupInterval::Impl {
  PermGroup G;
  std::vector<SubgroupMask> members;  // sorted by (order, mask)
  int bottom = 0, top = 0;
  std::vector<NodeMask> up;  // up[a].test(b) iff members[a] <= members[b]
  std::vector<int> atoms, coatoms;
  std::map<ElemMask, int> index;

  mutable std::vector<ElementId> coset_reps;  // both lazy for subinterval views
  mutable std::vector<int> generated;
  mutable std::once_flag cosets_once;
  mutable std::vector<int> meet_tab, join_tab;  // built on first use
  mutable std::once_flag tables_once;

  int find(const ElemMask& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }

  void ensure_cosets() const {
    std::call_once(cosets_once, [this] {
      if (!coset_reps.empty() || members.size() == 0) return;
      const SubgroupMask& bot = members[static_cast<std::size_t>(bottom)];
      const SubgroupMask& topm = members[static_cast<std::size_t>(top)];
      coset_reps = mask::coset_reps_within(G, bot.elems, topm.elems);
      generated.reserve(coset_reps.size());
      for (ElementId rep : coset_reps) {
        std::vector<ElementId> gens = bot.gens;
        gens.push_back(rep);
        SubgroupMask k = mask::closure(G, gens);
        int idx = find(k.elems);
        internal_check(idx >= 0, "generated member missing from interval");
        generated.push_back(idx);
      }
    });
  }

  void finish_order() {
    const int m = static_cast<int>(members.size());
    std::sort(members.begin(), members.end(), [](const SubgroupMask& a, const SubgroupMask& b) {
      if (a.order != b.order) return a.order < b.order;
      return a.elems < b.elems;
    });
    index.clear();
    for (int i = 0; i < m; ++i) index.emplace(members[i].elems, i);
    up.assign(static_cast<std::size_t>(m), NodeMask(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (members[a].is_subset_of(members[b])) up[a].set(b);
    bottom = 0;
    top = m - 1;
    atoms.clear();
    coatoms.clear();
    for (int a = 0; a < m; ++a) {
      if (a == bottom) continue;
      bool atom = true;
      for (int z = 0; z < m; ++z)
        if (z != bottom && z != a && up[z].test(a)) {
          atom = false;
          break;
        }
      if (atom) atoms.push_back(a);
    }
    for (int a = 0; a < m; ++a) {
      if (a == top) continue;
      bool coatom = true;
      for (int z = 0; z < m; ++z)
        if (z != top && z != a && up[a].test(z)) {
          coatom = false;
          break;
        }
      if (coatom) coatoms.push_back(a);
    }
  }

  void ensure_tables() const {
    std::call_once(tables_once, [this] { build_tables(); });
  }

  void build_tables() const {
    if (members.size() < 2) return;
    const int m = static_cast<int>(members.size());
    meet_tab.assign(static_cast<std::size_t>(m) * m, -1);
    join_tab.assign(static_cast<std::size_t>(m) * m, -1);
    for (int a = 0; a < m; ++a) {
      for (int b = a; b < m; ++b) {
        ElemMask meet_mask = members[a].elems & members[b].elems;
        int mt = find(meet_mask);
        internal_check(mt >= 0, "interval not meet-closed");
        // join: smallest member containing both (the interval holds every
        // intermediate subgroup, so the set of common upper bounds has a
        // unique minimum)
        NodeMask above = up[a] & up[b];
        int jn = static_cast<int>(above.find_first());
        internal_check(jn >= 0, "interval not join-closed");
        meet_tab[static_cast<std::size_t>(a) * m + b] = meet_tab[static_cast<std::size_t>(b) * m + a] = mt;
        join_tab[static_cast<std::size_t>(a) * m + b] = join_tab[static_cast<std::size_t>(b) * m + a] = jn;
      }
    }
  }
};

SubgroupInterval SubgroupInterval::build(const PermGroup& G, const PermGroup& H) {
  return build(G, mask::from_group(G, H));
}

SubgroupInterval SubgroupInterval::build(const PermGroup& G, SubgroupMask bottom) {
  auto impl = std::make_shared<Impl>();
  impl->G = G;
  impl->coset_reps = mask::coset_reps(G, bottom.elems);

  // distinct <H,g> over coset representatives
  std::map<ElemMask, int> seen;
  std::vector<SubgroupMask> members;
  std::vector<int> generated_pre;  // pre-sort member index per coset
  generated_pre.reserve(impl->coset_reps.size());
  for (ElementId rep : impl->coset_reps) {
    SubgroupMask k = mask::extend(G, bottom, rep);
    auto [it, fresh] = seen.emplace(k.elems, static_cast<int>(members.size()));
    if (fresh) members.push_back(std::move(k));
    generated_pre.push_back(it->second);
  }

  // close under join; the outer index grows as members are appended, so every
  // pair is visited exactly once
  for (std::size_t b = 1; b < members.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      SubgroupMask j = mask::join(G, members[a], members[b]);
      auto [it, fresh] = seen.emplace(j.elems, static_cast<int>(members.size()));
      if (fresh) members.push_back(std::move(j));
    }
  }

  std::vector<ElemMask> pre_masks;
  pre_masks.reserve(members.size());
  for (const auto& s : members) pre_masks.push_back(s.elems);

  impl->members = std::move(members);
  impl->finish_order();

  impl->generated.resize(generated_pre.size());
  for (std::size_t i = 0; i < generated_pre.size(); ++i) {
    impl->generated[i] = impl->find(pre_masks[static_cast<std::size_t>(generated_pre[i])]);
    internal_check(impl->generated[i] >= 0, "generated member missing");
  }

  SubgroupInterval out;
  out.impl_ = std::move(impl);
  return out;
}

const PermGroup& SubgroupInterval::group() const { return impl_->G; }
int SubgroupInterval::size() const { return static_cast<int>(impl_->members.size()); }
const SubgroupMask& SubgroupInterval::member(int i) const { return impl_->members[static_cast<std::size_t>(i)]; }
std::uint64_t SubgroupInterval::member_order(int i) const { return member(i).order; }
int SubgroupInterval::bottom() const { return impl_->bottom; }
int SubgroupInterval::top() const { return impl_->top; }
bool SubgroupInterval::leq(int a, int b) const { return impl_->up[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }

int SubgroupInterval::meet(int a, int b) const {
  impl_->ensure_tables();
  if (impl_->meet_tab.empty()) return impl_->bottom;  // single-member interval
  return impl_->meet_tab[static_cast<std::size_t>(a) * size() + b];
}

int SubgroupInterval::join(int a, int b) const {
  impl_->ensure_tables();
  if (impl_->join_tab.empty()) return impl_->top;
  return impl_->join_tab[static_cast<std::size_t>(a) * size() + b];
}

const std::vector<int>& SubgroupInterval::atoms() const { return impl_->atoms; }
const std::vector<int>& SubgroupInterval::coatoms() const { return impl_->coatoms; }

std::optional<int> SubgroupInterval::find_member(const ElemMask& mask) const {
  int i = impl_->find(mask);
  if (i < 0) return std::nullopt;
  return i;
}

const std::vector<ElementId>& SubgroupInterval::coset_reps() const {
  impl_->ensure_cosets();
  return impl_->coset_reps;
}
int SubgroupInterval::generated_member(std::size_t coset_index) const {
  impl_->ensure_cosets();
  return impl_->generated[coset_index];
}

FinitePoset SubgroupInterval::poset() const {
  return FinitePoset::from_relation(size(), [this](int a, int b) { return leq(a, b); });
}

SubgroupInterval SubgroupInterval::subinterval(int a, int b, std::vector<int>* from) const {
  internal_check(leq(a, b), "subinterval needs a <= b");
  auto impl = std::make_shared<Impl>();
  impl->G = impl_->G;
  std::vector<int> parents;
  for (int z = 0; z < size(); ++z)
    if (leq(a, z) && leq(z, b)) parents.push_back(z);
  for (int z : parents) impl->members.push_back(impl_->members[static_cast<std::size_t>(z)]);
  impl->finish_order();
  if (from) {
    // members were re-sorted; map back through the element masks
    from->clear();
    from->resize(parents.size());
    for (int z : parents) (*from)[static_cast<std::size_t>(impl->find(impl_->members[static_cast<std::size_t>(z)].elems))] = z;
  }

  SubgroupInterval out;
  out.impl_ = std::move(impl);
  return out;
}

bool SubgroupInterval::is_distributive() const {
  impl_->ensure_tables();
  const int m = size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

BooleanCheck SubgroupInterval::boolean_structure() const {
  BooleanCheck check;
  const int m = size();
  const auto& atoms = impl_->atoms;
  const int n = static_cast<int>(atoms.size());
  if (n > 62 || (std::uint64_t{1} << n) != static_cast<std::uint64_t>(m)) {
    check.failure = "member count " + std::to_string(m) + " != 2^" + std::to_string(n) +
                    " (atom count)";
    return check;
  }

  BooleanStructure bs;
  bs.rank = n;
  bs.atom_mask.resize(static_cast<std::size_t>(m));
  std::vector<int> member_of_mask(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    std::uint64_t am = 0;
    for (int j = 0; j < n; ++j)
      if (leq(atoms[static_cast<std::size_t>(j)], i)) am |= std::uint64_t{1} << j;
    bs.atom_mask[static_cast<std::size_t>(i)] = am;
    if (member_of_mask[static_cast<std::size_t>(am)] != -1) {
      check.failure = "atom-support map is not injective";
      return check;
    }
    member_of_mask[static_cast<std::size_t>(am)] = i;
  }

  const std::uint64_t full = m == 1 ? 0 : (std::uint64_t{1} << n) - 1;
  bs.complement.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int c = member_of_mask[static_cast<std::size_t>(full & ~bs.atom_mask[static_cast<std::size_t>(i)])];
    bs.complement[static_cast<std::size_t>(i)] = c;
    if (meet(i, c) != bottom() || join(i, c) != top()) {
      check.failure = "complement of member " + std::to_string(i) + " fails meet/join";
      return check;
    }
  }
  check.structure = std::move(bs);
  return check;
}

int SubgroupInterval::top_meet() const {
  ElemMask t = member(top()).elems;
  for (int c : impl_->coatoms) t &= member(c).elems;
  int idx = impl_->find(t);
  internal_check(idx >= 0, "meet of coatoms missing from interval");
  return idx;
}

int SubgroupInterval::bottom_join() const {
  int b = bottom();
  for (int a : impl_->atoms) b = join(b, a);
  return b;
}

std::pair<SubgroupInterval, SubgroupInterval> SubgroupInterval::top_bottom() const {
  return {subinterval(top_meet(), top()), subinterval(bottom(), bottom_join())};
}

bool SubgroupInterval::is_group_complemented() const {
  const BooleanCheck bc = boolean_structure();
  const BooleanStructure& bs = bc.require();
  for (int i = 0; i < size(); ++i) {
    const std::uint64_t index_top = top_order() / member_order(i);
    const std::uint64_t index_bottom =
        member_order(bs.complement[static_cast<std::size_t>(i)]) / bottom_order();
    if (index_top != index_bottom) return false;
  }
  return true;
}

namespace {

// Double-coset partition of the ambient group: label[g] = minimum element id
// of A g B (restricted to the top member's elements).
std::vector<ElementId> double_coset_minima(const PermGroup& G, const ElemMask& universe,
                                           const std::vector<ElementId>& left_gens,
                                           const std::vector<ElementId>& right_gens) {
  std::vector<ElementId> label(static_cast<std::size_t>(G.order()), 0);
  ElemMask covered(G.order());
  std::vector<ElementId> stack, block;
  for (auto g0 = universe.find_first(); g0 != ElemMask::npos; g0 = universe.find_next(g0)) {
    if (covered.test(g0)) continue;
    stack.assign(1, static_cast<ElementId>(g0));
    block.clear();
    covered.set(g0);
    while (!stack.empty()) {
      ElementId x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (ElementId a : left_gens) {
        ElementId y = G.mul(a, x);
        if (!covered.test(y)) {
          covered.set(y);
          stack.push_back(y);
        }
      }
      for (ElementId b : right_gens) {
        ElementId y = G.mul(x, b);
        if (!covered.test(y)) {
          covered.set(y);
          stack.push_back(y);
        }
      }
    }
    ElementId mn = *std::min_element(block.begin(), block.end());
    for (ElementId x : block) label[x] = mn;
  }
  return label;
}

}  // namespace

bool SubgroupInterval::is_dedekind() const {
  const SubgroupMask& H = member(bottom());
  const ElemMask& universe = member(top()).elems;
  for (int k = 0; k < size(); ++k) {
    if (k == bottom() || k == top()) continue;  // HgH = HgH and HgG = G = GgH
    const SubgroupMask& K = member(k);
    auto hk = double_coset_minima(impl_->G, universe, H.gens, K.gens);
    auto kh = double_coset_minima(impl_->G, universe, K.gens, H.gens);
    if (hk != kh) return false;
  }
  return true;
}

}  // namespace grplat
