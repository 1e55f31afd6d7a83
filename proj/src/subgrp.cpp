#include "grplat/subgrp.hpp"

#include <algorithm>

#include "grplat/integer.hpp"

namespace grplat::mask {

std::vector<ElementId> ids_of(const ElemMask& m) {
  std::vector<ElementId> out;
  out.reserve(m.count());
  for (auto i = m.find_first(); i != ElemMask::npos; i = m.find_next(i))
    out.push_back(static_cast<ElementId>(i));
  return out;
}

SubgroupMask trivial(const PermGroup& G) {
  SubgroupMask s;
  s.elems.resize(G.order());
  s.elems.set(G.identity_id());
  s.order = 1;
  return s;
}

SubgroupMask whole(const PermGroup& G) {
  SubgroupMask s;
  s.elems.resize(G.order());
  s.elems.set();
  s.order = G.order();
  s.gens.reserve(G.generators().size());
  for (const auto& g : G.generators()) s.gens.push_back(G.id_of(g));
  return s;
}

namespace {

// Closure of {identity} under right multiplication by gens. If stop_order is
// nonzero and the closure grows past it, returns an empty mask (meaning: the
// closure is all of G).
ElemMask closure_ids(const PermGroup& G, const std::vector<ElementId>& gens,
                     std::uint64_t stop_order) {
  ElemMask in(G.order());
  std::vector<ElementId> queue;
  in.set(G.identity_id());
  queue.push_back(G.identity_id());
  std::uint64_t size = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementId x = queue[head];
    for (ElementId g : gens) {
      ElementId y = G.mul(x, g);
      if (!in.test(y)) {
        in.set(y);
        queue.push_back(y);
        if (stop_order != 0 && ++size > stop_order) return ElemMask();
      }
    }
  }
  return in;
}

SubgroupMask make(ElemMask elems, std::vector<ElementId> gens) {
  SubgroupMask s;
  s.order = elems.count();
  s.elems = std::move(elems);
  s.gens = std::move(gens);
  return s;
}

}  // namespace

SubgroupMask closure(const PermGroup& G, const std::vector<ElementId>& gen_ids) {
  std::vector<ElementId> gens;
  for (ElementId g : gen_ids)
    if (g != G.identity_id()) gens.push_back(g);
  ElemMask elems = closure_ids(G, gens, 0);
  return make(std::move(elems), std::move(gens));
}

SubgroupMask extend(const PermGroup& G, const SubgroupMask& base, ElementId extra) {
  if (base.contains(extra)) return base;
  std::vector<ElementId> gens = base.gens;
  gens.push_back(extra);
  // Lagrange: |<base, extra>| is a multiple of |base| dividing |G|, so once the
  // closure passes the largest such proper divisor it must be all of G.
  const std::uint64_t bound = largest_proper_divisor_multiple(G.order(), base.order);
  ElemMask elems = closure_ids(G, gens, bound);
  if (elems.empty()) return whole(G);
  return make(std::move(elems), std::move(gens));
}

bool extend_generates(const PermGroup& G, const SubgroupMask& base, ElementId extra) {
  if (base.order == G.order()) return true;
  if (base.contains(extra)) return false;
  std::vector<ElementId> gens = base.gens;
  gens.push_back(extra);
  const std::uint64_t bound = largest_proper_divisor_multiple(G.order(), base.order);
  ElemMask elems = closure_ids(G, gens, bound);
  return elems.empty() || elems.count() == G.order();
}

SubgroupMask join(const PermGroup& G, const SubgroupMask& a, const SubgroupMask& b) {
  if (a.is_subset_of(b)) return b;
  if (b.is_subset_of(a)) return a;
  std::vector<ElementId> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  const std::uint64_t bound =
      largest_proper_divisor_multiple(G.order(), std::max(a.order, b.order));
  ElemMask elems = closure_ids(G, gens, bound);
  if (elems.empty()) return whole(G);
  return make(std::move(elems), std::move(gens));
}

SubgroupMask intersect(const PermGroup& G, const SubgroupMask& a, const SubgroupMask& b) {
  ElemMask elems = a.elems & b.elems;
  std::vector<ElementId> gens = find_generators(G, ids_of(elems));
  return make(std::move(elems), std::move(gens));
}

std::vector<ElementId> find_generators(const PermGroup& G, const std::vector<ElementId>& ids) {
  std::vector<ElementId> gens;
  ElemMask have(G.order());
  have.set(G.identity_id());
  std::uint64_t have_count = 1;
  for (ElementId id : ids) {
    if (have.test(id)) continue;
    gens.push_back(id);
    ElemMask bigger = closure_ids(G, gens, 0);
    have_count = bigger.count();
    have = std::move(bigger);
    if (have_count == ids.size()) break;
  }
  return gens;
}

ElemMask conjugate(const PermGroup& G, const ElemMask& m, ElementId g) {
  ElemMask out(G.order());
  const ElementId gi = G.inv(g);
  for (auto i = m.find_first(); i != ElemMask::npos; i = m.find_next(i))
    out.set(G.mul(G.mul(g, static_cast<ElementId>(i)), gi));
  return out;
}

bool is_normal_in(const PermGroup& G, const SubgroupMask& h) {
  std::vector<ElementId> ggens;
  for (const auto& g : G.generators()) ggens.push_back(G.id_of(g));
  for (ElementId g : ggens)
    for (ElementId x : h.gens)
      if (!h.contains(G.conj(x, g))) return false;
  return true;
}

SubgroupMask normal_core(const PermGroup& G, const SubgroupMask& h) {
  std::vector<ElementId> ggens;
  for (const auto& g : G.generators()) ggens.push_back(G.id_of(g));
  ElemMask core = h.elems;
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId g : ggens) {
      ElemMask next = core & conjugate(G, core, g);
      if (next != core) {
        core = std::move(next);
        changed = true;
      }
    }
  }
  std::vector<ElementId> gens = find_generators(G, ids_of(core));
  return make(std::move(core), std::move(gens));
}

SubgroupMask normalizer(const PermGroup& G, const SubgroupMask& h) {
  ElemMask n(G.order());
  for (ElementId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElementId x : h.gens) {
      if (!h.contains(G.conj(x, g))) {
        ok = false;
        break;
      }
    }
    // generator test is one-sided; conjugation by g maps H into H iff onto
    if (ok) n.set(g);
  }
  std::vector<ElementId> gens = find_generators(G, ids_of(n));
  return make(std::move(n), std::move(gens));
}

SubgroupMask from_group(const PermGroup& G, const PermGroup& H) {
  if (H.same_table_as(G)) return whole(G);
  SubgroupMask s;
  s.elems.resize(G.order());
  if (H.degree() != G.degree() || H.order() > G.order())
    throw Error(Errc::not_a_subgroup, "H is not a subgroup of G");
  for (const auto& p : H.elements()) {
    auto id = G.find(p);
    if (!id) throw Error(Errc::not_a_subgroup, "H is not a subgroup of G");
    s.elems.set(*id);
  }
  s.order = H.order();
  for (const auto& g : H.generators()) {
    ElementId id = G.id_of(g);
    if (id != G.identity_id()) s.gens.push_back(id);
  }
  if (s.gens.empty() && s.order > 1)
    s.gens = find_generators(G, ids_of(s.elems));
  return s;
}

std::vector<ElementId> coset_reps(const PermGroup& G, const ElemMask& h) {
  ElemMask covered(G.order());
  std::vector<ElementId> reps;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (covered.test(g)) continue;
    reps.push_back(g);
    for (auto i = h.find_first(); i != ElemMask::npos; i = h.find_next(i))
      covered.set(G.mul(static_cast<ElementId>(i), g));
  }
  return reps;
}

std::vector<ElementId> coset_reps_within(const PermGroup& G, const ElemMask& h,
                                         const ElemMask& universe) {
  ElemMask covered(G.order());
  std::vector<ElementId> reps;
  for (auto g = universe.find_first(); g != ElemMask::npos; g = universe.find_next(g)) {
    if (covered.test(g)) continue;
    reps.push_back(static_cast<ElementId>(g));
    for (auto i = h.find_first(); i != ElemMask::npos; i = h.find_next(i))
      covered.set(G.mul(static_cast<ElementId>(i), static_cast<ElementId>(g)));
  }
  return reps;
}

ElementId coset_rep(const PermGroup& G, const ElemMask& h, ElementId g) {
  ElementId best = G.mul(static_cast<ElementId>(h.find_first()), g);
  for (auto i = h.find_first(); i != ElemMask::npos; i = h.find_next(i))
    best = std::min(best, G.mul(static_cast<ElementId>(i), g));
  return best;
}

ElemMask coset_mask(const PermGroup& G, const ElemMask& h, ElementId g) {
  ElemMask out(G.order());
  for (auto i = h.find_first(); i != ElemMask::npos; i = h.find_next(i))
    out.set(G.mul(static_cast<ElementId>(i), g));
  return out;
}

}  // namespace grplat::mask
