#ifndef GRPLAT_SUBGRP_HPP
#define GRPLAT_SUBGRP_HPP

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "grplat/group.hpp"

namespace grplat {

using ElemMask = boost::dynamic_bitset<>;

/// A subgroup of a fixed enumerated parent group, stored as a bitset over the
/// parent's element ids plus a small generating set. This is what the lattice
/// workload runs on: meets are bitset intersections and membership is O(1).
struct SubgroupMask {
  ElemMask elems;
  std::uint64_t order = 0;
  std::vector<ElementId> gens;

  bool contains(ElementId id) const { return elems.test(id); }
  bool is_subset_of(const SubgroupMask& o) const { return elems.is_subset_of(o.elems); }
  bool operator==(const SubgroupMask& o) const { return elems == o.elems; }
};

namespace mask {

std::vector<ElementId> ids_of(const ElemMask& m);

SubgroupMask trivial(const PermGroup& G);
SubgroupMask whole(const PermGroup& G);

/// Subgroup <gen_ids> by breadth-first closure in id space.
SubgroupMask closure(const PermGroup& G, const std::vector<ElementId>& gen_ids);

/// Subgroup <base, extra>. When the partial closure grows past every possible
/// proper-subgroup order (Lagrange bound), the answer is G and enumeration
/// stops early.
SubgroupMask extend(const PermGroup& G, const SubgroupMask& base, ElementId extra);

/// True iff <base, extra> = G, with the same early exit.
bool extend_generates(const PermGroup& G, const SubgroupMask& base, ElementId extra);

SubgroupMask join(const PermGroup& G, const SubgroupMask& a, const SubgroupMask& b);
SubgroupMask intersect(const PermGroup& G, const SubgroupMask& a, const SubgroupMask& b);

/// Small generating set for the subgroup spanned by the given ids.
std::vector<ElementId> find_generators(const PermGroup& G, const std::vector<ElementId>& ids);

ElemMask conjugate(const PermGroup& G, const ElemMask& m, ElementId g);
bool is_normal_in(const PermGroup& G, const SubgroupMask& h);

SubgroupMask normal_core(const PermGroup& G, const SubgroupMask& h);
SubgroupMask normalizer(const PermGroup& G, const SubgroupMask& h);

/// H as a mask over G's ids; throws not_a_subgroup if H is not contained in G.
SubgroupMask from_group(const PermGroup& G, const PermGroup& H);

/// Canonical representatives (minimum element id) of the right cosets of h,
/// in increasing id order; the identity coset comes first.
std::vector<ElementId> coset_reps(const PermGroup& G, const ElemMask& h);

/// Same, but only cosets inside the given subgroup (h must be a subset of it).
std::vector<ElementId> coset_reps_within(const PermGroup& G, const ElemMask& h,
                                         const ElemMask& universe);

/// Minimum id in the coset h*g.
ElementId coset_rep(const PermGroup& G, const ElemMask& h, ElementId g);

/// The coset h*g as a mask.
ElemMask coset_mask(const PermGroup& G, const ElemMask& h, ElementId g);

}  // namespace mask
}  // namespace grplat

#endif
