#ifndef GRPLAT_COSET_POSET_HPP
#define GRPLAT_COSET_POSET_HPP

#include <memory>

#include "grplat/complex.hpp"
#include "grplat/interval.hpp"

namespace grplat {

/// The poset of proper right cosets K*g, K in [H,G), ordered by inclusion —
/// C(H,G) — or its bounded extension C^(H,G) with the empty set adjoined at
/// the bottom and the whole group at the top.
///
/// Node layout: proper cosets are sorted by (member index, representative) and
/// occupy nodes 0..n-1 (unbounded) or 1..n with node 0 = empty set and node
/// n+1 = G (bounded).
class CosetPoset {
 public:
  CosetPoset() = default;

  static CosetPoset build(const SubgroupInterval& I, bool bounded);

  const SubgroupInterval& interval() const;
  bool bounded() const;
  int size() const;  // node count, adjoined bounds included
  int proper_coset_count() const;
  const FinitePoset& poset() const;

  bool is_proper_coset(int node) const;
  int member_of(int node) const;    // interval member of the coset at `node`
  ElementId rep_of(int node) const;  // canonical (minimum-id) representative
  const ElemMask& coset_elems(int node) const;

  int bottom_node() const;  // bounded only
  int top_node() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

CosetPoset build_coset_poset(const SubgroupInterval& I, bool bounded);

/// Graph connectivity of the comparability graph of the proper part of the
/// bounded coset poset (Proposition: always true for Boolean intervals).
bool proper_part_connected(const CosetPoset& bounded);

struct QuillenCheck {
  bool trivial = false;  // T = H, nothing to compare
  std::vector<std::uint64_t> betti_full;  // Delta(C(H,G))
  std::vector<std::uint64_t> betti_top;   // Delta(C(T,G))
  bool equal = true;
};

/// Homotopy-invariant comparison of C(H,G) with C(T,G), T the meet of the
/// coatoms: their reduced Betti vectors must agree.
QuillenCheck quillen_reduction_check(const SubgroupInterval& I,
                                     std::uint64_t face_cap = kDefaultFaceCap);

}  // namespace grplat

#endif
