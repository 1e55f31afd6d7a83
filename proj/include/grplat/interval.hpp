#ifndef GRPLAT_INTERVAL_HPP
#define GRPLAT_INTERVAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grplat/poset.hpp"
#include "grplat/subgrp.hpp"

namespace grplat {

struct BooleanStructure {
  int rank = 0;                       // atom count
  std::vector<std::uint64_t> atom_mask;  // per member: atoms below it
  std::vector<int> complement;        // involution on member indices
};

struct BooleanCheck {
  std::optional<BooleanStructure> structure;
  std::string failure;  // witness: the failing condition, empty when Boolean

  bool ok() const { return structure.has_value(); }
  const BooleanStructure& require() const;  // throws not_boolean with witness
};

/// The full interval [H,G] in the subgroup lattice: every intermediate
/// subgroup as a bitset over the ambient group's element ids, with the order
/// relation, atoms/coatoms and the coset-to-generated-member map. Members are
/// sorted by (order, element mask), so indices are canonical. Instances are
/// immutable and cheap to copy; subinterval views share the ambient group.
class SubgroupInterval {
 public:
  SubgroupInterval() = default;

  /// build_interval(H, G): members are collected as the distinct <H,g> over
  /// coset representatives g, then closed under join.
  static SubgroupInterval build(const PermGroup& G, const PermGroup& H);
  static SubgroupInterval build(const PermGroup& G, SubgroupMask bottom);

  const PermGroup& group() const;
  int size() const;
  const SubgroupMask& member(int i) const;
  std::uint64_t member_order(int i) const;
  int bottom() const;
  int top() const;
  std::uint64_t bottom_order() const { return member_order(bottom()); }
  std::uint64_t top_order() const { return member_order(top()); }
  /// |G:H| for the interval's own bounds.
  std::uint64_t index() const { return top_order() / bottom_order(); }

  bool leq(int a, int b) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
  const std::vector<int>& atoms() const;
  const std::vector<int>& coatoms() const;
  std::optional<int> find_member(const ElemMask& mask) const;

  /// Canonical representatives of the right cosets of the bottom inside the
  /// top, in increasing element-id order (identity coset first).
  const std::vector<ElementId>& coset_reps() const;
  /// Member index of <bottom, g> for the i-th coset representative.
  int generated_member(std::size_t coset_index) const;

  /// The member poset (indices preserved).
  FinitePoset poset() const;

  /// Closed subinterval [a,b] as its own interval (members reindexed; `from`
  /// receives the parent index of each new member when non-null).
  SubgroupInterval subinterval(int a, int b, std::vector<int>* from = nullptr) const;

  // ---- structural predicates -------------------------------------------

  /// Direct x ^ (y v z) = (x ^ y) v (x ^ z) check over all member triples.
  bool is_distributive() const;

  /// Boolean iff member count = 2^(atom count) and the atom-support map is a
  /// bijection onto all atom subsets; rank-0 (H = G) counts as Boolean.
  BooleanCheck boolean_structure() const;

  /// Index of the meet of all coatoms (t) and the join of all atoms (b).
  int top_meet() const;
  int bottom_join() const;
  /// Top interval [t, G] and bottom interval [H, b].
  std::pair<SubgroupInterval, SubgroupInterval> top_bottom() const;

  /// |G:K| = |K^c:H| for every member K. Throws not_boolean.
  bool is_group_complemented() const;

  /// HgK = KgH as sets, for every member K and every g.
  bool is_dedekind() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace grplat

#endif
