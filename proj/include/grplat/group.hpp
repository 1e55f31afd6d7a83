#ifndef GRPLAT_GROUP_HPP
#define GRPLAT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grplat/perm.hpp"

namespace grplat {

using ElementId = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// A fully enumerated finite permutation group. The element table is sorted by
/// image array, so element ids are canonical and the minimum id of a subset is
/// its lexicographically minimal permutation. Immutable after construction and
/// cheap to copy (shared internals); safe for concurrent reads.
class PermGroup {
 public:
  PermGroup() = default;

  /// Breadth-first closure of the generators; exact order.
  /// Throws enumeration_limit_exceeded if the closure grows past `limit`,
  /// invalid_permutation if a generator has the wrong degree.
  static PermGroup from_generators(int degree, std::vector<Permutation> gens,
                                   std::uint64_t limit = kDefaultEnumerationCap);

  /// Trivial group of the given degree.
  static PermGroup trivial(int degree);

  bool valid() const { return impl_ != nullptr; }
  int degree() const;
  std::uint64_t order() const;
  const std::vector<Permutation>& elements() const;
  const std::vector<Permutation>& generators() const;
  const Permutation& element(ElementId id) const;

  std::optional<ElementId> find(const Permutation& p) const;
  ElementId id_of(const Permutation& p) const;  // throws not_an_element
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  ElementId identity_id() const;
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const;
  ElementId conj(ElementId x, ElementId g) const;  // g * x * g^-1
  std::uint64_t element_order(ElementId a) const;

  /// True iff every element of this group belongs to G.
  bool is_subgroup_of(const PermGroup& G) const;

  /// True iff the action on {0,...,degree-1} has a single orbit.
  bool is_transitive() const;

  /// Identity-test shortcut for shared internals.
  bool same_table_as(const PermGroup& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static PermGroup from_sorted_elements(int degree, std::vector<Permutation> gens,
                                        std::vector<Permutation> sorted_elements);

  std::shared_ptr<const Impl> impl_;

  friend PermGroup materialize_subgroup(const PermGroup&, const std::vector<ElementId>&,
                                        std::vector<Permutation>);
};

// ------------------------------------------------------------------ perm-core

struct Coset {
  PermGroup subgroup;       // the subgroup K the coset belongs to
  Permutation representative;  // lexicographically minimal element of K*g

  bool operator==(const Coset& o) const { return representative == o.representative; }
};

/// <seeds> as a subgroup of G; every seed must lie in G (not_an_element).
PermGroup subgroup_generated(const PermGroup& G, const std::vector<Permutation>& seeds);

/// All right cosets K*g of H in G with canonical representatives, sorted by
/// representative. Throws not_a_subgroup.
std::vector<Coset> right_cosets(const PermGroup& H, const PermGroup& G);

/// True iff <H, g> = G; depends only on the coset H*g.
bool coset_generates(const PermGroup& H, const Permutation& g, const PermGroup& G);

/// Largest normal subgroup of G contained in H.
PermGroup normal_core(const PermGroup& H, const PermGroup& G);

/// N_G(H) = { g in G : g H g^-1 = H }.
PermGroup normalizer(const PermGroup& H, const PermGroup& G);

/// Subgroup of G fixing the point.
PermGroup stabilizer(const PermGroup& G, Point point);

/// Image of G permuting the canonical right-coset list of H; transitive of
/// degree |G:H|, kernel the normal core of H.
PermGroup action_on_cosets(const PermGroup& G, const PermGroup& H);

/// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& A, const PermGroup& B,
                         std::uint64_t limit = kDefaultEnumerationCap);

}  // namespace grplat

#endif
