#ifndef GRPLAT_POSET_HPP
#define GRPLAT_POSET_HPP

#include <functional>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "grplat/errors.hpp"
#include "grplat/integer.hpp"

namespace grplat {

using NodeMask = boost::dynamic_bitset<>;

/// A finite poset on {0,...,n-1} with an explicit order relation, stored as
/// one up-set bitset per element. Immutable; all derived structure (covers,
/// chains, grading) is computed from the relation.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// leq(x,y) must be reflexive, antisymmetric and transitive; trusted input.
  static FinitePoset from_relation(int n, const std::function<bool(int, int)>& leq);

  static FinitePoset chain(int length);      // length+1 elements 0 < 1 < ...
  static FinitePoset antichain(int n);
  static FinitePoset boolean_lattice(int rank);  // subsets of {1..rank} by mask
  static FinitePoset product(const FinitePoset& a, const FinitePoset& b);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && up_[x].test(y); }

  FinitePoset dual() const;
  /// Induced subposet on the given nodes; new index i corresponds to nodes[i].
  FinitePoset induced(const std::vector<int>& nodes) const;
  /// Elements of the closed/open interval, in increasing index order.
  std::vector<int> closed_interval(int x, int y) const;
  std::vector<int> open_interval(int x, int y) const;

  std::optional<int> minimum() const;
  std::optional<int> maximum() const;
  bool is_bounded() const { return minimum() && maximum(); }

  /// Adds a new bottom and top below/above everything: indices shift by 1,
  /// bottom = 0, top = n+1.
  FinitePoset bounded_extension() const;
  /// Strict in-between part of a bounded poset; throws not_bounded.
  FinitePoset proper_part() const;

  /// Cover relations x <. y, sorted by (x, y).
  const std::vector<std::pair<int, int>>& covers() const;
  const std::vector<int>& covers_above(int x) const;
  const std::vector<int>& covers_below(int y) const;

  /// All maximal chains share one length (edges counted)?
  bool is_pure() const;
  bool is_graded() const { return is_bounded() && is_pure(); }
  /// Length (edge count) of the longest chain.
  int length() const;

  /// Visits every maximal chain of the whole poset (each from a minimal to a
  /// maximal element) as a vector of node indices.
  void visit_maximal_chains(const std::function<void(const std::vector<int>&)>& fn) const;
  /// Maximal chains of the closed interval [x,y].
  void visit_maximal_chains_between(
      int x, int y, const std::function<void(const std::vector<int>&)>& fn) const;

  /// Connectivity of the comparability graph (x~y iff x<y or y<x).
  bool comparability_connected() const;

  /// Indices in a linear-extension order (by decreasing up-set size).
  std::vector<int> linear_extension() const;

 private:
  void ensure_covers() const;

  std::vector<NodeMask> up_;  // up_[x] = { y : x <= y }
  mutable std::vector<std::pair<int, int>> covers_;  // computed on demand
  mutable std::vector<std::vector<int>> cover_up_, cover_down_;
  mutable bool covers_valid_ = false;
};

/// Full Moebius table of a finite bounded poset (the spec'd moebius_table
/// operation; throws not_bounded). mu(x,y) = 0 for incomparable pairs.
class MoebiusTable {
 public:
  explicit MoebiusTable(const FinitePoset& poset);

  const FinitePoset& poset() const { return poset_; }
  const Integer& mu(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  /// The Moebius invariant mu(0^, 1^).
  const Integer& invariant() const;

 private:
  FinitePoset poset_;
  std::size_t n_;
  std::vector<Integer> table_;
  int bottom_ = 0, top_ = 0;
};

}  // namespace grplat

#endif
