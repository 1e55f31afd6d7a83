#ifndef GRPLAT_LABELING_HPP
#define GRPLAT_LABELING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grplat/coset_poset.hpp"

namespace grplat {

/// Integer labels on the Hasse edges (cover relations) of a poset.
struct EdgeLabeling {
  std::map<std::pair<int, int>, int> label;  // (lower, upper) -> label

  int at(int lower, int upper) const;
  /// The same labeling read on the dual poset (edges reversed).
  EdgeLabeling dual() const;
};

/// The paper's labeling `el` on the bounded coset poset of a Boolean interval
/// with atoms numbered 1..n in canonical member order:
///   - the edge from the empty set into an H-coset gets 0;
///   - the edge Xg <. Yg with Y = X v K_i gets -i when the representative lies
///     in M_i = K_i-complement, +i otherwise.
/// Throws not_boolean.
EdgeLabeling el_labeling(const SubgroupInterval& I, const CosetPoset& bounded);

struct ElVerification {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // first failing closed interval
  std::string reason;
};

/// EL-labeling check, exactly as defined: every closed interval [x,y] must
/// have a unique strictly increasing maximal chain, lexicographically first
/// among the interval's maximal chains. Throws not_graded.
ElVerification verify_el_labeling(const FinitePoset& P, const EdgeLabeling& L);

/// Dual EL-labeling check of a bounded coset poset: EL on the dual.
/// The returned witness is in the original orientation (lower, upper).
ElVerification verify_dual_el_labeling(const CosetPoset& bounded, const EdgeLabeling& L);

/// Number of maximal chains of P whose label word, read from bottom to top,
/// is weakly decreasing. For a dual EL-labeling the sphere count is this
/// quantity evaluated on the dual orientation. Throws not_graded.
Integer count_decreasing_maximal_chains(const FinitePoset& P, const EdgeLabeling& L);

struct ShellabilityReport {
  int dim = 0;  // ell(C(H,G)) = dimension of the wedge spheres
  Integer decreasing_chains;  // on the dual orientation of C^
  Integer signed_moebius;     // (-1)^dim mu(C^)
  Integer top_betti;          // beta_dim of Delta(C)
  Integer signed_euler;       // (-1)^dim chi~(Delta(C))
  Integer phi;
  Integer phi_hat;
  bool all_equal = false;
};

/// The four sphere-count quantities on C^(H,G) for a Boolean
/// group-complemented interval, all asserted equal to phi^ = phi.
/// Throws not_boolean / not_group_complemented.
ShellabilityReport shellability_crosscheck(const SubgroupInterval& I,
                                           std::uint64_t face_cap = kDefaultFaceCap);

/// EL-labeling of the abstract Boolean lattice B_n (cover gains atom i -> i);
/// the classic example, used as a test oracle.
EdgeLabeling boolean_lattice_labeling(const FinitePoset& bn);

}  // namespace grplat

#endif
