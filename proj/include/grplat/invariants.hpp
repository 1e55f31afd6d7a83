#ifndef GRPLAT_INVARIANTS_HPP
#define GRPLAT_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "grplat/interval.hpp"
#include "grplat/totient.hpp"

namespace grplat {

struct WitnessedBool {
  bool value = false;
  std::optional<ElementId> witness;

  explicit operator bool() const { return value; }
};

/// Some g with <H,g> = G? Witness is a generating coset representative.
WitnessedBool is_w_cyclic(const SubgroupInterval& I);

/// Some x with <H, g x g^-1> = G for all g, equivalently the conjugates of
/// the coatoms do not cover G; witness is an element outside the union.
WitnessedBool is_strongly_w_cyclic(const SubgroupInterval& I);

/// Both sides of the fixed-point-free lemma, asserted equal:
/// <x> acts fixed-point-freely on C(H,G) by right multiplication iff every
/// conjugate of x generates together with H. Requires <H,x> = G
/// (precondition_failed otherwise).
bool fixed_point_free_check(const SubgroupInterval& I, ElementId x);

/// normal_core(H,G) trivial; H must be a proper subgroup.
bool is_core_free(const PermGroup& H, const PermGroup& G);

struct LambdaStep {
  int member = 0;       // chain vertex (interval member index)
  Integer phi_hat;      // dual totient of the step ending here
};

struct LambdaResult {
  /// Minimal chain length; nullopt when no admissible chain exists (NO_CHAIN).
  std::optional<int> value;
  /// Chain H = c_0 < ... < c_value = G with per-step certificates; entry 0
  /// carries phi_hat = 1 as a placeholder.
  std::vector<LambdaStep> chain;
};

/// lambda(H,G): shortest chain from H to G whose steps are bottom-Boolean
/// intervals with nonzero dual totient; steps may join any comparable pair.
LambdaResult lambda_invariant(const SubgroupInterval& I);

/// True iff N_G(H)/H is cyclic or generalized quaternion (order 2^k >= 8 with
/// a unique involution).
bool borel_quotient_test(const PermGroup& H, const PermGroup& G);

}  // namespace grplat

#endif
