#ifndef GRPLAT_TOTIENT_HPP
#define GRPLAT_TOTIENT_HPP

#include <vector>

#include "grplat/interval.hpp"
#include "grplat/poset.hpp"

namespace grplat {

/// Moebius values inside an interval: mu(base, y) for every member y.
std::vector<Integer> moebius_from_bottom_of(const SubgroupInterval& I, int base);
/// mu(x, base) for every member x.
std::vector<Integer> moebius_to_top_of(const SubgroupInterval& I, int base);

/// phi(H,G) by definition: the number of cosets Hg with <H,g> = G.
Integer euler_totient_direct(const SubgroupInterval& I);
Integer euler_totient_direct(const PermGroup& H, const PermGroup& G);

/// phi(H,G) = sum over members K of mu(K,G) |K:H|.
Integer euler_totient_moebius(const SubgroupInterval& I);

/// phi^(H,G) = sum over members K of mu(H,K) |G:K|.
Integer dual_euler_totient(const SubgroupInterval& I);

/// mu(C^(H,G)) = - sum over members K of mu(K,G) |G:K|  (relative Bouc form).
Integer coset_poset_moebius(const SubgroupInterval& I);

struct CrosscutCheck {
  Integer phi;             // phi(H,G)
  Integer phi_factored;    // |T:H| * phi(T,G)
  Integer phi_hat;         // phi^(H,G)
  Integer phi_hat_factored;  // |G:B| * phi^(H,B)

  bool ok() const { return phi == phi_factored && phi_hat == phi_hat_factored; }
};

/// Both crosscut factorizations through the top and bottom intervals.
CrosscutCheck crosscut_factorizations(const SubgroupInterval& I);

/// True iff |G:H| is a prime power p^m with p not dividing mu(H,G); then
/// phi^(H,G) != 0 is guaranteed (asserted).
bool prime_power_criterion(const SubgroupInterval& I);

struct TotientReport {
  Integer phi_direct;
  Integer phi_moebius;
  Integer phi_hat;
  Integer coset_poset_mu;
  std::optional<int> boolean_rank;
};

/// Full per-interval report; asserts phi_direct = phi_moebius and, when the
/// interval is Boolean of rank n, the Lemma 4.3 sign relation
/// mu(C^) = -(-1)^n phi^.
TotientReport totient_report(const SubgroupInterval& I);

/// Hall identity check: sum over L in [H,K] of phi(H,L) equals |K:H| for every
/// member K. Returns false with no side effects when it fails (it never
/// should).
bool hall_identity_holds(const SubgroupInterval& I);

}  // namespace grplat

#endif
