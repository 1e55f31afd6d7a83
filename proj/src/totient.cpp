#include "grplat/totient.hpp"

#include <algorithm>
#include <numeric>

namespace grplat {

namespace {

// member indices sorted so that smaller members come first
std::vector<int> by_order(const SubgroupInterval& I) {
  std::vector<int> order(static_cast<std::size_t>(I.size()));
  std::iota(order.begin(), order.end(), 0);
  return order;  // members are already sorted by (order, mask)
}

}  // namespace

std::vector<Integer> moebius_from_bottom_of(const SubgroupInterval& I, int base) {
  const int m = I.size();
  std::vector<Integer> mu(static_cast<std::size_t>(m), Integer(0));
  mu[static_cast<std::size_t>(base)] = 1;
  for (int y : by_order(I)) {
    if (y == base || !I.leq(base, y)) continue;
    Integer s = 0;
    for (int z = 0; z < m; ++z)
      if (z != y && I.leq(base, z) && I.leq(z, y)) s += mu[static_cast<std::size_t>(z)];
    mu[static_cast<std::size_t>(y)] = -s;
  }
  return mu;
}

std::vector<Integer> moebius_to_top_of(const SubgroupInterval& I, int base) {
  const int m = I.size();
  std::vector<Integer> mu(static_cast<std::size_t>(m), Integer(0));
  mu[static_cast<std::size_t>(base)] = 1;
  std::vector<int> order = by_order(I);
  std::reverse(order.begin(), order.end());
  for (int x : order) {
    if (x == base || !I.leq(x, base)) continue;
    Integer s = 0;
    for (int z = 0; z < m; ++z)
      if (z != x && I.leq(x, z) && I.leq(z, base)) s += mu[static_cast<std::size_t>(z)];
    mu[static_cast<std::size_t>(x)] = -s;
  }
  return mu;
}

Integer euler_totient_direct(const SubgroupInterval& I) {
  Integer count = 0;
  for (std::size_t c = 0; c < I.coset_reps().size(); ++c)
    if (I.generated_member(c) == I.top()) ++count;
  return count;
}

Integer euler_totient_direct(const PermGroup& H, const PermGroup& G) {
  SubgroupMask h = mask::from_group(G, H);
  Integer count = 0;
  for (ElementId rep : mask::coset_reps(G, h.elems))
    if (mask::extend_generates(G, h, rep)) ++count;
  return count;
}

Integer euler_totient_moebius(const SubgroupInterval& I) {
  std::vector<Integer> mu = moebius_to_top_of(I, I.top());
  Integer phi = 0;
  for (int k = 0; k < I.size(); ++k)
    phi += mu[static_cast<std::size_t>(k)] * Integer(I.member_order(k) / I.bottom_order());
  return phi;
}

Integer dual_euler_totient(const SubgroupInterval& I) {
  std::vector<Integer> mu = moebius_from_bottom_of(I, I.bottom());
  Integer phi_hat = 0;
  for (int k = 0; k < I.size(); ++k)
    phi_hat += mu[static_cast<std::size_t>(k)] * Integer(I.top_order() / I.member_order(k));
  return phi_hat;
}

Integer coset_poset_moebius(const SubgroupInterval& I) {
  std::vector<Integer> mu = moebius_to_top_of(I, I.top());
  Integer s = 0;
  for (int k = 0; k < I.size(); ++k)
    s += mu[static_cast<std::size_t>(k)] * Integer(I.top_order() / I.member_order(k));
  return -s;
}

CrosscutCheck crosscut_factorizations(const SubgroupInterval& I) {
  CrosscutCheck check;
  check.phi = euler_totient_moebius(I);
  check.phi_hat = dual_euler_totient(I);

  auto [top_iv, bottom_iv] = I.top_bottom();
  // |T:H| * phi(T,G)
  const Integer t_index(I.member_order(I.top_meet()) / I.bottom_order());
  check.phi_factored = t_index * euler_totient_moebius(top_iv);
  // |G:B| * phi^(H,B)
  const Integer b_index(I.top_order() / I.member_order(I.bottom_join()));
  check.phi_hat_factored = b_index * dual_euler_totient(bottom_iv);
  return check;
}

bool prime_power_criterion(const SubgroupInterval& I) {
  auto pp = as_prime_power(I.index());
  if (!pp) return false;
  const Integer mu_hg = moebius_from_bottom_of(I, I.bottom())[static_cast<std::size_t>(I.top())];
  if (mu_hg % Integer(pp->first) == 0) return false;
  internal_check(dual_euler_totient(I) != 0, "Lemma: prime-power criterion forces phi^ != 0");
  return true;
}

TotientReport totient_report(const SubgroupInterval& I) {
  TotientReport rep;
  rep.phi_direct = euler_totient_direct(I);
  rep.phi_moebius = euler_totient_moebius(I);
  rep.phi_hat = dual_euler_totient(I);
  rep.coset_poset_mu = coset_poset_moebius(I);
  internal_check(rep.phi_direct == rep.phi_moebius,
                 "Hall/Moebius inversion: phi_direct != phi_moebius");
  BooleanCheck bc = I.boolean_structure();
  if (bc.ok()) {
    rep.boolean_rank = bc.structure->rank;
    const int n = bc.structure->rank;
    const Integer sign = (n % 2 == 0) ? Integer(1) : Integer(-1);
    internal_check(rep.coset_poset_mu == -sign * rep.phi_hat,
                   "Lemma: mu(C^) = -(-1)^n phi^ fails on a Boolean interval");
  }
  return rep;
}

bool hall_identity_holds(const SubgroupInterval& I) {
  // phi(H,L) for every member L, each via Moebius inside [H,L]
  std::vector<Integer> phi(static_cast<std::size_t>(I.size()));
  for (int l = 0; l < I.size(); ++l)
    phi[static_cast<std::size_t>(l)] = euler_totient_moebius(I.subinterval(I.bottom(), l));

  for (int k = 0; k < I.size(); ++k) {
    Integer total = 0;
    for (int l = 0; l < I.size(); ++l)
      if (I.leq(l, k)) total += phi[static_cast<std::size_t>(l)];
    if (total != Integer(I.member_order(k) / I.bottom_order())) return false;
  }
  return true;
}

}  // namespace grplat
