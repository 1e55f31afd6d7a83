#ifndef GRPLAT_STANDARD_GROUPS_HPP
#define GRPLAT_STANDARD_GROUPS_HPP

#include <string>
#include <vector>

#include "grplat/group.hpp"

namespace grplat {

PermGroup cyclic_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
/// Order 2n on n points (n >= 3).
PermGroup dihedral_group(int n);
/// Dicyclic of order 4n in its right-regular action; n = 2 gives Q8.
PermGroup dicyclic_group(int n);
/// SL(2,3) (order 24) and GL(2,3) (order 48) on the 8 nonzero vectors of F_3^2.
PermGroup sl23_group();
PermGroup gl23_group();
/// Frobenius groups x -> ax+b: AGL(1,5) of order 20, 7:3 of order 21.
PermGroup f20_group();
PermGroup f21_group();

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// The built-in test corpus: a spread of groups of order <= 48 (cyclic,
/// abelian products, dihedral, dicyclic, symmetric/alternating, affine,
/// matrix groups). Used by the property suites.
std::vector<NamedGroup> small_group_corpus();

}  // namespace grplat

#endif
