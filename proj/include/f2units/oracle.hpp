#pragma once

// Brute-force reference computations. They use only ring arithmetic on
// explicit coefficient vectors and never the structural constructions, so
// agreement with the structural side is evidence rather than tautology.
//
// Every function returns a sorted, duplicate-free element list and throws
// CapExceeded when the scan would exceed |G| = 16.

#include <vector>

#include "f2units/algebra.hpp"
#include "f2units/group.hpp"

namespace f2units {

using ElementSet = std::vector<AlgebraElement>;

// All augmentation-1 vectors supported on K.
ElementSet oracle_units(const GroupAlgebra& alg, const SubgroupOfG& k);
ElementSet oracle_units(const GroupAlgebra& alg);
ElementSet oracle_filter_symmetric(const GroupAlgebra& alg, const Involution& inv);
ElementSet oracle_filter_unitary(const GroupAlgebra& alg, const Involution& inv);
// {x^eta x^-1 : x in V(FK)}.
ElementSet oracle_image_psi1(const GroupAlgebra& alg, const Involution& inv,
                             const SubgroupOfG& k);
ElementSet oracle_image_psi1(const GroupAlgebra& alg, const Involution& inv);
// {x in V : psi_1(x) = 1}.
ElementSet oracle_kernel_psi1(const GroupAlgebra& alg, const Involution& inv);
ElementSet oracle_squares(const GroupAlgebra& alg, const ElementSet& a);
ElementSet oracle_two_torsion(const GroupAlgebra& alg, const ElementSet& a);
ElementSet oracle_intersection(const ElementSet& a, const ElementSet& b);
// {ab : a in A, b in B}.
ElementSet oracle_product(const GroupAlgebra& alg, const ElementSet& a, const ElementSet& b);
// Group elements of K as units.
ElementSet oracle_group_elements(const GroupAlgebra& alg, const SubgroupOfG& k);

}  // namespace f2units
