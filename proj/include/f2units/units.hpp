#pragma once

// V(FG) and its distinguished subgroups: the Sandling basis, T(FG), T(FG^2),
// S_eta, V_eta, W(FG), V(FK)[2], together with psi_1 and psi_2.
//
// The algebra and the involution must describe the same group; every
// function taking both checks it.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "f2units/algebra.hpp"
#include "f2units/group.hpp"
#include "f2units/unit_subgroup.hpp"

namespace f2units {

enum class Mode { kExplicit, kStructural };

// Explicit mode enumerates V(FG), so it is limited to |G| <= 16.
inline constexpr std::uint32_t kExplicitGroupCap = 16;

enum class IndexClass { kNone, kL, kL1, kL2, kL3 };

// alpha has one entry per cyclic factor of G. For class L3 the entries are
// exponents of (a_i^2 + 1), so alpha_i < q_i / 2.
struct IndexVector {
  std::vector<std::uint32_t> alpha;
  IndexClass cls = IndexClass::kNone;
};

struct IndexSets {
  std::vector<IndexVector> l;
  std::vector<IndexVector> l1;
  std::vector<IndexVector> l2;
  std::vector<IndexVector> l3;
};

// L: some alpha_j odd. L1: alpha_i in {0, q_i - 1} on the H block, not all
// zero there. L2: zero on the H block, some D-block alpha_j >= q_j / 2.
// L3: the L1 set of G^2 with the induced involution, whose H block consists
// of the squares of the H1 generators.
IndexSets sandling_index_sets(const Involution& inv);

// u_alpha = 1 + prod (a_i - 1)^{alpha_i}; the zero vector gives 1.
AlgebraElement basis_unit(const GroupAlgebra& alg, std::span<const std::uint32_t> alpha);
// 1 + prod (a_i^(2^k) - 1)^{alpha_i}: the basis unit of F[G^(2^k)] inside FG.
AlgebraElement power_basis_unit(const GroupAlgebra& alg, int k,
                                std::span<const std::uint32_t> alpha);

// min over beta_i != 0 of q_i / 2^{s_i}, 2^{s_i} the largest power of two
// <= beta_i. Throws PreconditionError for beta = 0.
std::uint32_t unit_order_formula(const AbelianTwoGroup& g, std::span<const std::uint32_t> beta);
// By repeated squaring. Throws NotAUnit.
std::uint64_t unit_order(const GroupAlgebra& alg, const AlgebraElement& x);

// Explicit: every augmentation-1 vector (CapExceeded past |G| = 16).
// Structural: generated by the Sandling basis.
UnitSubgroup full_unit_group(std::shared_ptr<const GroupAlgebra> alg, Mode mode);

// psi_1(x) = x^eta x^-1 and psi_2(x) = x^eta x. Throw NotAUnit.
AlgebraElement psi1(const GroupAlgebra& alg, const AlgebraElement& x, const Involution& inv);
AlgebraElement psi2(const GroupAlgebra& alg, const AlgebraElement& x, const Involution& inv);

// Normal form: x = sum alpha_g (g + eta(g)) over the pairs of Xi plus
// sum beta_g g over G_eta with sum beta_g = 1. The symmetric units form the
// coset 1 + span{g + eta(g), g + 1 : g in G_eta}. The subgroup is listed
// from the normal form while it has at most kElementCap elements and is
// generated from the linear part otherwise.
int symmetric_normal_form_dimension(const Involution& inv);
UnitSubgroup symmetric_units(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv);

// Explicit: filter of V(FG) by x^eta x = 1. Structural: generated by
// H, T(FG), V(FD)[2] and W(FG).
UnitSubgroup unitary_units(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv,
                           Mode mode);

// W(FG), generated by psi_1 of the Sandling basis.
UnitSubgroup w_subgroup(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv);
// W(F[G^(2^k)]) inside FG, for the involution restricted to G^(2^k).
UnitSubgroup w_subgroup_of_power(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv,
                                 int k);

// V(FK)[2] = 1 + I(K[2]) inside FK, embedded in FG.
UnitSubgroup two_torsion_units(std::shared_ptr<const GroupAlgebra> alg, const SubgroupOfG& k);

// T(FG) from L1 and T(FG^2) from L3.
UnitSubgroup t_subgroup(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv);
UnitSubgroup t2_subgroup(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv);
// The T construction for the good group G^(2^k).
UnitSubgroup t_subgroup_of_power(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv,
                                 int k);

// A subgroup of G viewed inside V(FG).
UnitSubgroup group_units(std::shared_ptr<const GroupAlgebra> alg, const SubgroupOfG& k);
// {g in G : g in A}.
SubgroupOfG group_part(const UnitSubgroup& a);

SubgroupOfG h_subgroup(const Involution& inv);
SubgroupOfG d_subgroup(const Involution& inv);
SubgroupOfG d1_subgroup(const Involution& inv);

// Checks of the psi_1 identities for h with eta(h) = h^-1:
//   order q > 4:  1 + (h+1)^(q-3) s has order <= 2 and
//                 psi_1(1 + (h+1)^(q-3) s) = (1 + (h+1)^(q-2) s)(1 + (h+1)^(q-1) s)
//   order 4:      1 + (h^-1 + 1) s = (1 + (h+1) s)(1 + (h+1)^2 s)(1 + (h+1)^3 (s + s^2))
//                 psi_1(1 + (h+1) s) = (1 + (h+1)^2 s)(1 + (h+1)^3 (s + s^2))
// for a symmetric element s.
struct PsiIdentityResult {
  bool applicable = false;
  bool order_two = true;   // order > 4 only
  bool psi_image = true;
  bool inverse_split = true;  // order 4 only
  bool holds() const { return applicable && order_two && psi_image && inverse_split; }
};

PsiIdentityResult check_psi_identity(const GroupAlgebra& alg, const Involution& inv,
                                     GroupElement h, const AlgebraElement& s);

// Every element of FG fixed by eta (not only units); throws CapExceeded.
std::vector<AlgebraElement> symmetric_elements(const GroupAlgebra& alg, const Involution& inv,
                                               std::uint64_t cap);

}  // namespace f2units
