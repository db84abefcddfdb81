#include "f2units/units.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

void check_involution(const GroupAlgebra& alg, const Involution& inv) {
  if (!(alg.group() == inv.group())) {
    throw AmbientMismatch("involution on " + inv.group().to_string() + " used with F2[" +
                          alg.group().to_string() + "]");
  }
}

// Calls f on every vector with alpha[i] drawn from choices[i].
void for_each_vector(const std::vector<std::vector<std::uint32_t>>& choices,
                     const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<std::uint32_t> alpha(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) alpha[i] = choices[i][pos[i]];
    f(alpha);
    std::size_t i = 0;
    while (i < choices.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == choices.size()) return;
  }
}

std::vector<std::uint32_t> range(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

bool contains_position(const std::vector<std::size_t>& v, std::size_t i) {
  return std::find(v.begin(), v.end(), i) != v.end();
}

// Orders of the generators a_i^(2^k) of G^(2^k); 1 for factors that vanish.
std::vector<std::uint32_t> power_orders(const AbelianTwoGroup& g, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q : g.factor_orders()) out.push_back(std::max<std::uint32_t>(q >> k, 1));
  return out;
}

// The L1 construction for G^(2^k) with the restricted involution. After
// canonicalization its H block is the H positions whose power has order >= 4.
std::vector<IndexVector> t_index_set(const Involution& inv, int k, IndexClass cls) {
  const AbelianTwoGroup& g = inv.group();
  const auto orders = power_orders(g, k);
  std::vector<std::vector<std::uint32_t>> choices(g.rank());
  std::vector<bool> in_h(g.rank(), false);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    in_h[i] = contains_position(inv.h_block(), i) && orders[i] >= 4;
    choices[i] = in_h[i] ? std::vector<std::uint32_t>{0, orders[i] - 1} : range(orders[i]);
  }
  std::vector<IndexVector> out;
  for_each_vector(choices, [&](const std::vector<std::uint32_t>& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (in_h[i] && alpha[i] != 0) {
        out.push_back({alpha, cls});
        return;
      }
    }
  });
  return out;
}

// Sandling basis of F[G^(2^k)] inside FG.
std::vector<AlgebraElement> power_basis(const GroupAlgebra& alg, int k) {
  const auto orders = power_orders(alg.group(), k);
  std::vector<std::vector<std::uint32_t>> choices;
  for (std::uint32_t q : orders) choices.push_back(range(q));
  std::vector<AlgebraElement> out;
  for_each_vector(choices, [&](const std::vector<std::uint32_t>& alpha) {
    if (std::any_of(alpha.begin(), alpha.end(), [](std::uint32_t a) { return a & 1; })) {
      out.push_back(power_basis_unit(alg, k, alpha));
    }
  });
  return out;
}

std::vector<AlgebraElement> filtration_adapted_basis(const GroupAlgebra& alg,
                                                     const std::vector<AlgebraElement>& vectors) {
  // Echelon form in monomial coordinates, pivoting on the set monomial of
  // least (degree, index).
  const auto key = [&](int bit) { return alg.monomial_degree(static_cast<std::uint32_t>(bit)) * 64 + bit; };
  const auto lowest = [&](std::uint64_t c) {
    int best = -1;
    for (; c; c &= c - 1) {
      const int b = std::countr_zero(c);
      if (best < 0 || key(b) < key(best)) best = b;
    }
    return best;
  };
  std::vector<std::uint64_t> rows;
  std::vector<int> pivots;
  for (const auto& v : vectors) {
    std::uint64_t c = alg.monomial_coordinates(v);
    bool reduced = true;
    while (c && reduced) {
      reduced = false;
      const int low = lowest(c);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (pivots[r] == low) {
          c ^= rows[r];
          reduced = true;
          break;
        }
      }
    }
    if (!c) continue;
    // Keep earlier rows free of the new pivot so pivots stay minimal.
    const int low = lowest(c);
    for (auto& row : rows) {
      if ((row >> low) & 1) row ^= c;
    }
    rows.push_back(c);
    pivots.push_back(low);
  }
  std::vector<AlgebraElement> out;
  for (std::uint64_t row : rows) out.push_back(alg.from_monomial_coordinates(row));
  return out;
}

}  // namespace

IndexSets sandling_index_sets(const Involution& inv) {
  const AbelianTwoGroup& g = inv.group();
  IndexSets out;
  std::vector<std::vector<std::uint32_t>> all;
  for (std::uint32_t q : g.factor_orders()) all.push_back(range(q));
  for_each_vector(all, [&](const std::vector<std::uint32_t>& alpha) {
    if (!std::any_of(alpha.begin(), alpha.end(), [](std::uint32_t a) { return a & 1; })) return;
    out.l.push_back({alpha, IndexClass::kL});
    bool h_zero = true;
    bool h_extreme = true;
    bool d_high = false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const std::uint32_t q = g.factor_order(i);
      if (contains_position(inv.h_block(), i)) {
        h_zero = h_zero && alpha[i] == 0;
        h_extreme = h_extreme && (alpha[i] == 0 || alpha[i] == q - 1);
      } else {
        d_high = d_high || alpha[i] >= q / 2;
      }
    }
    if (h_extreme && !h_zero) out.l1.push_back({alpha, IndexClass::kL1});
    if (h_zero && d_high) out.l2.push_back({alpha, IndexClass::kL2});
  });
  out.l3 = t_index_set(inv, 1, IndexClass::kL3);
  return out;
}

AlgebraElement basis_unit(const GroupAlgebra& alg, std::span<const std::uint32_t> alpha) {
  return power_basis_unit(alg, 0, alpha);
}

AlgebraElement power_basis_unit(const GroupAlgebra& alg, int k,
                                std::span<const std::uint32_t> alpha) {
  const AbelianTwoGroup& g = alg.group();
  if (alpha.size() != g.rank()) {
    throw StructuralError("index vector has " + std::to_string(alpha.size()) + " entries, group has " +
                          std::to_string(g.rank()) + " factors");
  }
  const auto orders = power_orders(g, k);
  AlgebraElement prod = alg.one();
  bool zero = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] >= orders[i]) throw StructuralError("index vector entry out of range");
    if (alpha[i] == 0) continue;
    zero = false;
    const AlgebraElement gen = alg.element(g.pow(g.generator(i), std::uint64_t{1} << k));
    prod = alg.mul(prod, alg.pow(alg.add(gen, alg.one()), alpha[i]));
  }
  if (zero) return alg.one();
  return alg.add(alg.one(), prod);
}

std::uint32_t unit_order_formula(const AbelianTwoGroup& g, std::span<const std::uint32_t> beta) {
  if (beta.size() != g.rank()) throw StructuralError("index vector arity mismatch");
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    if (beta[i] >= g.factor_order(i)) throw StructuralError("index vector entry out of range");
    const std::uint32_t v = g.factor_order(i) / std::bit_floor(beta[i]);
    best = best == 0 ? v : std::min(best, v);
  }
  if (best == 0) throw PreconditionError("unit order formula needs a nonzero index vector");
  return best;
}

std::uint64_t unit_order(const GroupAlgebra& alg, const AlgebraElement& x) {
  if (!alg.is_unit(x)) throw NotAUnit("order of a non-unit: " + alg.to_string(x));
  std::uint64_t order = 1;
  AlgebraElement y = x;
  while (y != alg.one()) {
    y = alg.square(y);
    order *= 2;
  }
  return order;
}

UnitSubgroup full_unit_group(std::shared_ptr<const GroupAlgebra> alg, Mode mode) {
  if (mode == Mode::kExplicit) {
    if (alg->dimension() > kExplicitGroupCap) {
      throw CapExceeded("explicit V(FG) needs |G| <= 16, got " + std::to_string(alg->dimension()));
    }
    std::vector<AlgebraElement> elems;
    for (std::uint64_t b = 0; b <= alg->full_mask(); ++b) {
      if (std::popcount(b) & 1) elems.push_back(alg->from_bits(b));
    }
    return UnitSubgroup::from_elements(alg, std::move(elems));
  }
  return UnitSubgroup::generated_by(alg, power_basis(*alg, 0));
}

AlgebraElement psi1(const GroupAlgebra& alg, const AlgebraElement& x, const Involution& inv) {
  check_involution(alg, inv);
  return alg.mul(alg.eta(x, inv), alg.unit_inverse(x));
}

AlgebraElement psi2(const GroupAlgebra& alg, const AlgebraElement& x, const Involution& inv) {
  check_involution(alg, inv);
  if (!alg.is_unit(x)) throw NotAUnit("psi2 of a non-unit: " + alg.to_string(x));
  return alg.mul(alg.eta(x, inv), x);
}

namespace {

std::vector<AlgebraElement> symmetric_augmentation_zero_basis(const GroupAlgebra& alg,
                                                              const Involution& inv) {
  std::vector<AlgebraElement> basis;
  const XiSets xi = xi_sets(inv);
  const SubgroupOfG fixed = fixed_subgroup(inv);
  for (const XiPair& p : xi.pairs) {
    basis.push_back(alg.add(alg.element(p.rep), alg.element(p.image)));
  }
  for (GroupElement g : fixed.elements()) {
    if (g.index != 0) basis.push_back(alg.add(alg.element(g), alg.one()));
  }
  return basis;
}

// Every element of a + span(basis), in Gray-code order.
std::vector<AlgebraElement> affine_span(const GroupAlgebra& alg, const AlgebraElement& a,
                                        const std::vector<AlgebraElement>& basis,
                                        std::uint64_t cap) {
  if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > cap) {
    throw CapExceeded("span of dimension " + std::to_string(basis.size()) + " exceeds the cap");
  }
  std::vector<AlgebraElement> out{a};
  AlgebraElement cur = a;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
    cur = alg.add(cur, basis[static_cast<std::size_t>(std::countr_zero(i))]);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

int symmetric_normal_form_dimension(const Involution& inv) {
  const XiSets xi = xi_sets(inv);
  return static_cast<int>(xi.xi + fixed_subgroup(inv).order()) - 1;
}

UnitSubgroup symmetric_units(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv) {
  check_involution(*alg, inv);
  const auto basis = symmetric_augmentation_zero_basis(*alg, inv);
  if ((std::uint64_t{1} << basis.size()) <= kElementCap) {
    return UnitSubgroup::from_elements(alg, affine_span(*alg, alg->one(), basis, kElementCap));
  }
  // The augmentation-zero symmetric elements form a subalgebra J, and the
  // units 1 + b over an echelon basis of J generate all of 1 + J.
  std::vector<AlgebraElement> gens;
  for (const auto& b : filtration_adapted_basis(*alg, basis)) gens.push_back(alg->add(alg->one(), b));
  return UnitSubgroup::generated_by(alg, gens);
}

std::vector<AlgebraElement> symmetric_elements(const GroupAlgebra& alg, const Involution& inv,
                                               std::uint64_t cap) {
  check_involution(alg, inv);
  std::vector<AlgebraElement> basis;
  const XiSets xi = xi_sets(inv);
  const SubgroupOfG fixed = fixed_subgroup(inv);
  for (const XiPair& p : xi.pairs) {
    basis.push_back(alg.add(alg.element(p.rep), alg.element(p.image)));
  }
  for (GroupElement g : fixed.elements()) basis.push_back(alg.element(g));
  return affine_span(alg, alg.zero(), basis, cap);
}

UnitSubgroup unitary_units(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv,
                           Mode mode) {
  check_involution(*alg, inv);
  if (mode == Mode::kExplicit) {
    std::vector<AlgebraElement> kept;
    for (const auto& x : full_unit_group(alg, Mode::kExplicit).elements()) {
      if (alg->mul(alg->eta(x, inv), x) == alg->one()) kept.push_back(x);
    }
    return UnitSubgroup::from_elements(alg, std::move(kept));
  }
  std::vector<AlgebraElement> gens;
  for (std::size_t i : inv.h_block()) gens.push_back(alg->element(alg->group().generator(i)));
  for (const UnitSubgroup& part : {t_subgroup(alg, inv), two_torsion_units(alg, d_subgroup(inv)),
                                   w_subgroup(alg, inv)}) {
    const auto ps = part.pc().pivots();
    gens.insert(gens.end(), ps.begin(), ps.end());
  }
  return UnitSubgroup::generated_by(alg, gens);
}

UnitSubgroup w_subgroup(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv) {
  return w_subgroup_of_power(std::move(alg), inv, 0);
}

UnitSubgroup w_subgroup_of_power(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv,
                                 int k) {
  check_involution(*alg, inv);
  std::vector<AlgebraElement> gens;
  for (const auto& u : power_basis(*alg, k)) gens.push_back(psi1(*alg, u, inv));
  return UnitSubgroup::generated_by(alg, gens);
}

UnitSubgroup two_torsion_units(std::shared_ptr<const GroupAlgebra> alg, const SubgroupOfG& k) {
  // 1 + I(K[2]) is elementary abelian of order 2^dim. Units 1 + b whose
  // lowest-degree parts are independent have independent leading vectors,
  // so such a basis generates the whole group.
  const SubgroupOfG k2 = torsion_subgroup(k, 1);
  std::vector<AlgebraElement> gens;
  for (const auto& b : filtration_adapted_basis(*alg, alg->ideal_basis(k2, k))) {
    gens.push_back(alg->add(alg->one(), b));
  }
  return UnitSubgroup::generated_by(alg, gens);
}

UnitSubgroup t_subgroup(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv) {
  return t_subgroup_of_power(std::move(alg), inv, 0);
}

UnitSubgroup t2_subgroup(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv) {
  return t_subgroup_of_power(std::move(alg), inv, 1);
}

UnitSubgroup t_subgroup_of_power(std::shared_ptr<const GroupAlgebra> alg, const Involution& inv,
                                 int k) {
  check_involution(*alg, inv);
  std::vector<AlgebraElement> gens;
  for (const auto& iv : t_index_set(inv, k, IndexClass::kL1)) {
    gens.push_back(power_basis_unit(*alg, k, iv.alpha));
  }
  return UnitSubgroup::generated_by(alg, gens);
}

UnitSubgroup group_units(std::shared_ptr<const GroupAlgebra> alg, const SubgroupOfG& k) {
  if (!(k.ambient() == alg->group())) throw AmbientMismatch("subgroup of a different group");
  std::vector<AlgebraElement> gens;
  for (GroupElement g : k.elements()) gens.push_back(alg->element(g));
  return UnitSubgroup::generated_by(alg, gens);
}

SubgroupOfG group_part(const UnitSubgroup& a) {
  const GroupAlgebra& alg = a.algebra();
  std::vector<GroupElement> kept;
  for (std::uint32_t i = 0; i < alg.dimension(); ++i) {
    if (a.contains(alg.element({i}))) kept.push_back({i});
  }
  return SubgroupOfG::from_elements(alg.group(), std::move(kept));
}

SubgroupOfG h_subgroup(const Involution& inv) {
  return SubgroupOfG::coordinate(inv.group(), inv.h_block());
}

SubgroupOfG d_subgroup(const Involution& inv) {
  return SubgroupOfG::coordinate(inv.group(), inv.d_block());
}

SubgroupOfG d1_subgroup(const Involution& inv) {
  return SubgroupOfG::coordinate(inv.group(), inv.d1_block());
}

PsiIdentityResult check_psi_identity(const GroupAlgebra& alg, const Involution& inv,
                                     GroupElement h, const AlgebraElement& s) {
  check_involution(alg, inv);
  const AbelianTwoGroup& g = alg.group();
  PsiIdentityResult r;
  const std::uint32_t q = g.element_order(h);
  if (q < 4 || inv.apply(h) != g.inverse(h) || alg.eta(s, inv) != s) return r;
  r.applicable = true;
  const AlgebraElement one = alg.one();
  const AlgebraElement x = alg.add(alg.element(h), one);
  const auto term = [&](std::uint32_t e, const AlgebraElement& c) {
    return alg.add(one, alg.mul(alg.pow(x, e), c));
  };
  if (q > 4) {
    const AlgebraElement z = term(q - 3, s);
    r.order_two = alg.square(z) == one;
    r.psi_image = psi1(alg, z, inv) == alg.mul(term(q - 2, s), term(q - 1, s));
  } else {
    const AlgebraElement tail = term(3, alg.add(s, alg.square(s)));
    const AlgebraElement xi = alg.add(alg.element(g.inverse(h)), one);
    r.inverse_split = alg.add(one, alg.mul(xi, s)) ==
                      alg.mul(alg.mul(term(1, s), term(2, s)), tail);
    r.psi_image = psi1(alg, term(1, s), inv) == alg.mul(term(2, s), tail);
  }
  return r;
}

}  // namespace f2units
