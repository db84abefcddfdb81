#include "f2units/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

bool is_power_of_two(std::uint32_t q) { return q >= 2 && std::has_single_bit(q); }

}  // namespace

// ---------------------------------------------------------------------------
// AbelianTwoGroup

AbelianTwoGroup::AbelianTwoGroup(std::vector<std::uint32_t> factor_orders)
    : orders_(std::move(factor_orders)) {
  std::uint64_t order = 1;
  int shift = 0;
  for (std::uint32_t q : orders_) {
    if (!is_power_of_two(q)) {
      throw std::invalid_argument("factor order " + std::to_string(q) +
                                  " is not a power of two >= 2");
    }
    order *= q;
    if (order > kMaxOrder) {
      throw std::invalid_argument("group order exceeds " +
                                  std::to_string(kMaxOrder));
    }
    const int b = std::countr_zero(q);
    shifts_.push_back(shift);
    bits_.push_back(b);
    shift += b;
  }
  order_ = static_cast<std::uint32_t>(order);
  total_bits_ = shift;
}

int AbelianTwoGroup::exponent_log() const {
  int n = 0;
  for (int b : bits_) n = std::max(n, b);
  return n;
}

void AbelianTwoGroup::check(GroupElement x) const {
  if (x.index >= order_) {
    throw StructuralError("element index " + std::to_string(x.index) +
                          " outside group of order " + std::to_string(order_));
  }
}

GroupElement AbelianTwoGroup::generator(std::size_t i) const {
  if (i >= orders_.size()) throw StructuralError("generator position out of range");
  return {1u << shifts_[i]};
}

GroupElement AbelianTwoGroup::element(std::span<const std::uint32_t> exponents) const {
  if (exponents.size() != orders_.size()) {
    throw StructuralError("expected " + std::to_string(orders_.size()) +
                          " exponents, got " + std::to_string(exponents.size()));
  }
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (exponents[i] >= orders_[i]) {
      throw StructuralError("exponent " + std::to_string(exponents[i]) +
                            " out of range for factor of order " +
                            std::to_string(orders_[i]));
    }
    index |= exponents[i] << shifts_[i];
  }
  return {index};
}

std::vector<std::uint32_t> AbelianTwoGroup::exponents(GroupElement x) const {
  check(x);
  std::vector<std::uint32_t> e(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = (x.index >> shifts_[i]) & (orders_[i] - 1);
  }
  return e;
}

std::uint32_t AbelianTwoGroup::exponent_at(GroupElement x, std::size_t i) const {
  return (x.index >> shifts_.at(i)) & (orders_[i] - 1);
}

GroupElement AbelianTwoGroup::mul(GroupElement x, GroupElement y) const {
  check(x);
  check(y);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t m = orders_[i] - 1;
    r |= (((x.index >> shifts_[i]) + (y.index >> shifts_[i])) & m) << shifts_[i];
  }
  return {r};
}

GroupElement AbelianTwoGroup::inverse(GroupElement x) const {
  check(x);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t m = orders_[i] - 1;
    r |= ((0u - (x.index >> shifts_[i])) & m) << shifts_[i];
  }
  return {r};
}

GroupElement AbelianTwoGroup::pow(GroupElement x, std::uint64_t k) const {
  check(x);
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint64_t m = orders_[i] - 1;
    const std::uint64_t e = (x.index >> shifts_[i]) & m;
    r |= static_cast<std::uint32_t>(((e * (k & m)) & m) << shifts_[i]);
  }
  return {r};
}

std::uint32_t AbelianTwoGroup::element_order(GroupElement x) const {
  std::uint32_t ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::uint32_t e = exponent_at(x, i);
    if (e != 0) ord = std::max(ord, orders_[i] >> std::countr_zero(e));
  }
  return ord;
}

std::string AbelianTwoGroup::to_string() const {
  if (orders_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(orders_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Involution

Involution::Involution(const AbelianTwoGroup& group, std::vector<std::size_t> raw,
                       bool canonicalize)
    : group_(group), raw_(std::move(raw)), canonicalized_(canonicalize) {
  std::sort(raw_.begin(), raw_.end());
  raw_.erase(std::unique(raw_.begin(), raw_.end()), raw_.end());
  for (std::size_t p : raw_) {
    if (p >= group_.rank()) {
      throw StructuralError("inverted position " + std::to_string(p + 1) +
                            " exceeds group rank " + std::to_string(group_.rank()));
    }
  }
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    const bool marked = std::binary_search(raw_.begin(), raw_.end(), i);
    const bool inverted = marked && (!canonicalize || group_.factor_order(i) > 2);
    if (inverted) {
      h_.push_back(i);
      (group_.factor_order(i) == 4 ? d1_ : h1_).push_back(i);
      inverted_fields_mask_ |= (group_.factor_order(i) - 1) << group_.field_shift(i);
    } else {
      d_.push_back(i);
    }
  }
}

Involution Involution::canonicalized(const AbelianTwoGroup& group,
                                     std::vector<std::size_t> raw_inverted) {
  return Involution(group, std::move(raw_inverted), true);
}

Involution Involution::uncanonicalized(const AbelianTwoGroup& group,
                                       std::vector<std::size_t> raw_inverted) {
  return Involution(group, std::move(raw_inverted), false);
}

Involution Involution::canonical(const AbelianTwoGroup& group) {
  std::vector<std::size_t> all(group.rank());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return canonicalized(group, std::move(all));
}

Involution Involution::identity(const AbelianTwoGroup& group) {
  return canonicalized(group, {});
}

bool Involution::is_canonical_involution() const {
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    if (group_.factor_order(i) > 2 && !std::binary_search(h_.begin(), h_.end(), i)) {
      return false;
    }
  }
  return true;
}

GroupElement Involution::apply(GroupElement x) const {
  const GroupElement inv = group_.inverse(x);
  return {(inv.index & inverted_fields_mask_) | (x.index & ~inverted_fields_mask_)};
}

// ---------------------------------------------------------------------------
// SubgroupOfG

SubgroupOfG::SubgroupOfG(const AbelianTwoGroup& group, std::vector<GroupElement> elements,
                         std::vector<GroupElement> generators)
    : group_(group), elements_(std::move(elements)), generators_(std::move(generators)) {}

SubgroupOfG SubgroupOfG::generated_by(const AbelianTwoGroup& group,
                                      std::span<const GroupElement> generators) {
  std::vector<char> member(group.order(), 0);
  std::vector<GroupElement> elems{group.identity()};
  std::vector<GroupElement> used;
  member[0] = 1;
  for (GroupElement g : generators) {
    if (!group.contains(g)) throw StructuralError("generator outside the group");
    if (member[g.index]) continue;
    used.push_back(g);
    // R <- R u gR u g^2 R u ... until g^k lands in R.
    const std::size_t base = elems.size();
    GroupElement power = g;
    while (!member[power.index]) {
      for (std::size_t j = 0; j < base; ++j) {
        const GroupElement y = group.mul(power, elems[j]);
        member[y.index] = 1;
        elems.push_back(y);
      }
      power = group.mul(power, g);
    }
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupOfG(group, std::move(elems), std::move(used));
}

SubgroupOfG SubgroupOfG::from_elements(const AbelianTwoGroup& group,
                                       std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SubgroupOfG closed = generated_by(group, elements);
  if (closed.elements_ != elements) {
    throw StructuralError("element set is not a subgroup");
  }
  return closed;
}

SubgroupOfG SubgroupOfG::whole(const AbelianTwoGroup& group) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) gens.push_back(group.generator(i));
  return generated_by(group, gens);
}

SubgroupOfG SubgroupOfG::trivial(const AbelianTwoGroup& group) {
  return SubgroupOfG(group, {group.identity()}, {});
}

SubgroupOfG SubgroupOfG::coordinate(const AbelianTwoGroup& group,
                                    std::span<const std::size_t> positions) {
  std::vector<GroupElement> gens;
  for (std::size_t p : positions) gens.push_back(group.generator(p));
  return generated_by(group, gens);
}

bool SubgroupOfG::contains(GroupElement x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool SubgroupOfG::is_subgroup_of(const SubgroupOfG& other) const {
  return group_ == other.group_ &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

// ---------------------------------------------------------------------------
// Free functions

GroupElement group_mul(const AbelianTwoGroup& g, GroupElement x, GroupElement y) {
  return g.mul(x, y);
}

std::uint32_t element_order(const AbelianTwoGroup& g, GroupElement x) {
  return g.element_order(x);
}

GroupElement apply_eta(const Involution& eta, GroupElement x) { return eta.apply(x); }

Involution canonicalize_involution(const AbelianTwoGroup& g,
                                   std::vector<std::size_t> raw_inverted) {
  return Involution::canonicalized(g, std::move(raw_inverted));
}

SubgroupOfG fixed_subgroup(const Involution& eta) {
  const AbelianTwoGroup& g = eta.group();
  std::vector<GroupElement> fixed;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (eta.apply({i}) == GroupElement{i}) fixed.push_back({i});
  }
  return SubgroupOfG::from_elements(g, std::move(fixed));
}

SubgroupOfG torsion_subgroup(const SubgroupOfG& k, int n) {
  if (n < 0) throw PreconditionError("torsion exponent must be >= 0");
  const AbelianTwoGroup& g = k.ambient();
  if (n >= g.exponent_log()) return k;
  std::vector<GroupElement> out;
  for (GroupElement x : k.elements()) {
    if (g.pow(x, std::uint64_t{1} << n) == g.identity()) out.push_back(x);
  }
  return SubgroupOfG::from_elements(g, std::move(out));
}

SubgroupOfG power_subgroup(const SubgroupOfG& k, int i) {
  if (i < 0) throw PreconditionError("power exponent must be >= 0");
  const AbelianTwoGroup& g = k.ambient();
  if (i >= g.exponent_log()) return i == 0 ? k : SubgroupOfG::trivial(g);
  std::vector<GroupElement> out;
  out.reserve(k.order());
  for (GroupElement x : k.elements()) out.push_back(g.pow(x, std::uint64_t{1} << i));
  return SubgroupOfG::from_elements(g, std::move(out));
}

SubgroupOfG subgroup_join(const SubgroupOfG& a, const SubgroupOfG& b) {
  if (!(a.ambient() == b.ambient())) throw StructuralError("subgroups of different groups");
  std::vector<GroupElement> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return SubgroupOfG::generated_by(a.ambient(), gens);
}

std::vector<GroupElement> left_transversal(const SubgroupOfG& k, const SubgroupOfG& h) {
  if (!h.is_subgroup_of(k)) {
    throw StructuralError("transversal requested for a non-subgroup");
  }
  const AbelianTwoGroup& g = k.ambient();
  std::vector<char> covered(g.order(), 0);
  std::vector<GroupElement> reps;
  for (GroupElement x : k.elements()) {
    if (covered[x.index]) continue;
    reps.push_back(x);
    for (GroupElement y : h.elements()) covered[g.mul(x, y).index] = 1;
  }
  return reps;
}

std::vector<GroupElement> left_transversal(const AbelianTwoGroup& g, const SubgroupOfG& h) {
  return left_transversal(SubgroupOfG::whole(g), h);
}

XiSets xi_sets(const Involution& eta) {
  const AbelianTwoGroup& g = eta.group();
  XiSets out;
  std::vector<std::size_t> pair_of(g.order(), XiSets::npos);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const GroupElement x{i};
    const GroupElement y = eta.apply(x);
    if (y == x || y < x) continue;
    const bool xi0 = g.mul(x, x) == g.mul(y, y);
    pair_of[x.index] = pair_of[y.index] = out.pairs.size();
    out.pairs.push_back({x, y, xi0 ? XiClass::kXi0 : XiClass::kXi1});
    ++(xi0 ? out.xi0 : out.xi1);
  }
  out.xi = out.pairs.size();

  // X = G[2] acts on Xi1 by (g, eta(g)) -> (ga, eta(g)a); eta fixes G[2].
  const SubgroupOfG x2 = torsion_subgroup(SubgroupOfG::whole(g), 1);
  out.orbit_of.assign(out.pairs.size(), XiSets::npos);
  for (std::size_t p = 0; p < out.pairs.size(); ++p) {
    if (out.pairs[p].cls == XiClass::kXi0 || out.orbit_of[p] != XiSets::npos) continue;
    const std::size_t id = out.orbit_reps.size();
    out.orbit_reps.push_back(p);
    for (GroupElement a : x2.elements()) {
      out.orbit_of[pair_of[g.mul(out.pairs[p].rep, a).index]] = id;
    }
  }
  out.orbits = out.orbit_reps.size();
  return out;
}

QuotientGroup quotient_group(const AbelianTwoGroup& g, const SubgroupOfG& h) {
  if (!(h.ambient() == g)) throw StructuralError("subgroup of a different group");
  const std::vector<GroupElement> reps = left_transversal(g, h);
  const std::size_t n = reps.size();

  // coset id of every element of G.
  std::vector<std::uint32_t> coset(g.order());
  for (std::size_t c = 0; c < n; ++c) {
    for (GroupElement y : h.elements()) {
      coset[g.mul(reps[c], y).index] = static_cast<std::uint32_t>(c);
    }
  }
  auto qmul = [&](std::uint32_t a, std::uint32_t b) {
    return coset[g.mul(reps[a], reps[b]).index];
  };
  // Order of coset a modulo the subgroup flagged in `in_c`.
  auto rel_order = [&](std::uint32_t a, const std::vector<char>& in_c) {
    std::uint32_t k = 1;
    std::uint32_t p = a;
    while (!in_c[p]) {
      p = qmul(p, a);
      ++k;
    }
    return k;
  };

  // Greedy basis: repeatedly take an element whose order in G/H equals the
  // largest order attainable modulo the part already chosen.
  std::vector<char> trivial(n, 0);
  trivial[0] = 1;
  std::vector<char> in_c = trivial;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> orders;
  std::size_t c_size = 1;
  while (c_size < n) {
    std::uint32_t best = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (!in_c[a]) best = std::max(best, rel_order(a, in_c));
    }
    std::uint32_t pick = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (!in_c[a] && rel_order(a, in_c) == best && rel_order(a, trivial) == best) {
        pick = a;
        break;
      }
    }
    if (pick == 0) throw std::logic_error("quotient basis search failed");
    chosen.push_back(pick);
    orders.push_back(best);
    // C <- C * <pick>
    std::vector<std::uint32_t> members;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (in_c[a]) members.push_back(a);
    }
    std::uint32_t p = pick;
    for (std::uint32_t k = 1; k < best; ++k) {
      for (std::uint32_t m : members) in_c[qmul(p, m)] = 1;
      p = qmul(p, pick);
    }
    c_size *= best;
  }

  QuotientGroup q{AbelianTwoGroup(orders), std::vector<std::uint32_t>(g.order())};
  // Map each coset to its exponent vector over the chosen basis.
  std::vector<std::uint32_t> index_of_coset(n);
  for (std::uint32_t qi = 0; qi < q.group.order(); ++qi) {
    const std::vector<std::uint32_t> e = q.group.exponents({qi});
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      for (std::uint32_t k = 0; k < e[j]; ++k) c = qmul(c, chosen[j]);
    }
    index_of_coset[c] = qi;
  }
  for (std::uint32_t i = 0; i < g.order(); ++i) q.projection[i] = index_of_coset[coset[i]];
  return q;
}

}  // namespace f2units
