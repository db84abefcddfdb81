#include "f2units/algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

// kLowHalfMasks[b] selects the positions p whose bit b is clear.
constexpr std::uint64_t kLowHalfMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

AlgebraId make_id(const AbelianTwoGroup& g) {
  AlgebraId id = 1;
  for (std::uint32_t q : g.factor_orders()) {
    id = id * 8 + static_cast<AlgebraId>(std::countr_zero(q));
  }
  return id;
}

}  // namespace

int AlgebraElement::support_size() const { return std::popcount(bits_); }

GroupAlgebra::GroupAlgebra(AbelianTwoGroup group) : group_(std::move(group)) {
  const std::uint32_t n = group_.order();
  if (n > kMaxOrder) {
    throw std::invalid_argument("group algebra needs |G| <= 64, got " + std::to_string(n));
  }
  id_ = make_id(group_);
  full_mask_ = n == 64 ? ~0ull : ((1ull << n) - 1);
  mul_table_.resize(static_cast<std::size_t>(n) * n);
  square_of_.resize(n);
  degree_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      mul_table_[a * n + b] = static_cast<std::uint8_t>(group_.mul({a}, {b}).index);
    }
    square_of_[a] = mul_table_[a * n + a];
    int deg = 0;
    for (std::uint32_t e : group_.exponents({a})) deg += static_cast<int>(e);
    degree_[a] = deg;
    max_degree_ = std::max(max_degree_, deg);
  }
  degree_masks_.assign(static_cast<std::size_t>(max_degree_) + 2, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (int k = 0; k <= degree_[a]; ++k) degree_masks_[k] |= 1ull << a;
  }
}

void GroupAlgebra::check(const AlgebraElement& x) const {
  if (x.ambient() != id_) {
    throw AmbientMismatch("element belongs to a different group algebra than F2[" +
                          group_.to_string() + "]");
  }
}

AlgebraElement GroupAlgebra::element(GroupElement g) const {
  if (!group_.contains(g)) {
    throw StructuralError("group element index " + std::to_string(g.index) + " out of range");
  }
  return {1ull << g.index, id_};
}

AlgebraElement GroupAlgebra::from_bits(std::uint64_t bits) const {
  if (bits & ~full_mask_) throw StructuralError("coefficient vector longer than |G|");
  return {bits, id_};
}

AlgebraElement GroupAlgebra::sum(std::span<const GroupElement> terms) const {
  std::uint64_t bits = 0;
  for (GroupElement g : terms) bits ^= element(g).bits();
  return {bits, id_};
}

F2 GroupAlgebra::augmentation(const AlgebraElement& x) const {
  check(x);
  return (std::popcount(x.bits()) & 1) ? F2::kOne : F2::kZero;
}

AlgebraElement GroupAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  check(x);
  check(y);
  return {x.bits() ^ y.bits(), id_};
}

AlgebraElement GroupAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  check(x);
  check(y);
  const std::uint32_t n = group_.order();
  std::uint64_t out = 0;
  for (std::uint64_t xs = x.bits(); xs; xs &= xs - 1) {
    const auto a = static_cast<std::uint32_t>(std::countr_zero(xs));
    const std::uint8_t* row = &mul_table_[a * n];
    for (std::uint64_t ys = y.bits(); ys; ys &= ys - 1) {
      out ^= 1ull << row[std::countr_zero(ys)];
    }
  }
  return {out, id_};
}

AlgebraElement GroupAlgebra::square(const AlgebraElement& x) const {
  check(x);
  std::uint64_t out = 0;
  for (std::uint64_t xs = x.bits(); xs; xs &= xs - 1) {
    out ^= 1ull << square_of_[std::countr_zero(xs)];
  }
  return {out, id_};
}

AlgebraElement GroupAlgebra::pow(const AlgebraElement& x, std::uint64_t k) const {
  check(x);
  AlgebraElement result = one();
  AlgebraElement base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = square(base);
  }
  return result;
}

AlgebraElement GroupAlgebra::unit_inverse(const AlgebraElement& x) const {
  if (!is_unit(x)) throw NotAUnit("element has augmentation 0: " + to_string(x));
  AlgebraElement result = one();
  AlgebraElement base = x;
  for (int i = 0; i < group_.exponent_log(); ++i) {
    result = mul(result, base);
    base = square(base);
  }
  return result;
}

AlgebraElement GroupAlgebra::eta(const AlgebraElement& x, const Involution& inv) const {
  check(x);
  if (!(inv.group() == group_)) {
    throw AmbientMismatch("involution is defined on " + inv.group().to_string() + ", not " +
                          group_.to_string());
  }
  std::uint64_t out = 0;
  for (std::uint64_t xs = x.bits(); xs; xs &= xs - 1) {
    const GroupElement g{static_cast<std::uint32_t>(std::countr_zero(xs))};
    out |= 1ull << inv.apply(g).index;
  }
  return {out, id_};
}

AlgebraElement GroupAlgebra::hat(const SubgroupOfG& h) const {
  if (!(h.ambient() == group_)) throw AmbientMismatch("subgroup of a different group");
  return sum(h.elements());
}

std::vector<AlgebraElement> GroupAlgebra::ideal_basis(const SubgroupOfG& h,
                                                      const SubgroupOfG& k) const {
  if (!(h.ambient() == group_) || !(k.ambient() == group_)) {
    throw AmbientMismatch("subgroup of a different group");
  }
  std::vector<AlgebraElement> basis;
  for (GroupElement u : left_transversal(k, h)) {
    for (GroupElement g : h.elements()) {
      if (g.index == 0) continue;
      const GroupElement ug = group_.mul(u, g);
      basis.push_back({(1ull << ug.index) ^ (1ull << u.index), id_});
    }
  }
  if (f2_rank(basis) != basis.size()) {
    throw std::logic_error("ideal basis is not linearly independent");
  }
  return basis;
}

std::vector<AlgebraElement> GroupAlgebra::ideal_basis(const SubgroupOfG& h) const {
  return ideal_basis(h, SubgroupOfG::whole(group_));
}

std::uint64_t GroupAlgebra::monomial_coordinates(const AlgebraElement& x) const {
  check(x);
  // c_mono[e] = sum over j containing e bitwise of c[j] (Lucas); the
  // transform is an involution over F2.
  std::uint64_t c = x.bits();
  for (int b = 0; b < group_.order_log(); ++b) {
    c ^= (c >> (1u << b)) & kLowHalfMasks[b];
  }
  return c & full_mask_;
}

AlgebraElement GroupAlgebra::from_monomial_coordinates(std::uint64_t coords) const {
  if (coords & ~full_mask_) throw StructuralError("coordinate vector longer than |G|");
  std::uint64_t c = coords;
  for (int b = 0; b < group_.order_log(); ++b) {
    c ^= (c >> (1u << b)) & kLowHalfMasks[b];
  }
  return {c & full_mask_, id_};
}

std::uint64_t GroupAlgebra::degree_mask(int k) const {
  if (k <= 0) return full_mask_;
  if (k > max_degree_) return 0;
  return degree_masks_[static_cast<std::size_t>(k)];
}

std::size_t f2_rank(std::span<const std::uint64_t> vectors) {
  // Echelon basis keyed by lowest set bit.
  std::uint64_t pivots[64] = {};
  std::size_t rank = 0;
  for (std::uint64_t v : vectors) {
    while (v) {
      const int low = std::countr_zero(v);
      if (!pivots[low]) {
        pivots[low] = v;
        ++rank;
        break;
      }
      v ^= pivots[low];
    }
  }
  return rank;
}

std::size_t f2_rank(std::span<const AlgebraElement> vectors) {
  std::vector<std::uint64_t> bits;
  bits.reserve(vectors.size());
  for (const auto& v : vectors) bits.push_back(v.bits());
  return f2_rank(bits);
}

bool f2_in_span(std::span<const AlgebraElement> family, const AlgebraElement& v) {
  std::vector<std::uint64_t> bits;
  bits.reserve(family.size() + 1);
  for (const auto& f : family) bits.push_back(f.bits());
  const std::size_t r = f2_rank(bits);
  bits.push_back(v.bits());
  return f2_rank(bits) == r;
}

std::vector<IdentityCheck> check_inverse_identities(const GroupAlgebra& alg, GroupElement h) {
  const AbelianTwoGroup& g = alg.group();
  const std::uint32_t q = g.element_order(h);
  const AlgebraElement x = alg.add(alg.element(h), alg.one());
  const AlgebraElement xi = alg.add(alg.element(g.inverse(h)), alg.one());

  std::vector<IdentityCheck> out;
  for (std::uint32_t k : {1u, 2u, 4u}) {
    IdentityCheck c;
    c.name = "inverse_power_k" + std::to_string(k);
    if (q <= 2) {
      c.note = "needs an element of order >= 4";
    } else if (k == 4 && q <= 4) {
      c.note = "k = 4 needs an element of order > 4";
    } else {
      c.applicable = true;
      c.holds = alg.pow(xi, q - k) == alg.pow(x, q - k);
    }
    out.push_back(c);
  }

  IdentityCheck geo;
  geo.name = "inverse_geometric_sum";
  if (q <= 2) {
    geo.note = "needs an element of order >= 4";
  } else {
    geo.applicable = true;
    AlgebraElement s = alg.zero();
    AlgebraElement p = alg.one();
    for (std::uint32_t i = 1; i < q; ++i) {
      p = alg.mul(p, x);
      s = alg.add(s, p);
    }
    geo.holds = s == xi;
  }
  out.push_back(geo);
  return out;
}

}  // namespace f2units
