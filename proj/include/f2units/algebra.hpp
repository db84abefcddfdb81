#pragma once

// Exact arithmetic in the group algebra F2[G].
//
// An element is a bit-vector of length |G|: bit g is the coefficient of the
// group element with index g. Every element carries the identifier of its
// ambient algebra, and binary operations refuse to mix algebras.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "f2units/group.hpp"

namespace f2units {

enum class F2 : std::uint8_t { kZero = 0, kOne = 1 };

using AlgebraId = std::uint64_t;

class AlgebraElement {
 public:
  AlgebraElement() = default;

  std::uint64_t bits() const { return bits_; }
  AlgebraId ambient() const { return ambient_; }
  bool coefficient(GroupElement g) const { return (bits_ >> g.index) & 1u; }
  int support_size() const;
  bool is_zero() const { return bits_ == 0; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend auto operator<=>(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  friend class GroupAlgebra;
  AlgebraElement(std::uint64_t bits, AlgebraId ambient) : bits_(bits), ambient_(ambient) {}

  std::uint64_t bits_ = 0;
  AlgebraId ambient_ = 0;
};

struct AlgebraElementHash {
  std::size_t operator()(const AlgebraElement& x) const noexcept {
    return std::hash<std::uint64_t>{}(x.bits() * 0x9E3779B97F4A7C15ull ^ x.ambient());
  }
};

class GroupAlgebra {
 public:
  // Elements are single 64-bit words.
  static constexpr std::uint32_t kMaxOrder = 64;

  // Throws std::invalid_argument when |G| > kMaxOrder.
  explicit GroupAlgebra(AbelianTwoGroup group);

  const AbelianTwoGroup& group() const { return group_; }
  AlgebraId id() const { return id_; }
  std::uint32_t dimension() const { return group_.order(); }

  AlgebraElement zero() const { return {0, id_}; }
  AlgebraElement one() const { return {1, id_}; }
  AlgebraElement element(GroupElement g) const;
  AlgebraElement from_bits(std::uint64_t bits) const;
  AlgebraElement sum(std::span<const GroupElement> terms) const;

  F2 augmentation(const AlgebraElement& x) const;
  // FG is local for a 2-group: the units are exactly the elements of
  // augmentation 1.
  bool is_unit(const AlgebraElement& x) const { return augmentation(x) == F2::kOne; }

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  // Coefficientwise: bit g of x^2 is the parity of #{h in supp x : h^2 = g}.
  AlgebraElement square(const AlgebraElement& x) const;
  AlgebraElement pow(const AlgebraElement& x, std::uint64_t k) const;
  // x^(2^n - 1) with 2^n = exp(G), valid because x^(2^n) = augmentation(x)
  // in characteristic 2. Throws NotAUnit on augmentation 0.
  AlgebraElement unit_inverse(const AlgebraElement& x) const;
  // x^eta = sum alpha_g eta(g).
  AlgebraElement eta(const AlgebraElement& x, const Involution& inv) const;

  // Sum of all elements of H.
  AlgebraElement hat(const SubgroupOfG& h) const;
  // F-basis {u (g - 1) : 1 != g in H, u in transversal of K/H} of the ideal of
  // FK generated by {h - 1 : h in H}. Its size |K/H| (|H| - 1) is checked
  // against the F2-rank of the result.
  std::vector<AlgebraElement> ideal_basis(const SubgroupOfG& h, const SubgroupOfG& k) const;
  std::vector<AlgebraElement> ideal_basis(const SubgroupOfG& h) const;

  // Coordinates of x in the monomial basis prod_i (a_i - 1)^{e_i}, with the
  // monomial e stored at the bit of the group element with exponents e.
  std::uint64_t monomial_coordinates(const AlgebraElement& x) const;
  AlgebraElement from_monomial_coordinates(std::uint64_t coords) const;
  // sum_i e_i of monomial e; the augmentation ideal power I^k is spanned by
  // the monomials of degree >= k.
  int monomial_degree(std::uint32_t index) const { return degree_.at(index); }
  int max_degree() const { return max_degree_; }
  std::uint64_t degree_mask(int k) const;

  // "1 + a1^2*a2 + a1^3"; the zero element prints as "0".
  std::string to_string(const AlgebraElement& x) const;
  // Inverse of to_string; repeated monomials cancel. Throws ParseError.
  AlgebraElement parse(std::string_view text) const;

  std::uint64_t full_mask() const { return full_mask_; }
  void check(const AlgebraElement& x) const;

 private:
  AbelianTwoGroup group_;
  AlgebraId id_ = 0;
  std::uint64_t full_mask_ = 0;
  std::vector<std::uint8_t> mul_table_;  // |G| x |G|
  std::vector<std::uint8_t> square_of_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> degree_masks_;
  int max_degree_ = 0;
};

// Rank over F2 of a family of bit-vectors.
std::size_t f2_rank(std::span<const std::uint64_t> vectors);
std::size_t f2_rank(std::span<const AlgebraElement> vectors);
// True when v lies in the F2-span of the family.
bool f2_in_span(std::span<const AlgebraElement> family, const AlgebraElement& v);

// Outcome of one of the inverse-power identities for a group element h of
// order q:
//   inverse_power_k{1,2,4}:  (h^-1 + 1)^(q-k) = (h + 1)^(q-k)
//   inverse_geometric_sum:   h^-1 + 1 = (h+1) + (h+1)^2 + ... + (h+1)^(q-1)
struct IdentityCheck {
  std::string name;
  bool applicable = false;
  bool holds = false;
  std::string note;  // why it is inapplicable, when it is
};

std::vector<IdentityCheck> check_inverse_identities(const GroupAlgebra& alg, GroupElement h);

}  // namespace f2units
