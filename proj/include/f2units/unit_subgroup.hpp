#pragma once

// Subgroups of V(FG): a generator list backed by a pc sequence, optionally
// with the explicit sorted element set.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f2units/algebra.hpp"
#include "f2units/pc_sequence.hpp"

namespace f2units {

// Largest subgroup that is ever materialized as an element list: V(FG) for
// |G| = 16.
inline constexpr std::uint64_t kElementCap = std::uint64_t{1} << 15;

class UnitSubgroup {
 public:
  static UnitSubgroup trivial(std::shared_ptr<const GroupAlgebra> algebra);
  static UnitSubgroup generated_by(std::shared_ptr<const GroupAlgebra> algebra,
                                   std::span<const AlgebraElement> generators);
  // The set must be a subgroup of V(FG): throws NotAUnit or StructuralError.
  static UnitSubgroup from_elements(std::shared_ptr<const GroupAlgebra> algebra,
                                    std::vector<AlgebraElement> elements);

  const GroupAlgebra& algebra() const { return pc_.algebra(); }
  const std::shared_ptr<const GroupAlgebra>& algebra_ptr() const { return pc_.algebra_ptr(); }
  const std::vector<AlgebraElement>& generators() const { return generators_; }
  const PcSequence& pc() const { return pc_; }

  int order_log2() const { return pc_.order_log2(); }
  // Throws std::overflow_error past 2^63.
  std::uint64_t order() const;
  bool is_trivial() const { return pc_.is_trivial(); }
  bool contains(const AlgebraElement& x) const { return pc_.contains(x); }
  bool is_explicit() const { return elements_.has_value(); }

  // Sorted element list; enumerated from the pc sequence when the subgroup
  // was built from generators. Throws CapExceeded.
  std::vector<AlgebraElement> elements(std::uint64_t cap = kElementCap) const;
  // Same subgroup with the element list stored.
  UnitSubgroup materialized(std::uint64_t cap = kElementCap) const;

  // Setwise equality; exact via orders and membership of pivots.
  friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b);

 private:
  explicit UnitSubgroup(PcSequence pc) : pc_(std::move(pc)) {}

  PcSequence pc_;
  std::vector<AlgebraElement> generators_;
  std::optional<std::vector<AlgebraElement>> elements_;
};

UnitSubgroup subgroup_closure(std::shared_ptr<const GroupAlgebra> algebra,
                              std::span<const AlgebraElement> generators);
UnitSubgroup subgroup_product(const UnitSubgroup& a, const UnitSubgroup& b);
// Explicit: filters the smaller factor by membership in the other.
UnitSubgroup subgroup_intersection(const UnitSubgroup& a, const UnitSubgroup& b,
                                   std::uint64_t cap = kElementCap);
// log2 |A cap B| = log2 |A| + log2 |B| - log2 |AB|, for any size.
int intersection_order_log2(const UnitSubgroup& a, const UnitSubgroup& b);
// A^(2^i).
UnitSubgroup subgroup_power(const UnitSubgroup& a, int i);
// A[2] = {x in A : x^2 = 1}, by filtering the element list.
UnitSubgroup subgroup_torsion(const UnitSubgroup& a, std::uint64_t cap = kElementCap);
// log2 |A[2]| = log2 |A| - log2 |A^2|.
int torsion_order_log2(const UnitSubgroup& a);
bool is_subgroup_of(const UnitSubgroup& a, const UnitSubgroup& b);
bool is_elementary_abelian(const UnitSubgroup& a);

struct AbelianInvariants {
  std::vector<std::uint64_t> cyclic_orders;  // non-increasing

  // Number of cyclic factors of order exactly 2^j, j >= 1.
  std::vector<int> exact_counts() const;
  int order_log2() const;
  std::string to_string() const;  // "{4, 2, 2}", "{}" when trivial

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// From N_i = log2 |A^(2^i)|: there are (N_{j-1} - N_j) - (N_j - N_{j+1})
// factors of order exactly 2^j.
AbelianInvariants invariants(const UnitSubgroup& a);
// From f_j = log2 |A^(2^(j-1))[2]| - log2 |A^(2^j)[2]|, the number of factors
// of order exactly 2^j, with each torsion subgroup found by filtering.
AbelianInvariants invariants_by_torsion(const UnitSubgroup& a, std::uint64_t cap = kElementCap);
AbelianInvariants invariants_from_factor_orders(std::vector<std::uint64_t> orders);

}  // namespace f2units
