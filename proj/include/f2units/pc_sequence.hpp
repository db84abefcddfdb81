#pragma once

// Exact order and membership for subgroups of V(FG) given by generators.
//
// Units are filtered by the powers of the augmentation ideal I. The degree-k
// part of u - 1 is additive on 1 + I^k modulo 1 + I^(k+1), so each layer of
// the filtration is an F2-vector space sitting inside the span of the
// degree-k monomials. The sequence keeps one unit per pivot monomial, in
// echelon form with respect to these leading vectors. Every element of the
// generated subgroup is then a unique product of a subset of the pivots, and
// the order is 2^(number of pivots).

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "f2units/algebra.hpp"

namespace f2units {

class PcSequence {
 public:
  explicit PcSequence(std::shared_ptr<const GroupAlgebra> algebra);

  const GroupAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GroupAlgebra>& algebra_ptr() const { return algebra_; }

  // Extends the subgroup by x; returns true when it grew. Throws NotAUnit.
  bool insert(const AlgebraElement& x);
  void insert_all(std::span<const AlgebraElement> xs);

  bool contains(const AlgebraElement& x) const;
  int order_log2() const { return static_cast<int>(pivot_bits_.size()); }

  // Pivot units ordered by pivot monomial index.
  std::vector<AlgebraElement> pivots() const;
  // Every element once; throws CapExceeded when the order exceeds cap.
  std::vector<AlgebraElement> enumerate(std::uint64_t cap) const;

  bool is_trivial() const { return pivot_bits_.empty(); }
  bool is_elementary_abelian() const;

  // Subgroup of squares {x^2}.
  PcSequence squares() const;

 private:
  // Reduces x against the pivots; returns the residue (one() when x is in
  // the subgroup) and its reduced leading vector.
  std::pair<AlgebraElement, std::uint64_t> sift(AlgebraElement x) const;
  std::uint64_t leading_vector(const AlgebraElement& x) const;

  std::shared_ptr<const GroupAlgebra> algebra_;
  AlgebraElement pivot_unit_[64];
  std::uint64_t pivot_lead_[64] = {};
  std::vector<int> pivot_bits_;
};

// log2 of |A B| and |A cap B| for subgroups of the same V(FG).
int product_order_log2(const PcSequence& a, const PcSequence& b);
int intersection_order_log2(const PcSequence& a, const PcSequence& b);

}  // namespace f2units
