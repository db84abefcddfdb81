#include "f2units/pc_sequence.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "f2units/errors.hpp"

namespace f2units {

PcSequence::PcSequence(std::shared_ptr<const GroupAlgebra> algebra)
    : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("null group algebra");
}

std::uint64_t PcSequence::leading_vector(const AlgebraElement& x) const {
  const std::uint64_t coords = algebra_->monomial_coordinates(algebra_->add(x, algebra_->one()));
  if (!coords) return 0;
  int depth = algebra_->max_degree() + 1;
  for (std::uint64_t c = coords; c; c &= c - 1) {
    depth = std::min(depth, algebra_->monomial_degree(static_cast<std::uint32_t>(std::countr_zero(c))));
  }
  return coords & ~algebra_->degree_mask(depth + 1);
}

std::pair<AlgebraElement, std::uint64_t> PcSequence::sift(AlgebraElement x) const {
  std::uint64_t lead = leading_vector(x);
  while (lead) {
    const int low = std::countr_zero(lead);
    if (!pivot_lead_[low]) break;
    x = algebra_->mul(x, pivot_unit_[low]);
    lead ^= pivot_lead_[low];
    // Once this layer is cleared, x has moved to a deeper layer.
    if (!lead) lead = leading_vector(x);
  }
  return {x, lead};
}

bool PcSequence::insert(const AlgebraElement& x) {
  if (!algebra_->is_unit(x)) throw NotAUnit("cannot insert a non-unit: " + algebra_->to_string(x));
  bool grew = false;
  std::deque<AlgebraElement> queue{x};
  while (!queue.empty()) {
    const AlgebraElement y = queue.front();
    queue.pop_front();
    const auto [residue, lead] = sift(y);
    if (!lead) continue;
    const int bit = std::countr_zero(lead);
    pivot_unit_[bit] = residue;
    pivot_lead_[bit] = lead;
    pivot_bits_.insert(std::upper_bound(pivot_bits_.begin(), pivot_bits_.end(), bit), bit);
    queue.push_back(algebra_->square(residue));
    grew = true;
  }
  return grew;
}

void PcSequence::insert_all(std::span<const AlgebraElement> xs) {
  for (const auto& x : xs) insert(x);
}

bool PcSequence::contains(const AlgebraElement& x) const {
  algebra_->check(x);
  if (!algebra_->is_unit(x)) return false;
  return sift(x).second == 0;
}

std::vector<AlgebraElement> PcSequence::pivots() const {
  std::vector<AlgebraElement> out;
  out.reserve(pivot_bits_.size());
  for (int b : pivot_bits_) out.push_back(pivot_unit_[b]);
  return out;
}

std::vector<AlgebraElement> PcSequence::enumerate(std::uint64_t cap) const {
  const int n = order_log2();
  if (n >= 63 || (1ull << n) > cap) {
    throw CapExceeded("subgroup of order 2^" + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  const auto ps = pivots();
  std::vector<AlgebraElement> out;
  out.reserve(1ull << n);
  AlgebraElement cur = algebra_->one();
  out.push_back(cur);
  // Gray code: step i toggles pivot ctz(i); removing p is multiplying by p^-1.
  for (std::uint64_t i = 1; i < (1ull << n); ++i) {
    const int j = std::countr_zero(i);
    const bool adding = ((i ^ (i >> 1)) >> j) & 1;
    cur = algebra_->mul(cur, adding ? ps[j] : algebra_->unit_inverse(ps[j]));
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PcSequence::is_elementary_abelian() const {
  for (int b : pivot_bits_) {
    if (algebra_->square(pivot_unit_[b]) != algebra_->one()) return false;
  }
  return true;
}

PcSequence PcSequence::squares() const {
  PcSequence out(algebra_);
  for (int b : pivot_bits_) out.insert(algebra_->square(pivot_unit_[b]));
  return out;
}

int product_order_log2(const PcSequence& a, const PcSequence& b) {
  if (a.algebra().id() != b.algebra().id()) throw AmbientMismatch("subgroups of different algebras");
  PcSequence ab = a;
  ab.insert_all(b.pivots());
  return ab.order_log2();
}

int intersection_order_log2(const PcSequence& a, const PcSequence& b) {
  return a.order_log2() + b.order_log2() - product_order_log2(a, b);
}

}  // namespace f2units
