#include "f2units/unit_subgroup.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "f2units/errors.hpp"

namespace f2units {

namespace {

void check_same(const UnitSubgroup& a, const UnitSubgroup& b) {
  if (a.algebra().id() != b.algebra().id()) {
    throw AmbientMismatch("subgroups of different group algebras");
  }
}

}  // namespace

UnitSubgroup UnitSubgroup::trivial(std::shared_ptr<const GroupAlgebra> algebra) {
  UnitSubgroup out{PcSequence(std::move(algebra))};
  out.elements_ = std::vector<AlgebraElement>{out.algebra().one()};
  return out;
}

UnitSubgroup UnitSubgroup::generated_by(std::shared_ptr<const GroupAlgebra> algebra,
                                        std::span<const AlgebraElement> generators) {
  UnitSubgroup out{PcSequence(std::move(algebra))};
  out.pc_.insert_all(generators);
  out.generators_.assign(generators.begin(), generators.end());
  return out;
}

UnitSubgroup UnitSubgroup::from_elements(std::shared_ptr<const GroupAlgebra> algebra,
                                         std::vector<AlgebraElement> elements) {
  UnitSubgroup out{PcSequence(std::move(algebra))};
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw StructuralError("repeated element in subgroup element list");
  }
  for (const auto& x : elements) {
    if (out.pc_.insert(x)) out.generators_.push_back(x);
  }
  // S is contained in <S>, so equal sizes force S = <S>.
  if (out.pc_.order_log2() >= 63 || (std::uint64_t{1} << out.pc_.order_log2()) != elements.size()) {
    throw StructuralError("element set of size " + std::to_string(elements.size()) +
                          " is not closed under multiplication");
  }
  out.elements_ = std::move(elements);
  return out;
}

std::uint64_t UnitSubgroup::order() const {
  if (order_log2() >= 64) throw std::overflow_error("subgroup order exceeds 2^63");
  return std::uint64_t{1} << order_log2();
}

std::vector<AlgebraElement> UnitSubgroup::elements(std::uint64_t cap) const {
  if (elements_) return *elements_;
  return pc_.enumerate(cap);
}

UnitSubgroup UnitSubgroup::materialized(std::uint64_t cap) const {
  UnitSubgroup out = *this;
  if (!out.elements_) out.elements_ = pc_.enumerate(cap);
  return out;
}

bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) {
  check_same(a, b);
  if (a.order_log2() != b.order_log2()) return false;
  if (a.elements_ && b.elements_) return *a.elements_ == *b.elements_;
  for (const auto& p : b.pc().pivots()) {
    if (!a.contains(p)) return false;
  }
  return true;
}

UnitSubgroup subgroup_closure(std::shared_ptr<const GroupAlgebra> algebra,
                              std::span<const AlgebraElement> generators) {
  return UnitSubgroup::generated_by(std::move(algebra), generators);
}

UnitSubgroup subgroup_product(const UnitSubgroup& a, const UnitSubgroup& b) {
  check_same(a, b);
  std::vector<AlgebraElement> gens = a.pc().pivots();
  const auto more = b.pc().pivots();
  gens.insert(gens.end(), more.begin(), more.end());
  return UnitSubgroup::generated_by(a.algebra_ptr(), gens);
}

UnitSubgroup subgroup_intersection(const UnitSubgroup& a, const UnitSubgroup& b,
                                   std::uint64_t cap) {
  check_same(a, b);
  const UnitSubgroup& small = a.order_log2() <= b.order_log2() ? a : b;
  const UnitSubgroup& large = a.order_log2() <= b.order_log2() ? b : a;
  std::vector<AlgebraElement> kept;
  for (const auto& x : small.elements(cap)) {
    if (large.contains(x)) kept.push_back(x);
  }
  return UnitSubgroup::from_elements(a.algebra_ptr(), std::move(kept));
}

int intersection_order_log2(const UnitSubgroup& a, const UnitSubgroup& b) {
  check_same(a, b);
  return f2units::intersection_order_log2(a.pc(), b.pc());
}

UnitSubgroup subgroup_power(const UnitSubgroup& a, int i) {
  if (i < 0) throw PreconditionError("negative power index");
  PcSequence pc = a.pc();
  for (int k = 0; k < i; ++k) pc = pc.squares();
  return UnitSubgroup::generated_by(a.algebra_ptr(), pc.pivots());
}

UnitSubgroup subgroup_torsion(const UnitSubgroup& a, std::uint64_t cap) {
  const GroupAlgebra& alg = a.algebra();
  std::vector<AlgebraElement> kept;
  for (const auto& x : a.elements(cap)) {
    if (alg.square(x) == alg.one()) kept.push_back(x);
  }
  return UnitSubgroup::from_elements(a.algebra_ptr(), std::move(kept));
}

int torsion_order_log2(const UnitSubgroup& a) {
  return a.order_log2() - a.pc().squares().order_log2();
}

bool is_subgroup_of(const UnitSubgroup& a, const UnitSubgroup& b) {
  check_same(a, b);
  for (const auto& p : a.pc().pivots()) {
    if (!b.contains(p)) return false;
  }
  return true;
}

bool is_elementary_abelian(const UnitSubgroup& a) { return a.pc().is_elementary_abelian(); }

std::vector<int> AbelianInvariants::exact_counts() const {
  std::vector<int> counts;
  for (std::uint64_t q : cyclic_orders) {
    const auto j = static_cast<std::size_t>(std::countr_zero(q));
    if (counts.size() <= j) counts.resize(j + 1, 0);
    ++counts[j];
  }
  return counts;
}

int AbelianInvariants::order_log2() const {
  int n = 0;
  for (std::uint64_t q : cyclic_orders) n += std::countr_zero(q);
  return n;
}

std::string AbelianInvariants::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(cyclic_orders[i]);
  }
  return out + "}";
}

AbelianInvariants invariants_from_factor_orders(std::vector<std::uint64_t> orders) {
  std::erase(orders, std::uint64_t{1});
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return {std::move(orders)};
}

namespace {

// ge[j] = number of factors of order >= 2^j, for j >= 1.
AbelianInvariants from_at_least_counts(const std::vector<int>& ge) {
  std::vector<std::uint64_t> orders;
  for (std::size_t j = 1; j < ge.size(); ++j) {
    const int next = j + 1 < ge.size() ? ge[j + 1] : 0;
    const int exact = ge[j] - next;
    if (exact < 0) throw std::logic_error("negative invariant count");
    for (int k = 0; k < exact; ++k) orders.push_back(std::uint64_t{1} << j);
  }
  return invariants_from_factor_orders(std::move(orders));
}

}  // namespace

AbelianInvariants invariants(const UnitSubgroup& a) {
  std::vector<int> n{a.order_log2()};
  PcSequence pc = a.pc();
  while (!pc.is_trivial()) {
    pc = pc.squares();
    n.push_back(pc.order_log2());
  }
  // |A^(2^(j-1))| / |A^(2^j)| counts the factors of order >= 2^j.
  std::vector<int> ge(n.size(), 0);
  for (std::size_t j = 1; j < n.size(); ++j) ge[j] = n[j - 1] - n[j];
  AbelianInvariants inv = from_at_least_counts(ge);
  if (inv.order_log2() != a.order_log2()) throw std::logic_error("invariants do not multiply to |A|");
  return inv;
}

AbelianInvariants invariants_by_torsion(const UnitSubgroup& a, std::uint64_t cap) {
  std::vector<int> torsion_logs;
  UnitSubgroup power = a.materialized(cap);
  while (true) {
    torsion_logs.push_back(subgroup_torsion(power, cap).order_log2());
    if (power.is_trivial()) break;
    power = subgroup_power(power, 1).materialized(cap);
  }
  std::vector<int> ge(torsion_logs.size(), 0);
  for (std::size_t j = 1; j < torsion_logs.size(); ++j) {
    ge[j] = torsion_logs[j - 1] - torsion_logs[j];
  }
  std::vector<int> at_least(ge.size(), 0);
  for (std::size_t j = ge.size(); j-- > 1;) {
    at_least[j] = ge[j] + (j + 1 < ge.size() ? at_least[j + 1] : 0);
  }
  AbelianInvariants inv = from_at_least_counts(at_least);
  if (inv.order_log2() != a.order_log2()) throw std::logic_error("invariants do not multiply to |A|");
  return inv;
}

}  // namespace f2units
