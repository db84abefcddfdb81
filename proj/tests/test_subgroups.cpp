#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <set>

#include "f2units/errors.hpp"
#include "f2units/pc_sequence.hpp"
#include "f2units/unit_subgroup.hpp"
#include "naive.hpp"

using namespace f2units;

namespace {

std::shared_ptr<const GroupAlgebra> algebra(std::vector<std::uint32_t> q) {
  return std::make_shared<const GroupAlgebra>(AbelianTwoGroup(std::move(q)));
}

std::vector<AlgebraElement> random_units(const GroupAlgebra& alg, std::mt19937_64& rng, int n) {
  std::vector<AlgebraElement> out;
  while (static_cast<int>(out.size()) < n) {
    const auto x = alg.from_bits(rng() & alg.full_mask());
    if (alg.is_unit(x)) out.push_back(x);
  }
  return out;
}

std::set<std::uint64_t> bitset_of(const std::vector<AlgebraElement>& xs) {
  std::set<std::uint64_t> s;
  for (const auto& x : xs) s.insert(x.bits());
  return s;
}

}  // namespace

TEST(PcSequence, OrderAndMembershipMatchBreadthFirstClosure) {
  std::mt19937_64 rng(21);
  for (const auto& q : std::vector<std::vector<std::uint32_t>>{{4}, {8}, {4, 2}, {2, 2, 2}, {16}, {4, 4}, {8, 2}}) {
    const auto alg = algebra(q);
    const naive::Group ng{q};
    for (int t = 0; t < 15; ++t) {
      const auto gens = random_units(*alg, rng, 1 + static_cast<int>(rng() % 3));
      std::vector<std::uint64_t> gb;
      for (const auto& g : gens) gb.push_back(g.bits());
      const auto expected = naive::closure(ng, gb);
      const auto sub = UnitSubgroup::generated_by(alg, gens);
      ASSERT_EQ(sub.order(), expected.size());
      EXPECT_EQ(bitset_of(sub.elements()), expected);
      for (int k = 0; k < 30; ++k) {
        const auto x = random_units(*alg, rng, 1)[0];
        EXPECT_EQ(sub.contains(x), expected.count(x.bits()) == 1);
      }
    }
  }
}

TEST(PcSequence, RejectsNonUnits) {
  const auto alg = algebra({4});
  PcSequence pc(alg);
  EXPECT_THROW(pc.insert(alg->parse("1 + a1")), NotAUnit);
  EXPECT_FALSE(pc.insert(alg->one()));
  EXPECT_TRUE(pc.is_trivial());
}

TEST(PcSequence, EnumerationCap) {
  const auto alg = algebra({8, 2});
  PcSequence pc(alg);
  const auto g = UnitSubgroup::generated_by(alg, std::vector<AlgebraElement>{alg->parse("a1"), alg->parse("a2")});
  for (const auto& x : g.generators()) pc.insert(x);
  EXPECT_EQ(pc.order_log2(), 4);
  EXPECT_THROW(pc.enumerate(8), CapExceeded);
  EXPECT_EQ(pc.enumerate(16).size(), 16u);
}

TEST(UnitSubgroup, BasicExamples) {
  const auto alg = algebra({4});
  const auto triv = UnitSubgroup::trivial(alg);
  const auto v = UnitSubgroup::generated_by(alg, std::vector<AlgebraElement>{alg->parse("a1"), alg->parse("a1 + a1^2 + a1^3")});
  EXPECT_EQ(v.order(), 8u);
  EXPECT_TRUE(subgroup_intersection(triv, v).is_trivial());
  const auto a = subgroup_closure(alg, std::vector<AlgebraElement>{alg->parse("a1")});
  const std::vector<AlgebraElement> expected{alg->one(), alg->parse("a1"), alg->parse("a1^2"), alg->parse("a1^3")};
  EXPECT_EQ(bitset_of(a.elements()), bitset_of(expected));
  EXPECT_EQ(subgroup_power(v, 1).order(), 2u);
  EXPECT_EQ(invariants(v).to_string(), "{4, 2}");
  EXPECT_EQ(invariants(triv).to_string(), "{}");
}

TEST(UnitSubgroup, FromElementsValidates) {
  const auto alg = algebra({4});
  EXPECT_NO_THROW(UnitSubgroup::from_elements(alg, {alg->one(), alg->parse("a1^2")}));
  EXPECT_THROW(UnitSubgroup::from_elements(alg, {alg->one(), alg->parse("a1")}), StructuralError);
  EXPECT_THROW(UnitSubgroup::from_elements(alg, {alg->one(), alg->parse("1 + a1")}), NotAUnit);
  const auto other = algebra({2, 2});
  const auto a = UnitSubgroup::generated_by(alg, std::vector<AlgebraElement>{alg->parse("a1")});
  const auto b = UnitSubgroup::generated_by(other, std::vector<AlgebraElement>{other->parse("a1")});
  EXPECT_THROW(subgroup_product(a, b), AmbientMismatch);
}

TEST(UnitSubgroup, ProductIntersectionTorsionAgainstSets) {
  std::mt19937_64 rng(5);
  for (const auto& q : std::vector<std::vector<std::uint32_t>>{{8}, {4, 2}, {16}, {4, 4}, {4, 2, 2}}) {
    const auto alg = algebra(q);
    const naive::Group ng{q};
    for (int t = 0; t < 10; ++t) {
      const auto a = UnitSubgroup::generated_by(alg, random_units(*alg, rng, 2));
      const auto b = UnitSubgroup::generated_by(alg, random_units(*alg, rng, 2));
      const auto sa = bitset_of(a.elements()), sb = bitset_of(b.elements());
      std::set<std::uint64_t> meet, prod, tors, squares;
      for (auto x : sa) {
        if (sb.count(x)) meet.insert(x);
        for (auto y : sb) prod.insert(naive::mul_bits(ng, x, y));
        if (naive::mul_bits(ng, x, x) == 1) tors.insert(x);
        squares.insert(naive::mul_bits(ng, x, x));
      }
      EXPECT_EQ(bitset_of(subgroup_intersection(a, b).elements()), meet);
      EXPECT_EQ(std::uint64_t{1} << intersection_order_log2(a, b), meet.size());
      EXPECT_EQ(bitset_of(subgroup_product(a, b).elements()), prod);
      EXPECT_EQ(bitset_of(subgroup_torsion(a).elements()), tors);
      EXPECT_EQ(std::uint64_t{1} << torsion_order_log2(a), tors.size());
      EXPECT_EQ(bitset_of(subgroup_power(a, 1).elements()), squares);
      EXPECT_EQ(is_subgroup_of(subgroup_intersection(a, b), a), true);
      EXPECT_EQ(a == subgroup_product(a, subgroup_intersection(a, b)), true);
    }
  }
}

TEST(UnitSubgroup, InvariantRoutesAgreeWithElementOrderCount) {
  std::mt19937_64 rng(9);
  for (const auto& q : std::vector<std::vector<std::uint32_t>>{{8}, {4, 2}, {16}, {8, 2}, {4, 4}, {2, 2, 2, 2}}) {
    const auto alg = algebra(q);
    const naive::Group ng{q};
    for (int t = 0; t < 8; ++t) {
      const auto a = UnitSubgroup::generated_by(alg, random_units(*alg, rng, 1 + static_cast<int>(rng() % 4)));
      const auto by_powers = invariants(a);
      EXPECT_EQ(by_powers, invariants_by_torsion(a));
      EXPECT_EQ(by_powers.cyclic_orders, naive::invariants(ng, bitset_of(a.elements())));
      EXPECT_EQ(by_powers.order_log2(), a.order_log2());
    }
  }
}

TEST(AbelianInvariants, FromFactorOrders) {
  const auto inv = invariants_from_factor_orders({2, 4, 2, 8});
  EXPECT_EQ(inv.to_string(), "{8, 4, 2, 2}");
  EXPECT_EQ(inv.order_log2(), 7);
  EXPECT_EQ(inv.exact_counts(), (std::vector<int>{0, 2, 1, 1}));
}
