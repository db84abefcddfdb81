#include <gtest/gtest.h>

#include <set>

#include "f2units/descriptor.hpp"
#include "f2units/errors.hpp"
#include "f2units/group.hpp"
#include "naive.hpp"

using namespace f2units;

namespace {

AbelianTwoGroup grp(std::vector<std::uint32_t> q) { return AbelianTwoGroup(std::move(q)); }

GroupElement el(const AbelianTwoGroup& g, std::vector<std::uint32_t> e) { return g.element(e); }

std::vector<std::vector<std::uint32_t>> sample_groups() {
  return {{2}, {4}, {8}, {16}, {4, 2}, {2, 4}, {2, 2, 2}, {8, 2}, {4, 4}, {2, 8, 4}, {32}};
}

}  // namespace

TEST(Group, MulExamples) {
  const auto c4 = grp({4});
  EXPECT_EQ(group_mul(c4, el(c4, {1}), el(c4, {3})), c4.identity());
  const auto c4c2 = grp({4, 2});
  EXPECT_EQ(group_mul(c4c2, el(c4c2, {1, 1}), el(c4c2, {3, 1})), el(c4c2, {0, 0}));
  const auto c8 = grp({8});
  EXPECT_EQ(group_mul(c8, el(c8, {3}), el(c8, {7})), el(c8, {2}));
}

TEST(Group, ElementOrderExamples) {
  const auto c8 = grp({8});
  EXPECT_EQ(element_order(c8, c8.identity()), 1u);
  EXPECT_EQ(element_order(c8, el(c8, {2})), 4u);
  const auto c4c2 = grp({4, 2});
  EXPECT_EQ(element_order(c4c2, el(c4c2, {2, 1})), 2u);
}

TEST(Group, RejectsBadOrders) {
  EXPECT_THROW(grp({3}), std::invalid_argument);
  EXPECT_THROW(grp({1}), std::invalid_argument);
  EXPECT_THROW(grp({4, 6}), std::invalid_argument);
  const auto c4 = grp({4});
  EXPECT_THROW(c4.mul({4}, {0}), StructuralError);
  const std::vector<std::uint32_t> arity{1, 1};
  EXPECT_THROW(c4.element(arity), StructuralError);
}

TEST(Group, IndexMatchesNaiveMixedRadix) {
  for (const auto& q : sample_groups()) {
    const auto g = grp(q);
    const naive::Group ng{q};
    ASSERT_EQ(g.order(), ng.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      EXPECT_EQ(g.exponents({i}), ng.tuple(i));
      for (std::uint32_t j = 0; j < g.order(); j += 3) {
        EXPECT_EQ(g.mul({i}, {j}).index, ng.mul(i, j));
      }
      EXPECT_EQ(g.element_order({i}), ng.order_of(i));
      EXPECT_EQ(g.mul({i}, g.inverse({i})), g.identity());
    }
  }
}

TEST(Group, EtaExamples) {
  const auto c4 = grp({4});
  EXPECT_EQ(apply_eta(Involution::canonical(c4), el(c4, {1})), el(c4, {3}));
  const auto c4c2 = grp({4, 2});
  const auto id = Involution::identity(c4c2);
  for (std::uint32_t i = 0; i < c4c2.order(); ++i) EXPECT_EQ(id.apply({i}), GroupElement{i});
  const auto h1 = Involution::canonicalized(c4c2, {0});
  EXPECT_EQ(h1.apply(el(c4c2, {1, 1})), el(c4c2, {3, 1}));
}

TEST(Group, EtaIsAnInvolutoryAutomorphism) {
  for (const auto& q : sample_groups()) {
    const auto g = grp(q);
    for (std::uint32_t mask = 0; mask < (1u << g.rank()); ++mask) {
      std::vector<std::size_t> raw;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        if ((mask >> i) & 1) raw.push_back(i);
      }
      const auto inv = Involution::canonicalized(g, raw);
      const naive::Group ng{q};
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        EXPECT_EQ(inv.apply({x}).index, ng.eta(x, raw));
        EXPECT_EQ(inv.apply(inv.apply({x})), GroupElement{x});
        const GroupElement y{(x * 7 + 3) % g.order()};
        EXPECT_EQ(inv.apply(g.mul({x}, y)), g.mul(inv.apply({x}), inv.apply(y)));
      }
    }
  }
}

TEST(Group, Canonicalization) {
  const auto c2 = grp({2});
  auto inv = canonicalize_involution(c2, {0});
  EXPECT_TRUE(inv.h_block().empty());
  EXPECT_EQ(inv.d_block(), std::vector<std::size_t>{0});

  const auto c2c4 = grp({2, 4});
  inv = canonicalize_involution(c2c4, {0, 1});
  EXPECT_EQ(inv.h_block(), std::vector<std::size_t>{1});
  EXPECT_EQ(inv.d_block(), std::vector<std::size_t>{0});

  const auto c4 = grp({4});
  inv = canonicalize_involution(c4, {0});
  EXPECT_EQ(inv.h_block(), std::vector<std::size_t>{0});
  EXPECT_EQ(inv.d1_block(), std::vector<std::size_t>{0});
  EXPECT_TRUE(inv.h1_block().empty());

  const auto raw = Involution::uncanonicalized(c2c4, {0, 1});
  const auto canon = canonicalize_involution(c2c4, {0, 1});
  EXPECT_EQ(raw.h_block(), (std::vector<std::size_t>{0, 1}));
  for (std::uint32_t x = 0; x < c2c4.order(); ++x) EXPECT_EQ(raw.apply({x}), canon.apply({x}));
}

TEST(Group, FixedSubgroup) {
  const auto c4 = grp({4});
  const auto f = fixed_subgroup(Involution::canonical(c4));
  EXPECT_EQ(f, SubgroupOfG::from_elements(c4, {el(c4, {0}), el(c4, {2})}));
  const auto c4c2 = grp({4, 2});
  EXPECT_EQ(fixed_subgroup(Involution::identity(c4c2)), SubgroupOfG::whole(c4c2));
  const std::vector<GroupElement> expected{el(c4c2, {0, 0}), el(c4c2, {2, 0}), el(c4c2, {0, 1}),
                                           el(c4c2, {2, 1})};
  EXPECT_EQ(fixed_subgroup(Involution::canonicalized(c4c2, {0})),
            SubgroupOfG::from_elements(c4c2, expected));
}

TEST(Group, TorsionAndPowerSubgroups) {
  const auto c4c2 = grp({4, 2});
  const auto g = SubgroupOfG::whole(c4c2);
  EXPECT_EQ(torsion_subgroup(g, 1).order(), 4u);
  EXPECT_EQ(power_subgroup(g, 1).order(), 2u);
  const auto e = grp({2, 2, 2});
  EXPECT_EQ(torsion_subgroup(SubgroupOfG::whole(e), 1), SubgroupOfG::whole(e));
  const auto c4c8 = grp({4, 8});
  EXPECT_EQ(torsion_subgroup(SubgroupOfG::whole(c4c8), 1).order(), 4u);
  const auto c8 = grp({8});
  EXPECT_EQ(power_subgroup(SubgroupOfG::whole(c8), 1).order(), 4u);
  for (const auto& q : sample_groups()) {
    const auto gg = grp(q);
    EXPECT_EQ(power_subgroup(SubgroupOfG::whole(gg), gg.exponent_log()).order(), 1u);
    // |K[2]| |K^2| = |K| for a finite abelian group.
    const auto w = SubgroupOfG::whole(gg);
    EXPECT_EQ(torsion_subgroup(w, 1).order() * power_subgroup(w, 1).order(), gg.order());
  }
}

TEST(Group, SubgroupValidation) {
  const auto c4 = grp({4});
  EXPECT_THROW(SubgroupOfG::from_elements(c4, {el(c4, {0}), el(c4, {1})}), StructuralError);
}

TEST(Group, LeftTransversal) {
  const auto c4 = grp({4});
  const auto whole = SubgroupOfG::whole(c4);
  EXPECT_EQ(left_transversal(c4, whole), std::vector<GroupElement>{c4.identity()});
  EXPECT_EQ(left_transversal(c4, SubgroupOfG::trivial(c4)).size(), 4u);
  const auto h = SubgroupOfG::from_elements(c4, {el(c4, {0}), el(c4, {2})});
  EXPECT_EQ(left_transversal(c4, h), (std::vector<GroupElement>{el(c4, {0}), el(c4, {1})}));
  EXPECT_THROW(left_transversal(h, whole), StructuralError);
}

TEST(Group, XiSetExamples) {
  const auto c4c2 = grp({4, 2});
  auto xi = xi_sets(Involution::canonicalized(c4c2, {0}));
  EXPECT_EQ(xi.xi, 2u);
  EXPECT_EQ(xi.xi0, 2u);
  EXPECT_EQ(xi.orbits, 0u);

  const auto c8 = grp({8});
  xi = xi_sets(Involution::canonical(c8));
  EXPECT_EQ(xi.xi, 3u);
  EXPECT_EQ(xi.xi0, 1u);
  EXPECT_EQ(xi.xi1, 2u);
  EXPECT_EQ(xi.orbits, 1u);

  xi = xi_sets(Involution::identity(c8));
  EXPECT_EQ(xi.xi + xi.xi0 + xi.xi1 + xi.orbits, 0u);
}

TEST(Group, XiSetsAgainstNaiveScan) {
  for (const auto& q : sample_groups()) {
    const auto g = grp(q);
    const naive::Group ng{q};
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < q.size(); ++i) all.push_back(i);
    const auto xi = xi_sets(Involution::canonicalized(g, all));
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::size_t xi0 = 0;
    for (std::uint32_t x = 0; x < ng.order(); ++x) {
      const std::uint32_t y = ng.eta(x, all);
      if (x < y) {
        pairs.insert({x, y});
        if (ng.mul(x, x) == ng.mul(y, y)) ++xi0;
      }
    }
    EXPECT_EQ(xi.xi, pairs.size()) << g.to_string();
    EXPECT_EQ(xi.xi0, xi0) << g.to_string();
    EXPECT_EQ(xi.xi1, pairs.size() - xi0) << g.to_string();
  }
}

TEST(Group, QuotientExamples) {
  const auto c4c2 = grp({4, 2});
  EXPECT_EQ(quotient_group(c4c2, SubgroupOfG::trivial(c4c2)).group, c4c2);
  const auto c4 = grp({4});
  const auto h = SubgroupOfG::from_elements(c4, {el(c4, {0}), el(c4, {2})});
  EXPECT_EQ(quotient_group(c4, h).group, grp({2}));
  const std::vector<GroupElement> gen{el(c4c2, {0, 1})};
  const auto q = quotient_group(c4c2, SubgroupOfG::generated_by(c4c2, gen));
  EXPECT_EQ(q.group, grp({4}));
  EXPECT_EQ(q.projection.size(), 8u);
}

TEST(Descriptor, ParseAndFormat) {
  auto d = parse_descriptor("4x2:inv=1");
  EXPECT_EQ(d.group, grp({4, 2}));
  EXPECT_EQ(d.raw_inverted, std::vector<std::size_t>{0});
  d = parse_descriptor("4x2");
  EXPECT_EQ(d.raw_inverted, (std::vector<std::size_t>{0, 1}));
  d = parse_descriptor("4x2:inv=");
  EXPECT_TRUE(d.raw_inverted.empty());
  d = parse_descriptor("1");
  EXPECT_EQ(d.group.order(), 1u);
  for (const char* bad : {"", "3", "4x", "4:inv=3", "4:foo=1", "4x2:inv=a", "x4"}) {
    EXPECT_THROW(parse_descriptor(bad), ParseError) << bad;
  }
}

TEST(Descriptor, RoundTrip) {
  for (const char* text : {"4x2:inv=1", "2x4:inv=1,2", "8:inv=", "1:inv=", "2x2x2x2:inv=2,4",
                           "32:inv=1", "16x2x2:inv=3"}) {
    const auto d = parse_descriptor(text);
    EXPECT_EQ(format_descriptor(d), text);
    EXPECT_EQ(parse_descriptor(format_descriptor(d)), d);
  }
}
