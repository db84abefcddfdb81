#include <gtest/gtest.h>

#include <random>

#include "f2units/algebra.hpp"
#include "f2units/errors.hpp"
#include "naive.hpp"

using namespace f2units;

namespace {

struct Ctx {
  AbelianTwoGroup g;
  GroupAlgebra alg;
  naive::Group ng;

  explicit Ctx(std::vector<std::uint32_t> q) : g(q), alg(g), ng{q} {}

  AlgebraElement x(std::uint64_t bits) const { return alg.from_bits(bits); }
  AlgebraElement parse(const char* s) const { return alg.parse(s); }
};

std::uint64_t random_bits(std::mt19937_64& rng, const GroupAlgebra& alg) { return rng() & alg.full_mask(); }

const std::vector<std::vector<std::uint32_t>> kSmall = {{2}, {4}, {2, 2}, {8}, {4, 2}, {2, 2, 2}};
const std::vector<std::vector<std::uint32_t>> kMedium = {{16}, {8, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}};
const std::vector<std::vector<std::uint32_t>> kLarge = {{32}, {8, 4}, {4, 2, 2, 2}, {16, 4}, {2, 2, 2, 2, 2, 2}};

}  // namespace

TEST(Algebra, AddExamples) {
  const Ctx c({4});
  const auto x = c.parse("1 + a1^2 + a1");
  EXPECT_EQ(c.alg.add(x, c.alg.zero()), x);
  EXPECT_EQ(c.alg.add(x, x), c.alg.zero());
  EXPECT_EQ(c.alg.add(c.parse("1 + a1"), c.parse("a1 + a1^2")), c.parse("1 + a1^2"));
}

TEST(Algebra, MulExamples) {
  const Ctx c({4});
  const auto x = c.parse("a1 + a1^3");
  EXPECT_EQ(c.alg.mul(c.alg.one(), x), x);
  EXPECT_EQ(c.alg.mul(c.parse("a1"), c.parse("a1^3")), c.alg.one());
  EXPECT_EQ(c.alg.mul(c.parse("1 + a1"), c.parse("1 + a1")), c.parse("1 + a1^2"));
  EXPECT_EQ(c.alg.square(c.parse("1 + a1")), c.parse("1 + a1^2"));
  EXPECT_EQ(c.alg.square(c.parse("a1 + a1^3")), c.alg.zero());
}

TEST(Algebra, UnitInverseAndEtaExamples) {
  const Ctx c({4});
  EXPECT_EQ(c.alg.unit_inverse(c.parse("a1")), c.parse("a1^3"));
  const auto u3 = c.parse("a1 + a1^2 + a1^3");
  EXPECT_EQ(c.alg.unit_inverse(u3), u3);
  EXPECT_EQ(c.alg.unit_inverse(c.alg.one()), c.alg.one());
  EXPECT_THROW(c.alg.unit_inverse(c.parse("1 + a1")), NotAUnit);

  const auto canonical = Involution::canonical(c.g);
  EXPECT_EQ(c.alg.eta(c.parse("a1"), canonical), c.parse("a1^3"));
  const auto sym = c.parse("1 + a1 + a1^3");
  EXPECT_EQ(c.alg.eta(sym, canonical), sym);
  EXPECT_EQ(c.alg.eta(sym, Involution::identity(c.g)), sym);
}

TEST(Algebra, MultiplicationMatchesNaiveConvolution) {
  std::mt19937_64 rng(11);
  for (const auto& groups : {kSmall, kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      for (int t = 0; t < 300; ++t) {
        const std::uint64_t a = random_bits(rng, c.alg), b = random_bits(rng, c.alg);
        EXPECT_EQ(c.alg.mul(c.x(a), c.x(b)).bits(), naive::mul_bits(c.ng, a, b)) << c.g.to_string();
        EXPECT_EQ(c.alg.square(c.x(a)).bits(), naive::mul_bits(c.ng, a, a));
      }
    }
  }
}

TEST(Algebra, RingAxiomsExhaustiveUpToOrder4) {
  for (const auto& q : std::vector<std::vector<std::uint32_t>>{{2}, {4}, {2, 2}}) {
    const Ctx c(q);
    const std::uint64_t n = std::uint64_t{1} << c.g.order();
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        const auto x = c.x(a), y = c.x(b);
        EXPECT_EQ(c.alg.mul(x, y), c.alg.mul(y, x));
        for (std::uint64_t d = 0; d < n; ++d) {
          const auto z = c.x(d);
          EXPECT_EQ(c.alg.mul(c.alg.mul(x, y), z), c.alg.mul(x, c.alg.mul(y, z)));
          EXPECT_EQ(c.alg.mul(x, c.alg.add(y, z)), c.alg.add(c.alg.mul(x, y), c.alg.mul(x, z)));
        }
      }
    }
  }
}

TEST(Algebra, RingAxiomsOrder8PairsAndSampledTriples) {
  std::mt19937_64 rng(8);
  for (const auto& q : std::vector<std::vector<std::uint32_t>>{{8}, {4, 2}, {2, 2, 2}}) {
    const Ctx c(q);
    for (std::uint64_t a = 0; a < 256; ++a) {
      for (std::uint64_t b = a; b < 256; b += 5) {
        EXPECT_EQ(c.alg.mul(c.x(a), c.x(b)), c.alg.mul(c.x(b), c.x(a)));
      }
    }
    for (int t = 0; t < 2000; ++t) {
      const auto x = c.x(rng() & 255), y = c.x(rng() & 255), z = c.x(rng() & 255);
      EXPECT_EQ(c.alg.mul(c.alg.mul(x, y), z), c.alg.mul(x, c.alg.mul(y, z)));
      EXPECT_EQ(c.alg.mul(x, c.alg.add(y, z)), c.alg.add(c.alg.mul(x, y), c.alg.mul(x, z)));
    }
  }
}

TEST(Algebra, SampledAxiomsOrder16And32) {
  std::mt19937_64 rng(16);
  for (const auto& groups : {kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      for (int t = 0; t < 200; ++t) {
        const auto x = c.x(random_bits(rng, c.alg)), y = c.x(random_bits(rng, c.alg)),
                   z = c.x(random_bits(rng, c.alg));
        EXPECT_EQ(c.alg.mul(x, y), c.alg.mul(y, x));
        EXPECT_EQ(c.alg.mul(c.alg.mul(x, y), z), c.alg.mul(x, c.alg.mul(y, z)));
        EXPECT_EQ(c.alg.mul(x, c.alg.add(y, z)), c.alg.add(c.alg.mul(x, y), c.alg.mul(x, z)));
        EXPECT_EQ(c.alg.mul(c.alg.one(), x), x);
      }
    }
  }
}

TEST(Algebra, FrobeniusAndUnitProperties) {
  std::mt19937_64 rng(2);
  for (const auto& groups : {kSmall, kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      for (int t = 0; t < 100; ++t) {
        const auto x = c.x(random_bits(rng, c.alg)), y = c.x(random_bits(rng, c.alg));
        EXPECT_EQ(c.alg.square(c.alg.add(x, y)), c.alg.add(c.alg.square(x), c.alg.square(y)));
        EXPECT_EQ(c.alg.augmentation(c.alg.square(x)), c.alg.augmentation(x));
        if (c.alg.is_unit(x)) {
          EXPECT_EQ(c.alg.pow(x, c.g.exponent()), c.alg.one());
          EXPECT_EQ(c.alg.mul(x, c.alg.unit_inverse(x)), c.alg.one());
          if (c.g.order() <= 8) {
            EXPECT_EQ(c.alg.unit_inverse(x).bits(), naive::inverse_bits(c.ng, x.bits()));
          }
        } else {
          EXPECT_EQ(c.alg.pow(x, c.g.exponent()), c.alg.zero());
        }
      }
    }
  }
}

TEST(Algebra, EtaIsAnInvolutoryRingAutomorphism) {
  std::mt19937_64 rng(3);
  for (const auto& groups : {kSmall, kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      for (std::uint32_t mask = 0; mask < (1u << q.size()); ++mask) {
        std::vector<std::size_t> raw;
        for (std::size_t i = 0; i < q.size(); ++i) {
          if ((mask >> i) & 1) raw.push_back(i);
        }
        const auto inv = Involution::canonicalized(c.g, raw);
        for (int t = 0; t < 20; ++t) {
          const auto x = c.x(random_bits(rng, c.alg)), y = c.x(random_bits(rng, c.alg));
          EXPECT_EQ(c.alg.eta(c.alg.eta(x, inv), inv), x);
          EXPECT_EQ(c.alg.eta(c.alg.mul(x, y), inv), c.alg.mul(c.alg.eta(x, inv), c.alg.eta(y, inv)));
          EXPECT_EQ(c.alg.eta(x, inv).bits(), naive::eta_bits(c.ng, x.bits(), raw));
        }
      }
    }
  }
}

TEST(Algebra, AmbientMismatchIsRejected) {
  const Ctx a({4}), b({2, 2});
  EXPECT_THROW(a.alg.add(a.alg.one(), b.alg.one()), AmbientMismatch);
  EXPECT_THROW(a.alg.mul(a.alg.one(), b.alg.one()), AmbientMismatch);
  EXPECT_THROW(a.alg.eta(a.alg.one(), Involution::canonical(b.g)), AmbientMismatch);
  EXPECT_THROW(a.alg.from_bits(1u << 4), StructuralError);
  EXPECT_THROW(GroupAlgebra(AbelianTwoGroup({128})), std::invalid_argument);
}

TEST(Algebra, HatAndIdealBasis) {
  const Ctx c({4});
  const auto g = SubgroupOfG::whole(c.g);
  EXPECT_EQ(c.alg.hat(SubgroupOfG::trivial(c.g)), c.alg.one());
  const auto g2 = torsion_subgroup(g, 1);
  const auto hat2 = c.alg.hat(g2);
  EXPECT_EQ(c.alg.mul(hat2, hat2), c.alg.zero());
  const auto basis = c.alg.ideal_basis(g2);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], c.parse("1 + a1^2"));
  EXPECT_EQ(basis[1], c.parse("a1 + a1^3"));
  EXPECT_TRUE(c.alg.ideal_basis(SubgroupOfG::trivial(c.g)).empty());
}

TEST(Algebra, IdealBasisRankIsOrderMinusSquares) {
  for (const auto& groups : {kSmall, kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      const auto g = SubgroupOfG::whole(c.g);
      const auto basis = c.alg.ideal_basis(torsion_subgroup(g, 1));
      EXPECT_EQ(f2_rank(basis), c.g.order() - power_subgroup(g, 1).order()) << c.g.to_string();
    }
  }
}

TEST(Algebra, MonomialCoordinatesRoundTripAndFiltration) {
  std::mt19937_64 rng(5);
  for (const auto& groups : {kSmall, kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      for (int t = 0; t < 50; ++t) {
        const auto x = c.x(random_bits(rng, c.alg));
        EXPECT_EQ(c.alg.from_monomial_coordinates(c.alg.monomial_coordinates(x)), x);
      }
      // Monomial e is prod (a_i - 1)^{e_i}, computed here by multiplication.
      for (std::uint32_t e = 0; e < c.g.order(); ++e) {
        AlgebraElement m = c.alg.one();
        for (std::size_t i = 0; i < c.g.rank(); ++i) {
          const auto ai1 = c.alg.add(c.alg.element(c.g.generator(i)), c.alg.one());
          m = c.alg.mul(m, c.alg.pow(ai1, c.g.exponent_at({e}, i)));
        }
        EXPECT_EQ(c.alg.monomial_coordinates(m), std::uint64_t{1} << e);
      }
      // Products of I^j and I^k land in I^(j+k).
      for (int t = 0; t < 50; ++t) {
        const int j = static_cast<int>(rng() % 3) + 1, k = static_cast<int>(rng() % 3) + 1;
        const auto x = c.alg.from_monomial_coordinates(random_bits(rng, c.alg) & c.alg.degree_mask(j));
        const auto y = c.alg.from_monomial_coordinates(random_bits(rng, c.alg) & c.alg.degree_mask(k));
        const std::uint64_t prod = c.alg.monomial_coordinates(c.alg.mul(x, y));
        EXPECT_EQ(prod & ~c.alg.degree_mask(j + k), 0u);
      }
    }
  }
}

TEST(Algebra, TextRoundTrip) {
  std::mt19937_64 rng(7);
  for (const auto& groups : {kSmall, kMedium, kLarge}) {
    for (const auto& q : groups) {
      const Ctx c(q);
      for (int t = 0; t < 50; ++t) {
        const auto x = c.x(random_bits(rng, c.alg));
        EXPECT_EQ(c.alg.parse(c.alg.to_string(x)), x);
      }
    }
  }
  const Ctx c({4});
  EXPECT_EQ(c.alg.to_string(c.alg.zero()), "0");
  EXPECT_EQ(c.alg.to_string(c.parse("a1^3 + 1 + a1^2")), "1 + a1^2 + a1^3");
  EXPECT_EQ(c.parse("a + a"), c.alg.zero());
  const Ctx d({4, 2});
  EXPECT_EQ(d.alg.to_string(d.parse("a2*a1^2")), "a1^2*a2");
  for (const char* bad : {"b1", "a3", "a1^", "1 +", "a1**a2", "a"}) {
    EXPECT_THROW(d.alg.parse(bad), ParseError) << bad;
  }
}

TEST(Algebra, InverseIdentities) {
  for (const auto& q : std::vector<std::vector<std::uint32_t>>{{4}, {8}, {16}, {32}, {8, 4}}) {
    const Ctx c(q);
    for (std::uint32_t h = 0; h < c.g.order(); ++h) {
      for (const auto& r : check_inverse_identities(c.alg, {h})) {
        if (c.g.element_order({h}) < 4) {
          EXPECT_FALSE(r.applicable);
          EXPECT_FALSE(r.note.empty());
        } else if (r.applicable) {
          EXPECT_TRUE(r.holds) << r.name << " h=" << h << " in " << c.g.to_string();
        }
      }
    }
  }
  const Ctx c8({8});
  const auto r = check_inverse_identities(c8.alg, c8.g.generator(0));
  ASSERT_EQ(r.size(), 4u);
  EXPECT_TRUE(r[2].applicable);  // k = 4 with q = 8
  const Ctx c4({4});
  EXPECT_FALSE(check_inverse_identities(c4.alg, c4.g.generator(0))[2].applicable);
}
