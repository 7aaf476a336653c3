#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fillperm;

TEST(Generators, Printed) {
  EXPECT_TRUE(kappa(1).is_identity());
  EXPECT_EQ(printed_eta(1), parse_cycles("(1,3)", 4));
  EXPECT_EQ(mu(1), parse_cycles("(1,2)(3,4)", 4));
  EXPECT_EQ(kappa(6), parse_cycles("(1,3,5,7,9,11)(13,15,17,19,21,23)", 24));
  EXPECT_EQ(delta(3), parse_cycles("(2,4,6)(8,10,12)", 12));
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(order(eta(n)), 2);
    EXPECT_EQ(order(printed_eta(n)), 2);
    EXPECT_EQ(order(mu(n)), 2);
  }
}

TEST(Generators, EtaReversesAlpha) {
  EXPECT_EQ(eta(3), parse_cycles("(1,11)(3,9)(5,7)", 12));
}

TEST(Generators, PrintedEtaLeavesSolutionSet) {
  const auto z = fixtures::Zeta();
  EXPECT_THROW(validate(conjugate(printed_eta(6), z.sigma())), ValidationError);
  EXPECT_NO_THROW(validate(conjugate(eta(6), z.sigma())));
}

TEST(TwistGroup, Orders) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(TwistGroup(n).order(), static_cast<std::size_t>(8 * n * n)) << n;
}

TEST(TwistGroup, SmallCase) {
  const TwistGroup t(1);
  EXPECT_TRUE(t.contains(parse_cycles("(1,3)", 4)));
  EXPECT_TRUE(t.contains(parse_cycles("(2,4)", 4)));
  EXPECT_TRUE(t.contains(parse_cycles("(1,2)(3,4)", 4)));
}

TEST(TwistGroup, ClosedAndParityUniform) {
  for (int n = 1; n <= 5; ++n) {
    const TwistGroup t(n);
    EXPECT_TRUE(t.contains(kappa(n)));
    EXPECT_TRUE(t.contains(Permutation::identity(4 * n)));
    for (const auto& a : t.elements()) {
      EXPECT_TRUE(t.contains(inverse(a)));
      const bool keeps = a.at(1) % 2 == 1;
      for (int e = 1; e <= 4 * n; ++e) EXPECT_EQ((a.at(e) - e) % 2 == 0, keeps);
    }
    for (const auto& a : t.elements())
      for (const auto* g : {&t.elements().front(), &t.elements().back()}) EXPECT_TRUE(t.contains(compose(a, *g)));
  }
}

TEST(TwistGroup, Limits) {
  EXPECT_THROW(TwistGroup(17), GroupTooLarge);
  EXPECT_THROW(TwistGroup(6, TwistLimits{16, 100}), GroupTooLarge);
}

TEST(Equivalence, Reflexive) {
  const auto eq = are_equivalent(fixtures::SigmaF(), fixtures::SigmaF());
  ASSERT_TRUE(eq.witness);
  EXPECT_EQ(conjugate(*eq.witness, fixtures::SigmaF().sigma()), fixtures::SigmaF().sigma());
  EXPECT_TRUE(eq.decisive);
}

TEST(Equivalence, ZetaAndZetaPrimeDiffer) {
  const auto eq = are_equivalent(fixtures::Zeta(), fixtures::ZetaPrime());
  EXPECT_FALSE(eq.witness);
  EXPECT_FALSE(eq.decisive);
}

TEST(Equivalence, GenusOneOrientationReversal) {
  const auto a = fixtures::F1();
  const auto b = fixtures::filling("(1,4,3,2)", 4);
  const auto eq = are_equivalent(a, b);
  ASSERT_TRUE(eq.witness);
  EXPECT_EQ(conjugate(*eq.witness, a.sigma()), b.sigma());
}

TEST(Equivalence, SizeMismatch) { EXPECT_THROW(are_equivalent(fixtures::Zeta(), fixtures::SigmaF()), SizeMismatch); }

TEST(CanonicalForm, Basics) {
  EXPECT_EQ(canonical_form(fixtures::F1()), canonical_form(fixtures::filling("(1,4,3,2)", 4)));
  EXPECT_NE(canonical_form(fixtures::Zeta()), canonical_form(fixtures::ZetaPrime()));
  const auto c = validate(canonical_form(fixtures::Zeta()));
  EXPECT_EQ(region_count(c), 4);
  EXPECT_EQ(canonical_form(c), c.sigma());
}

TEST(Properties, ConjugationPreservesValidity) {
  for (const auto& fp : {fixtures::Zeta(), fixtures::ZetaPrime(), fixtures::SigmaF(), fixtures::F1()}) {
    const TwistGroup t(fp.n());
    const auto canon = canonical_form(fp, t);
    for (const auto& g : t.elements()) {
      const auto c = conjugate(g, fp.sigma());
      ASSERT_NO_THROW(validate(c));
      EXPECT_EQ(canonical_form(validate(c), t), canon);
    }
  }
}

TEST(Properties, EquivalenceRelationOnSamples) {
  const TwistGroup t(5);
  std::mt19937 rng(7);
  const auto base = fixtures::SigmaF();
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g1 = t.elements()[rng() % t.order()];
    const auto& g2 = t.elements()[rng() % t.order()];
    const auto a = validate(conjugate(g1, base.sigma()));
    const auto b = validate(conjugate(g2, base.sigma()));
    const auto ab = are_equivalent(a, b, t);
    const auto ba = are_equivalent(b, a, t);
    ASSERT_TRUE(ab.witness);
    ASSERT_TRUE(ba.witness);
    EXPECT_EQ(conjugate(*ab.witness, a.sigma()), b.sigma());
    EXPECT_TRUE(are_equivalent(base, b, t).witness);
  }
}
