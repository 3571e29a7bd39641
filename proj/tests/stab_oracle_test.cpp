#include "scgame/stab_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace scg {
namespace {

TEST(Tableau, FreshStateMeasuresZero) {
  Tableau t(3);
  for (int q = 0; q < 3; ++q) {
    EXPECT_TRUE(t.measurement_is_deterministic(q));
    EXPECT_EQ(t.measure_z(q), 0);
  }
  EXPECT_TRUE(t.stabilizes(Pauli::single(3, 1, 'Z')));
}

TEST(Tableau, ForcedCollapseTakesEitherBranch) {
  for (int branch : {0, 1}) {
    Tableau t(1);
    t.h(0);
    EXPECT_FALSE(t.measurement_is_deterministic(0));
    EXPECT_EQ(t.measure_z(0, branch), branch);
    EXPECT_TRUE(t.measurement_is_deterministic(0));
    EXPECT_EQ(t.measure_z(0), branch);
  }
}

TEST(Tableau, BellPairCorrelations) {
  Tableau t(2);
  t.h(0);
  t.cx(0, 1);
  Pauli xx = Pauli::x_on(2, row_from_support(2, {0, 1}));
  Pauli zz = Pauli::z_on(2, row_from_support(2, {0, 1}));
  EXPECT_TRUE(t.stabilizes(xx));
  EXPECT_TRUE(t.stabilizes(zz));
  Pauli minus_xx = xx;
  minus_xx.negative = true;
  EXPECT_FALSE(t.stabilizes(minus_xx));
  EXPECT_FALSE(t.stabilizes(Pauli::single(2, 0, 'Z')));

  EXPECT_EQ(t.measure_z(0, 1), 1);
  EXPECT_TRUE(t.measurement_is_deterministic(1));
  EXPECT_EQ(t.measure_z(1), 1);
}

TEST(Tableau, PauliGatesFlipSigns) {
  Tableau t(1);
  t.x(0);
  Pauli mz = Pauli::single(1, 0, 'Z');
  mz.negative = true;
  EXPECT_TRUE(t.stabilizes(mz));
  EXPECT_EQ(t.measure_z(0), 1);

  Tableau u(1);
  u.h(0);
  u.z(0);  // |+> -> |->
  Pauli mx = Pauli::single(1, 0, 'X');
  mx.negative = true;
  EXPECT_TRUE(u.stabilizes(mx));
  EXPECT_EQ(u.measure_x(0), 1);
}

TEST(Tableau, SOnPlusGivesY) {
  Tableau t(1);
  t.h(0);
  t.s(0);
  EXPECT_TRUE(t.stabilizes(Pauli::single(1, 0, 'Y')));
  t.sdg(0);
  EXPECT_TRUE(t.stabilizes(Pauli::single(1, 0, 'X')));
}

TEST(Tableau, HIsInvolutionAndCzSymmetric) {
  Tableau a(2), b(2);
  a.h(0);
  a.h(0);
  EXPECT_EQ(a.canonical_stabilizers(), b.canonical_stabilizers());

  Tableau c(2), d(2);
  c.h(0);
  c.h(1);
  d.h(0);
  d.h(1);
  c.cz(0, 1);
  d.cz(1, 0);
  EXPECT_EQ(c.canonical_stabilizers(), d.canonical_stabilizers());
}

TEST(Tableau, CanonicalFormIsPreparationIndependent) {
  // GHZ two ways.
  Tableau a(3);
  a.h(0);
  a.cx(0, 1);
  a.cx(1, 2);
  Tableau b(3);
  b.h(2);
  b.cx(2, 1);
  b.cx(2, 0);
  EXPECT_EQ(a.canonical_stabilizers(), b.canonical_stabilizers());
}

TEST(Tableau, StaysValidUnderRandomCircuits) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 6;
    Tableau t(n);
    std::uniform_int_distribution<int> gate(0, 5);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    for (int step = 0; step < 120; ++step) {
      int q = qubit(rng);
      switch (gate(rng)) {
        case 0: t.h(q); break;
        case 1: t.s(q); break;
        case 2: t.x(q); break;
        case 3: {
          int p = qubit(rng);
          if (p != q) t.cx(q, p);
          break;
        }
        case 4: t.measure_z(q, static_cast<int>(rng() & 1u)); break;
        case 5: t.measure_x(q, static_cast<int>(rng() & 1u)); break;
      }
      ASSERT_TRUE(t.is_valid());
    }
  }
}

TEST(Tableau, RepeatedMeasurementIsStable) {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    Tableau t(4);
    std::uniform_int_distribution<int> qubit(0, 3);
    for (int step = 0; step < 30; ++step) {
      int q = qubit(rng);
      if (rng() & 1u) t.h(q);
      int p = qubit(rng);
      if (p != q) t.cx(q, p);
      int first = t.measure_z(q, static_cast<int>(rng() & 1u));
      EXPECT_EQ(t.measure_z(q), first);
    }
  }
}

TEST(UndetectedPatterns, SteaneDetectsEverythingBelowDistance) {
  auto found = enumerate_undetected(steane7(), 2);
  EXPECT_TRUE(found.empty());
}

TEST(UndetectedPatterns, SteaneWeightThreeAreCodewords) {
  auto found = enumerate_undetected(steane7(), 3);
  // The seven weight-3 words of the underlying classical code, all logical.
  EXPECT_EQ(found.size(), 7u);
  for (const auto& u : found) {
    EXPECT_EQ(u.weight, 3);
    EXPECT_TRUE(u.logical);
  }
}

TEST(UndetectedPatterns, OrderingAndSyndromeInvariant) {
  auto rm = reed_muller15();
  auto found = enumerate_undetected(rm, 3);
  int last_weight = 0;
  for (const auto& u : found) {
    EXPECT_GE(u.weight, last_weight);
    last_weight = u.weight;
    EXPECT_TRUE(is_zero(evaluate_parities(rm, Basis::X, u.pattern).syndrome));
  }
}

}  // namespace
}  // namespace scg
