#include <gtest/gtest.h>

#include <numeric>

#include "gem/constructions.hpp"
#include "gem/errors.hpp"
#include "gem/invariants.hpp"
#include "gem/iso_canon.hpp"
#include "gem/torus_cube.hpp"
#include "support/oracles.hpp"

using namespace gem;

TEST(TorusCube, ZeroColorWalkIsTheEndSwap) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 1);
    do {
      auto q = p;
      std::swap(q[0], q[n]);
      ASSERT_EQ(torus_zero_walk(p), q) << "n=" << n;
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(TorusCube, MatchesGeometricConstruction) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(torus_gem(n).graph(), testkit::geometric_torus(n)) << "n=" << n;
}

TEST(TorusCube, SmallCases) {
  auto t1 = torus_gem(1);
  EXPECT_EQ(t1.num_vertices(), 2);
  EXPECT_EQ(t1.graph().joining(0, 1), (ColorSet{0, 1}));
  EXPECT_EQ(t1.label(0), "12");
  EXPECT_EQ(torus_gem(4).num_vertices(), 120);
  EXPECT_EQ(torus_gem(4).label(119), "54321");
}

TEST(TorusCube, ContractedAndBipartite) {
  for (int n = 1; n <= 5; ++n) {
    auto g = torus_gem(n);
    EXPECT_TRUE(is_contracted(g.graph()).contracted) << n;
    EXPECT_TRUE(is_bipartite(g.graph())) << n;
    EXPECT_EQ(euler_characteristic(g.graph()), 0) << n;
  }
}

TEST(TorusCube, RegularGenusLowDimensions) {
  EXPECT_EQ(regular_genus(torus_gem(2).graph()).min_rho, HalfInteger{2});
  auto r3 = regular_genus(torus_gem(3).graph());
  EXPECT_EQ(r3.min_rho, HalfInteger{6});
}

TEST(TorusCube, StatedPermutationAndFormula) {
  EXPECT_EQ(torus_stated_permutation(4), (CyclicPermutation{0, 2, 4, 1, 3}));
  EXPECT_EQ(torus_stated_permutation(5), (CyclicPermutation{0, 2, 4, 1, 5, 3}));
  EXPECT_EQ(torus_stated_permutation(6), (CyclicPermutation{0, 2, 4, 6, 1, 3, 5}));
  EXPECT_EQ(torus_stated_permutation(7), (CyclicPermutation{0, 2, 4, 6, 1, 7, 5, 3}));
  EXPECT_EQ(torus_genus_formula(4), 16);
  EXPECT_EQ(torus_genus_formula(5), 181);
  EXPECT_THROW(torus_genus_formula(3), Error);
  for (int n = 4; n <= 6; ++n) {
    auto g = torus_gem(n);
    EXPECT_EQ(genus_for(g.graph(), torus_stated_permutation(n)).rho, HalfInteger{2 * torus_genus_formula(n)}) << n;
  }
}

TEST(TorusCube, CycleAudit) {
  for (int n = 4; n <= 5; ++n) EXPECT_TRUE(audit_cycle_lengths(torus_gem(n)).ok()) << n;
  EXPECT_TRUE(audit_cycle_lengths(torus_gem(3)).lengths_4_or_6);
}

TEST(TorusCube, FourTorusIsTheReducedProduct) {
  auto w = isomorphic(torus_gem(4).graph(), g2_prime().graph(), true);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(torus_gem(4).graph(), g2_prime().graph(), *w));
}

TEST(TorusCube, ThreeTorusVersusStandard) {
  // reported, not asserted either way
  bool iso = isomorphic(torus_gem(3).graph(), t3_standard().graph(), true).has_value();
  RecordProperty("torus3_isomorphic_to_t3", iso ? "yes" : "no");
  SUCCEED();
}

TEST(TorusCube, Budget) {
  EXPECT_THROW(torus_gem(8), Error);
  EXPECT_THROW(torus_gem(5, 100), Error);
  EXPECT_THROW(torus_gem(0), Error);
  try {
    torus_gem(8);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}
