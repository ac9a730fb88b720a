#include <cmath>

#include <gtest/gtest.h>

#include "eta/analytics.hpp"
#include "eta/errors.hpp"
#include "eta/fermion.hpp"
#include "eta/hubbard.hpp"
#include "eta/lattice.hpp"

using eta::FermionOperator;
using eta::LatticeSpec;
using eta::PairPhase;
using eta::Spin;

TEST(Fermion, CanonicalAnticommutators) {
  const int L = 2;
  for (int p = 0; p < 2 * L; ++p) {
    for (int q = 0; q < 2 * L; ++q) {
      const auto cp = FermionOperator::product({{p, false}});
      const auto cq_dag = FermionOperator::product({{q, true}});
      const auto anti = cp * cq_dag + cq_dag * cp;
      const auto expected =
          p == q ? FermionOperator::identity() : FermionOperator();
      ASSERT_TRUE(eta::equal_on_fock_space(anti, expected, L)) << p << "," << q;
      const auto cq = FermionOperator::product({{q, false}});
      ASSERT_TRUE(eta::equal_on_fock_space(cp * cq + cq * cp, FermionOperator(), L));
    }
  }
}

TEST(Fermion, OrderingConventionSigns) {
  // c^dag_{0,down} acting on |up at site 0> passes one occupied orbital.
  std::uint32_t s = 1u << eta::orbital(0, Spin::up);
  double sign = 1.0;
  ASSERT_TRUE(eta::apply_ladder({eta::orbital(0, Spin::down), true}, s, sign));
  EXPECT_EQ(sign, -1.0);
  // eta^dag_0 |vac> = c^dag_down c^dag_up |vac> = -|up down> in ascending order.
  const auto v = eta::eta_dag(0).apply({{0u, 1.0}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.begin()->first, 0b11u);
  EXPECT_EQ(v.begin()->second, -1.0);
}

TEST(Su2, SingleSite) {
  const auto r = eta::su2_check(1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checks.size(), 4u);
}

TEST(Su2, TwoSitesIncludingDistinctSiteCommutation) {
  const auto r = eta::su2_check(2);
  EXPECT_TRUE(r.passed);
  int cross = 0;
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.name << " " << c.site_a << "," << c.site_b;
    if (c.site_a != c.site_b) ++cross;
  }
  EXPECT_EQ(cross, 4);
}

TEST(Su2, PauliExclusionUpToFourSites) {
  for (int L = 1; L <= 4; ++L) {
    for (int j = 0; j < L; ++j) {
      ASSERT_TRUE(eta::equal_on_fock_space(eta::eta_dag(j) * eta::eta_dag(j),
                                           FermionOperator(), L));
    }
  }
  EXPECT_TRUE(eta::su2_check(4).passed);
}

TEST(Su2, DetectsWrongIdentity) {
  EXPECT_FALSE(eta::equal_on_fock_space(eta::commutator(eta::eta(0), eta::eta_dag(0)),
                                        eta::eta_z(0), 1));
  EXPECT_THROW(eta::su2_check(9), eta::CapacityError);
}

TEST(Lattice, ChainAndSquare) {
  const auto chain = LatticeSpec::parse("4");
  EXPECT_EQ(chain.sites(), 4);
  EXPECT_EQ(chain.edges().size(), 3u);
  const auto ring = LatticeSpec::parse("4:periodic");
  EXPECT_EQ(ring.edges().size(), 4u);
  EXPECT_TRUE(ring.bipartite());
  EXPECT_FALSE(LatticeSpec::parse("3:periodic").bipartite());
  // Periodic wrap on a length-2 axis coincides with the direct bond.
  const auto sq = LatticeSpec::parse("2x2:periodic");
  EXPECT_EQ(sq.edges().size(), 4u);
  EXPECT_TRUE(sq.bipartite());
  const auto cube = LatticeSpec::parse("2x2x2");
  EXPECT_EQ(cube.sites(), 8);
  EXPECT_EQ(cube.edges().size(), 12u);
  EXPECT_EQ(cube.to_string(), "2x2x2:open");
  EXPECT_EQ(cube.parity_sign(0), 1);
  EXPECT_EQ(cube.parity_sign(1), -1);
  EXPECT_EQ(cube.parity_sign(3), 1);
  for (auto [a, b] : cube.edges()) EXPECT_NE(cube.parity_sign(a), cube.parity_sign(b));
  EXPECT_THROW(LatticeSpec::parse("2y2"), eta::ValidationError);
  EXPECT_THROW(LatticeSpec::parse("2:twisted"), eta::ValidationError);
}

TEST(FermiState, NormMatchesClosedForm) {
  for (int L = 1; L <= 5; ++L) {
    const LatticeSpec chain({L}, eta::Boundary::open);
    for (int N = 0; N <= L; ++N) {
      for (PairPhase ph : {PairPhase::uniform, PairPhase::staggered}) {
        const auto v = eta::build_fermi_eta_state(chain, N, ph);
        ASSERT_EQ(v.norm2(), eta::to_double(eta::state_norm({L, N})));
      }
    }
  }
}

TEST(FermiState, StaysInPairSector) {
  const LatticeSpec sq = LatticeSpec::parse("2x2");
  const auto v = eta::build_fermi_eta_state(sq, 2, PairPhase::staggered);
  for (std::uint32_t b = 0; b < v.dim(); ++b) {
    if (v[b] == 0.0) continue;
    for (int j = 0; j < 4; ++j) {
      ASSERT_EQ((b >> (2 * j)) & 1u, (b >> (2 * j + 1)) & 1u);
    }
  }
}

TEST(Hubbard, VacuumIsEigenstate) {
  for (const char* lat : {"2", "3:periodic", "2x2:periodic", "2x2x2"}) {
    const auto l = LatticeSpec::parse(lat);
    const auto r = eta::hubbard_eigencheck(l, 0, 4.0, PairPhase::uniform);
    EXPECT_LT(r.residual, 1e-12) << lat;
    EXPECT_DOUBLE_EQ(r.energy, 4.0 * l.sites() / 4.0) << lat;
  }
}

TEST(Hubbard, TwoSiteChainStaggered) {
  const auto r =
      eta::hubbard_eigencheck(LatticeSpec::parse("2"), 1, 4.0, PairPhase::staggered);
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_NEAR(r.energy, 2.0, 1e-12);
}

TEST(Hubbard, SquarePeriodicSelectsStaggeredPhase) {
  const auto l = LatticeSpec::parse("2x2:periodic");
  const auto stag = eta::hubbard_eigencheck(l, 2, 4.0, PairPhase::staggered);
  const auto uni = eta::hubbard_eigencheck(l, 2, 4.0, PairPhase::uniform);
  EXPECT_LT(stag.residual, 1e-10);
  EXPECT_GT(uni.residual, 1e-3);
  EXPECT_NEAR(stag.energy, 4.0, 1e-12);
}

TEST(Hubbard, EnergyIndependentOfPairCount) {
  const auto l = LatticeSpec::parse("2x3");
  for (int N = 0; N <= 6; ++N) {
    const auto r = eta::hubbard_eigencheck(l, N, 2.5, PairPhase::staggered);
    ASSERT_LT(r.residual, 1e-10) << N;
    ASSERT_NEAR(r.energy, 2.5 * 6 / 4.0, 1e-12) << N;
  }
}

TEST(Hubbard, Errors) {
  EXPECT_THROW(eta::hubbard_eigencheck(LatticeSpec::parse("3:periodic"), 1, 4.0,
                                       PairPhase::staggered),
               eta::ValidationError);
  EXPECT_THROW(eta::hubbard_eigencheck(LatticeSpec::parse("3x3"), 1, 4.0,
                                       PairPhase::staggered),
               eta::CapacityError);
  EXPECT_THROW(eta::parse_phase("twisted"), eta::ValidationError);
}

TEST(Hubbard, CubeWithEightSites) {
  const auto l = LatticeSpec::parse("2x2x2");
  const auto r = eta::hubbard_eigencheck(l, 4, 4.0, PairPhase::staggered);
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_NEAR(r.energy, 8.0, 1e-10);
}
