#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "eta/analytics.hpp"
#include "eta/density_matrix.hpp"
#include "eta/errors.hpp"
#include "eta/pair_sector.hpp"

using eta::ExactInt;
using eta::ExactRational;
using eta::PairSectorVector;

TEST(BuildEtaState, TwoSitesOnePair) {
  const auto s = eta::build_eta_state(2, 1);
  ASSERT_EQ(s.amplitudes().size(), 2u);
  EXPECT_EQ(s.amplitude(0b01), 1);
  EXPECT_EQ(s.amplitude(0b10), 1);
}

TEST(BuildEtaState, ThreeSitesTwoPairs) {
  const auto s = eta::build_eta_state(3, 2);
  ASSERT_EQ(s.amplitudes().size(), 3u);
  for (unsigned p : {0b011u, 0b101u, 0b110u}) EXPECT_EQ(s.amplitude(p), 2);
  EXPECT_EQ(s.norm2(), 12);
}

TEST(BuildEtaState, VacuumAndLimits) {
  const auto v = eta::build_eta_state(5, 0);
  ASSERT_EQ(v.amplitudes().size(), 1u);
  EXPECT_EQ(v.amplitude(0), 1);
  EXPECT_THROW(eta::build_eta_state(25, 1), eta::CapacityError);
  EXPECT_THROW(eta::build_eta_state(4, 5), eta::ValidationError);
}

TEST(BuildEtaState, SymmetricWithFactorialAmplitude) {
  for (int L = 1; L <= 10; ++L) {
    for (int N = 0; N <= L; ++N) {
      const auto s = eta::build_eta_state(L, N);
      ASSERT_EQ(s.amplitudes().size(), eta::binom_exact(L, N));
      for (const auto& [p, a] : s.amplitudes()) {
        ASSERT_EQ(std::popcount(p), N);
        ASSERT_EQ(a, eta::factorial(N));
      }
    }
  }
}

TEST(BuildEtaState, NormMatchesClosedForm) {
  for (int L = 1; L <= 12; ++L) {
    for (int N = 0; N <= L; ++N) {
      ASSERT_EQ(eta::build_eta_state(L, N).norm2(), eta::state_norm({L, N}))
          << L << "," << N;
    }
  }
}

TEST(Correlator, Examples) {
  const auto psi42 = eta::build_eta_state(4, 2);
  EXPECT_EQ(eta::correlator(psi42, {0}, {1}), ExactRational(1, 3));
  EXPECT_EQ(eta::correlator(psi42, {0}, {1}), eta::odlro_pair({4, 2}));
  EXPECT_EQ(eta::correlator(eta::build_eta_state(7, 1), {0, 1}, {2, 3}), 0);
  const auto psi63 = eta::build_eta_state(6, 3);
  EXPECT_EQ(eta::correlator(psi63, {0, 1}, {2, 3}), ExactRational(1, 10));
}

TEST(Correlator, RejectsBadIndexLists) {
  const auto psi = eta::build_eta_state(4, 2);
  EXPECT_THROW(eta::correlator(psi, {0}, {0}), eta::ValidationError);
  EXPECT_THROW(eta::correlator(psi, {0, 1}, {1, 2}), eta::ValidationError);
  EXPECT_THROW(eta::correlator(psi, {4}, {1}), eta::ValidationError);
  EXPECT_THROW(eta::correlator(psi, {0, 0}, {1, 2}), eta::ValidationError);
}

TEST(Correlator, SiteChoiceIndependenceExhaustive) {
  for (int L = 2; L <= 8; ++L) {
    for (int N = 0; N <= L; ++N) {
      const auto psi = eta::build_eta_state(L, N);
      for (int M = 1; 2 * M <= L; ++M) {
        const auto r = eta::site_independence_check(psi, M);
        ASSERT_TRUE(r.passed) << L << "," << N << "," << M;
        ASSERT_EQ(r.tuples.size(),
                  eta::binom_exact(L, M) * eta::binom_exact(L - M, M));
        ASSERT_EQ(r.tuples.front().lhs, eta::odlro_general({L, N}, M));
      }
    }
  }
}

TEST(CrossCorrelator, Examples) {
  const auto a = eta::cross_correlator_check(eta::build_eta_state(5, 2), 1, 2);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.tuples.size(), 5u * 6u);
  EXPECT_TRUE(eta::cross_correlator_check(eta::build_eta_state(4, 2), 2, 1).passed);
  EXPECT_TRUE(eta::cross_correlator_check(eta::build_eta_state(6, 3), 1, 3).passed);
  EXPECT_THROW(eta::cross_correlator_check(eta::build_eta_state(4, 2), 1, 1),
               eta::ValidationError);
}

TEST(CrossCorrelator, DetectsNonzeroOnMixedState) {
  // Superposition of different pair numbers carries M != M' coherence.
  PairSectorVector mixed(2, {{0b00u, ExactInt(1)}, {0b01u, ExactInt(1)}});
  const auto r = eta::cross_correlator_check(mixed, 1, 0);
  EXPECT_FALSE(r.passed);
}

TEST(RecursionIdentity, Examples) {
  const auto a = eta::recursion_identity_check(4, 2, 1);
  EXPECT_TRUE(a.passed);
  // N^2 <Psi~|Psi~> with one pair spread over the two remaining sites.
  for (const auto& t : a.tuples) EXPECT_EQ(t.rhs, 4 * 2);
  const auto b = eta::recursion_identity_check(5, 1, 1);
  EXPECT_TRUE(b.passed);
  for (const auto& t : b.tuples) EXPECT_EQ(t.lhs, 1);
  EXPECT_TRUE(eta::recursion_identity_check(6, 3, 2).passed);
}

TEST(RecursionIdentity, HoldsForSmallLattices) {
  for (int L = 2; L <= 7; ++L) {
    for (int N = 1; N <= L; ++N) {
      for (int M = 1; 2 * M <= L; ++M) {
        ASSERT_TRUE(eta::recursion_identity_check(L, N, M).passed)
            << L << "," << N << "," << M;
      }
    }
  }
}

TEST(PartialTrace, OneSite) {
  const auto dm = eta::partial_trace(eta::build_eta_state(4, 2), {2});
  EXPECT_NEAR(dm.matrix()(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(dm.matrix()(1, 1), 0.5, 1e-15);
  EXPECT_EQ(dm.matrix()(0, 1), 0.0);
  const auto ex = eta::partial_trace_exact(eta::build_eta_state(6, 2), {4});
  EXPECT_TRUE(eta::sector_spectrum(ex) == eta::rho_one({6, 2}));
}

TEST(PartialTrace, AllSitesIsPure) {
  const auto dm = eta::partial_trace(eta::build_eta_state(5, 2), {0, 1, 2, 3, 4});
  const auto ev = dm.eigenvalues();
  EXPECT_NEAR(ev(ev.size() - 1), 1.0, 1e-12);
  EXPECT_NEAR(eta::von_neumann(dm), 0.0, 1e-12);
}

TEST(PartialTrace, TwoSitesSectorSpectrum) {
  const auto ex = eta::partial_trace_exact(eta::build_eta_state(4, 2), {0, 1});
  EXPECT_EQ(ex.at(0b01, 0b01), ExactRational(1, 3));
  EXPECT_EQ(ex.at(0b01, 0b10), ExactRational(1, 3));
  EXPECT_TRUE(eta::sector_spectrum(ex) == eta::rho_block_finite({4, 2}, 2));
  const auto ev = ex.to_float().eigenvalues();
  // {0, 1/6, 1/6, 2/3}: the sector-1 block splits into 2/3 and 0.
  EXPECT_NEAR(ev(0), 0.0, 1e-15);
  EXPECT_NEAR(ev(1), 1.0 / 6, 1e-15);
  EXPECT_NEAR(ev(2), 1.0 / 6, 1e-15);
  EXPECT_NEAR(ev(3), 2.0 / 3, 1e-15);
}

TEST(PartialTrace, RejectsBadInput) {
  const auto psi = eta::build_eta_state(14, 7);
  EXPECT_THROW(eta::partial_trace(psi, {}), eta::ValidationError);
  EXPECT_THROW(eta::partial_trace(psi, {1, 1}), eta::ValidationError);
  EXPECT_THROW(eta::partial_trace(psi, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}),
               eta::CapacityError);
  EXPECT_THROW(eta::partial_trace_exact(psi, {0, 1, 2, 3, 4, 5, 6, 7, 8}),
               eta::CapacityError);
}

TEST(PartialTrace, SectorSpectrumRejectsCoherentBlocks) {
  eta::ExactDensityMatrix rho;
  rho.dim = 2;
  rho.entries = {ExactRational(1, 2), ExactRational(1, 2), ExactRational(1, 2),
                 ExactRational(1, 2)};
  EXPECT_THROW(eta::sector_spectrum(rho), eta::ValidationError);
}

TEST(PartialTrace, SpectrumIndependentOfKeptSites) {
  std::mt19937 rng(7);
  for (int L = 4; L <= 9; ++L) {
    for (int N = 0; N <= L; ++N) {
      const auto psi = eta::build_eta_state(L, N);
      for (int M = 1; M <= 3; ++M) {
        const auto ref = eta::rho_block_finite({L, N}, M);
        for (int trial = 0; trial < 4; ++trial) {
          std::vector<int> sites(static_cast<std::size_t>(L));
          std::iota(sites.begin(), sites.end(), 0);
          std::shuffle(sites.begin(), sites.end(), rng);
          sites.resize(static_cast<std::size_t>(M));
          ASSERT_TRUE(eta::sector_spectrum(eta::partial_trace_exact(psi, sites)) == ref);
        }
      }
    }
  }
}

TEST(PartialTrace, EntropyMatchesClosedForm) {
  for (int L = 1; L <= 10; ++L) {
    for (int N = 0; N <= L; ++N) {
      const auto psi = eta::build_eta_state(L, N);
      for (int M = 1; M <= std::min(L, 4); ++M) {
        std::vector<int> keep(static_cast<std::size_t>(M));
        std::iota(keep.begin(), keep.end(), 0);
        const double oracle = eta::von_neumann(eta::partial_trace(psi, keep));
        const double closed = eta::entropy(eta::rho_block_finite({L, N}, M));
        ASSERT_NEAR(oracle, closed, 1e-12) << L << "," << N << "," << M;
      }
    }
  }
}

TEST(PartialTrace, EightSitesHalfFillingThreeKept) {
  const auto dm = eta::partial_trace(eta::build_eta_state(8, 4), {0, 3, 5});
  EXPECT_NEAR(eta::von_neumann(dm), eta::entropy(eta::rho_block_finite({8, 4}, 3)),
              1e-12);
}

TEST(HolePairDuality, FlippedStateIsDualState) {
  for (int L = 1; L <= 9; ++L) {
    for (int N = 0; N <= L; ++N) {
      const auto flipped = eta::build_eta_state(L, N).flipped();
      const auto dual = eta::build_eta_state(L, L - N);
      // Same support; amplitudes N! versus (L-N)!.
      ASSERT_EQ(flipped.amplitudes().size(), dual.amplitudes().size());
      for (const auto& [p, a] : dual.amplitudes()) {
        ASSERT_EQ(flipped.amplitude(p) * eta::factorial(L - N),
                  a * eta::factorial(N));
      }
      if (L >= 2) {
        ASSERT_EQ(eta::correlator(flipped, {0}, {1}), eta::correlator(dual, {0}, {1}));
      }
    }
  }
}

TEST(VonNeumann, Examples) {
  Eigen::MatrixXd half = Eigen::MatrixXd::Identity(2, 2) * 0.5;
  EXPECT_DOUBLE_EQ(eta::von_neumann(eta::DensityMatrix(half)), 1.0);
  Eigen::MatrixXd pure = Eigen::MatrixXd::Zero(3, 3);
  pure(1, 1) = 1.0;
  EXPECT_EQ(eta::von_neumann(eta::DensityMatrix(pure)), 0.0);
}

TEST(DensityMatrix, Validation) {
  Eigen::MatrixXd bad_trace = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_THROW(eta::DensityMatrix{bad_trace}, eta::ValidationError);
  Eigen::MatrixXd asym(2, 2);
  asym << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(eta::DensityMatrix{asym}, eta::ValidationError);
  Eigen::MatrixXd negative(2, 2);
  negative << 1.5, 0.0, 0.0, -0.5;
  EXPECT_THROW(eta::von_neumann(eta::DensityMatrix(negative)), eta::ValidationError);
}

TEST(Wootters, BellStateAndProductState) {
  const auto bell = eta::partial_trace(eta::build_eta_state(2, 1), {0, 1});
  EXPECT_NEAR(eta::wootters_concurrence(bell), 1.0, 1e-12);
  Eigen::MatrixXd prod = Eigen::MatrixXd::Zero(4, 4);
  // |0><0| (x) (|0>+|1>)(<0|+<1|)/2
  prod(0, 0) = prod(0, 2) = prod(2, 0) = prod(2, 2) = 0.5;
  EXPECT_NEAR(eta::wootters_concurrence(eta::DensityMatrix(prod)), 0.0, 1e-12);
  Eigen::MatrixXd mixed = Eigen::MatrixXd::Identity(4, 4) * 0.25;
  EXPECT_NEAR(eta::wootters_concurrence(eta::DensityMatrix(mixed)), 0.0, 1e-12);
  EXPECT_THROW(eta::wootters_concurrence(eta::DensityMatrix(
                   Eigen::MatrixXd::Identity(2, 2) * 0.5)),
               eta::ValidationError);
}

TEST(Wootters, HalfFillingTrendIsOneOverLMinusOne) {
  // Two-site reduction at N = L/2 is an X state, C = 2 rho_{01,10} -
  // 2 sqrt(rho_00 rho_11) = 1/(L-1) by hand.
  double prev = 2.0;
  for (int L : {4, 6, 8, 10}) {
    const auto dm = eta::partial_trace(eta::build_eta_state(L, L / 2), {0, 1});
    const double c = eta::wootters_concurrence(dm);
    EXPECT_NEAR(c, 1.0 / (L - 1), 1e-12) << L;
    EXPECT_LT(c, prev);
    prev = c;
  }
}
