#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropbip/arrangement.hpp"
#include "tropbip/counts.hpp"
#include "tropbip/errors.hpp"

using oracle::Series;
using tropbip::Rat;
using tropbip::SeriesVar;

namespace {

constexpr int kK = 6;
constexpr int kM = 4;
constexpr int kN = 4;

// 1/(e^{-tx} + e^{-ty} - t(e^x - 1)(e^y - 1) - 1) as an ordinary series.
Series face_series() {
  const Series one = Series::one(kK, kM, kN);
  const Series t = Series::monomial(1, 0, 0, kK, kM, kN);
  const Series ex = Series::exp(Rat(1), true, 0, kK, kM, kN);
  const Series ey = Series::exp(Rat(1), false, 0, kK, kM, kN);
  const Series d = Series::exp(Rat(-1), true, 1, kK, kM, kN) + Series::exp(Rat(-1), false, 1, kK, kM, kN) -
                   t * (ex - one) * (ey - one) - one;
  return d.inverse();
}

Series region_series() {
  const Series ex = Series::exp(Rat(1), true, 0, 0, kM, kN);
  const Series ey = Series::exp(Rat(1), false, 0, 0, kM, kN);
  return ex * ey * (ex + ey - ex * ey).inverse();
}

Series large_series() {
  const Series one = Series::one(0, kM, kN);
  const Series x = Series::monomial(0, 1, 0, 0, kM, kN);
  const Series y = Series::monomial(0, 0, 1, 0, kM, kN);
  const Series ex = Series::exp(Rat(1), true, 0, 0, kM, kN);
  const Series ey = Series::exp(Rat(1), false, 0, 0, kM, kN);
  const Series X = x * (ey - y - one);
  const Series Y = y * (ex - x - one);
  const Series num = X * Y * Rat(2) + X * X * (ex - one) + Y * Y * (ey - one);
  return (x * X + y * Y) * Rat(1, 2) + num * ((ex + ey - ex * ey) * Rat(2)).inverse();
}

}  // namespace

TEST(FaceEgf, MatchesIndependentSeries) {
  const auto f = tropbip::face_egf(kK, kM, kN);
  const Series s = face_series();
  for (int k = 0; k <= kK; ++k)
    for (int m = 0; m <= kM; ++m)
      for (int n = 0; n <= kN; ++n) EXPECT_EQ(f.coeff(k, m, n), s.count(k, m, n)) << k << m << n;
}

TEST(FaceEgf, Anchors) {
  const auto f = tropbip::face_egf(4, 2, 2);
  EXPECT_EQ(f.coeff(2, 1, 1), Rat(2));
  EXPECT_EQ(f.coeff(1, 1, 1), Rat(1));
  EXPECT_EQ(f.coeff(0, 1, 1), Rat(0));
  EXPECT_EQ(f.coeff(3, 1, 1), Rat(0));
  EXPECT_EQ(f.coeff(1, 1, 0), Rat(1));
  EXPECT_EQ(f.at_t_one().coeff(0, 2, 2), Rat(static_cast<long>(tropbip::enumerate_faces(2, 2).size())));
}

TEST(FaceEgf, TallyMatchesPointOracle) {
  const auto f = tropbip::face_egf(5, 3, 3);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3 && m + n <= 5; ++n) {
      const auto tally = oracle::face_tally_by_points(m, n);
      const auto mine = tropbip::face_tally(m, n);
      ASSERT_EQ(mine.size(), tally.size());
      for (std::size_t k = 0; k < tally.size(); ++k) {
        EXPECT_EQ(mine[k], tally[k]);
        EXPECT_EQ(f.coeff(static_cast<int>(k), m, n), Rat(static_cast<long>(tally[k]))) << k << m << n;
      }
    }
  }
}

TEST(RegionEgf, MatchesSeriesAndBruteForce) {
  const auto r = tropbip::region_egf(kM, kN);
  const Series s = region_series();
  for (int m = 0; m <= kM; ++m) {
    for (int n = 0; n <= kN; ++n) {
      EXPECT_EQ(r.coeff(0, m, n), s.count(0, m, n));
      EXPECT_EQ(r.coeff(0, m, n), Rat(static_cast<long>(oracle::acyclic_orientations(m, n))));
      EXPECT_EQ(tropbip::count_acyclic_bruteforce(m, n), oracle::acyclic_orientations(m, n));
    }
  }
  EXPECT_EQ(r.coeff(0, 1, 1), Rat(2));
  EXPECT_EQ(r.coeff(0, 2, 2), Rat(14));
  EXPECT_EQ(r.coeff(0, 2, 3), Rat(46));
}

TEST(RegionEgf, EqualsFaceSeriesWithoutMixedBlocksAtTOne) {
  const int k = 2 * (kM + kN);
  const auto one = tropbip::Egf3::constant(Rat(1), k, kM, kN);
  const auto z = (tropbip::Egf3::exp_linear(Rat(-1), SeriesVar::X, 1, k, kM, kN) +
                  tropbip::Egf3::exp_linear(Rat(-1), SeriesVar::Y, 1, k, kM, kN) - one)
                     .reciprocal()
                     .at_t_one();
  const auto r = tropbip::region_egf(kM, kN);
  for (int m = 0; m <= kM; ++m)
    for (int n = 0; n <= kN; ++n) EXPECT_EQ(z.coeff(0, m, n), r.coeff(0, m, n)) << m << n;
}

TEST(BruteForce, RefusesLargeShapes) {
  EXPECT_THROW(tropbip::count_acyclic_bruteforce(5, 5), tropbip::BudgetExceeded);
}

TEST(LargeEgf, MatchesSeriesAndIsSymmetric) {
  const auto l = tropbip::large_egf(kM, kN);
  const Series s = large_series();
  for (int m = 0; m <= kM; ++m) {
    for (int n = 0; n <= kN; ++n) {
      EXPECT_EQ(l.coeff(0, m, n), s.count(0, m, n)) << m << n;
      EXPECT_EQ(l.coeff(0, m, n), l.coeff(0, n, m)) << m << n;
    }
    EXPECT_EQ(l.coeff(0, 1, m), Rat(0));
  }
  EXPECT_EQ(l.coeff(0, 2, 2), Rat(2));
}

TEST(SmallFormula, AnchorsAndSymmetry) {
  EXPECT_EQ(tropbip::small_formula(2, 2), 2);
  EXPECT_EQ(tropbip::small_formula(3, 3), 36);
  EXPECT_EQ(tropbip::small_formula(1, 5), 0);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(tropbip::small_formula(m, n), tropbip::small_formula(n, m));
      if (m <= 4 && n <= 4) {
        EXPECT_EQ(tropbip::small_formula(m, n), oracle::small_count_formula(m, n));
      }
    }
  }
}

TEST(Crosscheck, NoDiscrepanciesOnSmallRange) {
  tropbip::CrosscheckOptions opts;
  opts.cells_max = 2;
  const auto rep = tropbip::crosscheck(3, 3, opts);
  EXPECT_TRUE(rep.discrepancies.empty());
  EXPECT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) {
    EXPECT_GE(e.values.size(), 2U) << e.quantity << " " << e.m << "x" << e.n;
  }
  // Large (2,2): one distinct image but two positive regions.
  EXPECT_FALSE(rep.notes.empty());
}
