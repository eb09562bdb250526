#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tropbip/arrangement.hpp"
#include "tropbip/errors.hpp"

using tropbip::FaceLabel;
using tropbip::Rat;
using tropbip::RegionLabel;
using tropbip::XYPoint;

namespace {

XYPoint xy(std::vector<Rat> x, std::vector<Rat> y) { return {std::move(x), std::move(y)}; }

std::set<std::string> label_strings(const std::vector<RegionLabel>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(r.str());
  return out;
}

}  // namespace

TEST(RegionLabel, ParseAndPrintRoundTrip) {
  const auto r = RegionLabel::parse("2' 4' 3 1' 1 2 3' 5'");
  EXPECT_EQ(r.m(), 3);
  EXPECT_EQ(r.n(), 5);
  EXPECT_EQ(r.str(), "2' 4' 3 1' 1 2 3' 5'");
  EXPECT_THROW(RegionLabel::parse("1 1 1'"), tropbip::StructuralError);
  EXPECT_THROW(RegionLabel::parse("2 1 1'"), tropbip::StructuralError);
  EXPECT_THROW(RegionLabel::parse("1 x"), tropbip::StructuralError);
}

TEST(RegionOfPoint, WorkedRegionOfA35) {
  const auto p = xy({4, Rat(9, 2), 2}, {3, Rat(1, 2), 5, 1, 6});
  const RegionLabel r = tropbip::region_of_point(p);
  EXPECT_EQ(r.str(), "2' 4' 3 1' 1 2 3' 5'");
  // Pairwise oracle: i precedes j' exactly when x_i < y_j.
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 5; ++j) EXPECT_EQ(r.precedes(i, j), p.x[i - 1] < p.y[j - 1]);
  }
}

TEST(RegionOfPoint, SingleHyperplane) {
  EXPECT_EQ(tropbip::region_of_point(xy({0}, {1})).str(), "1 1'");
  try {
    tropbip::region_of_point(xy({0}, {0}));
    FAIL() << "expected OnHyperplane";
  } catch (const tropbip::OnHyperplane& e) {
    EXPECT_EQ(e.row, 1);
    EXPECT_EQ(e.col, 1);
  }
}

TEST(FaceOfPoint, WorkedFaceOfA78) {
  // x1,x3 < y2,y5,y7 < x5 < x2=y3=y6 < y1 < x6 < x4=x7=y4 < y8
  const auto p = xy({0, 3, 0, 6, 2, 5, 6}, {4, 1, 3, 6, 1, 3, 1, 7});
  const FaceLabel f = tropbip::face_of_point(p);
  EXPECT_EQ(f.str(), "[1 3][2' 5' 7'][5][2 3' 6'][1'][6][4 7 4'][8']");
  EXPECT_EQ(tropbip::face_dimension(f), 11U);
}

TEST(FaceOfPoint, OneHyperplane) {
  EXPECT_EQ(tropbip::face_of_point(xy({0}, {0})).str(), "[1 1']");
  EXPECT_EQ(tropbip::face_of_point(xy({0}, {1})).str(), "[1][1']");
  EXPECT_EQ(tropbip::face_dimension(FaceLabel::parse("[1 1']")), 1U);
  EXPECT_EQ(tropbip::face_dimension(FaceLabel::parse("[1][1']")), 2U);
}

TEST(EnumerateRegions, SmallShapes) {
  EXPECT_EQ(label_strings(tropbip::enumerate_regions(1, 1)),
            (std::set<std::string>{"1 1'", "1' 1"}));
  EXPECT_EQ(label_strings(tropbip::enumerate_regions(1, 2)),
            (std::set<std::string>{"1 1' 2'", "1' 1 2'", "2' 1 1'", "1' 2' 1"}));
  EXPECT_EQ(tropbip::enumerate_regions(2, 2).size(), 14U);
}

TEST(EnumerateRegions, MatchesAcyclicOrientationOracle) {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto regions = tropbip::enumerate_regions(m, n);
      EXPECT_EQ(regions.size(), oracle::acyclic_orientations(m, n)) << m << "x" << n;
      EXPECT_EQ(label_strings(regions).size(), regions.size());
    }
  }
}

TEST(EnumerateRegions, EveryLabelIsRealisedByItsPositionPoint) {
  for (const auto& r : tropbip::enumerate_regions(3, 3)) {
    const auto p = oracle::point_in_region(r);
    EXPECT_EQ(tropbip::region_of_point(p.xy()), r);
  }
}

TEST(EnumerateFaces, OneByOne) {
  std::set<std::string> faces;
  for (const auto& f : tropbip::enumerate_faces(1, 1)) faces.insert(f.str());
  EXPECT_EQ(faces, (std::set<std::string>{"[1][1']", "[1'][1]", "[1 1']"}));
  const auto lone = tropbip::enumerate_faces(1, 0);
  ASSERT_EQ(lone.size(), 1U);
  EXPECT_EQ(tropbip::face_dimension(lone.front()), 1U);
}

TEST(EnumerateFaces, TallyMatchesPointOracle) {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; m + n <= 4; ++n) {
      if (m + n == 0) continue;
      std::vector<std::uint64_t> tally(m + n + 1, 0);
      for (const auto& f : tropbip::enumerate_faces(m, n)) ++tally[tropbip::face_dimension(f)];
      EXPECT_EQ(tally, oracle::face_tally_by_points(m, n)) << m << "x" << n;
    }
  }
}

TEST(Orientation, LabelRoundTrip) {
  const auto o = tropbip::orientation_of(RegionLabel::parse("1 1'"));
  EXPECT_TRUE(o.toward_col(1, 1));
  const auto r = RegionLabel::parse("2' 1 1' 2");
  const auto e = tropbip::orientation_of(r);
  EXPECT_FALSE(e.toward_col(1, 2));
  EXPECT_TRUE(e.toward_col(1, 1));
  EXPECT_FALSE(e.toward_col(2, 2));
  EXPECT_FALSE(e.toward_col(2, 1));
  for (const auto& label : tropbip::enumerate_regions(3, 3)) {
    EXPECT_EQ(tropbip::region_of_orientation(tropbip::orientation_of(label)), label);
  }
}

TEST(Orientation, CycleIsRejected) {
  tropbip::Orientation o(2, 2);
  o.set_toward_col(1, 1, true);
  o.set_toward_col(2, 1, false);
  o.set_toward_col(2, 2, true);
  o.set_toward_col(1, 2, false);
  EXPECT_FALSE(o.is_acyclic());
  EXPECT_THROW(tropbip::region_of_orientation(o), tropbip::NotAcyclic);
}

TEST(NegateRegion, ReversesAndNormalises) {
  EXPECT_EQ(tropbip::negate_region(RegionLabel::parse("1 1' 2 2'")).str(), "2' 2 1' 1");
  EXPECT_EQ(tropbip::negate_region(RegionLabel::parse("1 2 1' 2'")).str(), "1' 2' 1 2");
  for (const auto& r : tropbip::enumerate_regions(2, 3)) {
    EXPECT_EQ(tropbip::negate_region(tropbip::negate_region(r)), r);
    EXPECT_NE(r.is_positive(), tropbip::negate_region(r).is_positive());
  }
}

TEST(BlockStats, ReadsRuns) {
  using tropbip::Block;
  using tropbip::Sign;
  const auto a = tropbip::block_stats(RegionLabel::parse("1 1' 2' 2"));
  EXPECT_EQ(a.first, 1U);
  EXPECT_EQ(a.last, 1U);
  EXPECT_EQ(a.blocks, (std::vector<Block>{{Sign::Positive, 1}, {Sign::Negative, 2}, {Sign::Positive, 1}}));
  const auto b = tropbip::block_stats(RegionLabel::parse("1 2 1' 2'"));
  EXPECT_EQ(b.first, 2U);
  EXPECT_EQ(b.last, 2U);
  const auto c = tropbip::block_stats(RegionLabel::parse("2' 4' 3 1' 1 2 3' 5'"));
  EXPECT_EQ(c.first, 2U);
  EXPECT_EQ(c.last, 2U);
  EXPECT_EQ(c.blocks, (std::vector<Block>{{Sign::Negative, 2},
                                          {Sign::Positive, 1},
                                          {Sign::Negative, 1},
                                          {Sign::Positive, 2},
                                          {Sign::Negative, 2}}));
}
