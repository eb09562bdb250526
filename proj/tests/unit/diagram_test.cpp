#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tropbip/arrangement.hpp"
#include "tropbip/diagram.hpp"
#include "tropbip/morphism.hpp"

using tropbip::Color;
using tropbip::RegionLabel;
using tropbip::RelKind;

namespace {

const char* kWorkedA35 = "2' 4' 3 1' 1 2 3' 5'";

std::string row_colors(const tropbip::Diagram& d, std::size_t row) {
  std::string s;
  for (int c = 0; c < d.n; ++c) s += d.at(row, c) == Color::White ? 'W' : 'B';
  return s;
}

std::set<std::string> as_text(const std::vector<tropbip::RectRelation>& rels) {
  std::set<std::string> out;
  for (const auto& r : rels) out.insert(r.str());
  return out;
}

}  // namespace

// Region of A_{3,5} with y2,y4 < x3 < y1 < x1,x2 < y3,y5.
TEST(Diagram, WorkedA35Colors) {
  const auto d = tropbip::diagram_of(RegionLabel::parse(kWorkedA35));
  EXPECT_EQ(d.row_order, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(d.col_order, (std::vector<int>{2, 4, 1, 3, 5}));
  EXPECT_EQ(row_colors(d, 0), "BBWWW");
  EXPECT_EQ(row_colors(d, 1), "BBBWW");
  EXPECT_EQ(row_colors(d, 2), "BBBWW");
}

TEST(Diagram, ColorsFollowPairwiseOrder) {
  for (const auto& r : tropbip::enumerate_regions(3, 3)) {
    const auto d = tropbip::diagram_of(r);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        EXPECT_EQ(d.color_of(i, j) == Color::White, r.precedes(i, j)) << r;
      }
    }
  }
}

TEST(Diagram, Monochrome) {
  const auto white = tropbip::diagram_of(RegionLabel::parse("1 2 1' 2'"));
  const auto black = tropbip::diagram_of(RegionLabel::parse("1' 2' 1 2"));
  EXPECT_TRUE(std::all_of(white.colors.begin(), white.colors.end(),
                          [](Color c) { return c == Color::White; }));
  EXPECT_TRUE(std::all_of(black.colors.begin(), black.colors.end(),
                          [](Color c) { return c == Color::Black; }));
}

TEST(ClassifyRect, WorkedA35Boxes) {
  const auto d = tropbip::diagram_of(RegionLabel::parse(kWorkedA35));
  EXPECT_EQ(tropbip::classify_rect(d, {3, 1, 2, 4}), tropbip::RectType::Monochromatic);
  EXPECT_EQ(tropbip::classify_rect(d, {1, 2, 1, 3}), tropbip::RectType::Sliced);
  EXPECT_EQ(tropbip::classify_rect(d, {3, 2, 4, 1}), tropbip::RectType::Jagged);
}

TEST(Relations, TwoByTwoAnchors) {
  const auto jag = RegionLabel::parse("1 1' 2 2'");
  const auto v1 = tropbip::relations_v1(jag);
  ASSERT_EQ(v1.size(), 1U);
  EXPECT_EQ(v1[0].kind, RelKind::Gt);
  EXPECT_EQ(v1[0].form(2, 2), (tropbip::LinearForm{1, -1, -1, 1}));
  EXPECT_EQ(as_text(tropbip::relations_v2(tropbip::diagram_of(jag))), as_text(v1));

  const auto white = RegionLabel::parse("1 2 1' 2'");
  const auto eq = tropbip::relations_v1(white);
  ASSERT_EQ(eq.size(), 1U);
  EXPECT_EQ(eq[0].kind, RelKind::Eq);
  EXPECT_EQ(as_text(tropbip::relations_v2(tropbip::diagram_of(white))), as_text(eq));

  const auto sliced = RegionLabel::parse("1 1' 2' 2");
  EXPECT_TRUE(tropbip::relations_v1(sliced).empty());
  EXPECT_TRUE(tropbip::relations_v2(tropbip::diagram_of(sliced)).empty());
}

TEST(Relations, VersionsAgreeOnSmallArrangements) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& r : tropbip::enumerate_regions(m, n)) {
        EXPECT_EQ(tropbip::canonical_set(tropbip::relations_v1(r)),
                  tropbip::canonical_set(tropbip::relations_v2(tropbip::diagram_of(r))))
            << r;
      }
    }
  }
}

// Relations hold at the image of an interior point, with the stated sign.
TEST(Relations, HoldAtImagePoints) {
  for (const auto& r : tropbip::enumerate_regions(3, 3)) {
    const auto g = tropbip::eval_g(oracle::point_in_region(r));
    for (const auto& rel : tropbip::relations_v2(tropbip::diagram_of(r))) {
      const auto v = tropbip::evaluate(rel, g);
      if (rel.kind == RelKind::Eq) {
        EXPECT_TRUE(v.is_zero()) << r << " " << rel;
      } else {
        EXPECT_GT(v, tropbip::Rat(0)) << r << " " << rel;
      }
    }
  }
}

TEST(SpanEqualities, Anchors) {
  const auto white = tropbip::diagram_of(RegionLabel::parse("1 2 1' 2'"));
  const auto eqs = tropbip::span_equalities(white);
  ASSERT_EQ(eqs.size(), 1U);
  EXPECT_EQ(4 - tropbip::affine_rank({eqs[0].form(2, 2)}), 3U);
  EXPECT_TRUE(tropbip::span_equalities(tropbip::diagram_of(RegionLabel::parse("1 1' 2 2'"))).empty());
}

TEST(ImageDimension, Anchors) {
  EXPECT_EQ(tropbip::image_dimension(RegionLabel::parse("1 1' 2 2'")), 4U);
  EXPECT_EQ(tropbip::image_dimension(RegionLabel::parse("1 2 1' 2'")), 3U);
  EXPECT_EQ(tropbip::image_dimension(RegionLabel::parse(kWorkedA35)), 10U);
}

TEST(ImageDimension, MatchesJacobianOracle) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& r : tropbip::enumerate_regions(m, n)) {
        EXPECT_EQ(tropbip::image_dimension(r), oracle::jacobian_rank(r)) << r;
      }
    }
  }
}

TEST(ImageDimension, MatchesSpanCodimension) {
  for (const auto& r : tropbip::enumerate_regions(3, 3)) {
    std::vector<tropbip::LinearForm> forms;
    for (const auto& e : tropbip::span_equalities(tropbip::diagram_of(r))) forms.push_back(e.form(3, 3));
    EXPECT_EQ(9 - tropbip::affine_rank(forms), tropbip::image_dimension(r)) << r;
  }
}

TEST(CellSizeClass, Anchors) {
  using tropbip::SizeClass;
  EXPECT_EQ(tropbip::cell_size_class(RegionLabel::parse("1 1' 2 2'")), SizeClass::Small);
  EXPECT_EQ(tropbip::cell_size_class(RegionLabel::parse("1 1' 2' 2")), SizeClass::Large);
  EXPECT_EQ(tropbip::cell_size_class(RegionLabel::parse("1 1' 2' 2 3'")), SizeClass::Medium);
  EXPECT_EQ(tropbip::cell_size_class(RegionLabel::parse("1 2 1' 2'")), SizeClass::NotMaximal);
  EXPECT_EQ(tropbip::parse_size_class(tropbip::to_string(SizeClass::Medium)), SizeClass::Medium);
}
