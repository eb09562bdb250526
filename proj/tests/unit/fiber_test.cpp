#include <gtest/gtest.h>

#include <set>

#include "tropbip/cells.hpp"
#include "tropbip/errors.hpp"
#include "tropbip/fiber.hpp"
#include "tropbip/random.hpp"

using tropbip::CellTable;
using tropbip::Color;
using tropbip::FiberDescription;
using tropbip::MatrixPoint;
using tropbip::ParamFamily;
using tropbip::ParamPoint;
using tropbip::ParamRef;
using tropbip::Rat;
using tropbip::RegionAtlas;
using tropbip::RegionLabel;

namespace {

Rat& slot(ParamPoint& p, const ParamRef& r) {
  switch (r.family) {
    case ParamFamily::a: return p.a[r.index - 1];
    case ParamFamily::A: return p.A[r.index - 1];
    case ParamFamily::b: return p.b[r.index - 1];
    case ParamFamily::B: break;
  }
  return p.B[r.index - 1];
}

std::set<std::string> region_names(const FiberDescription& f) {
  std::set<std::string> out;
  for (const auto& r : f.regions) out.insert(r.label.str());
  return out;
}

Rat apex_value(const FiberDescription& f, const std::string& name) {
  for (const auto& [ref, v] : f.apex) {
    if (ref.str() == name) return v;
  }
  ADD_FAILURE() << "no apex entry " << name;
  return Rat(0);
}

void expect_quadrants_map_to(const FiberDescription& f, const MatrixPoint& g, tropbip::Rng& rng) {
  for (const auto& region : f.regions) {
    EXPECT_EQ(tropbip::eval_g(region.base), g) << region.label;
    for (int s = 0; s < 10; ++s) {
      ParamPoint p = region.base;
      for (const auto& fp : region.free) {
        slot(p, fp.param) = fp.lower_bound + Rat(1 + static_cast<long>(rng() % 40), 7);
      }
      EXPECT_EQ(tropbip::eval_g(p), g) << region.label;
      EXPECT_EQ(tropbip::region_of_point(p.xy()), region.label);
    }
  }
}

// True when some Delta vanishes at g without vanishing on the whole linear
// span of the image of r, so that g lies on a wall between cells.
bool on_wall(const MatrixPoint& g, const RegionLabel& r) {
  const int m = static_cast<int>(g.rows()), n = static_cast<int>(g.cols());
  std::vector<tropbip::LinearForm> span;
  for (const auto& e : tropbip::span_equalities(tropbip::diagram_of(r))) span.push_back(e.form(m, n));
  const std::size_t rank = tropbip::affine_rank(span);
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1 + 1; i2 <= m; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2) {
          if (!tropbip::delta(g, i1, i2, j1, j2).is_zero()) continue;
          auto with = span;
          with.push_back(tropbip::RectRelation{i1, i2, j1, j2, tropbip::RelKind::Eq}.form(m, n));
          if (tropbip::affine_rank(with) > rank) return true;
        }
  return false;
}

}  // namespace

TEST(GenericFiber, TwoByTwoAnchor) {
  const MatrixPoint g(2, 2, {3, 1, 0, 2});
  const auto f = tropbip::generic_fiber(g, 0, 0);
  EXPECT_TRUE(f.degenerate);
  EXPECT_EQ(region_names(f),
            (std::set<std::string>{"1 1' 2 2'", "1' 1 2 2'", "1 1' 2' 2", "1' 1 2' 2"}));
  EXPECT_EQ(apex_value(f, "a_2"), Rat(2));
  EXPECT_EQ(apex_value(f, "b_1"), Rat(2));
  EXPECT_EQ(apex_value(f, "B_2"), Rat(2));
  EXPECT_EQ(apex_value(f, "A_1"), Rat(3));
  EXPECT_EQ(f.apex_point.A[1], Rat(0));
  EXPECT_EQ(f.apex_point.b[1], Rat(0));
  EXPECT_EQ(f.free_dof.size(), 2U);

  bool saw_black_black = false;
  for (const auto& r : f.regions) {
    if (r.corner_nw != Color::Black || r.corner_se != Color::Black) continue;
    saw_black_black = true;
    std::set<std::string> names{r.free[0].param.str(), r.free[1].param.str()};
    EXPECT_EQ(names, (std::set<std::string>{"a_2", "b_1"}));
    EXPECT_EQ(r.free[0].lower_bound, Rat(2));
    EXPECT_EQ(r.free[1].lower_bound, Rat(2));
    ParamPoint p = r.base;
    p.a[1] = 3;
    p.b[0] = 3;
    EXPECT_EQ(tropbip::eval_g(p), g);
  }
  EXPECT_TRUE(saw_black_black);
  tropbip::Rng rng(1);
  expect_quadrants_map_to(f, g, rng);
}

TEST(GenericFiber, CornerFlipsOfOppositeCell) {
  const auto f = tropbip::generic_fiber(MatrixPoint(2, 2, {0, 2, 1, 0}));
  EXPECT_EQ(region_names(f),
            (std::set<std::string>{"1 2' 2 1'", "2' 1 2 1'", "1 1' 2' 2", "2' 1 1' 2"}));
}

TEST(GenericFiber, NonGenericPointIsRejected) {
  EXPECT_THROW(tropbip::generic_fiber(MatrixPoint(2, 2)), tropbip::NotGeneric);
}

TEST(GenericFiber, PinsAreHonoured) {
  const MatrixPoint g(2, 2, {3, 1, 0, 2});
  const auto f = tropbip::generic_fiber(g, Rat(5), Rat(-1, 2));
  EXPECT_EQ(f.apex_point.A[1], Rat(5));
  EXPECT_EQ(f.apex_point.b[1], Rat(-1, 2));
  EXPECT_EQ(tropbip::eval_g(f.apex_point), g);
}

TEST(GenericFiber, RandomThreeByThreeStructure) {
  const auto table = CellTable::build(RegionAtlas::build(3, 3));
  tropbip::Rng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = tropbip::random_generic_param_point(rng, 3, 3);
    const auto g = tropbip::eval_g(p);
    // Points of non-maximal regions have lower-dimensional images, and points
    // on a wall Delta = 0 lie on the boundary of small cells.
    const auto r = tropbip::region_of_point(p.xy());
    if (tropbip::cell_size_class(r) == tropbip::SizeClass::NotMaximal || on_wall(g, r)) {
      continue;
    }
    FiberDescription f;
    ASSERT_NO_THROW(f = tropbip::generic_fiber(g, table)) << g;
    ++checked;
    EXPECT_FALSE(f.degenerate);
    ASSERT_EQ(f.regions.size(), 4U);
    EXPECT_EQ(region_names(f).size(), 4U);
    const auto d0 = tropbip::diagram_of(f.small_region);
    const int r1 = d0.row_order.front(), rm = d0.row_order.back();
    const int c1 = d0.col_order.front(), cn = d0.col_order.back();
    for (const auto& a : f.regions) {
      for (const auto& b : f.regions) EXPECT_NE(a.label, tropbip::negate_region(b.label));
    }
    for (const auto& region : f.regions) {
      const auto d = tropbip::diagram_of(region.label);
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          const bool corner = (i == r1 && j == c1) || (i == rm && j == cn);
          if (!corner) {
            EXPECT_EQ(d.color_of(i, j), d0.color_of(i, j)) << region.label;
          }
        }
      }
      EXPECT_EQ(d.color_of(r1, c1), region.corner_nw);
      EXPECT_EQ(d.color_of(rm, cn), region.corner_se);
    }
    expect_quadrants_map_to(f, g, rng);
  }
  EXPECT_GT(checked, 10);
}
