#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropbip/arrangement.hpp"
#include "tropbip/diagram.hpp"
#include "tropbip/rational.hpp"

namespace tropbip {

using MatrixPoint = RatMatrix;

// Domain point of the morphism: an m x 2 matrix [a | A] and a 2 x n matrix
// [b ; B]. Entry (i, j) of the image is min(a_i + b_j, A_i + B_j); the first
// sum is the "white" term, the second the "black" term.
struct ParamPoint {
  std::vector<Rat> a;
  std::vector<Rat> A;
  std::vector<Rat> b;
  std::vector<Rat> B;

  int m() const { return static_cast<int>(a.size()); }
  int n() const { return static_cast<int>(b.size()); }
  // Throws StructuralError when the four lengths are not (m, m, n, n).
  void validate() const;
  // x_i = a_i - A_i, y_j = B_j - b_j.
  XYPoint xy() const;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

MatrixPoint eval_g(const ParamPoint& p);

// Rank of the linear map (a, A, b, B) -> g restricted to region r, where each
// entry is a_i + b_j or A_i + B_j according to its colour.
std::size_t linearization_rank(const RegionLabel& r);

// Delta_{i1 i2 j1 j2}(G), 1-based indices.
Rat delta(const MatrixPoint& g, int i1, int i2, int j1, int j2);
Rat evaluate(const RectRelation& rel, const MatrixPoint& g);

// Explicit preimage of G inside the open region r: the black parameters solve
// A_i + B_j = g_ij on the black entries, the white ones a_i + b_j = g_ij on the
// white entries (gauges A_last = 0 and b_last = 0 in diagram order when those
// parameters are constrained), and each unconstrained parameter is set just
// above the largest value that would change the colour of its row or column.
// The result is re-evaluated; throws NotInOpenImage when G is not in g(r).
ParamPoint preimage_in_region(const MatrixPoint& g, const RegionLabel& r);

// Adds c to a, -c to b and d to A, -d to B so that A_m = pin_A_m and
// b_n = pin_b_n. The image is unchanged.
ParamPoint gauge_normalize(const ParamPoint& p, const Rat& pin_A_m, const Rat& pin_b_n);

// The two image-preserving shifts: (a += c, b -= c) and (A += d, B -= d).
ParamPoint gauge_shift(const ParamPoint& p, const Rat& white_shift, const Rat& black_shift);

enum class ParamFamily : unsigned char { a, A, b, B };
std::string to_string(ParamFamily f);

struct ParamRef {
  ParamFamily family;
  int index;  // 1-based
  std::string str() const;  // e.g. "a_2"
  friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

struct FreeParam {
  ParamRef param;
  Rat lower_bound;  // open bound: the parameter takes any value > lower_bound
};

struct FiberRegion {
  RegionLabel label;
  SizeClass size_class;
  Color corner_nw;
  Color corner_se;
  FreeParam free[2];
  ParamPoint base;  // the quadrant's apex point (free parameters at their bounds)
};

// Fiber of a generic image point in the gauge A_{m'} = pin_A, b_{n'} = pin_b,
// where m' and n' are the last row and column of the small cell's diagram.
struct FiberDescription {
  int m = 0;
  int n = 0;
  bool degenerate = false;  // set for m = 2 or n = 2
  RegionLabel small_region;
  ParamRef pinned[2];
  Rat pin_values[2];
  // Corner parameters of the common apex: a_{m'}, b_{1'}, B_{n'}, A_{1'} in
  // diagram coordinates, reported with original indices.
  std::vector<std::pair<ParamRef, Rat>> apex;
  ParamPoint apex_point;
  std::vector<FiberRegion> regions;  // always four
  std::vector<std::string> free_dof;  // the two gauge shifts
};

}  // namespace tropbip
