#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "tropbip/arrangement.hpp"
#include "tropbip/linalg.hpp"
#include "tropbip/rational.hpp"

namespace tropbip {

// White: g_ij = a_i + b_j attains the minimum (x_i < y_j). Black: A_i + B_j.
enum class Color : unsigned char { White, Black };

// Rows and columns of g permuted into label order, coloured, and split by the
// monotone lattice path (S for a positive letter, E for a negative one).
struct Diagram {
  int m = 0;
  int n = 0;
  std::vector<int> row_order;  // 1-based row indices in label order
  std::vector<int> col_order;  // 1-based column indices in label order
  std::vector<Color> colors;   // row-major over diagram positions
  std::string path;

  Color at(std::size_t row_pos, std::size_t col_pos) const { return colors[row_pos * n + col_pos]; }
  // Colour of g_ij, original 1-based indices.
  Color color_of(int i, int j) const;
  std::size_t row_position(int i) const;
  std::size_t col_position(int j) const;
};

// A sub-rectangle of a diagram given by two rows and two columns (1-based
// original indices), with row_a before row_b and col_a before col_b in
// diagram order.
struct Rect {
  int row_a;
  int row_b;
  int col_a;
  int col_b;
};

enum class RectType : unsigned char { Monochromatic, Sliced, Jagged };

enum class RelKind : unsigned char { Eq, Gt };

// Delta_{i1 i2 j1 j2}(g) = g_{i1 j1} + g_{i2 j2} - g_{i1 j2} - g_{i2 j1}, either
// = 0 or > 0. Indices are 1-based original matrix indices.
struct RectRelation {
  int i1;
  int i2;
  int j1;
  int j2;
  RelKind kind;

  // Same relation, written with i1 < i2 (and j1 < j2 for equalities).
  RectRelation canonical() const;
  // Coefficients of Delta over the m*n entries (row-major).
  LinearForm form(int m, int n) const;
  std::string str() const;

  friend bool operator==(const RectRelation&, const RectRelation&) = default;
  friend auto operator<=>(const RectRelation&, const RectRelation&) = default;
};

std::ostream& operator<<(std::ostream& os, const RectRelation& r);

Diagram diagram_of(const RegionLabel& r);
RectType classify_rect(const Diagram& d, const Rect& box);

// Relations in diagram orientation, sorted.
std::vector<RectRelation> relations_v1(const RegionLabel& r);
std::vector<RectRelation> relations_v2(const Diagram& d);
// Equalities for every corner quadruple whose four corners share a colour.
std::vector<RectRelation> span_equalities(const Diagram& d);

// Sorted canonical forms, duplicates removed.
std::vector<RectRelation> canonical_set(const std::vector<RectRelation>& rels);

std::size_t image_dimension(const RegionLabel& r);

enum class SizeClass : unsigned char { NotMaximal, Small, Medium, Large };
std::string to_string(SizeClass c);
SizeClass parse_size_class(const std::string& s);

// For m < 2 or n < 2 every region is reported NotMaximal: there are no
// rectangles and the small/medium/large split is empty.
SizeClass cell_size_class(const RegionLabel& r);

// Multi-line text: header row, one line per row with B/W, then the path.
std::string render(const Diagram& d);

}  // namespace tropbip
