#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tropbip/rational.hpp"

namespace tropbip {

// Letters of a region label: positive letters 1..m stand for x_1..x_m (rows),
// negative letters 1'..n' for y_1..y_n (columns).
enum class Sign : unsigned char { Positive, Negative };

struct Letter {
  Sign sign;
  int index;  // 1-based

  std::string str() const;
  static Letter parse(std::string_view text);

  friend bool operator==(const Letter&, const Letter&) = default;
  // Enumeration order: 1 < 1' < 2 < 2' < ...
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.sign <=> b.sign;
  }
};

inline Letter pos(int i) { return {Sign::Positive, i}; }
inline Letter neg(int j) { return {Sign::Negative, j}; }

struct Block {
  Sign sign;
  std::size_t size;
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockStats {
  std::size_t first = 0;
  std::size_t last = 0;
  std::vector<Block> blocks;  // maximal same-sign runs
};

// A region of the arrangement x_i = y_j, recorded as the order of the
// coordinates. Consecutive letters of equal sign are always increasing.
class RegionLabel {
 public:
  // The single region of the empty arrangement (m = n = 0).
  RegionLabel() = default;
  // Validates that `letters` uses 1..m and 1'..n' exactly once each and is
  // normalised; throws StructuralError otherwise.
  RegionLabel(int m, int n, std::vector<Letter> letters);

  // Sorts every same-sign run, then validates.
  static RegionLabel normalized(int m, int n, std::vector<Letter> letters);
  // "2' 4' 3 1' 1 2 3' 5'"; m and n are inferred from the letters present.
  static RegionLabel parse(std::string_view text);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::string str() const;

  // 0-based position of x_i / y_j in the label (i, j 1-based).
  std::size_t row_position(int i) const { return row_pos_[i - 1]; }
  std::size_t col_position(int j) const { return col_pos_[j - 1]; }
  // True when x_i < y_j on the region.
  bool precedes(int i, int j) const { return row_pos_[i - 1] < col_pos_[j - 1]; }
  // Letter 1 before letter 1'.
  bool is_positive() const;

  friend bool operator==(const RegionLabel& a, const RegionLabel& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const RegionLabel& a, const RegionLabel& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.letters_ < b.letters_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Letter> letters_;
  std::vector<std::size_t> row_pos_;
  std::vector<std::size_t> col_pos_;
};

std::ostream& operator<<(std::ostream& os, const RegionLabel& r);

enum class BlockKind : unsigned char { Positive, Negative, Mixed };

struct FaceBlock {
  std::vector<int> rows;  // positive letters, ascending
  std::vector<int> cols;  // negative letters, ascending

  BlockKind kind() const;
  std::size_t size() const { return rows.size() + cols.size(); }
  friend bool operator==(const FaceBlock&, const FaceBlock&) = default;
  friend auto operator<=>(const FaceBlock&, const FaceBlock&) = default;
};

// A face of the arrangement as an ordered partition of the coordinates with no
// two consecutive unmixed blocks of the same sign.
class FaceLabel {
 public:
  FaceLabel(int m, int n, std::vector<FaceBlock> blocks);
  // "[1 3] [2' 5' 7'] [5] ..."; m and n inferred.
  static FaceLabel parse(std::string_view text);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<FaceBlock>& blocks() const { return blocks_; }
  std::string str() const;

  friend bool operator==(const FaceLabel&, const FaceLabel&) = default;

 private:
  int m_;
  int n_;
  std::vector<FaceBlock> blocks_;
};

std::ostream& operator<<(std::ostream& os, const FaceLabel& f);

// Orientation of K_{m,n}: toward_col(i, j) is true when u_i -> v_j.
class Orientation {
 public:
  Orientation(int m, int n);
  int m() const { return m_; }
  int n() const { return n_; }
  bool toward_col(int i, int j) const { return edges_[(i - 1) * n_ + (j - 1)]; }
  void set_toward_col(int i, int j, bool v) { edges_[(i - 1) * n_ + (j - 1)] = v; }
  bool is_acyclic() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int m_;
  int n_;
  std::vector<bool> edges_;
};

struct XYPoint {
  std::vector<Rat> x;  // x_i = a_i - A_i
  std::vector<Rat> y;  // y_j = B_j - b_j
};

// Throws OnHyperplane when some x_i == y_j.
RegionLabel region_of_point(const XYPoint& p);
FaceLabel face_of_point(const XYPoint& p);
std::size_t face_dimension(const FaceLabel& f);

// Regions in lexicographic order of their letter sequences.
void for_each_region(int m, int n, const std::function<void(const RegionLabel&)>& visit);
std::vector<RegionLabel> enumerate_regions(int m, int n);

void for_each_face(int m, int n, const std::function<void(const FaceLabel&)>& visit);
std::vector<FaceLabel> enumerate_faces(int m, int n);

Orientation orientation_of(const RegionLabel& r);
// Throws NotAcyclic on a cyclic orientation.
RegionLabel region_of_orientation(const Orientation& o);

RegionLabel negate_region(const RegionLabel& r);
BlockStats block_stats(const RegionLabel& r);

// Region whose label puts x_i before y_j exactly when before(i, j) holds
// (1-based). Throws NotAcyclic when no such order exists.
RegionLabel region_from_precedence(int m, int n, const std::function<bool(int, int)>& before);

}  // namespace tropbip
