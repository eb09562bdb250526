#include "tropbip/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Number of positive / negative letters, checking each index appears once.
std::pair<int, int> infer_shape(const std::vector<Letter>& letters) {
  int m = 0, n = 0;
  for (const auto& l : letters) (l.sign == Sign::Positive ? m : n)++;
  std::vector<int> seen_row(m + 1, 0), seen_col(n + 1, 0);
  for (const auto& l : letters) {
    const int bound = l.sign == Sign::Positive ? m : n;
    if (l.index < 1 || l.index > bound) {
      throw StructuralError("letter " + l.str() + " out of range for shape (" +
                            std::to_string(m) + "," + std::to_string(n) + ")");
    }
    int& seen = l.sign == Sign::Positive ? seen_row[l.index] : seen_col[l.index];
    if (seen++) throw StructuralError("letter " + l.str() + " repeated");
  }
  return {m, n};
}

}  // namespace

std::string Letter::str() const {
  return std::to_string(index) + (sign == Sign::Negative ? "'" : "");
}

Letter Letter::parse(std::string_view text) {
  Sign sign = Sign::Positive;
  if (!text.empty() && text.back() == '\'') {
    sign = Sign::Negative;
    text.remove_suffix(1);
  }
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw StructuralError("malformed letter '" + std::string(text) + "'");
  }
  const int index = std::stoi(std::string(text));
  if (index < 1) throw StructuralError("letter index must be >= 1");
  return {sign, index};
}

RegionLabel::RegionLabel(int m, int n, std::vector<Letter> letters)
    : m_(m), n_(n), letters_(std::move(letters)) {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
  if (letters_.size() != static_cast<std::size_t>(m + n)) {
    throw StructuralError("label length does not match m + n");
  }
  row_pos_.assign(m, letters_.size());
  col_pos_.assign(n, letters_.size());
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    const Letter& l = letters_[p];
    auto& slot = l.sign == Sign::Positive ? row_pos_ : col_pos_;
    if (l.index < 1 || l.index > static_cast<int>(slot.size())) {
      throw StructuralError("letter " + l.str() + " out of range");
    }
    if (slot[l.index - 1] != letters_.size()) throw StructuralError("letter " + l.str() + " repeated");
    slot[l.index - 1] = p;
    if (p > 0 && letters_[p - 1].sign == l.sign && letters_[p - 1].index > l.index) {
      throw StructuralError("label not normalised: " + letters_[p - 1].str() + " before " +
                            l.str());
    }
  }
}

RegionLabel RegionLabel::normalized(int m, int n, std::vector<Letter> letters) {
  std::size_t start = 0;
  for (std::size_t p = 1; p <= letters.size(); ++p) {
    if (p == letters.size() || letters[p].sign != letters[start].sign) {
      std::sort(letters.begin() + static_cast<std::ptrdiff_t>(start),
                letters.begin() + static_cast<std::ptrdiff_t>(p));
      start = p;
    }
  }
  return RegionLabel(m, n, std::move(letters));
}

RegionLabel RegionLabel::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (auto tok : split_ws(text)) letters.push_back(Letter::parse(tok));
  const auto [m, n] = infer_shape(letters);
  return RegionLabel(m, n, std::move(letters));
}

std::string RegionLabel::str() const {
  std::string out;
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    if (p) out += ' ';
    out += letters_[p].str();
  }
  return out;
}

bool RegionLabel::is_positive() const {
  if (m_ == 0 || n_ == 0) return true;
  return precedes(1, 1);
}

std::ostream& operator<<(std::ostream& os, const RegionLabel& r) { return os << r.str(); }

BlockKind FaceBlock::kind() const {
  if (rows.empty()) return BlockKind::Negative;
  if (cols.empty()) return BlockKind::Positive;
  return BlockKind::Mixed;
}

FaceLabel::FaceLabel(int m, int n, std::vector<FaceBlock> blocks)
    : m_(m), n_(n), blocks_(std::move(blocks)) {
  std::vector<int> row_seen(m + 1, 0), col_seen(n + 1, 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& blk = blocks_[b];
    if (blk.size() == 0) throw StructuralError("empty face block");
    std::sort(blk.rows.begin(), blk.rows.end());
    std::sort(blk.cols.begin(), blk.cols.end());
    for (int i : blk.rows) {
      if (i < 1 || i > m || row_seen[i]++) throw StructuralError("bad positive letter in face");
    }
    for (int j : blk.cols) {
      if (j < 1 || j > n || col_seen[j]++) throw StructuralError("bad negative letter in face");
    }
    if (b > 0) {
      const BlockKind prev = blocks_[b - 1].kind();
      if (prev != BlockKind::Mixed && prev == blk.kind()) {
        throw StructuralError("two consecutive unmixed face blocks of the same sign");
      }
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (!row_seen[i]) throw StructuralError("face misses letter " + std::to_string(i));
  }
  for (int j = 1; j <= n; ++j) {
    if (!col_seen[j]) throw StructuralError("face misses letter " + std::to_string(j) + "'");
  }
}

FaceLabel FaceLabel::parse(std::string_view text) {
  std::vector<FaceBlock> blocks;
  std::vector<Letter> all;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '[') throw StructuralError("face label: expected '['");
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) throw StructuralError("face label: missing ']'");
    FaceBlock blk;
    for (auto tok : split_ws(text.substr(i + 1, close - i - 1))) {
      const Letter l = Letter::parse(tok);
      all.push_back(l);
      (l.sign == Sign::Positive ? blk.rows : blk.cols).push_back(l.index);
    }
    blocks.push_back(std::move(blk));
    i = close + 1;
  }
  const auto [m, n] = infer_shape(all);
  return FaceLabel(m, n, std::move(blocks));
}

std::string FaceLabel::str() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    out += '[';
    bool first = true;
    for (int i : blocks_[b].rows) {
      out += (first ? "" : " ") + std::to_string(i);
      first = false;
    }
    for (int j : blocks_[b].cols) {
      out += (first ? "" : " ") + std::to_string(j) + "'";
      first = false;
    }
    out += ']';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FaceLabel& f) { return os << f.str(); }

Orientation::Orientation(int m, int n) : m_(m), n_(n), edges_(static_cast<std::size_t>(m) * n) {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
}

bool Orientation::is_acyclic() const {
  // Kahn's algorithm on the m + n vertices; rows are 0..m-1, columns m..m+n-1.
  std::vector<int> indeg(m_ + n_, 0);
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) ++indeg[toward_col(i, j) ? m_ + j - 1 : i - 1];
  }
  std::vector<int> queue;
  for (int v = 0; v < m_ + n_; ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    const int v = queue[head++];
    if (v < m_) {
      for (int j = 1; j <= n_; ++j) {
        if (toward_col(v + 1, j) && --indeg[m_ + j - 1] == 0) queue.push_back(m_ + j - 1);
      }
    } else {
      for (int i = 1; i <= m_; ++i) {
        if (!toward_col(i, v - m_ + 1) && --indeg[i - 1] == 0) queue.push_back(i - 1);
      }
    }
  }
  return queue.size() == static_cast<std::size_t>(m_ + n_);
}

RegionLabel region_from_precedence(int m, int n, const std::function<bool(int, int)>& before) {
  // Rows sorted by how many columns precede them, columns by how many rows
  // precede them; a merge then interleaves the two.
  std::vector<std::pair<int, int>> rows, cols;
  for (int i = 1; i <= m; ++i) {
    int c = 0;
    for (int j = 1; j <= n; ++j) c += before(i, j) ? 0 : 1;
    rows.emplace_back(c, i);
  }
  for (int j = 1; j <= n; ++j) {
    int c = 0;
    for (int i = 1; i <= m; ++i) c += before(i, j) ? 1 : 0;
    cols.emplace_back(c, j);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::vector<Letter> letters;
  std::size_t a = 0, b = 0;
  while (a < rows.size() || b < cols.size()) {
    if (b == cols.size() || (a < rows.size() && before(rows[a].second, cols[b].second))) {
      letters.push_back(pos(rows[a++].second));
    } else {
      letters.push_back(neg(cols[b++].second));
    }
  }
  RegionLabel r = RegionLabel::normalized(m, n, std::move(letters));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (r.precedes(i, j) != before(i, j)) throw NotAcyclic("precedence is not realisable");
    }
  }
  return r;
}

RegionLabel region_of_point(const XYPoint& p) {
  const int m = static_cast<int>(p.x.size());
  const int n = static_cast<int>(p.y.size());
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (p.x[i - 1] == p.y[j - 1]) throw OnHyperplane(i, j);
    }
  }
  return region_from_precedence(m, n, [&](int i, int j) { return p.x[i - 1] < p.y[j - 1]; });
}

FaceLabel face_of_point(const XYPoint& p) {
  const int m = static_cast<int>(p.x.size());
  const int n = static_cast<int>(p.y.size());
  // Group coordinates by value, in increasing order.
  std::map<Rat, FaceBlock> by_value;
  for (int i = 1; i <= m; ++i) by_value[p.x[i - 1]].rows.push_back(i);
  for (int j = 1; j <= n; ++j) by_value[p.y[j - 1]].cols.push_back(j);
  std::vector<FaceBlock> blocks;
  for (auto& [value, group] : by_value) {
    if (!blocks.empty() && group.kind() != BlockKind::Mixed &&
        blocks.back().kind() == group.kind()) {
      // No opposite-sign coordinate separates the two groups.
      auto& tail = blocks.back();
      tail.rows.insert(tail.rows.end(), group.rows.begin(), group.rows.end());
      tail.cols.insert(tail.cols.end(), group.cols.begin(), group.cols.end());
    } else {
      blocks.push_back(std::move(group));
    }
  }
  return FaceLabel(m, n, std::move(blocks));
}

std::size_t face_dimension(const FaceLabel& f) {
  std::size_t d = 0;
  for (const auto& b : f.blocks()) d += b.kind() == BlockKind::Mixed ? 1 : b.size();
  return d;
}

void for_each_region(int m, int n, const std::function<void(const RegionLabel&)>& visit) {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
  std::vector<Letter> alphabet;
  for (int k = 1; k <= std::max(m, n); ++k) {
    if (k <= m) alphabet.push_back(pos(k));
    if (k <= n) alphabet.push_back(neg(k));
  }
  std::vector<bool> used(alphabet.size(), false);
  std::vector<Letter> current;
  current.reserve(alphabet.size());
  std::function<void()> extend = [&]() {
    if (current.size() == alphabet.size()) {
      visit(RegionLabel(m, n, current));
      return;
    }
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (used[a]) continue;
      const Letter& l = alphabet[a];
      if (!current.empty() && current.back().sign == l.sign && current.back().index > l.index) {
        continue;
      }
      used[a] = true;
      // With no letters of the other sign left, the rest must extend this run.
      bool other_left = false;
      bool completable = true;
      for (std::size_t b = 0; b < alphabet.size(); ++b) {
        if (used[b]) continue;
        if (alphabet[b].sign != l.sign) other_left = true;
        else if (alphabet[b].index < l.index) completable = false;
      }
      if (!other_left && !completable) {
        used[a] = false;
        continue;
      }
      current.push_back(l);
      extend();
      current.pop_back();
      used[a] = false;
    }
  };
  extend();
}

std::vector<RegionLabel> enumerate_regions(int m, int n) {
  std::vector<RegionLabel> out;
  for_each_region(m, n, [&](const RegionLabel& r) { out.push_back(r); });
  return out;
}

void for_each_face(int m, int n, const std::function<void(const FaceLabel&)>& visit) {
  if (m < 0 || n < 0 || m > 20 || n > 20) throw StructuralError("face enumeration shape out of range");
  const unsigned full_rows = (1u << m) - 1;
  const unsigned full_cols = (1u << n) - 1;
  std::vector<FaceBlock> current;
  std::function<void(unsigned, unsigned)> extend = [&](unsigned rows_left, unsigned cols_left) {
    if (rows_left == 0 && cols_left == 0) {
      visit(FaceLabel(m, n, current));
      return;
    }
    const BlockKind prev = current.empty() ? BlockKind::Mixed : current.back().kind();
    // Subsets of the remaining letters, in decreasing mask order.
    for (unsigned rs = rows_left;; rs = (rs - 1) & rows_left) {
      for (unsigned cs = cols_left;; cs = (cs - 1) & cols_left) {
        if (rs != 0 || cs != 0) {
          FaceBlock blk;
          for (int i = 0; i < m; ++i) {
            if (rs >> i & 1u) blk.rows.push_back(i + 1);
          }
          for (int j = 0; j < n; ++j) {
            if (cs >> j & 1u) blk.cols.push_back(j + 1);
          }
          const BlockKind k = blk.kind();
          if (k == BlockKind::Mixed || k != prev) {
            current.push_back(std::move(blk));
            extend(rows_left & ~rs, cols_left & ~cs);
            current.pop_back();
          }
        }
        if (cs == 0) break;
      }
      if (rs == 0) break;
    }
  };
  extend(full_rows, full_cols);
}

std::vector<FaceLabel> enumerate_faces(int m, int n) {
  std::vector<FaceLabel> out;
  for_each_face(m, n, [&](const FaceLabel& f) { out.push_back(f); });
  return out;
}

Orientation orientation_of(const RegionLabel& r) {
  Orientation o(r.m(), r.n());
  for (int i = 1; i <= r.m(); ++i) {
    for (int j = 1; j <= r.n(); ++j) o.set_toward_col(i, j, r.precedes(i, j));
  }
  return o;
}

RegionLabel region_of_orientation(const Orientation& o) {
  if (!o.is_acyclic()) throw NotAcyclic("orientation contains a directed cycle");
  return region_from_precedence(o.m(), o.n(), [&](int i, int j) { return o.toward_col(i, j); });
}

RegionLabel negate_region(const RegionLabel& r) {
  std::vector<Letter> letters(r.letters().rbegin(), r.letters().rend());
  return RegionLabel::normalized(r.m(), r.n(), std::move(letters));
}

BlockStats block_stats(const RegionLabel& r) {
  BlockStats s;
  for (const auto& l : r.letters()) {
    if (s.blocks.empty() || s.blocks.back().sign != l.sign) {
      s.blocks.push_back({l.sign, 1});
    } else {
      ++s.blocks.back().size;
    }
  }
  if (!s.blocks.empty()) {
    s.first = s.blocks.front().size;
    s.last = s.blocks.back().size;
  }
  return s;
}

}  // namespace tropbip
