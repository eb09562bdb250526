#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropbip/cells.hpp"
#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

struct Entry {
  int i;
  int j;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Letters of `rows` and `cols` in the order dictated by col_first(i, j)
// ("y_j comes before x_i"), or an empty vector when that order is cyclic.
std::vector<Letter> order_segment(const std::vector<int>& rows, const std::vector<int>& cols,
                                  const std::function<bool(int, int)>& col_first) {
  const int p = static_cast<int>(rows.size()), q = static_cast<int>(cols.size());
  try {
    const RegionLabel local = region_from_precedence(p, q, [&](int a, int b) {
      return !col_first(rows[a - 1], cols[b - 1]);
    });
    std::vector<Letter> out;
    for (const auto& l : local.letters()) {
      out.push_back(l.sign == Sign::Positive ? pos(rows[l.index - 1]) : neg(cols[l.index - 1]));
    }
    return out;
  } catch (const NotAcyclic&) {
    return {};
  }
}

}  // namespace

std::vector<RegionLabel> recover_region_from_span(const std::vector<RectRelation>& eqs, int m,
                                                  int n) {
  if (m < 2 || n < 2) throw NoRegionFound("large cells need m, n >= 2");
  for (const auto& r : eqs) {
    if (r.kind != RelKind::Eq) throw StructuralError("span descriptions contain equalities only");
    (void)r.form(m, n);
  }
  const std::vector<RectRelation> target = canonical_set(eqs);
  const std::set<RectRelation> target_set(target.begin(), target.end());

  std::set<RegionLabel> found;
  auto accept = [&](const RegionLabel& r) {
    if (cell_size_class(r) == SizeClass::Large && span_equalities(diagram_of(r)) == target) {
      found.insert(r);
    }
  };

  auto at = [n](int i, int j) { return static_cast<std::size_t>(i - 1) * n + (j - 1); };
  DisjointSets sets(static_cast<std::size_t>(m) * n);
  std::vector<bool> touched(static_cast<std::size_t>(m) * n, false);
  for (const auto& r : target) {
    const std::size_t c[4] = {at(r.i1, r.j1), at(r.i1, r.j2), at(r.i2, r.j1), at(r.i2, r.j2)};
    for (std::size_t k : c) touched[k] = true;
    for (int k = 1; k < 4; ++k) sets.unite(c[0], c[k]);
  }
  std::map<std::size_t, std::vector<Entry>> classes;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (touched[at(i, j)]) classes[sets.find(at(i, j))].push_back({i, j});
    }
  }

  if (classes.empty()) {
    for_each_region(m, n, accept);
  }

  if (classes.size() == 1) {
    // One class: it is the black part of the diagram, or the white part.
    const std::vector<Entry>& cls = classes.begin()->second;
    const std::set<Entry> in_class(cls.begin(), cls.end());
    for (bool class_is_black : {true, false}) {
      try {
        accept(region_from_precedence(m, n, [&](int i, int j) {
          return in_class.count({i, j}) ? !class_is_black : class_is_black;
        }));
      } catch (const NotAcyclic&) {
      }
    }
  }

  // Entries sharing some equality.
  auto together = [&](const Entry& e, const Entry& f) {
    if (e.i == f.i && e.j == f.j) return true;
    for (const auto& r : target) {
      const bool has_e = (e.i == r.i1 || e.i == r.i2) && (e.j == r.j1 || e.j == r.j2);
      const bool has_f = (f.i == r.i1 || f.i == r.i2) && (f.j == r.j1 || f.j == r.j2);
      if (has_e && has_f) return true;
    }
    return false;
  };
  auto holds = [&](int i1, int i2, int j1, int j2) {
    return target_set.count(RectRelation{i1, i2, j1, j2, RelKind::Eq}.canonical()) > 0;
  };

  for (const auto& [root, cls] : classes) {
    for (const Entry& pivot : cls) {
      if (!std::all_of(cls.begin(), cls.end(),
                       [&](const Entry& f) { return together(pivot, f); })) {
        continue;
      }
      // Treat the pivot as the black south-west corner: its row is the last
      // positive letter, its column the first negative letter.
      const int is = pivot.i, js = pivot.j;
      std::vector<int> sigma_rows, sigma_cols, out_rows, out_cols;
      for (int i = 1; i <= m; ++i) {
        if (i == is) continue;
        bool any = false;
        for (int j = 1; j <= n && !any; ++j) any = j != js && holds(is, i, js, j);
        (any ? sigma_rows : out_rows).push_back(i);
      }
      for (int j = 1; j <= n; ++j) {
        if (j == js) continue;
        bool any = false;
        for (int i = 1; i <= m && !any; ++i) any = i != is && holds(is, i, js, j);
        (any ? sigma_cols : out_cols).push_back(j);
      }
      const std::vector<Letter> sigma = order_segment(
          sigma_rows, sigma_cols, [&](int i, int j) { return holds(is, i, js, j); });
      if (sigma.size() != sigma_rows.size() + sigma_cols.size()) continue;

      std::vector<Letter> letters;
      if (out_rows.size() == 1) letters.push_back(pos(out_rows.front()));
      letters.push_back(neg(js));
      if (out_rows.size() > 1) {
        for (int i : out_rows) letters.push_back(pos(i));
      }
      letters.insert(letters.end(), sigma.begin(), sigma.end());
      if (out_cols.size() > 1) {
        for (int j : out_cols) letters.push_back(neg(j));
      }
      letters.push_back(pos(is));
      if (out_cols.size() == 1) letters.push_back(neg(out_cols.front()));
      try {
        accept(RegionLabel::normalized(m, n, letters));
      } catch (const StructuralError&) {
      }
    }
  }

  if (found.empty()) throw NoRegionFound("no large region has this set of span equalities");
  return {found.begin(), found.end()};
}

}  // namespace tropbip
