#include "tropbip/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "tropbip/errors.hpp"

namespace tropbip {

Color Diagram::color_of(int i, int j) const { return at(row_position(i), col_position(j)); }

std::size_t Diagram::row_position(int i) const {
  const auto it = std::find(row_order.begin(), row_order.end(), i);
  if (it == row_order.end()) throw StructuralError("row index out of range");
  return static_cast<std::size_t>(it - row_order.begin());
}

std::size_t Diagram::col_position(int j) const {
  const auto it = std::find(col_order.begin(), col_order.end(), j);
  if (it == col_order.end()) throw StructuralError("column index out of range");
  return static_cast<std::size_t>(it - col_order.begin());
}

RectRelation RectRelation::canonical() const {
  RectRelation r = *this;
  if (r.kind == RelKind::Eq) {
    if (r.i1 > r.i2) std::swap(r.i1, r.i2);
    if (r.j1 > r.j2) std::swap(r.j1, r.j2);
  } else if (r.i1 > r.i2) {
    std::swap(r.i1, r.i2);
    std::swap(r.j1, r.j2);
  }
  return r;
}

LinearForm RectRelation::form(int m, int n) const {
  if (i1 < 1 || i2 < 1 || i1 > m || i2 > m || j1 < 1 || j2 < 1 || j1 > n || j2 > n || i1 == i2 ||
      j1 == j2) {
    throw StructuralError("rectangle relation indices out of range");
  }
  LinearForm f(static_cast<std::size_t>(m) * n, Rat(0));
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i - 1) * n + (j - 1); };
  f[idx(i1, j1)] += Rat(1);
  f[idx(i2, j2)] += Rat(1);
  f[idx(i1, j2)] -= Rat(1);
  f[idx(i2, j1)] -= Rat(1);
  return f;
}

std::string RectRelation::str() const {
  std::ostringstream os;
  os << "D(" << i1 << ',' << i2 << ',' << j1 << ',' << j2 << ')'
     << (kind == RelKind::Eq ? " = 0" : " > 0");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RectRelation& r) { return os << r.str(); }

Diagram diagram_of(const RegionLabel& r) {
  Diagram d;
  d.m = r.m();
  d.n = r.n();
  for (const auto& l : r.letters()) {
    if (l.sign == Sign::Positive) {
      d.row_order.push_back(l.index);
      d.path += 'S';
    } else {
      d.col_order.push_back(l.index);
      d.path += 'E';
    }
  }
  d.colors.reserve(static_cast<std::size_t>(d.m) * d.n);
  for (int i : d.row_order) {
    for (int j : d.col_order) d.colors.push_back(r.precedes(i, j) ? Color::White : Color::Black);
  }
  return d;
}

RectType classify_rect(const Diagram& d, const Rect& box) {
  const std::size_t r0 = d.row_position(box.row_a), r1 = d.row_position(box.row_b);
  const std::size_t c0 = d.col_position(box.col_a), c1 = d.col_position(box.col_b);
  if (r0 >= r1 || c0 >= c1) throw StructuralError("rectangle corners not in diagram order");

  auto uniform = [&](std::size_t ra, std::size_t rb, std::size_t ca, std::size_t cb, Color& c) {
    c = d.at(ra, ca);
    for (std::size_t p = ra; p <= rb; ++p) {
      for (std::size_t q = ca; q <= cb; ++q) {
        if (d.at(p, q) != c) return false;
      }
    }
    return true;
  };
  Color top{}, bottom{};
  if (uniform(r0, r1, c0, c1, top)) return RectType::Monochromatic;
  for (std::size_t cut = r0 + 1; cut <= r1; ++cut) {
    if (uniform(r0, cut - 1, c0, c1, top) && uniform(cut, r1, c0, c1, bottom) && top != bottom) {
      return RectType::Sliced;
    }
  }
  for (std::size_t cut = c0 + 1; cut <= c1; ++cut) {
    if (uniform(r0, r1, c0, cut - 1, top) && uniform(r0, r1, cut, c1, bottom) && top != bottom) {
      return RectType::Sliced;
    }
  }
  return RectType::Jagged;
}

std::vector<RectRelation> relations_v1(const RegionLabel& r) {
  const Diagram d = diagram_of(r);
  std::vector<RectRelation> out;
  // Is there a letter of the given sign strictly between positions lo and hi?
  auto sign_between = [&](Sign s, std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo + 1; p < hi; ++p) {
      if (r.letters()[p].sign == s) return true;
    }
    return false;
  };
  for (std::size_t a = 0; a < d.row_order.size(); ++a) {
    for (std::size_t b = a + 1; b < d.row_order.size(); ++b) {
      const int i1 = d.row_order[a], i2 = d.row_order[b];
      const std::size_t pi1 = r.row_position(i1), pi2 = r.row_position(i2);
      for (std::size_t c = 0; c < d.col_order.size(); ++c) {
        for (std::size_t e = c + 1; e < d.col_order.size(); ++e) {
          const int j1 = d.col_order[c], j2 = d.col_order[e];
          const std::size_t pj1 = r.col_position(j1), pj2 = r.col_position(j2);
          bool eq = (pi2 < pj1) || (pj2 < pi1);
          bool gt = (pi1 < pj1 && pj1 < pi2 && pi2 < pj2) ||
                    (pj1 < pi1 && pi1 < pj2 && pj2 < pi2) ||
                    (pi1 < pj1 && pj2 < pi2 && sign_between(Sign::Positive, pj1, pj2)) ||
                    (pj1 < pi1 && pi2 < pj2 && sign_between(Sign::Negative, pi1, pi2));
          if (eq) out.push_back({i1, i2, j1, j2, RelKind::Eq});
          else if (gt) out.push_back({i1, i2, j1, j2, RelKind::Gt});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RectRelation> relations_v2(const Diagram& d) {
  std::vector<RectRelation> out;
  for (std::size_t a = 0; a < d.row_order.size(); ++a) {
    for (std::size_t b = a + 1; b < d.row_order.size(); ++b) {
      for (std::size_t c = 0; c < d.col_order.size(); ++c) {
        for (std::size_t e = c + 1; e < d.col_order.size(); ++e) {
          const Rect box{d.row_order[a], d.row_order[b], d.col_order[c], d.col_order[e]};
          switch (classify_rect(d, box)) {
            case RectType::Monochromatic:
              out.push_back({box.row_a, box.row_b, box.col_a, box.col_b, RelKind::Eq});
              break;
            case RectType::Jagged:
              out.push_back({box.row_a, box.row_b, box.col_a, box.col_b, RelKind::Gt});
              break;
            case RectType::Sliced:
              break;
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RectRelation> span_equalities(const Diagram& d) {
  std::vector<RectRelation> out;
  for (std::size_t a = 0; a < d.row_order.size(); ++a) {
    for (std::size_t b = a + 1; b < d.row_order.size(); ++b) {
      for (std::size_t c = 0; c < d.col_order.size(); ++c) {
        for (std::size_t e = c + 1; e < d.col_order.size(); ++e) {
          const Color k = d.at(a, c);
          if (d.at(a, e) == k && d.at(b, c) == k && d.at(b, e) == k) {
            out.push_back({d.row_order[a], d.row_order[b], d.col_order[c], d.col_order[e],
                           RelKind::Eq});
          }
        }
      }
    }
  }
  return canonical_set(out);
}

std::vector<RectRelation> canonical_set(const std::vector<RectRelation>& rels) {
  std::vector<RectRelation> out;
  out.reserve(rels.size());
  for (const auto& r : rels) out.push_back(r.canonical());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t image_dimension(const RegionLabel& r) {
  const int m = r.m(), n = r.n();
  if (m == 0 || n == 0) return 0;
  const BlockStats s = block_stats(r);
  if (s.blocks.size() == 2) return static_cast<std::size_t>(m + n - 1);
  return static_cast<std::size_t>(2 * m + 2 * n - 2) - s.first - s.last;
}

std::string to_string(SizeClass c) {
  switch (c) {
    case SizeClass::Small: return "small";
    case SizeClass::Medium: return "medium";
    case SizeClass::Large: return "large";
    case SizeClass::NotMaximal: break;
  }
  return "notMaximal";
}

SizeClass parse_size_class(const std::string& s) {
  if (s == "small") return SizeClass::Small;
  if (s == "medium") return SizeClass::Medium;
  if (s == "large") return SizeClass::Large;
  if (s == "notMaximal") return SizeClass::NotMaximal;
  throw StructuralError("unknown size class '" + s + "'");
}

SizeClass cell_size_class(const RegionLabel& r) {
  if (r.m() < 2 || r.n() < 2) return SizeClass::NotMaximal;
  const BlockStats s = block_stats(r);
  if (s.first != 1 || s.last != 1) return SizeClass::NotMaximal;
  const std::size_t second = s.blocks[1].size;
  const std::size_t second_last = s.blocks[s.blocks.size() - 2].size;
  const bool a = second == 1, b = second_last == 1;
  if (a && b) return SizeClass::Small;
  if (!a && !b) return SizeClass::Large;
  return SizeClass::Medium;
}

std::string render(const Diagram& d) {
  std::ostringstream os;
  os << "    ";
  for (int j : d.col_order) os << ' ' << j << '\'';
  os << '\n';
  for (std::size_t p = 0; p < d.row_order.size(); ++p) {
    os << (d.row_order[p] < 10 ? "  " : " ") << d.row_order[p] << ' ';
    for (std::size_t q = 0; q < d.col_order.size(); ++q) {
      const std::string w = std::to_string(d.col_order[q]) + "'";
      os << std::string(w.size(), ' ') << (d.at(p, q) == Color::White ? 'W' : 'B');
    }
    os << '\n';
  }
  os << "path " << d.path << '\n';
  return os.str();
}

}  // namespace tropbip
