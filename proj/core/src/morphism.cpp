#include "tropbip/morphism.hpp"

#include <algorithm>
#include <optional>

#include "tropbip/errors.hpp"
#include "tropbip/linalg.hpp"

namespace tropbip {

void ParamPoint::validate() const {
  if (A.size() != a.size() || B.size() != b.size()) {
    throw StructuralError("parameter vectors must have lengths (m, m, n, n)");
  }
}

XYPoint ParamPoint::xy() const {
  validate();
  XYPoint p;
  for (std::size_t i = 0; i < a.size(); ++i) p.x.push_back(a[i] - A[i]);
  for (std::size_t j = 0; j < b.size(); ++j) p.y.push_back(B[j] - b[j]);
  return p;
}

MatrixPoint eval_g(const ParamPoint& p) {
  p.validate();
  MatrixPoint g(p.a.size(), p.b.size());
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    for (std::size_t j = 0; j < p.b.size(); ++j) {
      g(i, j) = std::min(p.a[i] + p.b[j], p.A[i] + p.B[j]);
    }
  }
  return g;
}

std::size_t linearization_rank(const RegionLabel& r) {
  const int m = r.m(), n = r.n();
  const std::size_t vars = static_cast<std::size_t>(2 * m + 2 * n);
  std::vector<LinearForm> rows;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      LinearForm f(vars, Rat(0));
      const bool white = r.precedes(i, j);
      f[static_cast<std::size_t>((white ? 0 : m) + i - 1)] = Rat(1);
      f[static_cast<std::size_t>(2 * m + (white ? 0 : n) + j - 1)] = Rat(1);
      rows.push_back(std::move(f));
    }
  }
  return affine_rank(rows);
}

Rat delta(const MatrixPoint& g, int i1, int i2, int j1, int j2) {
  const int m = static_cast<int>(g.rows()), n = static_cast<int>(g.cols());
  if (i1 < 1 || i2 < 1 || i1 > m || i2 > m || j1 < 1 || j2 < 1 || j1 > n || j2 > n) {
    throw StructuralError("delta index out of range");
  }
  if (i1 == i2 || j1 == j2) throw StructuralError("delta needs two distinct rows and columns");
  return g(i1 - 1, j1 - 1) + g(i2 - 1, j2 - 1) - g(i1 - 1, j2 - 1) - g(i2 - 1, j1 - 1);
}

Rat evaluate(const RectRelation& rel, const MatrixPoint& g) {
  return delta(g, rel.i1, rel.i2, rel.j1, rel.j2);
}

namespace {

// Solves row[i] + col[j] = g_ij over the entries of one colour by propagation
// along the bipartite graph of those entries. Each connected component gets
// one parameter pinned to zero: root_row / root_col when they take part,
// otherwise the earliest row in diagram order.
struct BorderSolution {
  std::vector<std::optional<Rat>> rows;
  std::vector<std::optional<Rat>> cols;
  bool consistent = true;
};

BorderSolution solve_border(const MatrixPoint& g, const Diagram& d, Color color,
                            std::optional<int> root_row, std::optional<int> root_col) {
  const int m = d.m, n = d.n;
  BorderSolution s;
  s.rows.assign(m, std::nullopt);
  s.cols.assign(n, std::nullopt);
  auto has = [&](int i, int j) { return d.color_of(i, j) == color; };

  auto propagate = [&](bool from_row, int start) {
    std::vector<std::pair<bool, int>> stack{{from_row, start}};
    while (!stack.empty()) {
      auto [is_row, v] = stack.back();
      stack.pop_back();
      if (is_row) {
        for (int j = 1; j <= n; ++j) {
          if (!has(v, j) || s.cols[j - 1]) continue;
          s.cols[j - 1] = g(v - 1, j - 1) - *s.rows[v - 1];
          stack.emplace_back(false, j);
        }
      } else {
        for (int i = 1; i <= m; ++i) {
          if (!has(i, v) || s.rows[i - 1]) continue;
          s.rows[i - 1] = g(i - 1, v - 1) - *s.cols[v - 1];
          stack.emplace_back(true, i);
        }
      }
    }
  };
  auto row_used = [&](int i) {
    for (int j = 1; j <= n; ++j) {
      if (has(i, j)) return true;
    }
    return false;
  };
  auto col_used = [&](int j) {
    for (int i = 1; i <= m; ++i) {
      if (has(i, j)) return true;
    }
    return false;
  };
  if (root_row && row_used(*root_row)) {
    s.rows[*root_row - 1] = Rat(0);
    propagate(true, *root_row);
  }
  if (root_col && col_used(*root_col) && !s.cols[*root_col - 1]) {
    s.cols[*root_col - 1] = Rat(0);
    propagate(false, *root_col);
  }
  for (int i : d.row_order) {
    if (!s.rows[i - 1] && row_used(i)) {
      s.rows[i - 1] = Rat(0);
      propagate(true, i);
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (has(i, j) && *s.rows[i - 1] + *s.cols[j - 1] != g(i - 1, j - 1)) s.consistent = false;
    }
  }
  return s;
}

}  // namespace

ParamPoint preimage_in_region(const MatrixPoint& g, const RegionLabel& r) {
  const int m = r.m(), n = r.n();
  if (static_cast<int>(g.rows()) != m || static_cast<int>(g.cols()) != n) {
    throw StructuralError("matrix shape does not match region");
  }
  const Diagram d = diagram_of(r);
  for (const auto& rel : relations_v2(d)) {
    const int s = evaluate(rel, g).sign();
    if ((rel.kind == RelKind::Eq && s != 0) || (rel.kind == RelKind::Gt && s <= 0)) {
      throw NotInOpenImage("matrix violates " + rel.str() + " of region " + r.str());
    }
  }
  const int last_row = d.row_order.back();
  const int last_col = d.col_order.back();
  const BorderSolution black = solve_border(g, d, Color::Black, last_row, std::nullopt);
  const BorderSolution white = solve_border(g, d, Color::White, std::nullopt, last_col);
  if (!black.consistent || !white.consistent) {
    throw NotInOpenImage("border systems of region " + r.str() + " are inconsistent");
  }

  ParamPoint p;
  p.a.resize(m);
  p.A.resize(m);
  p.b.resize(n);
  p.B.resize(n);
  // Rows without entries of a colour get their parameter just above every
  // value that would flip an entry of that row; columns likewise, using the
  // completed rows.
  auto complete = [&](const BorderSolution& s, std::vector<Rat>& row_out,
                      std::vector<Rat>& col_out) {
    for (int i = 1; i <= m; ++i) {
      if (s.rows[i - 1]) {
        row_out[i - 1] = *s.rows[i - 1];
        continue;
      }
      std::optional<Rat> bound;
      for (int j = 1; j <= n; ++j) {
        if (!s.cols[j - 1]) continue;
        Rat v = g(i - 1, j - 1) - *s.cols[j - 1];
        if (!bound || v > *bound) bound = v;
      }
      row_out[i - 1] = bound ? *bound + Rat(1) : Rat(0);
    }
    for (int j = 1; j <= n; ++j) {
      if (s.cols[j - 1]) {
        col_out[j - 1] = *s.cols[j - 1];
        continue;
      }
      std::optional<Rat> bound;
      for (int i = 1; i <= m; ++i) {
        Rat v = g(i - 1, j - 1) - row_out[i - 1];
        if (!bound || v > *bound) bound = v;
      }
      col_out[j - 1] = *bound + Rat(1);
    }
  };
  complete(white, p.a, p.b);
  complete(black, p.A, p.B);

  if (eval_g(p) != g) throw InvariantViolation("preimage does not evaluate back to the matrix");
  if (region_of_point(p.xy()) != r) throw InvariantViolation("preimage left the region");
  return p;
}

ParamPoint gauge_shift(const ParamPoint& p, const Rat& white_shift, const Rat& black_shift) {
  p.validate();
  ParamPoint q = p;
  for (auto& v : q.a) v += white_shift;
  for (auto& v : q.b) v -= white_shift;
  for (auto& v : q.A) v += black_shift;
  for (auto& v : q.B) v -= black_shift;
  return q;
}

ParamPoint gauge_normalize(const ParamPoint& p, const Rat& pin_A_m, const Rat& pin_b_n) {
  p.validate();
  if (p.a.empty() || p.b.empty()) throw StructuralError("gauge needs m, n >= 1");
  return gauge_shift(p, p.b.back() - pin_b_n, pin_A_m - p.A.back());
}

std::string to_string(ParamFamily f) {
  switch (f) {
    case ParamFamily::a: return "a";
    case ParamFamily::A: return "A";
    case ParamFamily::b: return "b";
    case ParamFamily::B: return "B";
  }
  return "?";
}

std::string ParamRef::str() const { return to_string(family) + "_" + std::to_string(index); }

}  // namespace tropbip
