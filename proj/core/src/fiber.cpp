#include "tropbip/fiber.hpp"

#include <optional>

#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

struct Corners {
  int r1, c1;  // north-west entry, original indices
  int rm, cn;  // south-east entry
};

// Solves row + col = g over the entries of one colour in diagram d, skipping
// the two corner entries, starting from the pinned parameter.
void solve_core(const MatrixPoint& g, const Diagram& d, Color color, const Corners& k,
                bool pin_is_row, int pin_index, const Rat& pin_value,
                std::vector<std::optional<Rat>>& rows, std::vector<std::optional<Rat>>& cols) {
  const int m = d.m, n = d.n;
  auto uses = [&](int i, int j) {
    if ((i == k.r1 && j == k.c1) || (i == k.rm && j == k.cn)) return false;
    return d.color_of(i, j) == color;
  };
  (pin_is_row ? rows[pin_index - 1] : cols[pin_index - 1]) = pin_value;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (!uses(i, j)) continue;
        const Rat& v = g(i - 1, j - 1);
        if (rows[i - 1] && !cols[j - 1]) {
          cols[j - 1] = v - *rows[i - 1];
          changed = true;
        } else if (cols[j - 1] && !rows[i - 1]) {
          rows[i - 1] = v - *cols[j - 1];
          changed = true;
        } else if (rows[i - 1] && cols[j - 1] && *rows[i - 1] + *cols[j - 1] != v) {
          throw InvariantViolation("fiber border system is inconsistent");
        }
      }
    }
  }
}

Rat need(const std::optional<Rat>& v) {
  if (!v) throw InvariantViolation("fiber parameter left undetermined");
  return *v;
}

std::vector<Rat> unwrap(const std::vector<std::optional<Rat>>& v) {
  std::vector<Rat> out;
  for (const auto& x : v) out.push_back(need(x));
  return out;
}

}  // namespace

FiberDescription generic_fiber(const MatrixPoint& g, const CellTable& table, const Rat& pin_A,
                               const Rat& pin_b) {
  const int m = table.m(), n = table.n();
  const Location loc = locate_cells(g, table);
  if (!loc.interior_of) throw NotGeneric("matrix is not interior to a unique small cell");
  const RegionLabel small = loc.interior_of->key();
  const Diagram d = diagram_of(small);
  const Corners k{d.row_order.front(), d.col_order.front(), d.row_order.back(),
                  d.col_order.back()};

  FiberDescription f;
  f.m = m;
  f.n = n;
  f.degenerate = m == 2 || n == 2;
  f.small_region = small;
  f.pinned[0] = {ParamFamily::A, k.rm};
  f.pinned[1] = {ParamFamily::b, k.cn};
  f.pin_values[0] = pin_A;
  f.pin_values[1] = pin_b;

  std::vector<std::optional<Rat>> a(m), A(m), b(n), B(n);
  solve_core(g, d, Color::Black, k, true, k.rm, pin_A, A, B);
  solve_core(g, d, Color::White, k, false, k.cn, pin_b, a, b);
  const Rat& g_nw = g(k.r1 - 1, k.c1 - 1);
  const Rat& g_se = g(k.rm - 1, k.cn - 1);
  a[k.rm - 1] = g_se - need(b[k.cn - 1]);
  b[k.c1 - 1] = g_nw - need(a[k.r1 - 1]);
  B[k.cn - 1] = g_se - need(A[k.rm - 1]);
  A[k.r1 - 1] = g_nw - need(B[k.c1 - 1]);
  f.apex = {{{ParamFamily::a, k.rm}, *a[k.rm - 1]},
            {{ParamFamily::b, k.c1}, *b[k.c1 - 1]},
            {{ParamFamily::B, k.cn}, *B[k.cn - 1]},
            {{ParamFamily::A, k.r1}, *A[k.r1 - 1]}};
  f.apex_point = ParamPoint{unwrap(a), unwrap(A), unwrap(b), unwrap(B)};
  if (eval_g(f.apex_point) != g) throw InvariantViolation("fiber apex does not evaluate to G");

  const ParamPoint& p = f.apex_point;
  // Lowest value of a free parameter keeping every entry of its row or column
  // on the other colour, with the other parameters at the apex.
  auto bound = [&](const ParamRef& ref) {
    std::optional<Rat> best;
    auto take = [&](const Rat& v) {
      if (!best || v > *best) best = v;
    };
    const int q = ref.index - 1;
    switch (ref.family) {
      case ParamFamily::a:
        for (int j = 0; j < n; ++j) take(g(q, j) - p.b[j]);
        break;
      case ParamFamily::A:
        for (int j = 0; j < n; ++j) take(g(q, j) - p.B[j]);
        break;
      case ParamFamily::b:
        for (int i = 0; i < m; ++i) take(g(i, q) - p.a[i]);
        break;
      case ParamFamily::B:
        for (int i = 0; i < m; ++i) take(g(i, q) - p.A[i]);
        break;
    }
    return *best;
  };

  for (bool nw_black : {false, true}) {
    for (bool se_black : {false, true}) {
      const RegionLabel label = region_from_precedence(m, n, [&](int i, int j) {
        if (i == k.r1 && j == k.c1) return !nw_black;
        if (i == k.rm && j == k.cn) return !se_black;
        return d.color_of(i, j) == Color::White;
      });
      FiberRegion r{label,
                    cell_size_class(label),
                    nw_black ? Color::Black : Color::White,
                    se_black ? Color::Black : Color::White,
                    {},
                    p};
      const ParamRef first = nw_black ? ParamRef{ParamFamily::b, k.c1}
                                      : ParamRef{ParamFamily::A, k.r1};
      const ParamRef second = se_black ? ParamRef{ParamFamily::a, k.rm}
                                       : ParamRef{ParamFamily::B, k.cn};
      r.free[0] = {first, bound(first)};
      r.free[1] = {second, bound(second)};
      f.regions.push_back(std::move(r));
    }
  }
  f.free_dof = {"a_i += c, b_j -= c for all i, j", "A_i += d, B_j -= d for all i, j"};
  return f;
}

FiberDescription generic_fiber(const MatrixPoint& g, const Rat& pin_A, const Rat& pin_b) {
  const RegionAtlas atlas =
      RegionAtlas::build(static_cast<int>(g.rows()), static_cast<int>(g.cols()));
  return generic_fiber(g, CellTable::build(atlas), pin_A, pin_b);
}

}  // namespace tropbip
