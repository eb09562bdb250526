#include "tropbip/linalg.hpp"

#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

struct Echelon {
  std::vector<std::vector<Rat>> rows;  // reduced rows, augmented column last
  std::vector<std::size_t> pivot_cols;
  bool consistent = true;
};

// Gauss-Jordan on the augmented matrix [forms | rhs].
Echelon reduce(std::vector<std::vector<Rat>> m, std::size_t num_vars) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < num_vars && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rat inv = Rat(1) / m[r][c];
    for (auto& v : m[r]) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rat f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) {
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
      }
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i) {
    if (m[i].size() > num_vars && !m[i][num_vars].is_zero()) e.consistent = false;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

void check_lengths(const std::vector<LinearForm>& forms, std::size_t n) {
  for (const auto& f : forms) {
    if (f.size() != n) throw StructuralError("linear forms have inconsistent lengths");
  }
}

}  // namespace

std::size_t affine_rank(const std::vector<LinearForm>& forms) {
  if (forms.empty()) return 0;
  const std::size_t n = forms.front().size();
  check_lengths(forms, n);
  return reduce(forms, n).pivot_cols.size();
}

std::optional<AffineSolution> solve_affine(const std::vector<LinearForm>& rows,
                                           const std::vector<Rat>& rhs, std::size_t num_vars) {
  if (rows.size() != rhs.size()) throw StructuralError("rhs length mismatch");
  check_lengths(rows, num_vars);
  std::vector<std::vector<Rat>> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  const Echelon e = reduce(std::move(aug), num_vars);
  if (!e.consistent) return std::nullopt;

  AffineSolution sol;
  sol.base.assign(num_vars, Rat(0));
  std::vector<bool> is_pivot(num_vars, false);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    is_pivot[e.pivot_cols[r]] = true;
    sol.base[e.pivot_cols[r]] = e.rows[r][num_vars];
  }
  for (std::size_t free = 0; free < num_vars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> dir(num_vars, Rat(0));
    dir[free] = Rat(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (!e.rows[r][free].is_zero()) dir[e.pivot_cols[r]] = -e.rows[r][free];
    }
    sol.directions.push_back(std::move(dir));
  }
  return sol;
}

std::vector<LinearForm> row_space_basis(const std::vector<LinearForm>& forms) {
  if (forms.empty()) return {};
  const std::size_t n = forms.front().size();
  check_lengths(forms, n);
  return reduce(forms, n).rows;
}

bool same_row_space(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b) {
  const std::size_t ra = affine_rank(a);
  const std::size_t rb = affine_rank(b);
  if (ra != rb) return false;
  std::vector<LinearForm> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return affine_rank(both) == ra;
}

}  // namespace tropbip
