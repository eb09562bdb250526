#include "tropbip/lp.hpp"

#include <string>

#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

// Dense simplex tableau for  max c.z  s.t.  rows z = rhs, z >= 0, rhs >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs, std::size_t num_cols)
      : num_cols_(num_cols), allowed_(num_cols + rows.size(), true) {
    const std::size_t m = rows.size();
    total_cols_ = num_cols + m;  // one artificial per row
    rows_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rat> r = std::move(rows[i]);
      r.resize(total_cols_ + 1);
      r[num_cols + i] = Rat(1);
      r[total_cols_] = rhs[i];
      rows_.push_back(std::move(r));
      basis_.push_back(num_cols + i);
    }
  }

  // Returns false when the system has no nonnegative solution.
  bool phase_one() {
    std::vector<Rat> cost(total_cols_, Rat(0));
    for (std::size_t j = num_cols_; j < total_cols_; ++j) cost[j] = Rat(-1);
    run(cost);
    if (objective_[total_cols_].sign() < 0) return false;
    // Pivot remaining zero-level artificials out of the basis.
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < num_cols_) {
        ++i;
        continue;
      }
      std::size_t col = num_cols_;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == num_cols_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
    for (std::size_t j = num_cols_; j < total_cols_; ++j) allowed_[j] = false;
    return true;
  }

  // Returns false when unbounded.
  bool maximize(const std::vector<Rat>& c) {
    std::vector<Rat> cost(total_cols_, Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    return run(cost);
  }

  Rat objective_value() const { return objective_[total_cols_]; }

  std::vector<Rat> solution() const {
    std::vector<Rat> z(num_cols_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < num_cols_) z[basis_[i]] = rows_[i][total_cols_];
    }
    return z;
  }

 private:
  bool run(const std::vector<Rat>& cost) {
    objective_.assign(total_cols_ + 1, Rat(0));
    for (std::size_t j = 0; j < total_cols_; ++j) objective_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= total_cols_; ++j) {
        if (!rows_[i][j].is_zero()) objective_[j] += cb * rows_[i][j];
      }
    }
    while (true) {
      std::size_t enter = total_cols_;
      for (std::size_t j = 0; j < total_cols_; ++j) {
        if (allowed_[j] && objective_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == total_cols_) return true;
      std::size_t leave = rows_.size();
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rat ratio = rows_[i][total_cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = Rat(1) / rows_[r][c];
    for (auto& v : rows_[r]) {
      if (!v.is_zero()) v *= inv;
    }
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[c].is_zero()) return;
      const Rat f = row[c];
      for (std::size_t k = 0; k <= total_cols_; ++k) {
        if (!rows_[r][k].is_zero()) row[k] -= f * rows_[r][k];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    if (!objective_.empty()) eliminate(objective_);
    basis_[r] = c;
  }

  std::size_t num_cols_;
  std::size_t total_cols_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> objective_;
  std::vector<bool> allowed_;
};

Rat dot(const LinearForm& a, const std::vector<Rat>& x) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !x[i].is_zero()) s += a[i] * x[i];
  }
  return s;
}

struct Reduced {
  LinearForm coefficients;  // over the free parameters
  Rat rhs;
  bool strict;
};

}  // namespace

void LinSystem::append(const LinSystem& other) {
  if (other.num_vars != num_vars) throw StructuralError("LinSystem variable count mismatch");
  equalities.insert(equalities.end(), other.equalities.begin(), other.equalities.end());
  strict.insert(strict.end(), other.strict.begin(), other.strict.end());
  weak.insert(weak.end(), other.weak.begin(), other.weak.end());
}

bool satisfies(const LinSystem& sys, const std::vector<Rat>& x) {
  if (x.size() != sys.num_vars) return false;
  for (const auto& c : sys.equalities) {
    if (dot(c.coefficients, x) != c.constant) return false;
  }
  for (const auto& c : sys.strict) {
    if (!(dot(c.coefficients, x) > c.constant)) return false;
  }
  for (const auto& c : sys.weak) {
    if (dot(c.coefficients, x) < c.constant) return false;
  }
  return true;
}

std::optional<std::vector<Rat>> lp_feasible(const LinSystem& sys) {
  const std::size_t n = sys.num_vars;
  auto check = [n](const std::vector<Constraint>& cs) {
    for (const auto& c : cs) {
      if (c.coefficients.size() != n) {
        throw StructuralError("constraint has " + std::to_string(c.coefficients.size()) +
                              " coefficients, system has " + std::to_string(n) + " variables");
      }
    }
  };
  check(sys.equalities);
  check(sys.strict);
  check(sys.weak);

  // Eliminate equalities: x = base + D y.
  std::vector<LinearForm> eq_rows;
  std::vector<Rat> eq_rhs;
  for (const auto& c : sys.equalities) {
    eq_rows.push_back(c.coefficients);
    eq_rhs.push_back(c.constant);
  }
  const auto affine = solve_affine(eq_rows, eq_rhs, n);
  if (!affine) return std::nullopt;
  const std::size_t k = affine->directions.size();

  std::vector<Reduced> ineqs;
  auto reduce_all = [&](const std::vector<Constraint>& cs, bool strict) {
    for (const auto& c : cs) {
      Reduced r{LinearForm(k), c.constant - dot(c.coefficients, affine->base), strict};
      bool trivial = true;
      for (std::size_t d = 0; d < k; ++d) {
        r.coefficients[d] = dot(c.coefficients, affine->directions[d]);
        if (!r.coefficients[d].is_zero()) trivial = false;
      }
      if (trivial) {
        // 0 (op) rhs
        const bool ok = strict ? r.rhs.sign() < 0 : r.rhs.sign() <= 0;
        if (!ok) return false;
        continue;
      }
      ineqs.push_back(std::move(r));
    }
    return true;
  };
  if (!reduce_all(sys.weak, false) || !reduce_all(sys.strict, true)) return std::nullopt;

  std::vector<Rat> y(k, Rat(0));
  if (!ineqs.empty()) {
    bool any_strict = false;
    for (const auto& r : ineqs) any_strict = any_strict || r.strict;
    // Columns: u (k), v (k), [t], one surplus per inequality, [slack for t <= 1].
    const std::size_t t_col = 2 * k;
    const std::size_t first_surplus = any_strict ? 2 * k + 1 : 2 * k;
    const std::size_t num_cols = first_surplus + ineqs.size() + (any_strict ? 1 : 0);
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      std::vector<Rat> row(num_cols, Rat(0));
      for (std::size_t d = 0; d < k; ++d) {
        row[d] = ineqs[i].coefficients[d];
        row[k + d] = -ineqs[i].coefficients[d];
      }
      if (ineqs[i].strict) row[t_col] = Rat(-1);
      row[first_surplus + i] = Rat(-1);
      Rat b = ineqs[i].rhs;
      if (b.sign() < 0) {
        for (auto& v : row) {
          if (!v.is_zero()) v = -v;
        }
        b = -b;
      }
      rows.push_back(std::move(row));
      rhs.push_back(std::move(b));
    }
    if (any_strict) {
      std::vector<Rat> row(num_cols, Rat(0));
      row[t_col] = Rat(1);
      row[num_cols - 1] = Rat(1);
      rows.push_back(std::move(row));
      rhs.emplace_back(1);
    }
    Tableau tab(std::move(rows), std::move(rhs), num_cols);
    if (!tab.phase_one()) return std::nullopt;
    if (any_strict) {
      std::vector<Rat> c(num_cols, Rat(0));
      c[t_col] = Rat(1);
      if (!tab.maximize(c)) throw InvariantViolation("bounded LP reported unbounded");
      if (tab.objective_value().sign() <= 0) return std::nullopt;
    }
    const auto z = tab.solution();
    for (std::size_t d = 0; d < k; ++d) y[d] = z[d] - z[k + d];
  }

  std::vector<Rat> x = affine->base;
  for (std::size_t d = 0; d < k; ++d) {
    if (y[d].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!affine->directions[d][i].is_zero()) x[i] += y[d] * affine->directions[d][i];
    }
  }
  if (!satisfies(sys, x)) throw InvariantViolation("lp witness fails re-substitution");
  return x;
}

}  // namespace tropbip
