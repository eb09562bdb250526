#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropbip/linalg.hpp"
#include "tropbip/rational.hpp"

namespace tropbip {

// coefficients . x  (op)  constant
struct Constraint {
  LinearForm coefficients;
  Rat constant;
};

// A conjunction of linear equalities (=), strict inequalities (>) and weak
// inequalities (>=) over `num_vars` rational variables.
struct LinSystem {
  std::size_t num_vars = 0;
  std::vector<Constraint> equalities;
  std::vector<Constraint> strict;
  std::vector<Constraint> weak;

  void append(const LinSystem& other);
};

// Exact feasibility. On success the witness satisfies every equality exactly,
// every strict inequality strictly and every weak inequality weakly.
// Strict inequalities are handled by maximising a common slack in an exact
// two-phase simplex (Bland's rule); no tolerance is involved anywhere.
// Throws StructuralError if a coefficient vector has the wrong length.
std::optional<std::vector<Rat>> lp_feasible(const LinSystem& sys);

bool satisfies(const LinSystem& sys, const std::vector<Rat>& point);

}  // namespace tropbip
