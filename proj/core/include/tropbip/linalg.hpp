#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropbip/rational.hpp"

namespace tropbip {

using LinearForm = std::vector<Rat>;

// Rank over the rationals of the matrix whose rows are `forms`. All forms must
// have the same length; an empty list has rank 0.
std::size_t affine_rank(const std::vector<LinearForm>& forms);

// Solution set {x : rows * x = rhs} in parametric form x = base + basis * t.
struct AffineSolution {
  std::vector<Rat> base;
  std::vector<std::vector<Rat>> directions;  // each of length num_vars
};

// Exact Gauss-Jordan elimination. Returns nullopt when the system is
// inconsistent.
std::optional<AffineSolution> solve_affine(const std::vector<LinearForm>& rows,
                                           const std::vector<Rat>& rhs, std::size_t num_vars);

// Reduced row echelon basis of the row space; equal spaces give equal bases.
std::vector<LinearForm> row_space_basis(const std::vector<LinearForm>& forms);

// True when span(a) == span(b) as row spaces.
bool same_row_space(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b);

}  // namespace tropbip
