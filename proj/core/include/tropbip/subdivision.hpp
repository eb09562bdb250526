#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropbip/budget.hpp"
#include "tropbip/cells.hpp"

namespace tropbip {

struct SubdivisionOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  // Pairs of cells examined for face-to-face intersections; every pair is
  // examined when there are at most this many.
  std::size_t max_pairs = 5000;
  unsigned jobs = 1;
  Budget budget = Budget::from_env();
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t examined = 0;
  std::string counterexample;  // empty when passed
};

struct SubdivisionReport {
  int m = 0;
  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t small_cells = 0;
  std::size_t medium_cells = 0;
  std::size_t large_cells = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Exact checks that the large cells and the small cells each subdivide the
// image: distinct large spans, pairwise disjoint interiors, sampled coverage,
// refinement of large cells by small ones, and face-to-face intersections.
SubdivisionReport verify_subdivision(int m, int n, const SubdivisionOptions& options = {});
SubdivisionReport verify_subdivision(const CellTable& table, const SubdivisionOptions& options);

// Cells A1, A2 of one table meet in a face of A1: the inequalities of A1 that
// vanish on A1 ∩ A2, turned into equalities, cut out a subset of A2.
bool meets_in_face(const Cell& a1, const Cell& a2);

// Closed cells of the same class whose relative interiors meet.
bool interiors_meet(const Cell& a1, const Cell& a2);

}  // namespace tropbip
