#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace tropbip {

// Upper limit on the number of region labels an operation may enumerate.
// TROPBIP_BUDGET overrides the default of 10^7.
struct Budget {
  std::uint64_t max_labels = 10'000'000;

  static Budget from_env();
  // Throws BudgetExceeded when r_{m,n} > max_labels.
  void check(int m, int n) const;
};

// Number of acyclic orientations of K_{m,n} from the poly-Bernoulli closed form
// sum_k (k!)^2 S(m+1, k+1) S(n+1, k+1).
mpz_class acyclic_orientation_count(int m, int n);

}  // namespace tropbip
