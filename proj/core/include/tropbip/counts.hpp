#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tropbip/budget.hpp"
#include "tropbip/egf.hpp"
#include "tropbip/rational.hpp"

namespace tropbip {

// 1 / (e^{-tx} + e^{-ty} - t (e^x - 1)(e^y - 1) - 1): coefficient (k, m, n) is
// the number of k-dimensional faces of A_{m,n}.
Egf3 face_egf(int k_max, int m_max, int n_max);

// e^{x+y} / (e^x + e^y - e^{x+y}): coefficient (0, m, n) is r_{m,n}.
Egf3 region_egf(int m_max, int n_max);

// (xX + yY)/2 + (2XY + X^2 (e^x - 1) + Y^2 (e^y - 1)) / (2 (e^x + e^y - e^{x+y}))
// with X = x (e^y - y - 1), Y = y (e^x - x - 1).
Egf3 large_egf(int m_max, int n_max);

// 2 C(m,2) C(n,2) r_{m-2,n-2}, zero when m < 2 or n < 2.
mpz_class small_formula(int m, int n);

// Acyclic orientations of K_{m,n} counted over all 2^{mn} orientations.
// Throws BudgetExceeded when m * n > 24.
mpz_class count_acyclic_bruteforce(int m, int n);

// Faces of A_{m,n} by dimension, from enumerate_faces (index = dimension).
std::vector<std::size_t> face_tally(int m, int n);

struct CountValue {
  std::string source;  // egf | bruteforce | enumeration | formula | cells
  Rat value;
};

struct CountEntry {
  std::string quantity;  // faces | regions | small | large
  int k = -1;            // face dimension, -1 otherwise
  int m = 0;
  int n = 0;
  std::vector<CountValue> values;
};

struct Discrepancy {
  std::string quantity;
  int k = -1;
  int m = 0;
  int n = 0;
  std::string detail;
};

struct CountReport {
  int m_max = 0;
  int n_max = 0;
  std::vector<CountEntry> entries;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
};

struct CrosscheckOptions {
  int face_max_sum = 6;         // faces compared for m + n <= this
  int region_max_product = 16;  // regions compared for m * n <= this
  int cells_max = 3;            // small/large compared for m, n <= this
  unsigned jobs = 1;
  Budget budget = Budget::from_env();
};

CountReport crosscheck(int m_max, int n_max, const CrosscheckOptions& options = {});

}  // namespace tropbip
