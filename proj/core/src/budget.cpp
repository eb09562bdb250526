#include "tropbip/budget.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

// Stirling numbers of the second kind S(n, k) for 0 <= k <= n <= top.
std::vector<std::vector<mpz_class>> stirling2(int top) {
  std::vector<std::vector<mpz_class>> s(top + 1, std::vector<mpz_class>(top + 1, 0));
  s[0][0] = 1;
  for (int n = 1; n <= top; ++n) {
    for (int k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  }
  return s;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("TROPBIP_BUDGET")) {
    try {
      b.max_labels = std::stoull(env);
    } catch (const std::exception&) {
      throw StructuralError(std::string("TROPBIP_BUDGET is not a number: ") + env);
    }
  }
  return b;
}

void Budget::check(int m, int n) const {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
  const mpz_class count = acyclic_orientation_count(m, n);
  if (count > mpz_class(std::to_string(max_labels))) {
    throw BudgetExceeded("A_{" + std::to_string(m) + "," + std::to_string(n) + "} has " +
                         count.get_str() + " regions, budget is " + std::to_string(max_labels));
  }
}

mpz_class acyclic_orientation_count(int m, int n) {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
  const auto s = stirling2(std::max(m, n) + 1);
  mpz_class total = 0;
  mpz_class fact = 1;
  for (int k = 0; k <= std::min(m, n); ++k) {
    if (k > 0) fact *= k;
    total += fact * fact * s[m + 1][k + 1] * s[n + 1][k + 1];
  }
  return total;
}

}  // namespace tropbip
