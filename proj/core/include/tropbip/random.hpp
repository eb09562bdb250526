#pragma once

#include <cstdint>
#include <random>

#include "tropbip/morphism.hpp"
#include "tropbip/rational.hpp"

namespace tropbip {

using Rng = std::mt19937_64;

// Uniform over { k / den : |k| <= range * den }.
inline Rat random_rat(Rng& rng, long range, long den) {
  std::uniform_int_distribution<long> dist(-range * den, range * den);
  return Rat(dist(rng), den);
}

inline ParamPoint random_param_point(Rng& rng, int m, int n, long range = 10, long den = 7) {
  ParamPoint p;
  for (int i = 0; i < m; ++i) p.a.push_back(random_rat(rng, range, den));
  for (int i = 0; i < m; ++i) p.A.push_back(random_rat(rng, range, den));
  for (int j = 0; j < n; ++j) p.b.push_back(random_rat(rng, range, den));
  for (int j = 0; j < n; ++j) p.B.push_back(random_rat(rng, range, den));
  return p;
}

// A random point with x_i != y_j for every pair.
inline ParamPoint random_generic_param_point(Rng& rng, int m, int n, long range = 10,
                                             long den = 7) {
  for (;;) {
    ParamPoint p = random_param_point(rng, m, n, range, den);
    const XYPoint q = p.xy();
    bool generic = true;
    for (const auto& x : q.x) {
      for (const auto& y : q.y) generic = generic && x != y;
    }
    if (generic) return p;
  }
}

}  // namespace tropbip
