#include "tropbip/counts.hpp"

#include <algorithm>
#include <sstream>

#include "tropbip/arrangement.hpp"
#include "tropbip/cells.hpp"
#include "tropbip/errors.hpp"

namespace tropbip {

namespace {

Rat to_rat(const mpz_class& z) { return Rat(mpq_class(z)); }

Rat to_rat(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }

}  // namespace

Egf3 face_egf(int k_max, int m_max, int n_max) {
  auto e = [&](const Rat& c, SeriesVar v, int tp) {
    return Egf3::exp_linear(c, v, tp, k_max, m_max, n_max);
  };
  const Egf3 one = Egf3::constant(Rat(1), k_max, m_max, n_max);
  const Egf3 t = Egf3::t(k_max, m_max, n_max);
  const Egf3 ex1 = e(Rat(1), SeriesVar::X, 0) - one;
  const Egf3 ey1 = e(Rat(1), SeriesVar::Y, 0) - one;
  const Egf3 denom =
      e(Rat(-1), SeriesVar::X, 1) + e(Rat(-1), SeriesVar::Y, 1) - t * ex1 * ey1 - one;
  return denom.reciprocal();
}

Egf3 region_egf(int m_max, int n_max) {
  const Egf3 ex = Egf3::exp_linear(Rat(1), SeriesVar::X, 0, 0, m_max, n_max);
  const Egf3 ey = Egf3::exp_linear(Rat(1), SeriesVar::Y, 0, 0, m_max, n_max);
  const Egf3 exy = ex * ey;
  return exy * (ex + ey - exy).reciprocal();
}

Egf3 large_egf(int m_max, int n_max) {
  const Egf3 one = Egf3::constant(Rat(1), 0, m_max, n_max);
  const Egf3 x = Egf3::var(SeriesVar::X, 0, m_max, n_max);
  const Egf3 y = Egf3::var(SeriesVar::Y, 0, m_max, n_max);
  const Egf3 ex = Egf3::exp_linear(Rat(1), SeriesVar::X, 0, 0, m_max, n_max);
  const Egf3 ey = Egf3::exp_linear(Rat(1), SeriesVar::Y, 0, 0, m_max, n_max);
  const Egf3 X = x * (ey - y - one);
  const Egf3 Y = y * (ex - x - one);
  const Egf3 head = (x * X + y * Y) * Rat(1, 2);
  const Egf3 num = X * Y * Rat(2) + X * X * (ex - one) + Y * Y * (ey - one);
  const Egf3 den = (ex + ey - ex * ey) * Rat(2);
  return head + num * den.reciprocal();
}

mpz_class small_formula(int m, int n) {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
  if (m < 2 || n < 2) return 0;
  const mpz_class cm = mpz_class(m) * (m - 1) / 2;
  const mpz_class cn = mpz_class(n) * (n - 1) / 2;
  return 2 * cm * cn * acyclic_orientation_count(m - 2, n - 2);
}

mpz_class count_acyclic_bruteforce(int m, int n) {
  if (m < 0 || n < 0) throw StructuralError("negative shape");
  const int edges = m * n;
  if (edges > 24) throw BudgetExceeded("brute force over 2^" + std::to_string(edges) +
                                       " orientations exceeds the limit of 2^24");
  mpz_class count = 0;
  Orientation o(m, n);
  for (unsigned long mask = 0; mask < (1UL << edges); ++mask) {
    for (int e = 0; e < edges; ++e) o.set_toward_col(e / n + 1, e % n + 1, (mask >> e) & 1UL);
    if (o.is_acyclic()) ++count;
  }
  return count;
}

std::vector<std::size_t> face_tally(int m, int n) {
  std::vector<std::size_t> tally(static_cast<std::size_t>(m + n) + 1, 0);
  for_each_face(m, n, [&](const FaceLabel& f) { ++tally[face_dimension(f)]; });
  return tally;
}

CountReport crosscheck(int m_max, int n_max, const CrosscheckOptions& options) {
  if (m_max < 0 || n_max < 0) throw StructuralError("negative range");
  CountReport report;
  report.m_max = m_max;
  report.n_max = n_max;

  auto compare = [&](const CountEntry& e) {
    for (const auto& v : e.values) {
      if (v.value == e.values.front().value) continue;
      std::ostringstream os;
      os << e.values.front().source << " = " << e.values.front().value << " but " << v.source
         << " = " << v.value;
      report.discrepancies.push_back({e.quantity, e.k, e.m, e.n, os.str()});
      return;
    }
  };

  const int face_sum = std::min(options.face_max_sum, m_max + n_max);
  const Egf3 faces = face_egf(face_sum, std::min(m_max, face_sum), std::min(n_max, face_sum));
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      if (m + n > options.face_max_sum) continue;
      const auto tally = face_tally(m, n);
      for (int k = 0; k <= m + n; ++k) {
        CountEntry e{"faces", k, m, n,
                     {{"egf", faces.coeff(k, m, n)}, {"enumeration", to_rat(tally[k])}}};
        compare(e);
        report.entries.push_back(std::move(e));
      }
    }
  }

  const Egf3 regions = region_egf(m_max, n_max);
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      if (m * n > options.region_max_product) continue;
      options.budget.check(m, n);
      CountEntry e{"regions", -1, m, n, {{"egf", regions.coeff(0, m, n)}}};
      e.values.push_back({"bruteforce", to_rat(count_acyclic_bruteforce(m, n))});
      std::size_t listed = 0;
      for_each_region(m, n, [&](const RegionLabel&) { ++listed; });
      e.values.push_back({"enumeration", to_rat(listed)});
      e.values.push_back({"formula", to_rat(acyclic_orientation_count(m, n))});
      compare(e);
      report.entries.push_back(std::move(e));
    }
  }

  const int cm = std::min(m_max, options.cells_max), cn = std::min(n_max, options.cells_max);
  const Egf3 large = large_egf(cm, cn);
  for (int m = 0; m <= cm; ++m) {
    for (int n = 0; n <= cn; ++n) {
      const CellTable table = CellTable::build(RegionAtlas::build(m, n, options.budget, options.jobs),
                                               options.jobs);
      const CellCount s = count_cells(table, SizeClass::Small);
      CountEntry small{"small", -1, m, n,
                       {{"formula", to_rat(small_formula(m, n))},
                        {"cells", to_rat(s.distinct_images)}}};
      compare(small);
      if (s.positive_regions != s.distinct_images) {
        std::ostringstream os;
        for (const auto& c : table.cells(SizeClass::Small)) {
          const auto positive = std::count_if(c.representatives.begin(), c.representatives.end(),
                                              [](const RegionLabel& r) { return r.is_positive(); });
          if (positive != 1) {
            os << "small (" << m << "," << n << "): cell {" << c.key() << "} has " << positive
               << " positive regions";
            break;
          }
        }
        report.notes.push_back(os.str());
      }
      report.entries.push_back(std::move(small));

      const CellCount l = count_cells(table, SizeClass::Large);
      CountEntry big{"large", -1, m, n,
                     {{"egf", large.coeff(0, m, n)}, {"cells", to_rat(l.positive_regions)}}};
      compare(big);
      report.entries.push_back(std::move(big));
      if (l.distinct_images != l.positive_regions) {
        std::ostringstream os;
        os << "large (" << m << "," << n << "): " << l.positive_regions
           << " positive large regions, " << l.distinct_images << " distinct large images";
        report.notes.push_back(os.str());
      }
    }
  }
  return report;
}

}  // namespace tropbip
