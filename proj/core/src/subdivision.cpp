#include "tropbip/subdivision.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "tropbip/linalg.hpp"
#include "tropbip/parallel.hpp"
#include "tropbip/random.hpp"

namespace tropbip {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Pair> all_pairs(std::size_t count) {
  std::vector<Pair> out;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Pair> chosen_pairs(std::size_t count, std::size_t max_pairs, Rng& rng) {
  std::vector<Pair> pairs = all_pairs(count);
  if (pairs.size() <= max_pairs) return pairs;
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(max_pairs);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::string pair_text(const Cell& a, const Cell& b) {
  return "cells {" + a.key().str() + "} and {" + b.key().str() + "}";
}

// Runs `failed` on every pair and reports the first failing pair in order.
template <class Pred>
CheckResult check_pairs(std::string name, const std::vector<Cell>& cells,
                        const std::vector<Pair>& pairs, unsigned jobs, Pred failed) {
  std::vector<char> bad(pairs.size(), 0);
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    bad[k] = failed(cells[pairs[k].first], cells[pairs[k].second]) ? 1 : 0;
  });
  CheckResult r{std::move(name), true, pairs.size(), {}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (bad[k]) {
      r.passed = false;
      r.counterexample = pair_text(cells[pairs[k].first], cells[pairs[k].second]);
      break;
    }
  }
  return r;
}

}  // namespace

bool SubdivisionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool interiors_meet(const Cell& a1, const Cell& a2) {
  LinSystem sys = relation_system(a1.relations, a1.m, a1.n, MemberMode::Open);
  sys.append(relation_system(a2.relations, a2.m, a2.n, MemberMode::Open));
  return lp_feasible(sys).has_value();
}

bool meets_in_face(const Cell& a1, const Cell& a2) {
  const int m = a1.m, n = a1.n;
  LinSystem both = relation_system(a1.relations, m, n, MemberMode::Closed);
  both.append(relation_system(a2.relations, m, n, MemberMode::Closed));
  std::vector<RectRelation> face = a1.relations;
  for (auto& r : face) {
    if (r.kind != RelKind::Gt) continue;
    LinSystem probe = both;
    probe.strict.push_back({r.form(m, n), Rat(0)});
    if (!lp_feasible(probe)) r.kind = RelKind::Eq;
  }
  return closed_implies(face, a2.relations, m, n);
}

SubdivisionReport verify_subdivision(int m, int n, const SubdivisionOptions& options) {
  const RegionAtlas atlas = RegionAtlas::build(m, n, options.budget, options.jobs);
  return verify_subdivision(CellTable::build(atlas, options.jobs), options);
}

SubdivisionReport verify_subdivision(const CellTable& table, const SubdivisionOptions& options) {
  const int m = table.m(), n = table.n();
  const auto& small = table.cells(SizeClass::Small);
  const auto& large = table.cells(SizeClass::Large);
  SubdivisionReport report;
  report.m = m;
  report.n = n;
  report.samples = options.samples;
  report.seed = options.seed;
  report.small_cells = small.size();
  report.medium_cells = table.cells(SizeClass::Medium).size();
  report.large_cells = large.size();
  Rng rng(options.seed);

  {
    CheckResult r{"large spans distinct", true, large.size(), {}};
    std::map<std::vector<LinearForm>, std::size_t> seen;
    for (std::size_t k = 0; k < large.size(); ++k) {
      auto [it, fresh] = seen.emplace(row_space_basis(large[k].span_forms()), k);
      if (!fresh && r.passed) {
        r.passed = false;
        r.counterexample = pair_text(large[it->second], large[k]) + " share a linear span";
      }
    }
    report.checks.push_back(std::move(r));
  }

  auto meet = [](const Cell& a, const Cell& b) { return interiors_meet(a, b); };
  report.checks.push_back(check_pairs("small interiors disjoint", small, all_pairs(small.size()),
                                      options.jobs, meet));
  report.checks.push_back(check_pairs("large interiors disjoint", large, all_pairs(large.size()),
                                      options.jobs, meet));

  {
    CheckResult r{"sampled coverage", true, options.samples, {}};
    for (std::size_t s = 0; s < options.samples; ++s) {
      const MatrixPoint g = eval_g(random_param_point(rng, m, n));
      auto inside = [&](const Cell& c) { return member(g, c.relations, MemberMode::Closed); };
      const bool in_small = std::any_of(small.begin(), small.end(), inside);
      const bool in_large = std::any_of(large.begin(), large.end(), inside);
      if (!(in_small && in_large)) {
        std::ostringstream os;
        os << "sample " << s << " matrix " << g << " lies in no "
           << (in_small ? "large" : "small") << " closed cell";
        r.passed = false;
        r.counterexample = os.str();
        break;
      }
    }
    report.checks.push_back(std::move(r));
  }

  {
    std::vector<char> bad(small.size(), 0);
    parallel_for(small.size(), options.jobs, [&](std::size_t k) {
      const Cell& c = small[k];
      const Cell* parent = table.cell_of(large_parent(c.key()).label);
      if (parent && closed_implies(c.relations, parent->relations, m, n)) return;
      const bool any = std::any_of(large.begin(), large.end(), [&](const Cell& l) {
        return closed_implies(c.relations, l.relations, m, n);
      });
      bad[k] = any ? 0 : 1;
    });
    CheckResult r{"small cells refine large cells", true, small.size(), {}};
    for (std::size_t k = 0; k < small.size(); ++k) {
      if (bad[k]) {
        r.passed = false;
        r.counterexample = "small cell {" + small[k].key().str() + "} lies in no large cell";
        break;
      }
    }
    report.checks.push_back(std::move(r));
  }

  auto not_face = [](const Cell& a, const Cell& b) {
    return !meets_in_face(a, b) || !meets_in_face(b, a);
  };
  report.checks.push_back(check_pairs("small face-to-face", small,
                                      chosen_pairs(small.size(), options.max_pairs, rng),
                                      options.jobs, not_face));
  report.checks.push_back(check_pairs("large face-to-face", large,
                                      chosen_pairs(large.size(), options.max_pairs, rng),
                                      options.jobs, not_face));
  return report;
}

}  // namespace tropbip
