#include "tropbip/cells.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "tropbip/errors.hpp"
#include "tropbip/linalg.hpp"
#include "tropbip/parallel.hpp"

namespace tropbip {

namespace {

void require_shape(const MatrixPoint& g, int m, int n) {
  if (static_cast<int>(g.rows()) != m || static_cast<int>(g.cols()) != n) {
    throw StructuralError("matrix shape does not match (m, n)");
  }
}

LinearForm negated(LinearForm f) {
  for (auto& v : f) v = -v;
  return f;
}

std::size_t violated_equalities(const MatrixPoint& g, const std::vector<RectRelation>& rels) {
  std::size_t k = 0;
  for (const auto& r : rels) {
    if (r.kind == RelKind::Eq && !evaluate(r, g).is_zero()) ++k;
  }
  return k;
}

}  // namespace

bool member(const MatrixPoint& g, const std::vector<RectRelation>& rels, MemberMode mode) {
  for (const auto& r : rels) {
    const int s = evaluate(r, g).sign();
    if (r.kind == RelKind::Eq) {
      if (s != 0) return false;
    } else if (mode == MemberMode::Open ? s <= 0 : s < 0) {
      return false;
    }
  }
  return true;
}

bool member(const MatrixPoint& g, const RegionLabel& r, MemberMode mode) {
  require_shape(g, r.m(), r.n());
  return member(g, relations_v2(diagram_of(r)), mode);
}

LinSystem relation_system(const std::vector<RectRelation>& rels, int m, int n, MemberMode mode) {
  LinSystem sys;
  sys.num_vars = static_cast<std::size_t>(m) * n;
  for (const auto& r : rels) {
    Constraint c{r.form(m, n), Rat(0)};
    if (r.kind == RelKind::Eq) sys.equalities.push_back(std::move(c));
    else if (mode == MemberMode::Open) sys.strict.push_back(std::move(c));
    else sys.weak.push_back(std::move(c));
  }
  return sys;
}

bool closed_implies(const std::vector<RectRelation>& inner, const std::vector<RectRelation>& outer,
                    int m, int n) {
  const LinSystem base = relation_system(inner, m, n, MemberMode::Closed);
  auto reachable = [&](const LinearForm& f) {
    LinSystem s = base;
    s.strict.push_back({f, Rat(0)});
    return lp_feasible(s).has_value();
  };
  for (const auto& r : outer) {
    const LinearForm f = r.form(m, n);
    if (reachable(negated(f))) return false;
    if (r.kind == RelKind::Eq && reachable(f)) return false;
  }
  return true;
}

std::vector<LinearForm> Cell::span_forms() const {
  std::vector<LinearForm> out;
  for (const auto& r : relations) {
    if (r.kind == RelKind::Eq) out.push_back(r.form(m, n));
  }
  return out;
}

RegionAtlas RegionAtlas::build(int m, int n, const Budget& budget, unsigned jobs) {
  if (m < 0 || n < 0) throw StructuralError("m and n must be non-negative");
  budget.check(m, n);
  RegionAtlas atlas;
  atlas.m_ = m;
  atlas.n_ = n;
  const std::vector<RegionLabel> labels = enumerate_regions(m, n);
  atlas.entries_.resize(labels.size());
  parallel_for(labels.size(), jobs, [&](std::size_t k) {
    atlas.entries_[k] = Entry{labels[k], relations_v2(diagram_of(labels[k])),
                              cell_size_class(labels[k])};
  });
  for (std::size_t k = 0; k < labels.size(); ++k) atlas.index_.emplace(labels[k], k);
  return atlas;
}

const RegionAtlas::Entry& RegionAtlas::entry(const RegionLabel& r) const {
  const auto it = index_.find(r);
  if (it == index_.end()) throw StructuralError("region " + r.str() + " is not in the atlas");
  return entries_[it->second];
}

CellTable CellTable::build(const RegionAtlas& atlas, unsigned jobs) {
  CellTable table;
  table.m_ = atlas.m();
  table.n_ = atlas.n();
  const int m = atlas.m(), n = atlas.n();

  for (SizeClass cls : {SizeClass::Small, SizeClass::Medium, SizeClass::Large}) {
    std::map<std::vector<RectRelation>, std::vector<RegionLabel>> groups;
    for (const auto& e : atlas.entries()) {
      if (e.size_class == cls) groups[canonical_set(e.relations)].push_back(e.label);
    }
    struct Group {
      std::vector<RectRelation> relations;
      std::vector<RegionLabel> regions;
    };
    std::vector<Group> list;
    for (auto& [rels, regions] : groups) list.push_back({rels, std::move(regions)});

    // Polyhedra can only coincide when their linear spans do.
    std::map<std::vector<LinearForm>, std::vector<std::size_t>> by_span;
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::vector<LinearForm> eqs;
      for (const auto& r : list[k].relations) {
        if (r.kind == RelKind::Eq) eqs.push_back(r.form(m, n));
      }
      by_span[row_space_basis(eqs)].push_back(k);
    }
    std::vector<std::vector<std::size_t>> buckets;
    for (auto& [key, members] : by_span) buckets.push_back(std::move(members));

    std::vector<std::vector<std::vector<std::size_t>>> merged(buckets.size());
    parallel_for(buckets.size(), jobs, [&](std::size_t b) {
      auto& classes = merged[b];
      for (std::size_t k : buckets[b]) {
        bool placed = false;
        for (auto& c : classes) {
          const auto& head = list[c.front()].relations;
          if (closed_implies(head, list[k].relations, m, n) &&
              closed_implies(list[k].relations, head, m, n)) {
            c.push_back(k);
            placed = true;
            break;
          }
        }
        if (!placed) classes.push_back({k});
      }
    });

    std::vector<Cell> cells;
    for (const auto& classes : merged) {
      for (const auto& c : classes) {
        Cell cell;
        cell.m = m;
        cell.n = n;
        cell.size_class = cls;
        for (std::size_t k : c) {
          cell.representatives.insert(cell.representatives.end(), list[k].regions.begin(),
                                      list[k].regions.end());
        }
        std::sort(cell.representatives.begin(), cell.representatives.end());
        cell.relations = canonical_set(atlas.entry(cell.key()).relations);
        cells.push_back(std::move(cell));
      }
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& x, const Cell& y) { return x.key() < y.key(); });
    for (std::size_t k = 0; k < cells.size(); ++k) {
      for (const auto& r : cells[k].representatives) table.where_[r] = {cls, k};
    }
    switch (cls) {
      case SizeClass::Small: table.small_ = std::move(cells); break;
      case SizeClass::Medium: table.medium_ = std::move(cells); break;
      case SizeClass::Large: table.large_ = std::move(cells); break;
      case SizeClass::NotMaximal: break;
    }
  }
  return table;
}

const std::vector<Cell>& CellTable::cells(SizeClass c) const {
  switch (c) {
    case SizeClass::Small: return small_;
    case SizeClass::Medium: return medium_;
    case SizeClass::Large: return large_;
    case SizeClass::NotMaximal: break;
  }
  throw StructuralError("cell tables only hold maximum-dimensional cells");
}

const Cell* CellTable::cell_of(const RegionLabel& r) const {
  const auto it = where_.find(r);
  if (it == where_.end()) return nullptr;
  return &cells(it->second.first)[it->second.second];
}

Location locate_cells(const MatrixPoint& g, const CellTable& table) {
  require_shape(g, table.m(), table.n());
  Location loc;
  std::vector<const Cell*> interior;
  for (SizeClass cls : {SizeClass::Small, SizeClass::Medium, SizeClass::Large}) {
    for (const auto& c : table.cells(cls)) {
      if (!member(g, c.relations, MemberMode::Closed)) continue;
      loc.closed_containers.push_back(c);
      if (cls == SizeClass::Small && member(g, c.relations, MemberMode::Open)) {
        interior.push_back(&c);
      }
    }
  }
  if (interior.size() == 1) loc.interior_of = *interior.front();
  return loc;
}

namespace {

Cell single_region_cell(const RegionLabel& r) {
  Cell cell;
  cell.m = r.m();
  cell.n = r.n();
  cell.relations = canonical_set(relations_v2(diagram_of(r)));
  cell.representatives = {r};
  cell.size_class = SizeClass::NotMaximal;
  return cell;
}

}  // namespace

Cell canonical_cell(const RegionLabel& r, const CellTable& table) {
  if (r.m() != table.m() || r.n() != table.n()) {
    throw StructuralError("region shape does not match the cell table");
  }
  if (const Cell* c = table.cell_of(r)) return *c;
  return single_region_cell(r);
}

Cell canonical_cell(const RegionLabel& r) {
  if (cell_size_class(r) == SizeClass::NotMaximal) return single_region_cell(r);
  return canonical_cell(r, CellTable::build(RegionAtlas::build(r.m(), r.n())));
}

ParentResult large_parent(const RegionLabel& r) {
  const SizeClass cls = cell_size_class(r);
  if (cls == SizeClass::NotMaximal) {
    throw StructuralError("region " + r.str() + " is not maximum-dimensional");
  }
  if (cls == SizeClass::Large) return {r, true};
  std::vector<Letter> letters = r.letters();
  RegionLabel cur = r;
  if (block_stats(cur).blocks[1].size == 1) {
    std::swap(letters[0], letters[1]);
    cur = RegionLabel::normalized(r.m(), r.n(), letters);
    letters = cur.letters();
  }
  const BlockStats s = block_stats(cur);
  if (s.blocks[s.blocks.size() - 2].size == 1) {
    const std::size_t k = letters.size();
    std::swap(letters[k - 1], letters[k - 2]);
    cur = RegionLabel::normalized(r.m(), r.n(), letters);
  }
  return {cur, false};
}

std::vector<RegionLabel> small_children(const RegionLabel& r) {
  if (cell_size_class(r) != SizeClass::Large) {
    throw StructuralError("region " + r.str() + " is not large");
  }
  const int m = r.m(), n = r.n();
  const std::vector<Letter>& letters = r.letters();
  const std::size_t second = block_stats(r).blocks[1].size;
  std::vector<RegionLabel> out;
  for (std::size_t f = 1; f <= second; ++f) {
    std::vector<Letter> front;
    front.push_back(letters[f]);
    for (std::size_t p = 0; p < letters.size(); ++p) {
      if (p != f) front.push_back(letters[p]);
    }
    const RegionLabel head = RegionLabel::normalized(m, n, front);
    const BlockStats s = block_stats(head);
    const std::size_t tail = s.blocks[s.blocks.size() - 2].size;
    if (tail == 1) {
      out.push_back(head);
      continue;
    }
    const std::size_t k = head.letters().size();
    for (std::size_t b = k - 1 - tail; b < k - 1; ++b) {
      std::vector<Letter> back;
      for (std::size_t p = 0; p < k; ++p) {
        if (p != b) back.push_back(head.letters()[p]);
      }
      back.push_back(head.letters()[b]);
      out.push_back(RegionLabel::normalized(m, n, back));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Preimage of g whose parameters lie in the closure of region r: every entry
// attains the minimum with the term of its colour. Variables are ordered
// (a, A, b, B).
std::optional<ParamPoint> closure_preimage(const MatrixPoint& g, const RegionLabel& r) {
  const int m = r.m(), n = r.n();
  const Diagram d = diagram_of(r);
  LinSystem sys;
  sys.num_vars = static_cast<std::size_t>(2 * m + 2 * n);
  auto var = [&](ParamFamily f, int k) -> std::size_t {
    switch (f) {
      case ParamFamily::a: return static_cast<std::size_t>(k - 1);
      case ParamFamily::A: return static_cast<std::size_t>(m + k - 1);
      case ParamFamily::b: return static_cast<std::size_t>(2 * m + k - 1);
      case ParamFamily::B: return static_cast<std::size_t>(2 * m + n + k - 1);
    }
    return 0;
  };
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      LinearForm white(sys.num_vars, Rat(0)), black(sys.num_vars, Rat(0));
      white[var(ParamFamily::a, i)] = Rat(1);
      white[var(ParamFamily::b, j)] = Rat(1);
      black[var(ParamFamily::A, i)] = Rat(1);
      black[var(ParamFamily::B, j)] = Rat(1);
      const Rat& v = g(i - 1, j - 1);
      if (d.color_of(i, j) == Color::White) {
        sys.equalities.push_back({white, v});
        sys.weak.push_back({black, v});
      } else {
        sys.equalities.push_back({black, v});
        sys.weak.push_back({white, v});
      }
    }
  }
  const auto w = lp_feasible(sys);
  if (!w) return std::nullopt;
  ParamPoint p;
  for (int i = 1; i <= m; ++i) p.a.push_back((*w)[var(ParamFamily::a, i)]);
  for (int i = 1; i <= m; ++i) p.A.push_back((*w)[var(ParamFamily::A, i)]);
  for (int j = 1; j <= n; ++j) p.b.push_back((*w)[var(ParamFamily::b, j)]);
  for (int j = 1; j <= n; ++j) p.B.push_back((*w)[var(ParamFamily::B, j)]);
  return p;
}

}  // namespace

Decision barvinok2_decide(const MatrixPoint& g, const RegionAtlas& atlas) {
  require_shape(g, atlas.m(), atlas.n());
  const auto& entries = atlas.entries();
  std::vector<std::size_t> violated(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    violated[k] = violated_equalities(g, entries[k].relations);
  }
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return violated[x] < violated[y]; });

  for (std::size_t k : order) {
    const auto& e = entries[k];
    if (!member(g, e.relations, MemberMode::Closed)) continue;
    std::optional<ParamPoint> p;
    if (member(g, e.relations, MemberMode::Open)) p = preimage_in_region(g, e.label);
    else p = closure_preimage(g, e.label);
    if (!p) continue;
    if (eval_g(*p) != g) throw InvariantViolation("certificate does not evaluate to the matrix");
    return Decision{true, e.label, std::move(p)};
  }
  return Decision{};
}

Decision barvinok2_decide(const MatrixPoint& g, const Budget& budget) {
  const RegionAtlas atlas =
      RegionAtlas::build(static_cast<int>(g.rows()), static_cast<int>(g.cols()), budget);
  return barvinok2_decide(g, atlas);
}

CellCount count_cells(const CellTable& table, SizeClass which) {
  CellCount c;
  const auto& cells = table.cells(which);
  c.distinct_images = cells.size();
  for (const auto& cell : cells) {
    c.positive_regions += static_cast<std::size_t>(
        std::count_if(cell.representatives.begin(), cell.representatives.end(),
                      [](const RegionLabel& r) { return r.is_positive(); }));
  }
  return c;
}

CellCount count_cells(int m, int n, SizeClass which, const Budget& budget) {
  return count_cells(CellTable::build(RegionAtlas::build(m, n, budget)), which);
}

}  // namespace tropbip
