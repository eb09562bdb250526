#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropbip/arrangement.hpp"
#include "tropbip/budget.hpp"
#include "tropbip/diagram.hpp"
#include "tropbip/lp.hpp"
#include "tropbip/morphism.hpp"

namespace tropbip {

enum class MemberMode : unsigned char { Open, Closed };

// Open: equalities exact, Delta > 0 strictly. Closed: Delta >= 0.
bool member(const MatrixPoint& g, const std::vector<RectRelation>& rels, MemberMode mode);
bool member(const MatrixPoint& g, const RegionLabel& r, MemberMode mode);

// The rectangle relations as a linear system over the m*n entries.
LinSystem relation_system(const std::vector<RectRelation>& rels, int m, int n, MemberMode mode);

// Exact containment of closed cells: every point of `inner` satisfies `outer`.
bool closed_implies(const std::vector<RectRelation>& inner, const std::vector<RectRelation>& outer,
                    int m, int n);

// Closure of the image of one or more regions, identified up to polyhedron
// equality.
struct Cell {
  int m = 0;
  int n = 0;
  std::vector<RectRelation> relations;     // canonical open description
  std::vector<RegionLabel> representatives;  // sorted; front() is the key
  SizeClass size_class = SizeClass::NotMaximal;

  const RegionLabel& key() const { return representatives.front(); }
  std::vector<LinearForm> span_forms() const;  // forms of the equalities
};

// Every region of A_{m,n} with its Version-2 relations and size class.
class RegionAtlas {
 public:
  struct Entry {
    RegionLabel label;
    std::vector<RectRelation> relations;  // diagram orientation
    SizeClass size_class;
  };

  // Throws BudgetExceeded when r_{m,n} exceeds the budget.
  static RegionAtlas build(int m, int n, const Budget& budget = Budget::from_env(),
                           unsigned jobs = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(const RegionLabel& r) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Entry> entries_;
  std::map<RegionLabel, std::size_t> index_;
};

// Maximum-dimensional cells grouped by size class. Regions are first grouped
// by their canonical relation set; groups with the same linear span are then
// merged when their closed polyhedra are equal (mutual exact implication).
class CellTable {
 public:
  static CellTable build(const RegionAtlas& atlas, unsigned jobs = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Cell>& cells(SizeClass c) const;
  // Cell containing a maximum-dimensional region; nullptr otherwise.
  const Cell* cell_of(const RegionLabel& r) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Cell> small_;
  std::vector<Cell> medium_;
  std::vector<Cell> large_;
  std::map<RegionLabel, std::pair<SizeClass, std::size_t>> where_;
};

struct Location {
  std::optional<Cell> interior_of;  // unique small cell whose open system holds
  std::vector<Cell> closed_containers;
};

Location locate_cells(const MatrixPoint& g, const CellTable& table);

Cell canonical_cell(const RegionLabel& r, const CellTable& table);
Cell canonical_cell(const RegionLabel& r);

struct ParentResult {
  RegionLabel label;
  bool already_large = false;  // input was large; label is the input itself
};

// Swaps the first two letters while the second block is a singleton, and the
// last two while the second-to-last block is a singleton.
ParentResult large_parent(const RegionLabel& r);

// Small regions subdividing a large one: one letter of the second block moves
// to the front and, if the second-to-last block is still not a singleton, one
// of its letters moves to the end. Throws StructuralError unless r is large.
std::vector<RegionLabel> small_children(const RegionLabel& r);

// Rebuilds the large region(s) whose closed cell has exactly these span
// equalities, up to negation. Throws NoRegionFound when none exists.
std::vector<RegionLabel> recover_region_from_span(const std::vector<RectRelation>& eqs, int m,
                                                  int n);

struct Decision {
  bool yes = false;
  std::optional<RegionLabel> witness_region;
  std::optional<ParamPoint> preimage;
};

// Barvinok rank <= 2 test by exhausting the regions of A_{m,n}. A Yes always
// carries a preimage p with eval_g(p) == G.
Decision barvinok2_decide(const MatrixPoint& g, const RegionAtlas& atlas);
Decision barvinok2_decide(const MatrixPoint& g, const Budget& budget = Budget::from_env());

struct CellCount {
  std::size_t distinct_images = 0;
  std::size_t positive_regions = 0;
};

CellCount count_cells(const CellTable& table, SizeClass which);
CellCount count_cells(int m, int n, SizeClass which, const Budget& budget = Budget::from_env());

}  // namespace tropbip
