#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tableaux/shape.hpp"

namespace tableaux {

// A chain of shapes whose consecutive differences are horizontal strips
// (stable strips for StableShape).  Entry i fills shapes[i] / shapes[i-1].
template <class S>
class BasicTableau {
 public:
  BasicTableau() : shapes_{S{}} {}
  explicit BasicTableau(std::vector<S> shapes);

  const std::vector<S>& shapes() const { return shapes_; }
  const S& operator[](std::size_t i) const { return shapes_[i]; }
  int alphabet_size() const { return static_cast<int>(shapes_.size()) - 1; }
  const S& inner() const { return shapes_.front(); }
  const S& outer() const { return shapes_.back(); }

  friend bool operator==(const BasicTableau&, const BasicTableau&) = default;
  friend auto operator<=>(const BasicTableau&, const BasicTableau&) = default;

 private:
  std::vector<S> shapes_;
};

using Tableau = BasicTableau<Partition>;
using GeneralTableau = BasicTableau<GeneralShape>;
using StableTableau = BasicTableau<StableShape>;

using Word = std::vector<int>;

// Entries on an arbitrary integer column range.  inner[r-1] is the inner
// border of row r; stars are vacated cells used by extraction traces and
// always sit to the right of the entries of their row.
class Filling {
 public:
  Filling() = default;
  Filling(std::vector<int> inner, std::map<Cell, int> entries, std::set<Cell> stars = {});

  const std::vector<int>& inner() const { return inner_; }
  int rows() const { return static_cast<int>(inner_.size()); }
  int inner_part(int row) const;
  std::vector<int> outer() const;
  const std::map<Cell, int>& entries() const { return entries_; }
  const std::set<Cell>& stars() const { return stars_; }
  std::optional<int> at(Cell c) const;
  bool empty() const { return entries_.empty() && stars_.empty(); }
  int max_entry() const;

  // Translate so the occupied cells start at row 1 and column 1, with rows
  // that hold no cells lowered onto the row beneath them.
  Filling normalized() const;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  std::vector<int> inner_;
  std::map<Cell, int> entries_;
  std::set<Cell> stars_;
};

// Each row starts where its first cell is; empty rows take the outer border
// of the row beneath.
Filling filling_from_cells(std::map<Cell, int> entries, std::set<Cell> stars = {});

template <class S>
std::vector<int> content(const BasicTableau<S>& t);

Filling to_filling(const Tableau& t);
Filling to_filling(const GeneralTableau& t);
// k defaults to the largest entry.
Tableau from_filling(const Filling& f, std::optional<int> k = std::nullopt);
GeneralTableau general_from_filling(const Filling& f, std::optional<int> k = std::nullopt);

Tableau standard_renumbering(const Tableau& t);
GeneralTableau standard_renumbering(const GeneralTableau& t);
bool is_standard(const Tableau& t);
bool is_standard(const GeneralTableau& t);

Word column_word(const Filling& f);
Word column_word(const Tableau& t);

Tableau star(const Tableau& t, int k);

bool equal_up_to_vshift(const Tableau& a, const Tableau& b, int l);
bool equal_up_to_vshift(const GeneralTableau& a, const GeneralTableau& b, int l);
// Stable tableaux compared after removing the common infinite prefix.
StableTableau normalize_stable(const StableTableau& t);

GeneralTableau to_general(const Tableau& t, int length);
Tableau to_partition_tableau(const GeneralTableau& t);
GeneralTableau shift_columns(const GeneralTableau& t, int delta);
// Largest length among the shapes of t.
int max_length(const Tableau& t);

}  // namespace tableaux
