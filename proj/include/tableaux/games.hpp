#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tableaux/jdt.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

// Entries with no entry immediately to the left or above.
std::vector<Cell> cocorners(const Filling& f);

// The entry at c is removed, its cell joins the inner border, and it is
// row-inserted into the rows below (bumping the leftmost strictly greater
// entry).
Filling internal_row_insert(const Filling& f, Cell c);
// Column version: bumps the topmost entry at least as large, moving right.
Filling internal_column_insert(const Filling& f, Cell c);

using CocornerChooser = std::function<Cell(const std::vector<Cell>&)>;

// Requires inner_part(j) == 0.  The default chooser takes the first cocorner.
Tableau row_insertion_game(const Filling& f, int j, const CocornerChooser& choose = nullptr);
Tableau column_insertion_game(const Filling& f, const CocornerChooser& choose = nullptr);

struct RowExtraction {
  Filling state;              // entries of E(p) plus the strip of stars
  Tableau tableau;            // E(p) without the stars
  std::vector<int> removed;   // ascending
};

RowExtraction row_extract(const Tableau& p);
Tableau row_extraction_rectify(const Tableau& p);

struct ColumnSlide {
  Filling filling;
  SlideTrace trace;
};

// Absent when no chain 1, 2, ..., k increasing in the cross order starts
// after b.
std::optional<ColumnSlide> column_slide(const Filling& f, Cell b, int k);
Filling column_extract(const Filling& f, int k);
// Number of columns that begin above the first column.
int columns_above_first(const Filling& f);
Tableau column_extraction_rectify(const Filling& f, int k);

struct DifferentialReport {
  bool agree = true;
  std::vector<std::pair<std::string, Tableau>> results;
  // Smallest disagreeing tableau found by trimming strips from either end.
  std::optional<Tableau> counterexample;
};

DifferentialReport rectify_differential(const Tableau& p);

}  // namespace tableaux
