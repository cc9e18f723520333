#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tableaux/dual.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

struct SlideTrace {
  std::vector<Cell> path;
  Cell start;
  Cell end;
};

struct SlideResult {
  Filling filling;
  Cell vacated;  // the outer corner left empty (slide_in) or the new inner cell (slide_out)
  SlideTrace trace;
};

// b = (r, inner_r) with inner_{r+1} < inner_r.  Ties go to the entry below.
SlideResult slide_in(const Filling& f, Cell b);
// c = (r, outer_r + 1) with outer_{r-1} > outer_r.
SlideResult slide_out(const Filling& f, Cell c);

std::vector<Cell> inner_corners(const Filling& f);
std::vector<Cell> outer_corners(const Filling& f);

using CornerChooser = std::function<Cell(const std::vector<Cell>&)>;

Tableau rectify(const Tableau& t);
Tableau rectify(const Tableau& t, const CornerChooser& choose);
// The filling is normalized first, so any column offset is irrelevant.
Tableau rectify(const Filling& f);

// J(p, q) by growth diagram; see fill_pair for orientation.
std::pair<Tableau, Tableau> jdt_pair(const Tableau& p, const Tableau& q);
// The same operation by explicit slides: the strips of the inner tableau are
// removed from the largest entry down, rightmost box first, and the outer
// tableau slides into each.
std::pair<Tableau, Tableau> jdt_pair_by_slides(const Tableau& p, const Tableau& q);

// Row insertion of w; k defaults to the largest letter.
Tableau p_symbol(const Word& w, std::optional<int> k = std::nullopt);
bool knuth_equivalent(const Tableau& a, const Tableau& b);

// Every column-strict tableau from inner to outer with the given content.
std::vector<Tableau> tableaux_of_shape(const Partition& inner, const Partition& outer,
                                       const std::vector<int>& content);

Tableau reversal(const Tableau& t, int k);

}  // namespace tableaux
