#pragma once

#include <doctest.h>

#include <map>
#include <string>

#include "tableaux/jdt.hpp"
#include "tableaux/random.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/text.hpp"

namespace tableaux::test {

inline Tableau chain(const std::string& s) { return parse_chain(s); }
inline GeneralTableau gchain(const std::string& s, int length = 0) {
  return parse_general_chain(s, length);
}
inline Filling grid(const std::string& s) { return parse_grid(s); }
inline Tableau tab(const std::string& g) { return from_filling(parse_grid(g)); }
inline std::string show(const Tableau& t) { return render_grid(to_filling(t)); }

// Rectified entries; comparing cells avoids alphabet-size differences between
// tableaux that hold the same entries.
inline std::map<Cell, int> rect_cells(const Tableau& t) { return to_filling(rectify(t)).entries(); }
inline std::map<Cell, int> rect_cells(const GeneralTableau& t) {
  return to_filling(rectify(to_filling(t))).entries();
}
inline std::map<Cell, int> rect_cells(const Filling& f) { return to_filling(rectify(f)).entries(); }

template <class F>
void seeded(std::uint64_t seed, int n, F body) {
  for (int i = 0; i < n; ++i) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
    CAPTURE(i);
    body(rng);
  }
}

}  // namespace tableaux::test
