#pragma once

#include <string>
#include <string_view>

#include "tableaux/tableau.hpp"

namespace tableaux {

// Chains: shapes separated by "," ">" or whitespace.  A shape is a compact
// digit string "421" or a bracket list "[inf,4,-2]".  Errors carry the
// character offset.
Tableau parse_chain(std::string_view text);
// Shapes are padded with zero parts to a common length (at least `length`).
GeneralTableau parse_general_chain(std::string_view text, int length = 0);
StableTableau parse_stable_chain(std::string_view text);

std::string render_shape(const Partition& p);
// Keeps trailing zero parts so the length survives a round trip.
std::string render_shape(const GeneralShape& g);
std::string render_shape(const StableShape& s);

template <class S>
std::string render_chain(const BasicTableau<S>& t, std::string_view sep = ",");

// Grids: one line per row; "." is an inner border cell, "*" a star, and a
// leading "@c" token puts the first token of the row in column c.
Filling parse_grid(std::string_view text);
std::string render_grid(const Filling& f);

}  // namespace tableaux
