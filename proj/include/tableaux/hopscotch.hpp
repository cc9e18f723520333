#pragma once

#include <set>
#include <utility>
#include <vector>

#include "tableaux/tableau.hpp"

namespace tableaux {

// Stable tableaux are taken in normalized form (smallest infinite count 0).
// q extends p when q's inner border has the finite parts of p's outer border;
// p extends q when p's inner border is the finite part of q's outer border.

// Both conditions can hold at once; `detect` then takes q extending p.  The
// output of one orientation is an input of the other, so H(H(p; q)) = (p; q)
// needs the opposite orientation on the second call.
enum class Extension { detect, q_extends_p, p_extends_q };

// H(p; q) = (t; u^S) where C(p, q^S) = (t, u).
std::pair<GeneralTableau, StableTableau> hopscotch_pair(const GeneralTableau& p,
                                                        const StableTableau& q,
                                                        Extension side = Extension::detect);
// p is padded with zero rows to the number of finite rows of q.
std::pair<GeneralTableau, StableTableau> hopscotch_pair(const Tableau& p, const StableTableau& q,
                                                        Extension side = Extension::detect);

// The same operation from the box-by-box local rules; p must be standard.
std::pair<GeneralTableau, StableTableau> hopscotch_pair_local(const GeneralTableau& p,
                                                              const StableTableau& q,
                                                              Extension side = Extension::detect);

// A chain of partitions, each step a single box or an equality.
using AlmostStandardTableau = std::vector<Partition>;

bool is_almost_standard(const AlmostStandardTableau& p);

struct ShiftResult {
  AlmostStandardTableau shifted;
  std::set<int> removed;
};

ShiftResult tesler_shift(const AlmostStandardTableau& p);
Tableau tesler_rectify(const Tableau& p);
bool tesler_hopscotch_check(const Tableau& p);

}  // namespace tableaux
