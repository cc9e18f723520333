#pragma once

#include "tableaux/growth.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

struct ComplementParams {
  int k = 0;  // alphabet size
  int l = 0;  // column bound, at least the first part of the outer border
};

// beta^k within (l, beta^{k-1}) within ... within (l^k, beta^0).
Tableau complement(const Tableau& t, const ComplementParams& p);
bool complement_involution_check(const Tableau& t, const ComplementParams& p);

// Ordinary to stable: beta^k within (inf, beta^{k-1}) within ... within
// (inf^k, beta^0).  Partitions are padded to the longest shape of t.
StableTableau stable_complement(const GeneralTableau& t);
StableTableau stable_complement(const Tableau& t);
// Stable to ordinary: the common infinite prefix is dropped.
GeneralTableau stable_complement(const StableTableau& t);

GrowthDiagram<Partition> complement_growth_rows(const GrowthDiagram<Partition>& g,
                                                const ComplementParams& p);
GrowthDiagram<Partition> complement_growth_cols(const GrowthDiagram<Partition>& g,
                                                const ComplementParams& p);

}  // namespace tableaux
