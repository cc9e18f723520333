#pragma once

#include <optional>
#include <vector>

#include "tableaux/shape.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

struct ComplementParams;

enum class RuleKind { R, C, J, H };
enum class Direction { forward, reverse };

struct LocalRule {
  RuleKind kind = RuleKind::R;
  Direction direction = Direction::forward;
  std::optional<int> l;
};

// grid[i][j]: row i from the top, column j from the left.
template <class S>
struct GrowthDiagram {
  std::vector<std::vector<S>> grid;

  int rows() const { return static_cast<int>(grid.size()); }
  int cols() const { return grid.empty() ? 0 : static_cast<int>(grid[0].size()); }
  BasicTableau<S> row(int i) const { return BasicTableau<S>(grid[i]); }
  BasicTableau<S> col(int j) const;
  // Every row and column is a tableau and contents are uniform.
  bool valid() const;
};

template <class S>
struct PairResult {
  GrowthDiagram<S> diagram;
  BasicTableau<S> t;
  BasicTableau<S> u;
};

// Raw kernels on integer vectors.  Partition callers pad with zeros; rows
// past the end read as 0.  R and J return one extra part, since a box can
// enter the row below the last.
std::vector<int> rule_R_parts(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& g);
std::vector<int> rule_J_parts(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& d, int l);
std::vector<int> rule_C_parts(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& g, std::vector<int>* carries = nullptr);
std::vector<int> rule_C_reverse_parts(const std::vector<int>& b, const std::vector<int>& g,
                                      const std::vector<int>& d);
// Rows may hold +-kInfinity sentinels.  Throws NotComputable when the
// target column is missing.
std::vector<int> rule_H_parts(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& d);
std::vector<int> rule_H_reverse_parts(const std::vector<int>& a, const std::vector<int>& b,
                                      const std::vector<int>& d);
// Row form of the forward rule: the new box of gamma/alpha sits in the
// largest row above the row of delta/beta where alpha and beta differ.
std::vector<int> rule_H_row_form_parts(const std::vector<int>& a, const std::vector<int>& b,
                                       const std::vector<int>& d);

Partition rule_R(const Partition& a, const Partition& b, const Partition& g,
                 std::optional<int> l = std::nullopt);
// Returned in the coordinates of beta: a leading part equal to l is dropped.
Partition rule_R_reverse(const Partition& b, const Partition& g, const Partition& d, int l);
Partition rule_J(const Partition& a, const Partition& b, const Partition& d,
                 std::optional<int> l = std::nullopt);
// Strip surgery: swap a/1 in shared columns, then shift a's right in mixed rows.
Partition rule_J_strips(const Partition& a, const Partition& b, const Partition& d);
GeneralShape rule_C(const GeneralShape& a, const GeneralShape& b, const GeneralShape& g,
                    std::vector<int>* carries = nullptr);
GeneralShape rule_C_reverse(const GeneralShape& b, const GeneralShape& g, const GeneralShape& d);
GeneralShape rule_H(const GeneralShape& a, const GeneralShape& b, const GeneralShape& d);
GeneralShape rule_H_reverse(const GeneralShape& a, const GeneralShape& b, const GeneralShape& d);
StableShape rule_H(const StableShape& a, const StableShape& b, const StableShape& d);
StableShape rule_H_reverse(const StableShape& a, const StableShape& b, const StableShape& d);

Partition fomin_jdt_square(const Partition& a, const Partition& b, const Partition& d);
Partition fomin_rs_square(const Partition& a, const Partition& b, const Partition& g);
// Standard squares for rule C (general shapes, single-box steps).
GeneralShape standard_C_square(const GeneralShape& a, const GeneralShape& b, const GeneralShape& g);
GeneralShape standard_C_reverse_square(const GeneralShape& b, const GeneralShape& g,
                                       const GeneralShape& d);

// Orientation:
//  R, C forward: p across the top row and q down the left column (shared
//    inner border); t is the bottom row and u the right column.
//  R, C reverse: p across the bottom row and q down the right column
//    (shared outer border); t is the top row and u the left column.
//  In every case t has the content of p.
//  J: q extends p.  p is the left column and q the bottom row; t is the
//    right column and u the top row.  If instead p extends q, the roles of
//    the column and row swap and t is the top row, u the right column.
//  H: q extends p as for J (filled with the reverse rule), or p extends q
//    with q the top row and p the right column; then t is the left column
//    and u the bottom row.
PairResult<Partition> fill_pair(const Tableau& p, const Tableau& q, const LocalRule& rule);
PairResult<GeneralShape> fill_pair(const GeneralTableau& p, const GeneralTableau& q,
                                   const LocalRule& rule);

// L^C(p, q) = (t, u^C) where L(p, q^C) = (t, u), for L in {R, J}.
std::pair<Tableau, Tableau> apply_complemented(const LocalRule& rule, const Tableau& p,
                                               const Tableau& q, const ComplementParams& params);

}  // namespace tableaux
