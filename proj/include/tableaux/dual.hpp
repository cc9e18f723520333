#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tableaux/growth.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

// A standard tableau as raw part vectors of one fixed length.
using RawChain = std::vector<std::vector<int>>;

enum class MoveFamily { J, C, H };

// J moves keep partitions padded to `rows` rows with parts at most col_hi.
// C and H moves keep general shapes of exactly `rows` rows with parts in
// [col_lo, col_hi].
struct Window {
  int rows = 0;
  int col_lo = 0;
  int col_hi = 0;
};

// The moves available to a chain depend only on its inner and outer border,
// and are listed in an order that depends only on those borders, so two
// tableaux of one shape can be driven by the same move sequence.
//  J: slides into each inner corner and out of each outer corner.
//  C: internal column insertion of a single box added to the inner border,
//     and its reverse for a box removed from the outer border.
//  H: hopscotch with every single stable strip on either side.
class MoveSystem {
 public:
  MoveSystem(MoveFamily family, Window window) : family_(family), window_(window) {}

  MoveFamily family() const { return family_; }
  const Window& window() const { return window_; }
  // nullopt marks a move whose result leaves the window.
  std::vector<std::optional<RawChain>> moves(const RawChain& c) const;
  RawChain embed(const Tableau& t) const;

 private:
  MoveFamily family_;
  Window window_;
};

// Shape sequence of rectification by always sliding into the lowest inner
// corner.  Same-shape tableaux are dual equivalent iff these agree.
std::vector<Partition> rectification_trace(const Tableau& t);

// Pairwise bounded search over common slide sequences.  Non-standard inputs
// are compared through their standard renumberings.  depth defaults to twice
// the box count; the window is the bounding rectangle plus two rows and
// columns.
bool dual_equivalent(const Tableau& a, const Tableau& b, std::optional<int> depth = std::nullopt);

// Same search with the moves of the given rule (J, C or H).
bool l_dual_equivalent(const Tableau& p, const Tableau& p2, const LocalRule& rule,
                       std::optional<int> bound = std::nullopt);

// Coarsest partition of the seeds such that equal classes share their shape
// and, move by move, land in equal classes.  The search closes the seeds
// under the move system inside its window.
struct Refinement {
  std::vector<int> seed_class;  // class id per seed
  std::size_t states = 0;       // size of the closed state space
  int rounds = 0;
};
Refinement refine_dual_classes(const MoveSystem& system, const std::vector<RawChain>& seeds);

// Every standard tableau of every skew shape inside rows x cols with exactly n
// boxes.
std::vector<Tableau> standard_census(int rows, int cols, int n);

}  // namespace tableaux
