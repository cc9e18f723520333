#pragma once

#include <cstdint>
#include <vector>

#include "tableaux/hopscotch.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

// splitmix64: state += 0x9e3779b97f4a7c15, then the usual xor-shift-multiply
// finalizer.  Streams depend only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, n) by rejection, so no modulo bias.
  std::uint64_t below(std::uint64_t n);
  int between(int lo, int hi);
  bool coin() { return next() >> 63; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::uint64_t state_;
};

// Seed for trial i of a batch, independent of the order trials run in.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i);

// All partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Uniform over chains a_1 ⊆ ... ⊆ a_m of partitions in the box.
std::vector<Partition> random_nested(Rng& rng, int m, int rows, int cols);

// Uniform over column-strict fillings of outer/inner with entries in [k];
// throws PreconditionError when there are none.
Tableau random_tableau(Rng& rng, const Partition& inner, const Partition& outer, int k);
// Uniform over standard fillings.
Tableau random_standard_tableau(Rng& rng, const Partition& inner, const Partition& outer);
std::uint64_t count_tableaux(const Partition& inner, const Partition& outer, int k);

struct RandomBounds {
  int max_rows = 4;
  int max_cols = 4;
  int max_entry = 4;
  int max_boxes = 10;
};

// A skew shape drawn uniformly from the box (retrying until it has at most
// max_boxes boxes and at least one filling), then a uniform filling.
Tableau random_skew_tableau(Rng& rng, const RandomBounds& b);
Tableau random_standard_skew_tableau(Rng& rng, const RandomBounds& b);

Word random_word(Rng& rng, int length, int k);

// Alphabets are drawn from 1..max_entry; each tableau has at most max_boxes boxes.
std::pair<Tableau, Tableau> random_shared_inner_pair(Rng& rng, const RandomBounds& b);
// q extends p.
std::pair<Tableau, Tableau> random_extending_pair(Rng& rng, const RandomBounds& b);

struct HopscotchInstance {
  GeneralTableau p;
  StableTableau q;
  Extension side;
};
// q is the stable complement of an ordinary tableau; p has max_rows rows.
HopscotchInstance random_hopscotch_instance(Rng& rng, const RandomBounds& b);

}  // namespace tableaux
