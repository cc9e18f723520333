#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "tableaux/error.hpp"
#include "tableaux/shape.hpp"

using namespace tableaux;
using namespace tableaux::test;

TEST_CASE("partitions drop trailing zeros") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK(Partition{0}.empty());
  CHECK_THROWS_AS(Partition({1, 2}), InvalidShape);
  CHECK_THROWS_AS(Partition({1, -1}), InvalidShape);
}

TEST_CASE("containment") {
  CHECK(contains(Partition{1}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{2, 2}, Partition{2, 1}));
  CHECK(contains(Partition{2, 1, 1}, Partition{2, 2, 1}));
  CHECK(contains(GeneralShape{1, -2}, GeneralShape{1, 0}));
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip(Partition{1}, Partition{2}));
  CHECK(is_horizontal_strip(Partition{3, 1}, Partition{3, 2, 1}));
  CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{2, 2}));
  CHECK(is_horizontal_strip(GeneralShape{2, -1}, GeneralShape{3, 0}));
}

TEST_CASE("stable strips") {
  StableShape a(1, {4, 3, 1, -2});
  StableShape b(2, {3, 3, -1, -3});
  CHECK(is_stable_horizontal_strip(a, b));
  CHECK(is_stable_horizontal_strip(StableShape(1, {0}), StableShape(2, {0})));
  CHECK_FALSE(is_stable_horizontal_strip(StableShape(1, {2}), StableShape(1, {3})));
}

TEST_CASE("stable shapes ignore trailing minus infinity") {
  StableShape a = StableShape::from_rows({kInfinity, 4, -2, -kInfinity, -kInfinity});
  CHECK(a == StableShape(1, {4, -2}));
  CHECK(StableShape::from_rows(a.rows(7)) == a);
  CHECK(a.part(1) == kInfinity);
  CHECK(a.part(3) == -2);
  CHECK(a.part(9) == -kInfinity);
}

TEST_CASE("join and meet") {
  CHECK(join(Partition{2}, Partition{1, 1}) == Partition{2, 1});
  CHECK(meet(Partition{2}, Partition{1, 1}) == Partition{1});
  CHECK(join(Partition{3, 1}, Partition{3, 1}) == Partition{3, 1});
}

TEST_CASE("covers") {
  CHECK(covers(Partition{2, 1}, Partition{2, 2}));
  CHECK_FALSE(covers(Partition{2, 1}, Partition{3, 2}));
  CHECK(covers(Partition{4, 2, 1}, Partition{4, 3, 1}));
  CHECK(added_box(Partition{4, 2, 1}, Partition{4, 3, 1}) == Cell{2, 3});
}

TEST_CASE("corners") {
  SkewShape s{Partition{1}, Partition{2, 2}};
  CHECK(inner_corners(s) == std::vector<Cell>{{1, 1}});
  auto out = outer_corners(s);
  std::sort(out.begin(), out.end());
  CHECK(out == std::vector<Cell>{{1, 3}, {3, 1}});
  CHECK(inner_corners(SkewShape{Partition{}, Partition{2, 1}}).empty());
}

TEST_CASE("cross order") {
  CHECK(cross_less({1, 2}, {2, 2}));
  CHECK(cross_less({1, 2}, {2, 1}));
  CHECK_FALSE(cross_less({2, 1}, {1, 2}));
}

TEST_CASE("cross order is a strict partial order on a 6x6 grid") {
  std::vector<Cell> cells;
  for (int r = 1; r <= 6; ++r)
    for (int c = 1; c <= 6; ++c) cells.push_back({r, c});
  for (Cell a : cells) {
    CHECK_FALSE(cross_less(a, a));
    for (Cell b : cells) {
      if (!cross_less(a, b)) continue;
      CHECK_FALSE(cross_less(b, a));
      for (Cell c : cells) {
        if (cross_less(b, c)) CHECK(cross_less(a, c));
      }
    }
  }
}

TEST_CASE("prepend") {
  CHECK(prepend(Partition{2, 1}, 4, 1) == Partition{4, 2, 1});
  CHECK(prepend(Partition{2, 2, 1}, 4, 3) == Partition{4, 4, 4, 2, 2, 1});
  CHECK_THROWS_AS(prepend(Partition{3, 1}, 2, 1), InvalidShape);
  CHECK(prepend_infinity(StableShape(0, {2}), 2) == StableShape(2, {2}));
}

TEST_CASE("strip tests agree with one box per column") {
  seeded(11, 500, [](Rng& rng) {
    auto ab = random_nested(rng, 2, 4, 5);
    auto cells = skew_cells(ab[0], ab[1]);
    std::map<int, int> per_col;
    for (Cell c : cells) ++per_col[c.col];
    bool one_per_col = std::all_of(per_col.begin(), per_col.end(), [](auto& kv) { return kv.second == 1; });
    CHECK(is_horizontal_strip(ab[0], ab[1]) == one_per_col);
  });
}

TEST_CASE("general shapes form a lattice under join and meet") {
  seeded(12, 1000, [](Rng& rng) {
    auto shape = [&] {
      std::vector<int> v(3);
      for (int& x : v) x = rng.between(-3, 3);
      std::sort(v.rbegin(), v.rend());
      return GeneralShape(v);
    };
    GeneralShape a = shape(), b = shape(), c = shape();
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    CHECK(join(a, join(b, c)) == join(join(a, b), c));
    CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
  });
}
