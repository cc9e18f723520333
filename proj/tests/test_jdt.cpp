#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <set>

#include "tableaux/dual.hpp"
#include "tableaux/error.hpp"

using namespace tableaux;
using namespace tableaux::test;

TEST_CASE("slide in") {
  auto r = slide_in(grid(". 1\n1 2"), {1, 1});
  CHECK(render_grid(r.filling) == "1 1\n2\n");
  CHECK(r.vacated == Cell{2, 2});
  CHECK(slide_in(grid(". 1"), {1, 1}).vacated == Cell{1, 2});
  auto col = slide_in(grid(".\n1"), {1, 1});
  CHECK(render_grid(col.filling) == "1\n");
  CHECK(col.vacated == Cell{2, 1});
  CHECK_THROWS_AS(slide_in(grid(". 1\n1 2"), {2, 1}), PreconditionError);
}

TEST_CASE("slide out") {
  auto r = slide_out(grid("1 1\n2"), {2, 2});
  CHECK(r.filling == grid(". 1\n1 2"));
  CHECK(r.vacated == Cell{1, 1});
  CHECK(slide_out(grid("1"), {1, 2}).filling == grid(". 1"));
  CHECK_THROWS_AS(slide_out(grid("1 1\n2"), {3, 2}), PreconditionError);
}

TEST_CASE("slides invert each other") {
  seeded(31, 1000, [](Rng& rng) {
    Filling f = to_filling(random_skew_tableau(rng, {}));
    auto corners = inner_corners(f);
    if (corners.empty()) return;
    auto in = slide_in(f, rng.pick(corners));
    CHECK(slide_out(in.filling, in.vacated).filling == f);
    auto out = slide_out(f, rng.pick(outer_corners(f)));
    CHECK(slide_in(out.filling, out.vacated).filling == f);
  });
}

TEST_CASE("rectify") {
  CHECK(show(rectify(tab(". 1\n1 2"))) == "1 1\n2\n");
  Tableau p = tab("1 1 2\n2 3");
  CHECK(rectify(p) == p);
}

TEST_CASE("rectification does not depend on the corner order") {
  seeded(32, 500, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    auto random_corner = [&rng](const std::vector<Cell>& cs) { return rng.pick(cs); };
    Tableau a = rectify(t, random_corner);
    CHECK(a == rectify(t, random_corner));
    CHECK(a == rectify(t));
    CHECK(a == p_symbol(column_word(t), t.alphabet_size()));
  });
}

TEST_CASE("insertion") {
  CHECK(show(p_symbol({1, 2, 1})) == "1 1\n2\n");
  CHECK(show(p_symbol({2, 2, 1})) == "1 2\n2\n");
  CHECK(p_symbol({}) == Tableau());
}

TEST_CASE("Knuth equivalence") {
  CHECK(knuth_equivalent(tab(". 1\n1 2"), tab("1 1\n2")));
  CHECK_FALSE(knuth_equivalent(tab("1"), chain("0,0,1")));
  seeded(33, 200, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    CHECK(knuth_equivalent(t, rectify(t)));
  });
}

TEST_CASE("jdt pair on the complemented diagram") {
  Tableau pc = chain("221,4211,4421,4441");
  Tableau q = chain("4441,4442,44431,44433");
  auto [t, u] = jdt_pair(pc, q);
  CHECK(render_chain(t) == "3322,43321,44332,44433");
  CHECK(render_chain(u) == "221,222,3221,3322");
  auto [t2, u2] = jdt_pair(u, t);
  CHECK(t2 == q);
  CHECK(u2 == pc);
  CHECK(jdt_pair_by_slides(pc, q) == std::make_pair(t, u));
}

TEST_CASE("jdt pair with an empty partner") {
  Tableau p = chain("0,2,21");
  Tableau e = chain("21");
  auto [t, u] = jdt_pair(p, e);
  CHECK(t == p);
  CHECK(u == chain("0"));
}

TEST_CASE("jdt pair contracts") {
  seeded(34, 300, [](Rng& rng) {
    auto [p, q] = random_extending_pair(rng, {});
    auto [t, u] = jdt_pair(p, q);
    CHECK(content(t) == content(p));
    CHECK(content(u) == content(q));
    CHECK(u.inner() == p.inner());
    CHECK(t.outer() == q.outer());
    CHECK(rect_cells(t) == rect_cells(p));
    CHECK(rect_cells(u) == rect_cells(q));
    CHECK(jdt_pair(u, t) == std::make_pair(q, p));
    CHECK(jdt_pair_by_slides(p, q) == std::make_pair(t, u));
  });
}

TEST_CASE("dual equivalence") {
  Tableau a = tab("1 2\n3");
  CHECK(dual_equivalent(a, a));
  CHECK(dual_equivalent(a, tab("1 3\n2")));
  CHECK_FALSE(dual_equivalent(tab(". 1 2\n3"), tab(". 2 3\n1")));
}

TEST_CASE("dual equivalence matches the rectification trace") {
  for (int n = 1; n <= 4; ++n) {
    auto census = standard_census(3, 3, n);
    for (std::size_t i = 0; i < census.size(); ++i) {
      for (std::size_t j = i + 1; j < census.size(); ++j) {
        const Tableau& a = census[i];
        const Tableau& b = census[j];
        if (a.inner() != b.inner() || a.outer() != b.outer()) continue;
        CHECK(dual_equivalent(a, b) == (rectification_trace(a) == rectification_trace(b)));
      }
    }
  }
}

TEST_CASE("Knuth and dual classes meet in at most one tableau") {
  std::set<std::tuple<Partition, Partition, Tableau, std::vector<Partition>>> seen;
  for (int n = 0; n <= 6; ++n) {
    for (const Tableau& t : standard_census(4, 4, n)) {
      auto key = std::make_tuple(t.inner(), t.outer(), rectify(t), rectification_trace(t));
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("reversal") {
  CHECK(show(reversal(tab("1 1\n2"), 2)) == "1 2\n2\n");
  CHECK(reversal(tab("1"), 1) == tab("1"));
  RandomBounds small{3, 3, 3, 5};
  seeded(35, 100, [&](Rng& rng) {
    Tableau t = random_skew_tableau(rng, small);
    int k = t.alphabet_size();
    Tableau r = reversal(t, k);
    CHECK(r.inner() == t.inner());
    CHECK(r.outer() == t.outer());
    CHECK(knuth_equivalent(r, star(t, k)));
    CHECK(reversal(r, k) == t);
  });
}
