#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "tableaux/error.hpp"

using namespace tableaux;
using namespace tableaux::test;

TEST_CASE("content") {
  CHECK(content(chain("1,2,31,33")) == std::vector<int>{1, 2, 2});
  CHECK(content(chain("1,21,211,221")) == std::vector<int>{2, 1, 1});
  CHECK(content(chain("21,21")) == std::vector<int>{0});
}

TEST_CASE("chains and fillings") {
  CHECK(to_filling(chain("1,2,21")) == grid(". 1\n2"));
  CHECK(from_filling(grid(". 1\n2")) == chain("1,2,21"));
  auto f = to_filling(chain("421,431,432,442"));
  CHECK(f.at({2, 3}) == 1);
  CHECK(f.at({3, 2}) == 2);
  CHECK(f.at({2, 4}) == 3);
  CHECK(f.entries().size() == 3);
  CHECK(to_filling(chain("21,21")).entries().empty());
  CHECK_THROWS_AS(from_filling(Filling({0, 0}, {{{1, 1}, 2}, {{2, 1}, 1}})), InvalidTableau);
  CHECK_THROWS_AS(chain("1,22"), ParseError);
}

TEST_CASE("filling round trip on random tableaux") {
  seeded(21, 1000, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    CHECK(from_filling(to_filling(t), t.alphabet_size()) == t);
  });
}

TEST_CASE("standard renumbering") {
  CHECK(standard_renumbering(chain("1,3")) == chain("1,2,3"));
  Tableau t = tab(". 1 2 3\n2 3\n3");
  CHECK(t == chain("1,2,31,421"));
  CHECK(standard_renumbering(t) == chain("1,2,21,31,311,321,421"));
  Tableau s = chain("1,2,21,31");
  CHECK(standard_renumbering(s) == s);
  CHECK(is_standard(s));
}

TEST_CASE("standard renumbering has unit content") {
  seeded(22, 300, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    auto c = content(standard_renumbering(t));
    CHECK(std::all_of(c.begin(), c.end(), [](int x) { return x == 1; }));
    CHECK(static_cast<int>(c.size()) == t.outer().size() - t.inner().size());
  });
}

TEST_CASE("column words") {
  CHECK(column_word(tab(". 1\n1 2")) == Word{1, 2, 1});
  CHECK(column_word(tab("1 1\n2")) == Word{2, 1, 1});
  CHECK(column_word(Tableau()).empty());
}

TEST_CASE("column words carry the content") {
  seeded(23, 300, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    Word w = column_word(t);
    auto c = content(t);
    std::vector<int> counts(c.size(), 0);
    for (int x : w) ++counts[x - 1];
    CHECK(counts == c);
  });
}

TEST_CASE("rotation") {
  CHECK(show(star(tab("1 1\n2"), 2)) == ". 1\n2 2\n");
  CHECK(star(tab("1"), 1) == tab("1"));
  CHECK(star(tab("1 2"), 2) == tab("1 2"));
  seeded(24, 500, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    int k = t.alphabet_size();
    CHECK(to_filling(star(star(t, k), k)).normalized() == to_filling(t).normalized());
  });
}

TEST_CASE("vertical shift") {
  CHECK(equal_up_to_vshift(chain("0,1"), chain("1,11"), 1));
  CHECK(equal_up_to_vshift(chain("1,11"), chain("0,1"), 1));
  CHECK(equal_up_to_vshift(chain("1,21"), chain("1,21"), 3));
  CHECK_FALSE(equal_up_to_vshift(tab("1"), tab("1 1"), 2));
}
