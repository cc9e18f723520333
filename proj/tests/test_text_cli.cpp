#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tableaux/cli.hpp"
#include "tableaux/complement.hpp"
#include "tableaux/error.hpp"

using namespace tableaux;
using namespace tableaux::test;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("tableaux_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("chain text") {
  Tableau t = parse_chain("221,222,3221,3322");
  CHECK(t.alphabet_size() == 3);
  CHECK(t.outer() == Partition{3, 3, 2, 2});
  CHECK(render_chain(t) == "221,222,3221,3322");
  CHECK(parse_chain("1 > 2 > [3,1]") == parse_chain("1,2,31"));
  StableTableau s = parse_stable_chain("[inf,4,3,1,-2]");
  CHECK(s.inner() == StableShape(1, {4, 3, 1, -2}));
  CHECK(render_chain(s) == "[inf,4,3,1,-2]");
  CHECK_THROWS_AS(parse_chain("321,31"), ParseError);
  CHECK_THROWS_WITH_AS(parse_chain("21,3x"), doctest::Contains("offset 4"), ParseError);
  CHECK_THROWS_AS(parse_chain("[2,"), ParseError);
}

TEST_CASE("general chains keep their length") {
  GeneralTableau g = parse_general_chain("[1,0,-1],[1,1,-1]");
  CHECK(g.inner() == GeneralShape{1, 0, -1});
  CHECK(render_chain(g) == "[1,0,-1],[1,1,-1]");
  CHECK(render_chain(parse_general_chain("1,2", 3)) == "100,200");
}

TEST_CASE("grid text") {
  Filling f = grid(". 1\n1 2");
  CHECK(f.inner() == std::vector<int>{1, 0});
  CHECK(f.at({1, 2}) == 1);
  CHECK(render_grid(f) == ". 1\n1 2\n");
  Filling shifted = grid("@0 1 1\n@0 2");
  CHECK(shifted.at({1, 0}) == 1);
  CHECK(shifted.at({1, 1}) == 1);
  CHECK(shifted.at({2, 0}) == 2);
  CHECK(parse_grid(render_grid(shifted)) == shifted);
  CHECK_THROWS_WITH_AS(grid("2 1"), doctest::Contains("row decreasing"), ParseError);
  CHECK_THROWS_AS(grid("1\n1"), ParseError);
  Filling stars = grid(". 2 * *");
  CHECK(stars.stars().size() == 2);
  CHECK(parse_grid(render_grid(stars)) == stars);
}

TEST_CASE("text round trips") {
  seeded(81, 1000, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    CHECK(parse_chain(render_chain(t)) == t);
    CHECK(parse_grid(render_grid(to_filling(t))) == to_filling(t));
    int m = std::max(1, max_length(t));
    GeneralTableau g = shift_columns(to_general(t, m), rng.between(-3, 2));
    CHECK(parse_general_chain(render_chain(g)) == g);
    StableTableau s = stable_complement(g);
    CHECK(parse_stable_chain(render_chain(s)) == s);
  });
}

TEST_CASE("random streams are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(0);
  CHECK(c.next() == 0xe220a8397b1dcdafULL);
  CHECK(cli({"random", "--seed", "9", "--count", "20"}).out ==
        cli({"random", "--seed", "9", "--count", "20"}).out);
  CHECK(cli({"random", "--seed", "9", "--count", "20"}).out !=
        cli({"random", "--seed", "10", "--count", "20"}).out);
}

TEST_CASE("random tableaux respect their bounds") {
  RandomBounds b{3, 4, 2, 6};
  seeded(82, 300, [&](Rng& rng) {
    Tableau t = random_skew_tableau(rng, b);
    CHECK(t.alphabet_size() <= 2);
    CHECK(t.outer().size() - t.inner().size() <= 6);
    CHECK(t.outer().length() <= 3);
    CHECK(t.outer().part(1) <= 4);
  });
}

TEST_CASE("tableau counts match enumeration") {
  for (const auto& [inner, outer] : std::vector<std::pair<Partition, Partition>>{
           {{}, {2, 1}}, {{1}, {3, 2}}, {{2}, {2, 2, 1}}, {{}, {3}}}) {
    for (int k = 1; k <= 3; ++k) {
      std::uint64_t n = 0;
      int boxes = outer.size() - inner.size();
      // Every content vector of length k summing to the box count.
      std::vector<int> c(k, 0);
      std::function<void(int, int)> go = [&](int i, int left) {
        if (i == k - 1) {
          c[i] = left;
          n += tableaux_of_shape(inner, outer, c).size();
          return;
        }
        for (int x = 0; x <= left; ++x) {
          c[i] = x;
          go(i + 1, left - x);
        }
      };
      go(0, boxes);
      CHECK(count_tableaux(inner, outer, k) == n);
    }
  }
}

TEST_CASE("random fillings are uniform") {
  Partition outer{2, 1};
  std::map<Tableau, int> seen;
  const int n = 8000;
  seeded(83, n, [&](Rng& rng) { ++seen[random_tableau(rng, {}, outer, 3)]; });
  CHECK(seen.size() == 8);
  for (auto& [t, count] : seen) {
    CHECK(count > n / 8 * 0.85);
    CHECK(count < n / 8 * 1.15);
  }
}

TEST_CASE("cli: pair diagrams") {
  std::string p = temp_file("row.txt", "1,2,31,33\n");
  std::string q = temp_file("col.txt", "1,21,211,221\n");
  auto r = cli({"pair", "--rule", "R", "--p", p, "--q", q, "--emit-diagram"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 31 33\n21 22 321 332\n211 221 3211 3321\n221 222 3221 3322\n");
  auto c = cli({"pair", "--rule", "C", "--p", p, "--q", q});
  CHECK(c.out == "221,321,431,541\n33,53,531,541\n");
  auto h = cli({"pair", "--rule", "H", "--p", p, "--q", q, "--emit-diagram"});
  CHECK(h.code == 1);
}

TEST_CASE("cli: rectify and replay") {
  for (const char* algo : {"jdt", "row-game", "col-game", "row-extract", "col-extract"}) {
    CAPTURE(algo);
    CHECK(cli({"rectify", "--algo", algo, "-"}, ". 1\n1 2\n").out == "1 1\n2\n");
  }
  seeded(84, 40, [](Rng& rng) {
    Tableau t = random_skew_tableau(rng, {});
    std::string input = render_grid(to_filling(t));
    if (input.empty()) return;
    for (const char* algo : {"jdt", "row-game", "col-game", "row-extract", "col-extract", "tesler"}) {
      CAPTURE(algo);
      auto plain = cli({"rectify", "--algo", algo, "-"}, input);
      auto trace = cli({"rectify", "--algo", algo, "--trace", "-"}, input);
      REQUIRE(trace.code == 0);
      auto replay = cli({"replay", "-"}, trace.out);
      CHECK(replay.code == 0);
      CHECK(replay.out == plain.out);
    }
  });
  auto trace = cli({"rectify", "--algo", "row-extract", "--trace", "-"}, ". 1\n1 2\n").out;
  auto pos = trace.find("extract 1 1");
  REQUIRE(pos != std::string::npos);
  trace.replace(pos, 11, "extract 1 2");
  CHECK(cli({"replay", "-"}, trace).code == 2);
}

TEST_CASE("cli: other commands") {
  CHECK(cli({"complement", "--k", "3", "--l", "4", "-"}, "1,2,31,33\n").out == "33,431,442,4441\n");
  auto s = cli({"stable-complement", "-"}, "0,1\n");
  CHECK(s.out == "1,[inf,0]\n");
  CHECK(cli({"stable-complement", "-"}, s.out).out == "0,1\n");
  CHECK(cli({"word", "-"}, ". 1\n1 2\n").out == "1 2 1\n");
  CHECK(cli({"renumber", "-"}, "1,3\n").out == "1,2,3\n");
  CHECK(cli({"reversal", "--k", "2", "-"}, "1 1\n2\n").out == "1 2\n2\n");
  std::string a = temp_file("a.txt", ". 1\n1 2\n"), b = temp_file("b.txt", "1 1\n2\n");
  CHECK(cli({"eq", "--kind", "knuth", a, b}).out == "true\n");
  CHECK(cli({"eq", "--kind", "dual", a, b}).out == "false\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({"check", "--trials", "1000", "--seed", "7", "--suite", "differential"}).code == 0);
  CHECK(cli({"--help"}).code == 0);
  auto bad = cli({"rectify", "-"}, "2 1\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("row decreasing") != std::string::npos);
  CHECK(cli({"rectify", "/nonexistent/file"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"pair", "--rule", "Q", "--p", "x", "--q", "y"}).code == 1);
}
