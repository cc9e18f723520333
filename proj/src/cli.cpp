#include "tableaux/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tableaux/checks.hpp"
#include "tableaux/complement.hpp"
#include "tableaux/error.hpp"
#include "tableaux/games.hpp"
#include "tableaux/growth.hpp"
#include "tableaux/hopscotch.hpp"
#include "tableaux/jdt.hpp"
#include "tableaux/random.hpp"
#include "tableaux/text.hpp"

namespace tableaux {

namespace {

struct InputError : Error {
  using Error::Error;
};

// Raised for a failed replay; maps to exit code 2.
struct Violation : Error {
  using Error::Error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream s;
  if (path == "-") {
    s << in.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  s << f.rdbuf();
  return s.str();
}

bool looks_like_chain(const std::string& text) {
  return text.find_first_of(",>[") != std::string::npos;
}

struct Input {
  Tableau tableau;
  bool chain = false;
};

Input read_tableau(const std::string& text) {
  if (looks_like_chain(text)) return {parse_chain(text), true};
  Filling f = parse_grid(text);
  for (int b : f.inner()) {
    if (b < 0) {
      f = f.normalized();
      break;
    }
  }
  return {from_filling(f), false};
}

std::string show(const Tableau& t, bool chain) {
  return chain ? render_chain(t) + "\n" : render_grid(to_filling(t));
}

// General shapes with no negative part print compactly, without
// trailing zeros.
std::string display(const GeneralShape& g) {
  return g.is_partition() ? to_string(g) : render_shape(g);
}
std::string display(const Partition& p) { return render_shape(p); }
std::string display(const StableShape& s) { return render_shape(s); }

template <class S>
std::string display(const BasicTableau<S>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.shapes().size(); ++i) {
    if (i) out += ",";
    out += display(t[i]);
  }
  return out;
}

template <class S>
std::string display(const GrowthDiagram<S>& d) {
  std::string out;
  for (const auto& row : d.grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += display(row[j]);
    }
    out += '\n';
  }
  return out;
}

// ---- rectification with traces ----

struct Traced {
  Tableau result;
  std::vector<std::string> steps;
};

std::string cell_text(Cell c) { return std::to_string(c.row) + " " + std::to_string(c.col); }

std::string list_text(const std::string& head, const std::vector<int>& xs) {
  std::string s = head;
  for (int x : xs) s += " " + std::to_string(x);
  return s;
}

int first_empty_row(const Filling& f) {
  int j = 1;
  while (f.inner_part(j) != 0) ++j;
  return j;
}

Tableau rows_to_tableau(const std::vector<std::vector<int>>& rows, int k) {
  std::map<Cell, int> entries;
  int n = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      entries[{static_cast<int>(i) + 1, static_cast<int>(j) + 1}] = rows[i][j];
      n = static_cast<int>(i) + 1;
    }
  }
  return from_filling(Filling(std::vector<int>(n, 0), std::move(entries)), k);
}

Traced run_algo(const std::string& algo, const Tableau& t, int k) {
  Traced r;
  auto record = [&r](const char* verb) {
    return [&r, verb](const std::vector<Cell>& cs) {
      r.steps.push_back(std::string(verb) + " " + cell_text(cs.back()));
      return cs.back();
    };
  };
  Filling f = to_filling(t);
  if (algo == "jdt") {
    r.result = rectify(t, record("slide"));
  } else if (algo == "row-game") {
    r.result = row_insertion_game(f, first_empty_row(f), record("insert"));
  } else if (algo == "col-game") {
    r.result = column_insertion_game(f, record("insert"));
  } else if (algo == "row-extract") {
    Tableau cur = t;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= t.alphabet_size(); ++i) {
      auto e = row_extract(cur);
      r.steps.push_back(list_text("extract", e.removed));
      rows.push_back(e.removed);
      cur = e.tableau;
    }
    r.result = rows_to_tableau(rows, t.alphabet_size());
  } else if (algo == "col-extract") {
    Filling cur = f.normalized();
    for (int j = columns_above_first(cur); j > 0; --j) {
      cur = column_extract(cur, k);
      r.steps.push_back("extract");
    }
    r.result = cur.entries().empty() ? Tableau() : from_filling(cur.normalized(), k);
  } else if (algo == "tesler") {
    Tableau s = standard_renumbering(t);
    AlmostStandardTableau cur = s.shapes();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= s.alphabet_size(); ++i) {
      auto sh = tesler_shift(cur);
      std::vector<int> removed(sh.removed.begin(), sh.removed.end());
      r.steps.push_back(list_text("shift", removed));
      rows.push_back(removed);
      cur = sh.shifted;
    }
    r.result = rows_to_tableau(rows, s.alphabet_size());
  } else {
    throw InputError("unknown algorithm '" + algo + "'");
  }
  return r;
}

std::vector<int> ints_after(std::istringstream& s) {
  std::vector<int> v;
  int x;
  while (s >> x) v.push_back(x);
  return v;
}

Tableau replay_steps(const std::string& algo, const Tableau& t, int k,
                     const std::vector<std::string>& steps) {
  Filling f = to_filling(t);
  std::vector<std::vector<int>> rows;
  Tableau cur = algo == "tesler" ? standard_renumbering(t) : t;
  AlmostStandardTableau shapes = cur.shapes();
  if (algo == "col-extract") f = f.normalized();
  for (const auto& line : steps) {
    std::istringstream s(line);
    std::string verb;
    s >> verb;
    auto args = ints_after(s);
    auto cell = [&]() -> Cell {
      if (args.size() != 2) throw InputError("bad step '" + line + "'");
      return {args[0], args[1]};
    };
    if (algo == "jdt" && verb == "slide") {
      f = slide_in(f, cell()).filling;
    } else if (algo == "row-game" && verb == "insert") {
      f = internal_row_insert(f, cell());
    } else if (algo == "col-game" && verb == "insert") {
      f = internal_column_insert(f, cell());
    } else if (algo == "row-extract" && verb == "extract") {
      auto e = row_extract(cur);
      if (e.removed != args) throw Violation("extraction removed different entries at '" + line + "'");
      rows.push_back(e.removed);
      cur = e.tableau;
    } else if (algo == "col-extract" && verb == "extract") {
      f = column_extract(f, k);
    } else if (algo == "tesler" && verb == "shift") {
      auto sh = tesler_shift(shapes);
      if (std::vector<int>(sh.removed.begin(), sh.removed.end()) != args) {
        throw Violation("shift removed different indices at '" + line + "'");
      }
      rows.push_back(args);
      shapes = sh.shifted;
    } else {
      throw InputError("step '" + line + "' does not belong to " + algo);
    }
  }
  if (algo == "row-extract") return rows_to_tableau(rows, t.alphabet_size());
  if (algo == "tesler") return rows_to_tableau(rows, cur.alphabet_size());
  if (f.entries().empty()) return Tableau();
  return from_filling(f.normalized(), k);
}

std::string trace_document(const std::string& algo, const Tableau& t, int k, const Traced& r) {
  std::string out = "algo " + algo + "\nk " + std::to_string(k) + "\nstart\n";
  out += render_grid(to_filling(t));
  out += "steps\n";
  for (const auto& s : r.steps) out += s + "\n";
  out += "result\n" + render_grid(to_filling(r.result));
  return out;
}

bool same_entries(const Tableau& a, const Tableau& b) {
  auto cells = [](const Tableau& t) { return to_filling(t).normalized().entries(); };
  return cells(a) == cells(b);
}

// ---- command line ----

struct Options {
  std::string file = "-", file2, pfile, qfile, algo = "jdt", rule, kind = "knuth", suite = "all",
              side = "detect", format = "chain";
  bool trace = false, reverse = false, emit = false;
  std::optional<int> k, l, depth;
  int max_rows = 4, max_cols = 4, max_entry = 3, count = 10, trials = 100, threads = 0;
  std::optional<int> max_boxes;
  std::uint64_t seed = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Skew tableaux: rectification, complementation and growth-diagram pair operations"};
  app.name("tableaux");
  app.require_subcommand(1);
  Options o;

  auto* rect = app.add_subcommand("rectify", "Rectify a tableau (grid or chain)");
  rect->add_option("--algo", o.algo, "jdt, row-game, col-game, row-extract, col-extract or tesler")
      ->check(CLI::IsMember({"jdt", "row-game", "col-game", "row-extract", "col-extract", "tesler"}));
  rect->add_flag("--trace", o.trace, "Print a replayable log instead of the result");
  rect->add_option("--k", o.k, "Alphabet size for column extraction");
  rect->add_option("file", o.file, "Input file, - for standard input");

  auto* replay = app.add_subcommand("replay", "Re-run a rectify --trace log and compare results");
  replay->add_option("file", o.file, "Trace file");

  auto* comp = app.add_subcommand("complement", "Complement a tableau");
  comp->add_option("--k", o.k, "Alphabet size");
  comp->add_option("--l", o.l, "Column bound")->required();
  comp->add_option("file", o.file);

  auto* scomp = app.add_subcommand("stable-complement", "Stable complement (either direction)");
  scomp->add_option("--k", o.k, "Expected alphabet size");
  scomp->add_option("file", o.file);

  auto* pair = app.add_subcommand("pair", "Apply a pair operation");
  pair->add_option("--rule", o.rule)->required()->check(CLI::IsMember({"R", "C", "J", "H"}));
  pair->add_flag("--reverse", o.reverse);
  pair->add_option("--l", o.l, "Column bound for reverse R");
  pair->add_option("--p", o.pfile)->required();
  pair->add_option("--q", o.qfile)->required();
  pair->add_option("--side", o.side, "For H: detect, q-extends-p or p-extends-q")
      ->check(CLI::IsMember({"detect", "q-extends-p", "p-extends-q"}));
  pair->add_flag("--emit-diagram", o.emit);

  auto* eq = app.add_subcommand("eq", "Knuth or dual equivalence of two tableaux");
  eq->add_option("--kind", o.kind)->check(CLI::IsMember({"knuth", "dual"}));
  eq->add_option("--depth", o.depth);
  eq->add_option("a", o.file)->required();
  eq->add_option("b", o.file2)->required();

  auto* word = app.add_subcommand("word", "Column reading word");
  word->add_option("file", o.file);

  auto* renum = app.add_subcommand("renumber", "Standard renumbering");
  renum->add_option("file", o.file);

  auto* rev = app.add_subcommand("reversal", "Reversal of a tableau");
  rev->add_option("--k", o.k)->required();
  rev->add_option("file", o.file);

  auto* rnd = app.add_subcommand("random", "Seeded random skew tableaux");
  rnd->add_option("--max-rows", o.max_rows);
  rnd->add_option("--max-cols", o.max_cols);
  rnd->add_option("--max-entry", o.max_entry);
  rnd->add_option("--max-boxes", o.max_boxes);
  rnd->add_option("--seed", o.seed);
  rnd->add_option("--count", o.count);
  rnd->add_option("--format", o.format)->check(CLI::IsMember({"chain", "grid"}));

  auto* chk = app.add_subcommand("check", "Seeded property checks");
  chk->add_option("--trials", o.trials);
  chk->add_option("--max-boxes", o.max_boxes);
  chk->add_option("--max-entry", o.max_entry);
  chk->add_option("--seed", o.seed);
  chk->add_option("--threads", o.threads);
  chk->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"all", "involutions", "differential", "dual", "words"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*rect) {
      auto t = read_tableau(slurp(o.file, in)).tableau;
      int k = o.k.value_or(t.alphabet_size());
      auto r = run_algo(o.algo, t, k);
      out << (o.trace ? trace_document(o.algo, t, k, r) : render_grid(to_filling(r.result)));
    } else if (*replay) {
      std::istringstream doc(slurp(o.file, in));
      std::string line, algo, section;
      int k = 0;
      std::string start, result;
      std::vector<std::string> steps;
      while (std::getline(doc, line)) {
        if (line.rfind("algo ", 0) == 0) {
          algo = line.substr(5);
        } else if (line.rfind("k ", 0) == 0) {
          k = std::stoi(line.substr(2));
        } else if (line == "start" || line == "steps" || line == "result") {
          section = line;
        } else if (section == "start") {
          start += line + "\n";
        } else if (section == "steps") {
          if (!line.empty()) steps.push_back(line);
        } else if (section == "result") {
          result += line + "\n";
        }
      }
      if (algo.empty() || start.empty()) throw InputError("not a trace document");
      Tableau t = read_tableau(start).tableau;
      Tableau got = replay_steps(algo, t, k, steps);
      out << render_grid(to_filling(got));
      Tableau want = result.find_first_not_of(" \n") == std::string::npos ? Tableau()
                                                                          : read_tableau(result).tableau;
      if (!same_entries(got, want)) throw Violation("replay does not reach the recorded result");
    } else if (*comp) {
      auto input = read_tableau(slurp(o.file, in));
      ComplementParams cp{o.k.value_or(input.tableau.alphabet_size()), *o.l};
      out << show(complement(input.tableau, cp), input.chain);
    } else if (*scomp) {
      std::string text = slurp(o.file, in);
      auto check_k = [&](int k) {
        if (o.k && *o.k != k) throw InputError("alphabet size is " + std::to_string(k));
      };
      if (text.find("inf") != std::string::npos) {
        auto s = parse_stable_chain(text);
        check_k(s.alphabet_size());
        out << display(stable_complement(s)) << "\n";
      } else {
        auto g = parse_general_chain(text);
        check_k(g.alphabet_size());
        out << display(stable_complement(g)) << "\n";
      }
    } else if (*pair) {
      std::string ptext = slurp(o.pfile, in), qtext = slurp(o.qfile, in);
      LocalRule rule{RuleKind::R, o.reverse ? Direction::reverse : Direction::forward, o.l};
      if (o.rule == "H") {
        if (o.emit) throw InputError("--emit-diagram is not available for rule H");
        auto q = parse_stable_chain(qtext);
        int m = static_cast<int>(normalize_stable(q).inner().finite().size());
        auto p = parse_general_chain(ptext, m);
        Extension side = o.side == "q-extends-p"   ? Extension::q_extends_p
                         : o.side == "p-extends-q" ? Extension::p_extends_q
                                                   : Extension::detect;
        auto [t, u] = hopscotch_pair(p, q, side);
        out << display(t) << "\n" << display(u) << "\n";
      } else if (o.rule == "C") {
        int m = std::max(parse_general_chain(ptext).inner().length(),
                         parse_general_chain(qtext).inner().length());
        rule.kind = RuleKind::C;
        auto r = fill_pair(parse_general_chain(ptext, m), parse_general_chain(qtext, m), rule);
        out << (o.emit ? display(r.diagram) : display(r.t) + "\n" + display(r.u) + "\n");
      } else {
        rule.kind = o.rule == "R" ? RuleKind::R : RuleKind::J;
        if (rule.kind == RuleKind::J && o.reverse) throw InputError("J is its own inverse; drop --reverse");
        auto r = fill_pair(parse_chain(ptext), parse_chain(qtext), rule);
        out << (o.emit ? display(r.diagram) : display(r.t) + "\n" + display(r.u) + "\n");
      }
    } else if (*eq) {
      Tableau a = read_tableau(slurp(o.file, in)).tableau;
      Tableau b = read_tableau(slurp(o.file2, in)).tableau;
      bool same = false;
      if (o.kind == "knuth") {
        same = knuth_equivalent(a, b);
      } else {
        same = a.inner() == b.inner() && a.outer() == b.outer() && dual_equivalent(a, b, o.depth);
      }
      out << (same ? "true" : "false") << "\n";
    } else if (*word) {
      auto w = column_word(read_tableau(slurp(o.file, in)).tableau);
      for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
      out << "\n";
    } else if (*renum) {
      auto input = read_tableau(slurp(o.file, in));
      out << show(standard_renumbering(input.tableau), input.chain);
    } else if (*rev) {
      auto input = read_tableau(slurp(o.file, in));
      out << show(reversal(input.tableau, *o.k), input.chain);
    } else if (*rnd) {
      RandomBounds b{o.max_rows, o.max_cols, o.max_entry, o.max_boxes.value_or(o.max_rows * o.max_cols)};
      for (int i = 0; i < o.count; ++i) {
        Rng rng(trial_seed(o.seed, static_cast<std::uint64_t>(i)));
        Tableau t = random_skew_tableau(rng, b);
        if (o.format == "grid") {
          out << render_grid(to_filling(t)) << "\n";
        } else {
          out << render_chain(t) << "\n";
        }
      }
    } else if (*chk) {
      CheckOptions co{o.trials, o.max_boxes.value_or(8), o.max_entry, o.seed, o.threads};
      bool ok = true;
      for (const auto& r : run_checks(o.suite, co)) {
        out << r.name << ": " << (r.failures ? "FAIL" : "ok") << " (" << r.trials - r.failures
            << "/" << r.trials << ")\n";
        if (r.failures) {
          ok = false;
          err << r.name << ": " << r.first_failure << "\n";
        }
      }
      return ok ? 0 : 2;
    }
  } catch (const Violation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tableaux
