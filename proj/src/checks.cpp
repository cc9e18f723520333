#include "tableaux/checks.hpp"

#include <functional>
#include <optional>
#include <thread>

#include "tableaux/complement.hpp"
#include "tableaux/dual.hpp"
#include "tableaux/error.hpp"
#include "tableaux/games.hpp"
#include "tableaux/growth.hpp"
#include "tableaux/hopscotch.hpp"
#include "tableaux/jdt.hpp"
#include "tableaux/random.hpp"
#include "tableaux/text.hpp"

namespace tableaux {

namespace {

// A trial returns a description of what went wrong, or nothing.
using Trial = std::function<std::optional<std::string>(Rng&)>;

CheckReport run_trials(const std::string& name, const Trial& trial, const CheckOptions& opts,
                       std::uint64_t salt) {
  int n = opts.trials;
  std::vector<std::optional<std::string>> outcome(n);
  int workers = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, n));
  auto work = [&](int w) {
    for (int i = w; i < n; i += workers) {
      Rng rng(trial_seed(opts.seed ^ salt, static_cast<std::uint64_t>(i)));
      try {
        outcome[i] = trial(rng);
      } catch (const Error& e) {
        outcome[i] = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  CheckReport r{name, n, 0, {}};
  for (int i = 0; i < n; ++i) {
    if (!outcome[i]) continue;
    if (r.failures++ == 0) r.first_failure = "trial " + std::to_string(i) + ": " + *outcome[i];
  }
  return r;
}

RandomBounds bounds(const CheckOptions& o) {
  RandomBounds b;
  b.max_entry = o.max_entry;
  b.max_boxes = o.max_boxes;
  b.max_rows = 4;
  b.max_cols = 4;
  return b;
}

std::string pair_text(const std::string& a, const std::string& b) { return a + " | " + b; }

std::vector<CheckReport> involutions(const CheckOptions& o) {
  RandomBounds b = bounds(o);
  std::vector<CheckReport> out;
  out.push_back(run_trials("complement-involution", [&](Rng& rng) -> std::optional<std::string> {
    Tableau t = random_skew_tableau(rng, b);
    ComplementParams cp{t.alphabet_size(), t.outer().part(1) + rng.between(0, 2)};
    if (complement_involution_check(t, cp)) return std::nullopt;
    return render_chain(t) + " with l=" + std::to_string(cp.l);
  }, o, 1));
  out.push_back(run_trials("jdt-involution", [&](Rng& rng) -> std::optional<std::string> {
    auto [p, q] = random_extending_pair(rng, b);
    auto [t, u] = jdt_pair(p, q);
    auto [t2, u2] = jdt_pair(u, t);
    if (t2 == q && u2 == p) return std::nullopt;
    return pair_text(render_chain(p), render_chain(q));
  }, o, 2));
  out.push_back(run_trials("R-round-trip", [&](Rng& rng) -> std::optional<std::string> {
    auto [p, q] = random_shared_inner_pair(rng, b);
    auto f = fill_pair(p, q, LocalRule{RuleKind::R, Direction::forward, std::nullopt});
    int l = 0;
    for (const auto* t : {&f.t, &f.u}) {
      for (const auto& s : t->shapes()) l = std::max(l, s.part(1));
    }
    auto g = fill_pair(f.t, f.u, LocalRule{RuleKind::R, Direction::reverse, l});
    if (g.t == p && g.u == q) return std::nullopt;
    return pair_text(render_chain(p), render_chain(q));
  }, o, 3));
  out.push_back(run_trials("C-round-trip", [&](Rng& rng) -> std::optional<std::string> {
    auto [p0, q0] = random_shared_inner_pair(rng, b);
    auto p = to_general(p0, b.max_rows), q = to_general(q0, b.max_rows);
    auto f = fill_pair(p, q, LocalRule{RuleKind::C, Direction::forward, std::nullopt});
    auto g = fill_pair(f.t, f.u, LocalRule{RuleKind::C, Direction::reverse, std::nullopt});
    if (g.t == p && g.u == q) return std::nullopt;
    return pair_text(render_chain(p), render_chain(q));
  }, o, 4));
  out.push_back(run_trials("H-involution", [&](Rng& rng) -> std::optional<std::string> {
    auto h = random_hopscotch_instance(rng, b);
    Extension back = h.side == Extension::q_extends_p ? Extension::p_extends_q : Extension::q_extends_p;
    auto [t, u] = hopscotch_pair(h.p, h.q, h.side);
    auto [t2, u2] = hopscotch_pair(t, u, back);
    if (t2 == h.p && u2 == h.q) return std::nullopt;
    return pair_text(render_chain(h.p), render_chain(h.q));
  }, o, 5));
  return out;
}

std::vector<CheckReport> differential(const CheckOptions& o) {
  RandomBounds b = bounds(o);
  b.max_rows = 5;
  b.max_cols = 5;
  return {run_trials("differential", [&](Rng& rng) -> std::optional<std::string> {
    Tableau p = random_skew_tableau(rng, b);
    auto r = rectify_differential(p);
    if (r.agree) return std::nullopt;
    return render_chain(r.counterexample ? *r.counterexample : p);
  }, o, 6)};
}

std::vector<CheckReport> dual(const CheckOptions& o) {
  RandomBounds b = bounds(o);
  b.max_boxes = std::min(b.max_boxes, 6);
  return {run_trials("dual-equivalence", [&](Rng& rng) -> std::optional<std::string> {
    Tableau a = random_standard_skew_tableau(rng, b);
    Tableau c = random_standard_tableau(rng, a.inner(), a.outer());
    bool expect = rectification_trace(a) == rectification_trace(c);
    for (RuleKind k : {RuleKind::J, RuleKind::C, RuleKind::H}) {
      if (l_dual_equivalent(a, c, LocalRule{k, Direction::forward, std::nullopt}) != expect) {
        return pair_text(render_chain(a), render_chain(c));
      }
    }
    return std::nullopt;
  }, o, 7)};
}

std::vector<Word> words_up_to(int n, int k) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == n) continue;
    for (int x = 1; x <= k; ++x) {
      Word w = out[i];
      w.push_back(x);
      out.push_back(std::move(w));
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string word_text(const Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s.empty() ? "()" : s;
}

std::vector<CheckReport> words(const CheckOptions& o) {
  // Exhaustive lemmas over words of length at most 4 in [3].
  const int k = 3;
  Word col{3, 2, 1};
  auto ws = words_up_to(4, k);
  CheckReport lemma{"column-word-lemmas", 0, 0, {}};
  auto fail = [&](const std::string& what) {
    if (lemma.failures++ == 0) lemma.first_failure = what;
  };
  std::vector<Tableau> cw, w_only;
  for (const auto& w : ws) {
    ++lemma.trials;
    cw.push_back(p_symbol(concat(col, w), k));
    w_only.push_back(p_symbol(w, k));
    if (cw.back() != p_symbol(concat(w, col), k)) fail("C.w vs w.C for w=" + word_text(w));
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j < ws.size(); ++j) {
      ++lemma.trials;
      if ((cw[i] == cw[j]) != (w_only[i] == w_only[j])) {
        fail("cancellation for " + word_text(ws[i]) + " and " + word_text(ws[j]));
      }
    }
  }
  RandomBounds b = bounds(o);
  std::vector<CheckReport> out{lemma};
  out.push_back(run_trials("reading-word", [&](Rng& rng) -> std::optional<std::string> {
    Tableau t = random_skew_tableau(rng, b);
    Tableau r = rectify(t);
    if (p_symbol(column_word(t), t.alphabet_size()) == r) return std::nullopt;
    return render_chain(t);
  }, o, 8));
  return out;
}

}  // namespace

std::vector<CheckReport> run_checks(const std::string& suite, const CheckOptions& opts) {
  if (opts.trials < 0) throw ParameterError("trials must be nonnegative");
  if (opts.max_entry < 1 || opts.max_boxes < 1) throw ParameterError("bounds must be positive");
  std::vector<CheckReport> out;
  auto add = [&](std::vector<CheckReport> r) { out.insert(out.end(), r.begin(), r.end()); };
  bool all = suite == "all";
  if (all || suite == "involutions") add(involutions(opts));
  if (all || suite == "differential") add(differential(opts));
  if (all || suite == "dual") add(dual(opts));
  if (all || suite == "words") add(words(opts));
  if (out.empty()) throw ParameterError("unknown suite '" + suite + "'");
  return out;
}

}  // namespace tableaux
