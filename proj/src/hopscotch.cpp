#include "tableaux/hopscotch.hpp"

#include <algorithm>

#include "tableaux/complement.hpp"
#include "tableaux/error.hpp"
#include "tableaux/growth.hpp"

namespace tableaux {

namespace {

using Parts = std::vector<int>;

int finite_rows(const StableTableau& q) { return static_cast<int>(q.inner().finite().size()); }

bool q_extends_p(const GeneralTableau& p, const StableTableau& q) {
  return q.inner().inf_count() == 0 && q.inner().finite() == p.outer().parts();
}

bool p_extends_q(const GeneralTableau& p, const StableTableau& q) {
  return q.outer().finite() == p.inner().parts();
}

Extension resolve(const GeneralTableau& p, const StableTableau& q, Extension side) {
  bool forward = q_extends_p(p, q), backward = p_extends_q(p, q);
  if (side == Extension::detect) {
    if (forward) return Extension::q_extends_p;
    if (backward) return Extension::p_extends_q;
  } else if ((side == Extension::q_extends_p && forward) ||
             (side == Extension::p_extends_q && backward)) {
    return side;
  }
  throw PreconditionError("hopscotch needs one tableau to extend the other");
}

Parts placed(const GeneralShape& s, int offset, int rows) {
  Parts out(rows, -kInfinity);
  for (int i = 0; i < offset; ++i) out[i] = kInfinity;
  for (int i = 0; i < s.length(); ++i) out[offset + i] = s.parts()[i];
  return out;
}

GeneralTableau unplace(const std::vector<Parts>& chain, int m) {
  int offset = 0;
  while (offset < static_cast<int>(chain.front().size()) && chain.front()[offset] == kInfinity) {
    ++offset;
  }
  std::vector<GeneralShape> shapes;
  for (const auto& s : chain) {
    for (int i = 0; i < offset; ++i) {
      if (s[i] != kInfinity) throw InternalError("ordinary rows lost their alignment");
    }
    Parts f(s.begin() + offset, s.begin() + offset + m);
    for (int x : f) {
      if (x == kInfinity || x == -kInfinity) throw InternalError("ordinary rows became infinite");
    }
    shapes.emplace_back(std::move(f));
  }
  return GeneralTableau(std::move(shapes));
}

StableTableau unplace_stable(const std::vector<Parts>& chain) {
  std::vector<StableShape> shapes;
  for (const auto& s : chain) shapes.push_back(StableShape::from_rows(s));
  return normalize_stable(StableTableau(std::move(shapes)));
}

}  // namespace

std::pair<GeneralTableau, StableTableau> hopscotch_pair(const GeneralTableau& p,
                                                        const StableTableau& q0, Extension side) {
  StableTableau q = normalize_stable(q0);
  GeneralTableau qs = stable_complement(q);
  Direction d = resolve(p, q, side) == Extension::q_extends_p ? Direction::reverse
                                                                : Direction::forward;
  auto r = fill_pair(p, qs, LocalRule{RuleKind::C, d, std::nullopt});
  return {r.t, normalize_stable(stable_complement(r.u))};
}

std::pair<GeneralTableau, StableTableau> hopscotch_pair(const Tableau& p, const StableTableau& q,
                                                        Extension side) {
  int m = finite_rows(normalize_stable(q));
  if (max_length(p) > m) throw PreconditionError("tableau has more rows than the stable tableau");
  return hopscotch_pair(to_general(p, m), q, side);
}

std::pair<GeneralTableau, StableTableau> hopscotch_pair_local(const GeneralTableau& p,
                                                              const StableTableau& q0,
                                                              Extension side) {
  if (!is_standard(p)) throw PreconditionError("local hopscotch rules need a standard tableau");
  StableTableau q = normalize_stable(q0);
  int m = finite_rows(q);
  int k = q.alphabet_size();
  int n = p.alphabet_size();
  int rows = k + m + 2;
  if (resolve(p, q, side) == Extension::q_extends_p) {
    // p down the left column, q along the bottom row; fill upward.
    std::vector<std::vector<Parts>> g(n + 1, std::vector<Parts>(k + 1));
    for (int i = 0; i <= n; ++i) g[i][0] = placed(p[i], 0, rows);
    for (int j = 0; j <= k; ++j) g[n][j] = q[j].rows(rows);
    for (int j = 1; j <= k; ++j) {
      for (int i = n; i >= 1; --i) {
        g[i - 1][j] = rule_H_reverse_parts(g[i - 1][j - 1], g[i][j - 1], g[i][j]);
      }
    }
    std::vector<Parts> t, u;
    for (int i = 0; i <= n; ++i) t.push_back(g[i][k]);
    for (int j = 0; j <= k; ++j) u.push_back(g[0][j]);
    return {unplace(t, m), unplace_stable(u)};
  }
  {
    // q along the top row, p down the right column; fill downward.
    int offset = q.outer().inf_count();
    std::vector<std::vector<Parts>> g(n + 1, std::vector<Parts>(k + 1));
    for (int j = 0; j <= k; ++j) g[0][j] = q[j].rows(rows);
    for (int i = 0; i <= n; ++i) g[i][k] = placed(p[i], offset, rows);
    for (int i = 1; i <= n; ++i) {
      for (int j = k; j >= 1; --j) {
        g[i][j - 1] = rule_H_parts(g[i - 1][j - 1], g[i - 1][j], g[i][j]);
      }
    }
    std::vector<Parts> t, u;
    for (int i = 0; i <= n; ++i) t.push_back(g[i][0]);
    for (int j = 0; j <= k; ++j) u.push_back(g[n][j]);
    return {unplace(t, m), unplace_stable(u)};
  }
}

bool is_almost_standard(const AlmostStandardTableau& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] != p[i - 1] && !covers(p[i - 1], p[i])) return false;
  }
  return true;
}

ShiftResult tesler_shift(const AlmostStandardTableau& p) {
  if (p.empty()) return {};
  if (!is_almost_standard(p)) throw InvalidTableau("not an almost standard tableau");
  int n = p.back().length() + 1;
  ShiftResult out;
  Parts alpha = p.front().padded(n);
  out.shifted.push_back(p.front());
  for (std::size_t i = 1; i < p.size(); ++i) {
    Parts prev = p[i - 1].padded(n);
    if (p[i] != p[i - 1]) {
      int r = added_box(p[i - 1], p[i]).row - 1;
      int target = -1;
      for (int s = r - 1; s >= 0 && target < 0; --s) {
        if (prev[s] != alpha[s]) target = s;
      }
      if (target < 0) {
        out.removed.insert(static_cast<int>(i));
      } else {
        alpha[target] += 1;
      }
    }
    Partition a(alpha);
    if (!is_horizontal_strip(a, p[i])) throw InternalError("shift left a non-strip");
    out.shifted.push_back(a);
  }
  return out;
}

Tableau tesler_rectify(const Tableau& p) {
  if (!is_standard(p)) throw PreconditionError("Tesler rectification needs a standard tableau");
  int k = p.alphabet_size();
  AlmostStandardTableau cur = p.shapes();
  std::map<Cell, int> entries;
  for (int i = 1; i <= k; ++i) {
    auto s = tesler_shift(cur);
    int c = 0;
    for (int x : s.removed) entries[{i, ++c}] = x;
    cur = s.shifted;
  }
  if (cur.front() != cur.back()) throw InternalError("Tesler game left boxes behind");
  int rows = entries.empty() ? 0 : entries.rbegin()->first.row;
  return from_filling(Filling(std::vector<int>(rows, 0), std::move(entries)), k);
}

bool tesler_hopscotch_check(const Tableau& p) {
  if (!is_standard(p)) throw PreconditionError("the check needs a standard tableau");
  int k = p.alphabet_size();
  if (k == 0) return true;
  int n = max_length(p);
  int b = p.outer().part(1);
  std::vector<GeneralShape> ps;
  for (const auto& s : p.shapes()) {
    Parts v = s.padded(n);
    v.push_back(0);
    ps.emplace_back(std::move(v));
  }
  Parts g0 = p.inner().padded(n);
  g0.insert(g0.begin(), b);
  Parts b0 = p.inner().padded(n);
  b0.push_back(0);
  StableTableau q({StableShape(0, g0), StableShape(1, b0)});
  // The inner border of p is the finite part of Q's outer border; Q's inner
  // border can match p's outer border as well, so the side is fixed here.
  auto [t, u] = hopscotch_pair(GeneralTableau(ps), q, Extension::p_extends_q);
  auto s = tesler_shift(p.shapes());
  int a = 0;
  for (int i = 0; i <= k; ++i) {
    if (i > 0 && s.shifted[i] == s.shifted[i - 1]) ++a;
    Parts want = s.shifted[i].padded(n);
    want.insert(want.begin(), b + a);
    if (t[i].parts() != want) return false;
  }
  return true;
}

}  // namespace tableaux
