#include "tableaux/growth.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tableaux/complement.hpp"
#include "tableaux/error.hpp"

namespace tableaux {

namespace {

using Parts = std::vector<int>;

int at(const Parts& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : 0; }

Parts trim_to(const Parts& v, int n) {
  Parts out(n, 0);
  for (int i = 0; i < n && i < static_cast<int>(v.size()); ++i) out[i] = v[i];
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

// Boxes of outer/inner added one at a time in ascending column order.
std::vector<Parts> standard_strip(const Parts& inner, const Parts& outer) {
  std::vector<std::pair<int, int>> boxes;  // col, row
  for (std::size_t r = 0; r < inner.size(); ++r) {
    for (int c = inner[r] + 1; c <= outer[r]; ++c) boxes.push_back({c, static_cast<int>(r)});
  }
  std::sort(boxes.begin(), boxes.end());
  std::vector<Parts> out{inner};
  Parts cur = inner;
  for (auto [c, r] : boxes) {
    cur[r] = c;
    out.push_back(cur);
  }
  return out;
}

int differing_row(const Parts& small, const Parts& big) {
  int row = -1;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] != big[i]) {
      if (row >= 0 || big[i] != small[i] + 1) throw PreconditionError("not a cover relation");
      row = static_cast<int>(i);
    }
  }
  if (row < 0) throw PreconditionError("not a cover relation");
  return row;
}

Parts std_C_forward(const Parts& a, const Parts& b, const Parts& g) {
  if (b != g) {
    Parts out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::max(b[i], g[i]);
    return out;
  }
  int j = b[differing_row(a, b)];
  Parts out = b;
  for (std::size_t r = 0; r < b.size(); ++r) {
    if (b[r] == j) {
      out[r] = j + 1;
      return out;
    }
  }
  throw InternalError("standard C square without a target row");
}

Parts std_C_reverse(const Parts& b, const Parts& g, const Parts& d) {
  if (b != g) {
    Parts out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::min(b[i], g[i]);
    return out;
  }
  int j = d[differing_row(b, d)];
  Parts out = b;
  for (int r = static_cast<int>(b.size()) - 1; r >= 0; --r) {
    if (b[r] == j - 1) {
      out[r] = j - 2;
      return out;
    }
  }
  throw InternalError("standard C reverse square without a source row");
}

Parts std_RS(const Parts& a, const Parts& b, const Parts& g) {
  if (b != g) {
    Parts out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::max(b[i], g[i]);
    return out;
  }
  int r = differing_row(a, b);
  Parts out = b;
  if (r + 1 >= static_cast<int>(out.size())) out.push_back(0);
  out[r + 1] += 1;
  return out;
}

bool weakly_decreasing(const Parts& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) return false;
  }
  return true;
}

Parts std_JDT(const Parts& a, const Parts& b, const Parts& d) {
  int r = differing_row(b, d);
  differing_row(a, b);
  Parts other = a;
  other[r] += 1;
  if (other != b && weakly_decreasing(other)) return other;
  return b;
}

// Columns of outer/inner and the sentinel-aware search for the target column.
struct Interval {
  int lo;  // exclusive
  int hi;  // inclusive
};

std::vector<Interval> strip_columns(const Parts& inner, const Parts& outer) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (outer[i] > inner[i]) out.push_back({inner[i], outer[i]});
  }
  return out;
}

bool in_columns(const std::vector<Interval>& h, int c) {
  for (auto iv : h) {
    if (iv.lo < c && c <= iv.hi) return true;
  }
  return false;
}

Parts add_box_in_column(const Parts& a, int col) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] <= col - 1) {
      if (a[r] != col - 1) throw NotComputable("no row can take a box in the target column");
      Parts out = a;
      out[r] = col;
      return out;
    }
  }
  throw NotComputable("target column lies below the materialized rows");
}

Parts remove_box_in_column(const Parts& d, int col) {
  for (int r = static_cast<int>(d.size()) - 1; r >= 0; --r) {
    if (d[r] >= col) {
      if (d[r] != col) throw NotComputable("no row can give up a box in the target column");
      Parts out = d;
      out[r] = col - 1;
      return out;
    }
  }
  throw NotComputable("target column lies above the materialized rows");
}

template <class F>
std::vector<std::vector<Parts>> fill_forward(const std::vector<Parts>& top,
                                             const std::vector<Parts>& left, F square) {
  std::size_t a = top.size(), b = left.size();
  std::vector<std::vector<Parts>> g(b, std::vector<Parts>(a));
  for (std::size_t j = 0; j < a; ++j) g[0][j] = top[j];
  for (std::size_t i = 0; i < b; ++i) g[i][0] = left[i];
  for (std::size_t i = 1; i < b; ++i) {
    for (std::size_t j = 1; j < a; ++j) g[i][j] = square(g[i - 1][j - 1], g[i - 1][j], g[i][j - 1]);
  }
  return g;
}

template <class F>
std::vector<std::vector<Parts>> fill_reverse(const std::vector<Parts>& bottom,
                                             const std::vector<Parts>& right, F square) {
  std::size_t a = bottom.size(), b = right.size();
  std::vector<std::vector<Parts>> g(b, std::vector<Parts>(a));
  for (std::size_t j = 0; j < a; ++j) g[b - 1][j] = bottom[j];
  for (std::size_t i = 0; i < b; ++i) g[i][a - 1] = right[i];
  for (std::size_t i = b - 1; i >= 1; --i) {
    for (std::size_t j = a - 1; j >= 1; --j) {
      g[i - 1][j - 1] = square(g[i - 1][j], g[i][j - 1], g[i][j]);
    }
  }
  return g;
}

}  // namespace

std::vector<int> rule_R_parts(const Parts& a, const Parts& b, const Parts& g) {
  int n = static_cast<int>(std::max({a.size(), b.size(), g.size()})) + 1;
  Parts d(n);
  d[0] = std::max(at(b, 0), at(g, 0));
  for (int i = 1; i < n; ++i) {
    d[i] = std::max(at(b, i), at(g, i)) + std::min(at(b, i - 1), at(g, i - 1)) - at(a, i - 1);
  }
  return d;
}

std::vector<int> rule_J_parts(const Parts& a, const Parts& b, const Parts& d, int l) {
  int n = static_cast<int>(std::max({a.size(), b.size(), d.size()})) + 1;
  Parts g(n);
  for (int i = 0; i < n; ++i) {
    int prev = i == 0 ? l : at(a, i - 1);
    g[i] = std::max(at(d, i + 1), at(a, i)) + std::min(at(d, i), prev) - at(b, i);
  }
  return g;
}

std::vector<int> rule_C_parts(const Parts& a, const Parts& b, const Parts& g, Parts* carries) {
  int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m || static_cast<int>(g.size()) != m) {
    throw PreconditionError("rule C needs shapes of equal length");
  }
  Parts d(m), carry(m, 0);
  if (m == 0) return d;
  int c = 0;
  for (int i = m - 1; i >= 1; --i) {
    carry[i] = c;
    int s = b[i] + g[i] + c - a[i];
    d[i] = std::min(s, a[i - 1]);
    c = std::max(s - a[i - 1], 0);
  }
  carry[0] = c;
  d[0] = b[0] + g[0] + c - a[0];
  if (carries) *carries = carry;
  return d;
}

std::vector<int> rule_C_reverse_parts(const Parts& b, const Parts& g, const Parts& d) {
  auto right = standard_strip(b, d);
  auto bottom = standard_strip(g, d);
  auto grid = fill_reverse(bottom, right, std_C_reverse);
  return grid[0][0];
}

std::vector<int> rule_H_parts(const Parts& a, const Parts& b, const Parts& d) {
  int r = differing_row(b, d);
  int c = d[r];
  auto h = strip_columns(a, b);
  int target = c;
  if (!in_columns(h, c)) {
    target = kInfinity;
    for (auto iv : h) {
      int cand = std::max(c + 1, iv.lo + 1);
      if (cand <= iv.hi) target = std::min(target, cand);
    }
    if (target == kInfinity) throw NotComputable("no strip column to the right of the new box");
  }
  return add_box_in_column(a, target);
}

std::vector<int> rule_H_reverse_parts(const Parts& a, const Parts& b, const Parts& d) {
  int r = differing_row(a, b);
  int c = b[r];
  auto h = strip_columns(b, d);
  int target = c;
  if (!in_columns(h, c)) {
    target = -kInfinity;
    for (auto iv : h) {
      int cand = std::min(c - 1, iv.hi);
      if (cand > iv.lo) target = std::max(target, cand);
    }
    if (target == -kInfinity) throw NotComputable("no strip column to the left of the removed box");
  }
  return remove_box_in_column(d, target);
}

std::vector<int> rule_H_row_form_parts(const Parts& a, const Parts& b, const Parts& d) {
  int r = differing_row(b, d);
  for (int i = r - 1; i >= 0; --i) {
    if (a[i] != b[i]) {
      Parts out = a;
      out[i] += 1;
      return out;
    }
  }
  throw NotComputable("no strip row above the new box");
}

Partition rule_R(const Partition& a, const Partition& b, const Partition& g, std::optional<int> l) {
  require(is_horizontal_strip(a, b) && is_horizontal_strip(a, g), "rule R needs strips from alpha");
  if (l) {
    require(*l >= b.part(1) && *l >= g.part(1), "l is below the first part");
    Parts d = rule_R_parts(prepend(a, *l, 1).parts(), prepend(b, *l, 1).parts(),
                           prepend(g, *l, 1).parts());
    d.erase(d.begin());
    return Partition(d);
  }
  return Partition(rule_R_parts(a.parts(), b.parts(), g.parts()));
}

Partition rule_R_reverse(const Partition& b, const Partition& g, const Partition& d, int l) {
  require(is_horizontal_strip(b, d) && is_horizontal_strip(g, d), "rule R reverse needs strips to delta");
  require(l >= d.part(1), "l is below the first part of delta");
  int n = std::max({b.length(), g.length(), d.length()}) + 2;
  Parts B = prepend(b, l, 1).padded(n), G = prepend(g, l, 1).padded(n),
        D = prepend(d, l, 1).padded(n);
  Parts A(n - 1);
  for (int i = 1; i < n; ++i) A[i - 1] = std::max(B[i], G[i]) + std::min(B[i - 1], G[i - 1]) - D[i];
  if (!A.empty() && A[0] == l) A.erase(A.begin());
  return Partition(A);
}

Partition rule_J(const Partition& a, const Partition& b, const Partition& d, std::optional<int> l) {
  require(contains(a, b) && contains(b, d), "rule J needs alpha within beta within delta");
  require(is_horizontal_strip(a, b) && is_horizontal_strip(b, d), "rule J needs strips");
  int lv = l.value_or(d.part(1));
  require(lv >= d.part(1), "l is below the first part of delta");
  return Partition(rule_J_parts(a.parts(), b.parts(), d.parts(), lv));
}

Partition rule_J_strips(const Partition& a, const Partition& b, const Partition& d) {
  require(is_horizontal_strip(a, b) && is_horizontal_strip(b, d), "rule J needs strips");
  std::map<Cell, char> sym;
  for (Cell c : skew_cells(a, b)) sym[c] = 'a';
  for (Cell c : skew_cells(b, d)) sym[c] = '1';
  std::map<Cell, bool> fixed;
  for (auto& [c, s] : sym) fixed[c] = true;
  for (auto& [c, s] : sym) {
    if (s != 'a') continue;
    Cell below{c.row + 1, c.col};
    auto it = sym.find(below);
    if (it != sym.end() && it->second == '1' && fixed[c] && fixed[below]) {
      s = '1';
      it->second = 'a';
      fixed[c] = false;
      fixed[below] = false;
    }
  }
  // Within each maximal run of fixed cells of a row, 1's go left.
  std::vector<Cell> run;
  auto flush = [&]() {
    int ones = 0;
    for (Cell c : run) ones += sym[c] == '1';
    for (std::size_t i = 0; i < run.size(); ++i) sym[run[i]] = static_cast<int>(i) < ones ? '1' : 'a';
    run.clear();
  };
  Cell prev{0, 0};
  for (auto& [c, s] : sym) {
    if (!fixed[c]) {
      flush();
      continue;
    }
    if (!run.empty() && !(prev.row == c.row && prev.col + 1 == c.col)) flush();
    run.push_back(c);
    prev = c;
  }
  flush();
  Parts g = a.padded(d.length());
  for (auto& [c, s] : sym) {
    if (s == '1') g[c.row - 1] += 1;
  }
  return Partition(g);
}

GeneralShape rule_C(const GeneralShape& a, const GeneralShape& b, const GeneralShape& g,
                    Parts* carries) {
  require(is_horizontal_strip(a, b) && is_horizontal_strip(a, g), "rule C needs strips from alpha");
  return GeneralShape(rule_C_parts(a.parts(), b.parts(), g.parts(), carries));
}

GeneralShape rule_C_reverse(const GeneralShape& b, const GeneralShape& g, const GeneralShape& d) {
  require(is_horizontal_strip(b, d) && is_horizontal_strip(g, d), "rule C reverse needs strips to delta");
  return GeneralShape(rule_C_reverse_parts(b.parts(), g.parts(), d.parts()));
}

GeneralShape rule_H(const GeneralShape& a, const GeneralShape& b, const GeneralShape& d) {
  require(is_horizontal_strip(a, b) && covers(b, d), "rule H needs a strip then a cover");
  return GeneralShape(rule_H_parts(a.parts(), b.parts(), d.parts()));
}

GeneralShape rule_H_reverse(const GeneralShape& a, const GeneralShape& b, const GeneralShape& d) {
  require(covers(a, b) && is_horizontal_strip(b, d), "reverse rule H needs a cover then a strip");
  return GeneralShape(rule_H_reverse_parts(a.parts(), b.parts(), d.parts()));
}

StableShape rule_H(const StableShape& a, const StableShape& b, const StableShape& d) {
  require(is_stable_horizontal_strip(a, b) && covers(b, d), "rule H needs a stable strip then a cover");
  int n = std::max({a.row_span(), b.row_span(), d.row_span()}) + 1;
  return StableShape::from_rows(rule_H_parts(a.rows(n), b.rows(n), d.rows(n)));
}

StableShape rule_H_reverse(const StableShape& a, const StableShape& b, const StableShape& d) {
  require(covers(a, b) && is_stable_horizontal_strip(b, d), "reverse rule H needs a cover then a stable strip");
  int n = std::max({a.row_span(), b.row_span(), d.row_span()}) + 1;
  return StableShape::from_rows(rule_H_reverse_parts(a.rows(n), b.rows(n), d.rows(n)));
}

Partition fomin_jdt_square(const Partition& a, const Partition& b, const Partition& d) {
  require(covers(a, b) && covers(b, d), "jdt square needs covers");
  int n = d.length() + 1;
  return Partition(std_JDT(a.padded(n), b.padded(n), d.padded(n)));
}

Partition fomin_rs_square(const Partition& a, const Partition& b, const Partition& g) {
  require(covers(a, b) && covers(a, g), "insertion square needs covers");
  int n = std::max(b.length(), g.length()) + 1;
  return Partition(std_RS(a.padded(n), b.padded(n), g.padded(n)));
}

GeneralShape standard_C_square(const GeneralShape& a, const GeneralShape& b, const GeneralShape& g) {
  require(covers(a, b) && covers(a, g), "standard C square needs covers");
  return GeneralShape(std_C_forward(a.parts(), b.parts(), g.parts()));
}

GeneralShape standard_C_reverse_square(const GeneralShape& b, const GeneralShape& g,
                                       const GeneralShape& d) {
  require(covers(b, d) && covers(g, d), "standard C reverse square needs covers");
  return GeneralShape(std_C_reverse(b.parts(), g.parts(), d.parts()));
}

template <class S>
BasicTableau<S> GrowthDiagram<S>::col(int j) const {
  std::vector<S> shapes;
  for (const auto& r : grid) shapes.push_back(r[j]);
  return BasicTableau<S>(shapes);
}

template <class S>
bool GrowthDiagram<S>::valid() const {
  try {
    std::vector<int> rc, cc;
    for (int i = 0; i < rows(); ++i) {
      auto c = content(row(i));
      if (i > 0 && c != rc) return false;
      rc = c;
    }
    for (int j = 0; j < cols(); ++j) {
      auto c = content(col(j));
      if (j > 0 && c != cc) return false;
      cc = c;
    }
  } catch (const InvalidTableau&) {
    return false;
  }
  return true;
}

template struct GrowthDiagram<Partition>;
template struct GrowthDiagram<GeneralShape>;

namespace {

std::vector<Parts> padded_chain(const Tableau& t, int n) {
  std::vector<Parts> out;
  for (const auto& s : t.shapes()) out.push_back(s.padded(n));
  return out;
}

std::vector<Parts> raw_chain(const GeneralTableau& t) {
  std::vector<Parts> out;
  for (const auto& s : t.shapes()) out.push_back(s.parts());
  return out;
}

GrowthDiagram<Partition> to_partitions(const std::vector<std::vector<Parts>>& g) {
  GrowthDiagram<Partition> d;
  for (const auto& row : g) {
    d.grid.emplace_back();
    for (const auto& s : row) d.grid.back().emplace_back(s);
  }
  return d;
}

GrowthDiagram<GeneralShape> to_general(const std::vector<std::vector<Parts>>& g) {
  GrowthDiagram<GeneralShape> d;
  for (const auto& row : g) {
    d.grid.emplace_back();
    for (const auto& s : row) d.grid.back().emplace_back(s);
  }
  return d;
}

int leading_count(const Parts& v, int l) {
  int n = 0;
  while (n < static_cast<int>(v.size()) && v[n] == l) ++n;
  return n;
}

}  // namespace

PairResult<Partition> fill_pair(const Tableau& p, const Tableau& q, const LocalRule& rule) {
  int a = static_cast<int>(p.shapes().size()), b = static_cast<int>(q.shapes().size());
  int n = std::max(max_length(p), max_length(q)) + a + b + 2;
  if (rule.kind == RuleKind::R && rule.direction == Direction::forward) {
    if (p.inner() != q.inner()) throw PreconditionError("R needs p and q to share the inner border");
    auto g = fill_forward(padded_chain(p, n), padded_chain(q, n), [](const Parts& x, const Parts& y,
                                                                      const Parts& z) {
      return trim_to(rule_R_parts(x, y, z), static_cast<int>(x.size()));
    });
    auto d = to_partitions(g);
    return {d, d.row(d.rows() - 1), d.col(d.cols() - 1)};
  }
  if (rule.kind == RuleKind::R) {
    if (p.outer() != q.outer()) throw PreconditionError("reverse R needs a shared outer border");
    if (!rule.l) throw ParameterError("reverse R needs the column bound l");
    int l = *rule.l;
    for (const auto& t : {p, q}) {
      for (const auto& s : t.shapes()) {
        if (s.part(1) > l) throw ParameterError("l is below a first part");
      }
    }
    int m = a + b + 1;
    auto lift = [&](const Tableau& t) {
      std::vector<Parts> out;
      for (const auto& s : t.shapes()) out.push_back(prepend(s, l, m).padded(n + m));
      return out;
    };
    auto g = fill_reverse(lift(p), lift(q), [](const Parts& B, const Parts& G, const Parts& D) {
      Parts A(B.size());
      for (std::size_t i = 1; i <= B.size(); ++i) {
        A[i - 1] = std::max(at(B, i), at(G, i)) + std::min(B[i - 1], G[i - 1]) - at(D, i);
      }
      return A;
    });
    int strip_rows = m;
    for (const auto& row : g) {
      for (const auto& s : row) strip_rows = std::min(strip_rows, leading_count(s, l));
    }
    for (auto& row : g) {
      for (auto& s : row) s.erase(s.begin(), s.begin() + strip_rows);
    }
    auto d = to_partitions(g);
    return {d, d.row(0), d.col(0)};
  }
  if (rule.kind == RuleKind::J) {
    bool q_extends = q.inner() == p.outer();
    if (!q_extends && p.inner() != q.outer()) {
      throw PreconditionError("J needs one tableau to extend the other");
    }
    const Tableau& left = q_extends ? p : q;
    const Tableau& bottom = q_extends ? q : p;
    int rows = static_cast<int>(left.shapes().size()), cols = static_cast<int>(bottom.shapes().size());
    std::vector<std::vector<Parts>> g(rows, std::vector<Parts>(cols));
    for (int i = 0; i < rows; ++i) g[i][0] = left[i].padded(n);
    for (int j = 0; j < cols; ++j) g[rows - 1][j] = bottom[j].padded(n);
    for (int i = rows - 1; i >= 1; --i) {
      for (int j = 1; j < cols; ++j) {
        const Parts& d = g[i][j];
        g[i - 1][j] = trim_to(rule_J_parts(g[i - 1][j - 1], g[i][j - 1], d, d.empty() ? 0 : d[0]), n);
      }
    }
    auto d = to_partitions(g);
    auto right = d.col(cols - 1);
    auto top = d.row(0);
    if (q_extends) return {d, right, top};
    return {d, top, right};
  }
  throw ParameterError("partition diagrams support rules R and J");
}

PairResult<GeneralShape> fill_pair(const GeneralTableau& p, const GeneralTableau& q,
                                   const LocalRule& rule) {
  if (rule.kind == RuleKind::C) {
    if (rule.direction == Direction::forward) {
      if (p.inner() != q.inner()) throw PreconditionError("C needs p and q to share the inner border");
      auto g = fill_forward(raw_chain(p), raw_chain(q), [](const Parts& x, const Parts& y,
                                                           const Parts& z) {
        return rule_C_parts(x, y, z);
      });
      auto d = to_general(g);
      return {d, d.row(d.rows() - 1), d.col(d.cols() - 1)};
    }
    if (p.outer() != q.outer()) throw PreconditionError("reverse C needs a shared outer border");
    auto g = fill_reverse(raw_chain(p), raw_chain(q), [](const Parts& B, const Parts& G,
                                                         const Parts& D) {
      return rule_C_reverse_parts(B, G, D);
    });
    auto d = to_general(g);
    return {d, d.row(0), d.col(0)};
  }
  if (rule.kind == RuleKind::H) {
    if (q.inner() == p.outer()) {
      int rows = static_cast<int>(p.shapes().size()), cols = static_cast<int>(q.shapes().size());
      std::vector<std::vector<Parts>> g(rows, std::vector<Parts>(cols));
      for (int i = 0; i < rows; ++i) g[i][0] = p[i].parts();
      for (int j = 0; j < cols; ++j) g[rows - 1][j] = q[j].parts();
      for (int i = rows - 1; i >= 1; --i) {
        for (int j = 1; j < cols; ++j) {
          g[i - 1][j] = rule_H_reverse_parts(g[i - 1][j - 1], g[i][j - 1], g[i][j]);
        }
      }
      auto d = to_general(g);
      return {d, d.col(cols - 1), d.row(0)};
    }
    if (p.inner() == q.outer()) {
      int rows = static_cast<int>(p.shapes().size()), cols = static_cast<int>(q.shapes().size());
      std::vector<std::vector<Parts>> g(rows, std::vector<Parts>(cols));
      for (int j = 0; j < cols; ++j) g[0][j] = q[j].parts();
      for (int i = 0; i < rows; ++i) g[i][cols - 1] = p[i].parts();
      for (int i = 1; i < rows; ++i) {
        for (int j = cols - 1; j >= 1; --j) {
          g[i][j - 1] = rule_H_parts(g[i - 1][j - 1], g[i - 1][j], g[i][j]);
        }
      }
      auto d = to_general(g);
      return {d, d.col(0), d.row(rows - 1)};
    }
    throw PreconditionError("H needs one tableau to extend the other");
  }
  throw ParameterError("general-shape diagrams support rules C and H");
}

std::pair<Tableau, Tableau> apply_complemented(const LocalRule& rule, const Tableau& p,
                                               const Tableau& q, const ComplementParams& params) {
  int l = params.l;
  int k = q.alphabet_size();
  ComplementParams qp{k, l};
  Tableau qc = complement(q, qp);
  auto check_bound = [&](const Tableau& t) {
    for (const auto& s : t.shapes()) {
      if (s.part(1) > l) throw PreconditionError("condition I: a row grew beyond l columns");
    }
  };
  if (rule.kind == RuleKind::R) {
    if (q.outer() == p.inner()) {
      auto r = fill_pair(p, qc, LocalRule{RuleKind::R, Direction::forward, l});
      check_bound(r.t);
      check_bound(r.u);
      return {r.t, complement(r.u, qp)};
    }
    if (q.inner() == p.outer()) {
      std::vector<Partition> lifted;
      for (const auto& s : p.shapes()) lifted.push_back(prepend(s, l, k));
      auto r = fill_pair(Tableau(lifted), qc, LocalRule{RuleKind::R, Direction::reverse, l});
      check_bound(r.t);
      check_bound(r.u);
      return {r.t, complement(r.u, qp)};
    }
    throw PreconditionError("R^C needs one tableau to extend the other");
  }
  if (rule.kind == RuleKind::J) {
    if (q.inner() != p.inner()) throw PreconditionError("J^C needs a shared inner border");
    std::vector<Partition> lifted;
    for (const auto& s : p.shapes()) lifted.push_back(prepend(s, l, k));
    auto r = fill_pair(Tableau(lifted), qc, LocalRule{RuleKind::J, Direction::forward, std::nullopt});
    check_bound(r.t);
    check_bound(r.u);
    return {r.t, complement(r.u, qp)};
  }
  throw ParameterError("complemented rules are provided for R and J");
}

}  // namespace tableaux
