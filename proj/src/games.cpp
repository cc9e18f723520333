#include "tableaux/games.hpp"

#include <algorithm>

#include "tableaux/error.hpp"
#include "tableaux/hopscotch.hpp"

namespace tableaux {

namespace {

int inner_at(const std::vector<int>& inner, int row) {
  if (row <= static_cast<int>(inner.size())) return inner[row - 1];
  return inner.empty() ? 0 : std::min(inner.back(), 0);
}

void require_cocorner(const Filling& f, Cell c) {
  auto cs = cocorners(f);
  if (std::find(cs.begin(), cs.end(), c) == cs.end()) {
    throw PreconditionError("internal insertion needs a cocorner");
  }
}

}  // namespace

std::vector<Cell> cocorners(const Filling& f) {
  std::vector<Cell> out;
  for (const auto& [c, v] : f.entries()) {
    if (!f.entries().count({c.row, c.col - 1}) && !f.entries().count({c.row - 1, c.col})) {
      out.push_back(c);
    }
  }
  return out;
}

Filling internal_row_insert(const Filling& f, Cell c) {
  require_cocorner(f, c);
  auto entries = f.entries();
  int x = entries.at(c);
  entries.erase(c);
  std::vector<int> inner = f.inner();
  inner[c.row - 1] += 1;
  for (int r = c.row + 1;; ++r) {
    auto it = entries.lower_bound({r, -kInfinity});
    int last = inner_at(inner, r);
    bool bumped = false;
    for (; it != entries.end() && it->first.row == r; ++it) {
      if (it->second > x) {
        std::swap(it->second, x);
        bumped = true;
        break;
      }
      last = it->first.col;
    }
    if (!bumped) {
      entries[{r, last + 1}] = x;
      break;
    }
  }
  return Filling(std::move(inner), std::move(entries));
}

Filling internal_column_insert(const Filling& f, Cell c) {
  require_cocorner(f, c);
  auto entries = f.entries();
  int x = entries.at(c);
  entries.erase(c);
  std::vector<int> inner = f.inner();
  inner[c.row - 1] += 1;
  for (int col = c.col + 1;; ++col) {
    std::map<Cell, int>::iterator top = entries.end();
    int lowest = 0;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      if (it->first.col != col) continue;
      lowest = std::max(lowest, it->first.row);
      if (it->second >= x && (top == entries.end() || it->first.row < top->first.row)) top = it;
    }
    if (top != entries.end()) {
      std::swap(top->second, x);
      continue;
    }
    for (int r = 1; r <= static_cast<int>(inner.size()); ++r) {
      if (inner[r - 1] >= col) lowest = std::max(lowest, r);
    }
    entries[{lowest + 1, col}] = x;
    break;
  }
  return Filling(std::move(inner), std::move(entries));
}

Tableau row_insertion_game(const Filling& f, int j, const CocornerChooser& choose) {
  if (f.inner_part(j) != 0) throw PreconditionError("the game row must have an empty inner border");
  Filling cur = f;
  while (true) {
    std::vector<Cell> cs;
    for (Cell c : cocorners(cur)) {
      if (c.row < j) cs.push_back(c);
    }
    if (cs.empty()) break;
    cur = internal_row_insert(cur, choose ? choose(cs) : cs.front());
  }
  return from_filling(cur.normalized(), f.max_entry());
}

Tableau column_insertion_game(const Filling& f, const CocornerChooser& choose) {
  int mu1 = f.inner_part(1);
  Filling cur = f;
  while (true) {
    std::vector<Cell> cs;
    for (Cell c : cocorners(cur)) {
      if (c.col <= mu1) cs.push_back(c);
    }
    if (cs.empty()) break;
    cur = internal_column_insert(cur, choose ? choose(cs) : cs.front());
  }
  return from_filling(cur.normalized(), f.max_entry());
}

RowExtraction row_extract(const Tableau& p) {
  Filling f = to_filling(p);
  auto entries = f.entries();
  std::set<Cell> stars;
  std::vector<int> removed;
  for (int i = 1; i <= p.alphabet_size(); ++i) {
    std::vector<Cell> strip;
    for (const auto& [c, v] : entries) {
      if (v == i) strip.push_back(c);
    }
    std::sort(strip.begin(), strip.end(), [](Cell a, Cell b) { return a.col < b.col; });
    for (Cell e : strip) {
      // Stars in one row are incomparable; the leftmost keeps stars right of entries.
      std::optional<Cell> best;
      for (Cell s : stars) {
        if (!cross_less(s, e)) continue;
        if (!best || s.row > best->row || (s.row == best->row && s.col < best->col)) best = s;
      }
      entries.erase(e);
      if (best) {
        entries[*best] = i;
        stars.erase(*best);
      } else {
        removed.push_back(i);
      }
      stars.insert(e);
    }
  }
  std::sort(removed.begin(), removed.end());
  Filling plain(f.inner(), entries);
  Tableau t = from_filling(plain, p.alphabet_size());
  return {Filling(f.inner(), std::move(entries), std::move(stars)), t, removed};
}

Tableau row_extraction_rectify(const Tableau& p) {
  Tableau cur = p;
  std::map<Cell, int> rows;
  int k = p.alphabet_size();
  for (int i = 1; i <= k; ++i) {
    auto e = row_extract(cur);
    int c = 0;
    for (int x : e.removed) rows[{i, ++c}] = x;
    cur = e.tableau;
  }
  if (cur.inner() != cur.outer()) throw InternalError("row extraction left entries behind");
  int n = rows.empty() ? 0 : rows.rbegin()->first.row;
  return from_filling(Filling(std::vector<int>(n, 0), std::move(rows)), k);
}

std::optional<ColumnSlide> column_slide(const Filling& f, Cell b, int k) {
  if (!f.stars().empty()) throw PreconditionError("column slides act on fillings without stars");
  auto corners = inner_corners(f);
  if (std::find(corners.begin(), corners.end(), b) == corners.end()) {
    throw PreconditionError("column slide needs an inner corner");
  }
  auto entries = f.entries();
  std::vector<Cell> chain;
  // Depth-first in the order highest row, then rightmost, so the greedy
  // chain is taken whenever it completes.
  std::function<bool(Cell, int)> search = [&](Cell cur, int t) {
    if (t > k) return true;
    std::vector<Cell> next;
    for (const auto& [c, v] : entries) {
      if (v == t && cross_less(cur, c)) next.push_back(c);
    }
    std::sort(next.begin(), next.end(), [](Cell a, Cell b) {
      if (a.row != b.row) return a.row < b.row;
      return a.col > b.col;
    });
    for (Cell c : next) {
      chain.push_back(c);
      if (search(c, t + 1)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!search(b, 1)) return std::nullopt;
  Cell hole = b;
  SlideTrace trace{{b}, b, b};
  for (Cell c : chain) {
    entries[hole] = entries.at(c);
    entries.erase(c);
    hole = c;
    trace.path.push_back(c);
  }
  trace.end = hole;
  std::vector<int> inner = f.inner();
  inner[b.row - 1] -= 1;
  return ColumnSlide{Filling(std::move(inner), std::move(entries)), trace};
}

Filling column_extract(const Filling& f, int k) {
  Filling n = f.normalized();
  if (n.entries().empty()) return Filling();
  if (n.max_entry() > k) throw ParameterError("entry exceeds k");
  std::map<Cell, int> entries;
  int right = 0;
  for (const auto& [c, v] : n.entries()) {
    entries[{c.row + k + 1, c.col + 1}] = v;
    right = std::max(right, c.col + 1);
  }
  int t0 = kInfinity;
  for (const auto& [c, v] : entries) {
    if (c.col == 2) t0 = std::min(t0, c.row);
  }
  for (int i = 1; i <= k; ++i) entries[{t0 + i - 1, 1}] = i;
  int rows = entries.rbegin()->first.row;
  for (const auto& [c, v] : entries) rows = std::max(rows, c.row);
  std::vector<int> inner(rows);
  for (int r = 1; r <= rows; ++r) {
    if (r <= k + 1) {
      inner[r - 1] = right;
    } else if (r >= t0 && r < t0 + k) {
      inner[r - 1] = 0;
    } else {
      inner[r - 1] = n.inner_part(r - k - 1) + 1;
    }
  }
  Filling cur(std::move(inner), std::move(entries));
  auto full = [&]() {
    int count = 0;
    for (const auto& [c, v] : cur.entries()) count += c.col == right;
    return count == k;
  };
  int top = kInfinity;
  for (const auto& [c, v] : cur.entries()) {
    if (c.col == right) top = std::min(top, c.row);
  }
  for (int row = top - 1; !full(); --row) {
    if (row < 1) throw InternalError("column extraction ran out of rows");
    auto s = column_slide(cur, {row, right}, k);
    if (!s) throw InternalError("column extraction met an impermissible slide");
    cur = s->filling;
  }
  std::map<Cell, int> kept;
  for (const auto& [c, v] : cur.entries()) {
    if (c.col != right) kept[c] = v;
  }
  if (kept.empty()) return Filling();
  return filling_from_cells(std::move(kept)).normalized();
}

int columns_above_first(const Filling& f) {
  Filling n = f.normalized();
  std::map<int, int> top;
  for (const auto& [c, v] : n.entries()) {
    auto it = top.find(c.col);
    if (it == top.end() || c.row < it->second) top[c.col] = c.row;
  }
  if (top.empty()) return 0;
  int first = top.begin()->second;
  int j = 0;
  for (const auto& [col, row] : top) j += row < first;
  return j;
}

Tableau column_extraction_rectify(const Filling& f, int k) {
  Filling cur = f.normalized();
  for (int j = columns_above_first(cur); j > 0; --j) cur = column_extract(cur, k);
  if (cur.entries().empty()) return from_filling(Filling(), k);
  return from_filling(cur.normalized(), k);
}

namespace {

std::vector<std::pair<std::string, Tableau>> all_rectifications(const Tableau& p) {
  int k = p.alphabet_size();
  Filling f = to_filling(p);
  auto fix = [&](const Tableau& t) { return from_filling(to_filling(t).normalized(), k); };
  int j = 1;
  while (f.inner_part(j) != 0) ++j;
  std::vector<std::pair<std::string, Tableau>> out;
  out.emplace_back("jdt", rectify(p));
  out.emplace_back("row-game", fix(row_insertion_game(f, j)));
  out.emplace_back("col-game", fix(column_insertion_game(f)));
  out.emplace_back("row-extract", row_extraction_rectify(p));
  out.emplace_back("col-extract", column_extraction_rectify(f, k));
  Tableau st = tesler_rectify(standard_renumbering(p));
  out.emplace_back("tesler", st);
  return out;
}

bool agrees(const std::vector<std::pair<std::string, Tableau>>& r) {
  auto cells = [](const Tableau& t) { return to_filling(t).normalized().entries(); };
  auto base = cells(r[0].second);
  auto st = standard_renumbering(r[0].second);
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i].first == "tesler") {
      if (cells(r[i].second) != cells(st)) return false;
    } else if (cells(r[i].second) != base) {
      return false;
    }
  }
  return true;
}

bool disagrees(const Tableau& p) {
  try {
    return !agrees(all_rectifications(p));
  } catch (const Error&) {
    return true;
  }
}

}  // namespace

DifferentialReport rectify_differential(const Tableau& p) {
  DifferentialReport report;
  report.results = all_rectifications(p);
  report.agree = agrees(report.results);
  if (!report.agree) {
    Tableau cur = p;
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      const auto& s = cur.shapes();
      if (s.size() <= 1) break;
      Tableau head(std::vector<Partition>(s.begin(), s.end() - 1));
      Tableau tail(std::vector<Partition>(s.begin() + 1, s.end()));
      for (const auto& c : {head, tail}) {
        if (disagrees(c)) {
          cur = c;
          shrunk = true;
          break;
        }
      }
    }
    report.counterexample = cur;
  }
  return report;
}

}  // namespace tableaux
