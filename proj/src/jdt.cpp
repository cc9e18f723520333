#include "tableaux/jdt.hpp"

#include <algorithm>
#include <set>

#include "tableaux/error.hpp"
#include "tableaux/growth.hpp"

namespace tableaux {

namespace {

int outer_part(const Filling& f, const std::vector<int>& outer, int row) {
  if (row >= 1 && row <= f.rows()) return outer[row - 1];
  if (row > f.rows()) return f.inner_part(row);
  return kInfinity;
}

std::vector<int> padded_inner(const Filling& f, int rows) {
  std::vector<int> inner = f.inner();
  while (static_cast<int>(inner.size()) < rows) inner.push_back(f.inner_part(rows + 1));
  return inner;
}

}  // namespace

std::vector<Cell> inner_corners(const Filling& f) {
  std::vector<Cell> out;
  for (int r = 1; r <= f.rows(); ++r) {
    int c = f.inner_part(r);
    if (c >= 1 && f.inner_part(r + 1) < c) out.push_back({r, c});
  }
  return out;
}

std::vector<Cell> outer_corners(const Filling& f) {
  std::vector<Cell> out;
  auto outer = f.outer();
  for (int r = 1; r <= f.rows() + 1; ++r) {
    int o = outer_part(f, outer, r);
    if (r == 1 || outer_part(f, outer, r - 1) > o) out.push_back({r, o + 1});
  }
  return out;
}

SlideResult slide_in(const Filling& f, Cell b) {
  if (!f.stars().empty()) throw PreconditionError("slides act on fillings without stars");
  auto corners = inner_corners(f);
  if (std::find(corners.begin(), corners.end(), b) == corners.end()) {
    throw PreconditionError("slide_in needs an inner corner");
  }
  auto entries = f.entries();
  Cell e = b;
  SlideTrace trace{{e}, b, b};
  while (true) {
    auto right = entries.find({e.row, e.col + 1});
    auto below = entries.find({e.row + 1, e.col});
    auto next = entries.end();
    if (right != entries.end() && below != entries.end()) {
      next = below->second <= right->second ? below : right;
    } else if (right != entries.end()) {
      next = right;
    } else if (below != entries.end()) {
      next = below;
    } else {
      break;
    }
    Cell from = next->first;
    entries[e] = next->second;
    entries.erase(next);
    e = from;
    trace.path.push_back(e);
  }
  trace.end = e;
  std::vector<int> inner = f.inner();
  inner[b.row - 1] -= 1;
  return {Filling(std::move(inner), std::move(entries)), e, trace};
}

SlideResult slide_out(const Filling& f, Cell c) {
  if (!f.stars().empty()) throw PreconditionError("slides act on fillings without stars");
  auto corners = outer_corners(f);
  if (std::find(corners.begin(), corners.end(), c) == corners.end()) {
    throw PreconditionError("slide_out needs an outer corner");
  }
  auto entries = f.entries();
  Cell e = c;
  SlideTrace trace{{e}, c, c};
  while (true) {
    auto left = entries.find({e.row, e.col - 1});
    auto above = entries.find({e.row - 1, e.col});
    auto next = entries.end();
    if (left != entries.end() && above != entries.end()) {
      next = above->second >= left->second ? above : left;
    } else if (left != entries.end()) {
      next = left;
    } else if (above != entries.end()) {
      next = above;
    } else {
      break;
    }
    Cell from = next->first;
    entries[e] = next->second;
    entries.erase(next);
    e = from;
    trace.path.push_back(e);
  }
  trace.end = e;
  std::vector<int> inner = padded_inner(f, std::max(f.rows(), c.row));
  if (inner[e.row - 1] + 1 != e.col) throw InternalError("slide_out ended off the inner border");
  inner[e.row - 1] += 1;
  return {Filling(std::move(inner), std::move(entries)), e, trace};
}

Tableau rectify(const Tableau& t, const CornerChooser& choose) {
  Filling f = to_filling(t);
  for (auto corners = inner_corners(f); !corners.empty(); corners = inner_corners(f)) {
    f = slide_in(f, choose(corners)).filling;
  }
  return from_filling(f, t.alphabet_size());
}

Tableau rectify(const Tableau& t) {
  return rectify(t, [](const std::vector<Cell>& c) { return c.back(); });
}

Tableau rectify(const Filling& f) {
  Filling n = f.normalized();
  return rectify(from_filling(n));
}

std::pair<Tableau, Tableau> jdt_pair(const Tableau& p, const Tableau& q) {
  auto r = fill_pair(p, q, LocalRule{RuleKind::J, Direction::forward, std::nullopt});
  return {r.t, r.u};
}

namespace {

// Slides `outer` into the cells of `inner`; returns (slid outer, vacated labels).
std::pair<Tableau, Tableau> slide_through(const Tableau& inner, const Tableau& outer) {
  Filling moving = to_filling(outer);
  Filling labels = to_filling(inner);
  std::vector<std::pair<Cell, int>> order(labels.entries().begin(), labels.entries().end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first.col > b.first.col;
  });
  std::map<Cell, int> vacated;
  for (const auto& [cell, v] : order) {
    auto r = slide_in(moving, cell);
    moving = r.filling;
    vacated[r.vacated] = v;
  }
  Tableau slid = from_filling(moving, outer.alphabet_size());
  int n = std::max(slid.outer().length(), outer.outer().length());
  Filling left(slid.outer().padded(n), std::move(vacated));
  return {slid, from_filling(left, inner.alphabet_size())};
}

}  // namespace

std::pair<Tableau, Tableau> jdt_pair_by_slides(const Tableau& p, const Tableau& q) {
  if (q.inner() == p.outer()) {
    auto [u, t] = slide_through(p, q);
    return {t, u};
  }
  if (p.inner() == q.outer()) return slide_through(q, p);
  throw PreconditionError("J needs one tableau to extend the other");
}

Tableau p_symbol(const Word& w, std::optional<int> k) {
  std::vector<std::vector<int>> rows;
  int top = 0;
  for (int x : w) {
    if (x < 1) throw ParameterError("letters must be positive");
    top = std::max(top, x);
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  std::map<Cell, int> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      entries[{static_cast<int>(r) + 1, static_cast<int>(c) + 1}] = rows[r][c];
    }
  }
  return from_filling(Filling(std::vector<int>(rows.size(), 0), std::move(entries)),
                      k.value_or(top));
}

bool knuth_equivalent(const Tableau& a, const Tableau& b) {
  return to_filling(rectify(a)).entries() == to_filling(rectify(b)).entries();
}

std::vector<Tableau> tableaux_of_shape(const Partition& inner, const Partition& outer,
                                       const std::vector<int>& content) {
  std::vector<Tableau> out;
  if (!contains(inner, outer)) return out;
  int n = outer.length();
  std::vector<int> lam = outer.padded(n);
  std::vector<std::vector<int>> chain{inner.padded(n)};
  // Strips of a given size from chain.back() within lam.
  std::function<void(std::size_t)> step;
  std::function<void(std::size_t, int, int, std::vector<int>&)> strip =
      [&](std::size_t i, int r, int left, std::vector<int>& cur) {
    if (r == n) {
      if (left == 0) {
        chain.push_back(cur);
        step(i + 1);
        chain.pop_back();
      }
      return;
    }
    const std::vector<int> prev = chain.back();
    int cap = std::min(lam[r], r == 0 ? lam[r] : prev[r - 1]);
    for (int v = prev[r]; v <= cap && v - prev[r] <= left; ++v) {
      cur[r] = v;
      strip(i, r + 1, left - (v - prev[r]), cur);
    }
    cur[r] = prev[r];
  };
  step = [&](std::size_t i) {
    if (i == content.size()) {
      if (chain.back() == lam) {
        std::vector<Partition> shapes;
        for (const auto& s : chain) shapes.emplace_back(s);
        out.emplace_back(std::move(shapes));
      }
      return;
    }
    std::vector<int> cur = chain.back();
    strip(i, 0, content[i], cur);
  };
  step(0);
  return out;
}

Tableau reversal(const Tableau& t, int k) {
  Tableau target = star(t, k);
  std::vector<int> want = content(target);
  Tableau found;
  int hits = 0;
  for (const auto& x : tableaux_of_shape(t.inner(), t.outer(), want)) {
    if (knuth_equivalent(x, target) && dual_equivalent(x, t)) {
      found = x;
      ++hits;
    }
  }
  if (hits != 1) throw InternalError("reversal search found " + std::to_string(hits) + " witnesses");
  return found;
}

}  // namespace tableaux
