#include "tableaux/tableau.hpp"

#include <algorithm>
#include <string>

#include "tableaux/error.hpp"

namespace tableaux {

template <class S>
BasicTableau<S>::BasicTableau(std::vector<S> shapes) : shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw InvalidTableau("a tableau needs at least one shape");
  for (std::size_t i = 1; i < shapes_.size(); ++i) {
    if (!is_strip(shapes_[i - 1], shapes_[i])) {
      throw InvalidTableau("step " + std::to_string(i) + " (" + to_string(shapes_[i - 1]) +
                           " to " + to_string(shapes_[i]) + ") is not a horizontal strip");
    }
  }
}

template class BasicTableau<Partition>;
template class BasicTableau<GeneralShape>;
template class BasicTableau<StableShape>;

namespace {

int shape_size(const Partition& p) { return p.size(); }
int shape_size(const GeneralShape& g) { return g.size(); }

}  // namespace

template <class S>
std::vector<int> content(const BasicTableau<S>& t) {
  std::vector<int> out;
  for (std::size_t i = 1; i < t.shapes().size(); ++i) {
    if constexpr (std::is_same_v<S, StableShape>) {
      // Each stable strip is two half-infinite rows; count the finite shift.
      const auto& a = t[i - 1].finite();
      const auto& b = t[i].finite();
      int n = 0;
      for (std::size_t j = 0; j < a.size(); ++j) n += a[j] - b[j];
      out.push_back(n);
    } else {
      out.push_back(shape_size(t[i]) - shape_size(t[i - 1]));
    }
  }
  return out;
}

template std::vector<int> content(const BasicTableau<Partition>&);
template std::vector<int> content(const BasicTableau<GeneralShape>&);
template std::vector<int> content(const BasicTableau<StableShape>&);

Filling::Filling(std::vector<int> inner, std::map<Cell, int> entries, std::set<Cell> stars)
    : inner_(std::move(inner)), entries_(std::move(entries)), stars_(std::move(stars)) {
  int max_row = 0;
  for (const auto& [c, v] : entries_) {
    if (c.row < 1) throw InvalidTableau("cell above row 1");
    if (v < 1) throw InvalidTableau("entries must be positive");
    max_row = std::max(max_row, c.row);
  }
  for (const auto& c : stars_) {
    if (c.row < 1) throw InvalidTableau("cell above row 1");
    if (entries_.count(c)) throw InvalidTableau("cell holds both an entry and a star");
    max_row = std::max(max_row, c.row);
  }
  while (static_cast<int>(inner_.size()) < max_row) {
    int last = inner_.empty() ? 0 : inner_.back();
    inner_.push_back(std::min(last, 0));
  }
  // Trailing rows with no cells carry no information once they match the
  // border implied below the last row.
  while (static_cast<int>(inner_.size()) > max_row) {
    int implied = inner_.size() == 1 ? 0 : std::min(inner_[inner_.size() - 2], 0);
    if (inner_.back() != implied) break;
    inner_.pop_back();
  }
  for (std::size_t i = 1; i < inner_.size(); ++i) {
    if (inner_[i] > inner_[i - 1]) throw InvalidTableau("inner border is not weakly decreasing");
  }
  // Row contiguity and the outer border.
  std::vector<int> out = inner_;
  for (int r = 1; r <= rows(); ++r) {
    int expect = inner_[r - 1] + 1;
    bool seen_star = false;
    std::vector<std::pair<int, bool>> row;  // column, is_star
    for (auto it = entries_.lower_bound({r, -kInfinity}); it != entries_.end() && it->first.row == r;
         ++it) {
      row.push_back({it->first.col, false});
    }
    for (auto it = stars_.lower_bound({r, -kInfinity}); it != stars_.end() && it->row == r; ++it) {
      row.push_back({it->col, true});
    }
    std::sort(row.begin(), row.end());
    for (auto [c, is_star] : row) {
      if (c != expect) {
        throw InvalidTableau("row " + std::to_string(r) + " is not contiguous at column " +
                             std::to_string(c));
      }
      if (!is_star && seen_star) {
        throw InvalidTableau("entry to the right of a star in row " + std::to_string(r));
      }
      seen_star = seen_star || is_star;
      ++expect;
    }
    out[r - 1] = expect - 1;
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] > out[i - 1]) {
      throw InvalidTableau("outer border is not weakly decreasing at row " + std::to_string(i + 1));
    }
  }
  for (const auto& [c, v] : entries_) {
    auto right = entries_.find({c.row, c.col + 1});
    if (right != entries_.end() && right->second < v) {
      throw InvalidTableau("row decreases at (" + std::to_string(c.row) + "," +
                           std::to_string(c.col) + ")");
    }
    auto below = entries_.find({c.row + 1, c.col});
    if (below != entries_.end() && below->second <= v) {
      throw InvalidTableau("column not strictly increasing at (" + std::to_string(c.row) + "," +
                           std::to_string(c.col) + ")");
    }
  }
}

int Filling::inner_part(int row) const {
  if (row >= 1 && row <= rows()) return inner_[row - 1];
  if (row > rows()) return inner_.empty() ? 0 : std::min(inner_.back(), 0);
  return kInfinity;
}

std::vector<int> Filling::outer() const {
  std::vector<int> out = inner_;
  for (const auto& [c, v] : entries_) out[c.row - 1] = std::max(out[c.row - 1], c.col);
  for (const auto& c : stars_) out[c.row - 1] = std::max(out[c.row - 1], c.col);
  return out;
}

std::optional<int> Filling::at(Cell c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

int Filling::max_entry() const {
  int m = 0;
  for (const auto& [c, v] : entries_) m = std::max(m, v);
  return m;
}

Filling filling_from_cells(std::map<Cell, int> entries, std::set<Cell> stars) {
  int max_row = 0;
  for (const auto& [c, v] : entries) max_row = std::max(max_row, c.row);
  for (const auto& c : stars) max_row = std::max(max_row, c.row);
  std::vector<int> first(max_row, kInfinity), last(max_row, -kInfinity);
  auto mark = [&](Cell c) {
    first[c.row - 1] = std::min(first[c.row - 1], c.col);
    last[c.row - 1] = std::max(last[c.row - 1], c.col);
  };
  for (const auto& [c, v] : entries) mark(c);
  for (const auto& c : stars) mark(c);
  std::vector<int> inner(max_row);
  int below = 0;
  for (int i = max_row - 1; i >= 0; --i) {
    if (first[i] == kInfinity) {
      inner[i] = std::max(below, i + 1 < max_row ? inner[i + 1] : 0);
    } else {
      inner[i] = first[i] - 1;
      below = last[i];
    }
  }
  return Filling(std::move(inner), std::move(entries), std::move(stars));
}

Filling Filling::normalized() const {
  if (empty()) return Filling();
  int min_row = kInfinity, max_row = 0, min_col = kInfinity;
  auto visit = [&](Cell c) {
    min_row = std::min(min_row, c.row);
    max_row = std::max(max_row, c.row);
    min_col = std::min(min_col, c.col);
  };
  for (const auto& [c, v] : entries_) visit(c);
  for (const auto& c : stars_) visit(c);
  int n = max_row - min_row + 1;
  std::vector<int> first(n, kInfinity), last(n, -kInfinity);
  auto mark = [&](Cell c) {
    int i = c.row - min_row;
    first[i] = std::min(first[i], c.col - min_col + 1);
    last[i] = std::max(last[i], c.col - min_col + 1);
  };
  for (const auto& [c, v] : entries_) mark(c);
  for (const auto& c : stars_) mark(c);
  std::vector<int> inner(n);
  int below_outer = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (first[i] == kInfinity) {
      inner[i] = below_outer;
    } else {
      inner[i] = first[i] - 1;
      below_outer = last[i];
    }
  }
  std::map<Cell, int> entries;
  for (const auto& [c, v] : entries_) entries[{c.row - min_row + 1, c.col - min_col + 1}] = v;
  std::set<Cell> stars;
  for (const auto& c : stars_) stars.insert({c.row - min_row + 1, c.col - min_col + 1});
  return Filling(std::move(inner), std::move(entries), std::move(stars));
}

namespace {

template <class S>
Filling chain_to_filling(const std::vector<std::vector<int>>& shapes) {
  std::map<Cell, int> entries;
  for (std::size_t i = 1; i < shapes.size(); ++i) {
    for (std::size_t r = 0; r < shapes[i].size(); ++r) {
      for (int c = shapes[i - 1][r] + 1; c <= shapes[i][r]; ++c) {
        entries[{static_cast<int>(r) + 1, c}] = static_cast<int>(i);
      }
    }
  }
  return Filling(shapes.front(), std::move(entries));
}

std::vector<std::vector<int>> filling_to_rows(const Filling& f, int k) {
  if (!f.stars().empty()) throw InvalidTableau("stars cannot be read as a tableau");
  if (f.max_entry() > k) throw ParameterError("entry exceeds the alphabet size");
  std::vector<std::vector<int>> shapes(k + 1, f.inner());
  for (const auto& [c, v] : f.entries()) {
    for (int i = v; i <= k; ++i) shapes[i][c.row - 1] = std::max(shapes[i][c.row - 1], c.col);
  }
  return shapes;
}

}  // namespace

Filling to_filling(const Tableau& t) {
  int n = max_length(t);
  std::vector<std::vector<int>> rows;
  for (const auto& s : t.shapes()) rows.push_back(s.padded(n));
  return chain_to_filling<Partition>(rows);
}

Filling to_filling(const GeneralTableau& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& s : t.shapes()) rows.push_back(s.parts());
  return chain_to_filling<GeneralShape>(rows);
}

Tableau from_filling(const Filling& f, std::optional<int> k) {
  auto rows = filling_to_rows(f, k.value_or(f.max_entry()));
  std::vector<Partition> shapes;
  for (auto& r : rows) shapes.emplace_back(std::move(r));
  return Tableau(std::move(shapes));
}

GeneralTableau general_from_filling(const Filling& f, std::optional<int> k) {
  auto rows = filling_to_rows(f, k.value_or(f.max_entry()));
  std::vector<GeneralShape> shapes;
  for (auto& r : rows) shapes.emplace_back(std::move(r));
  return GeneralTableau(std::move(shapes));
}

namespace {

// Refine each strip by adding its boxes in ascending column order.
std::vector<std::vector<int>> standardize_rows(const std::vector<std::vector<int>>& chain) {
  std::vector<std::vector<int>> out{chain.front()};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::vector<Cell> boxes;
    for (std::size_t r = 0; r < chain[i].size(); ++r) {
      for (int c = chain[i - 1][r] + 1; c <= chain[i][r]; ++c) {
        boxes.push_back({static_cast<int>(r) + 1, c});
      }
    }
    std::sort(boxes.begin(), boxes.end(), [](Cell a, Cell b) { return a.col < b.col; });
    std::vector<int> cur = chain[i - 1];
    for (Cell b : boxes) {
      cur[b.row - 1] = b.col;
      out.push_back(cur);
    }
  }
  return out;
}

}  // namespace

Tableau standard_renumbering(const Tableau& t) {
  int n = max_length(t);
  std::vector<std::vector<int>> rows;
  for (const auto& s : t.shapes()) rows.push_back(s.padded(n));
  std::vector<Partition> shapes;
  for (auto& r : standardize_rows(rows)) shapes.emplace_back(std::move(r));
  return Tableau(std::move(shapes));
}

GeneralTableau standard_renumbering(const GeneralTableau& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& s : t.shapes()) rows.push_back(s.parts());
  std::vector<GeneralShape> shapes;
  for (auto& r : standardize_rows(rows)) shapes.emplace_back(std::move(r));
  return GeneralTableau(std::move(shapes));
}

bool is_standard(const Tableau& t) {
  for (int c : content(t)) {
    if (c != 1) return false;
  }
  return true;
}

bool is_standard(const GeneralTableau& t) {
  for (int c : content(t)) {
    if (c != 1) return false;
  }
  return true;
}

Word column_word(const Filling& f) {
  std::vector<std::pair<Cell, int>> cells(f.entries().begin(), f.entries().end());
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.first.col != b.first.col) return a.first.col < b.first.col;
    return a.first.row > b.first.row;
  });
  Word w;
  for (const auto& [c, v] : cells) w.push_back(v);
  return w;
}

Word column_word(const Tableau& t) { return column_word(to_filling(t)); }

Tableau star(const Tableau& t, int k) {
  Filling f = to_filling(t);
  if (f.max_entry() > k) throw ParameterError("entry exceeds k");
  if (f.entries().empty()) return Tableau(std::vector<Partition>(k + 1));
  int max_row = 0, max_col = -kInfinity;
  for (const auto& [c, v] : f.entries()) {
    max_row = std::max(max_row, c.row);
    max_col = std::max(max_col, c.col);
  }
  std::map<Cell, int> rotated;
  for (const auto& [c, v] : f.entries()) {
    rotated[{max_row - c.row + 1, max_col - c.col + 1}] = k + 1 - v;
  }
  return from_filling(filling_from_cells(std::move(rotated)).normalized(), k);
}

namespace {

bool vshift_one_way(const std::vector<Partition>& small, const std::vector<Partition>& big,
                    int l) {
  int limit = 0;
  for (const auto& s : big) limit = std::max(limit, s.length());
  for (int j = 0; j <= limit; ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < small.size() && ok; ++i) {
      ok = (j == 0 || small[i].part(1) <= l) && prepend(small[i], l, j) == big[i];
    }
    if (ok) return true;
  }
  return false;
}

bool vshift_one_way(const std::vector<GeneralShape>& small, const std::vector<GeneralShape>& big,
                    int l) {
  int j = big.front().length() - small.front().length();
  if (j < 0) return false;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (big[i].length() - small[i].length() != j) return false;
    if (j > 0 && small[i].length() > 0 && small[i].parts()[0] > l) return false;
    if (prepend(small[i], l, j) != big[i]) return false;
  }
  return true;
}

}  // namespace

bool equal_up_to_vshift(const Tableau& a, const Tableau& b, int l) {
  if (a.shapes().size() != b.shapes().size()) return false;
  return vshift_one_way(a.shapes(), b.shapes(), l) || vshift_one_way(b.shapes(), a.shapes(), l);
}

bool equal_up_to_vshift(const GeneralTableau& a, const GeneralTableau& b, int l) {
  if (a.shapes().size() != b.shapes().size()) return false;
  return vshift_one_way(a.shapes(), b.shapes(), l) || vshift_one_way(b.shapes(), a.shapes(), l);
}

StableTableau normalize_stable(const StableTableau& t) {
  int base = t.inner().inf_count();
  for (const auto& s : t.shapes()) base = std::min(base, s.inf_count());
  std::vector<StableShape> shapes;
  for (const auto& s : t.shapes()) shapes.emplace_back(s.inf_count() - base, s.finite());
  return StableTableau(std::move(shapes));
}

GeneralTableau to_general(const Tableau& t, int length) {
  std::vector<GeneralShape> shapes;
  for (const auto& s : t.shapes()) shapes.push_back(GeneralShape::from_partition(s, length));
  return GeneralTableau(std::move(shapes));
}

Tableau to_partition_tableau(const GeneralTableau& t) {
  std::vector<Partition> shapes;
  for (const auto& s : t.shapes()) shapes.push_back(s.to_partition());
  return Tableau(std::move(shapes));
}

GeneralTableau shift_columns(const GeneralTableau& t, int delta) {
  std::vector<GeneralShape> shapes;
  for (const auto& s : t.shapes()) {
    std::vector<int> p = s.parts();
    for (int& x : p) x += delta;
    shapes.emplace_back(std::move(p));
  }
  return GeneralTableau(std::move(shapes));
}

int max_length(const Tableau& t) {
  int n = 0;
  for (const auto& s : t.shapes()) n = std::max(n, s.length());
  return n;
}

}  // namespace tableaux
