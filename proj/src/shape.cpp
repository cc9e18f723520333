#include "tableaux/shape.hpp"

#include <algorithm>
#include <numeric>

#include "tableaux/error.hpp"

namespace tableaux {

namespace {

void require_decreasing(const std::vector<int>& parts, const char* what) {
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw InvalidShape(std::string(what) + " parts must be weakly decreasing");
    }
  }
}

void require_same_length(const GeneralShape& a, const GeneralShape& b) {
  if (a.length() != b.length()) {
    throw PreconditionError("general shapes of different lengths");
  }
}

// Interleaving test on equal-length sequences.
bool interleaves(const std::vector<int>& inner, const std::vector<int>& outer) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (outer[i] < inner[i]) return false;
    if (i + 1 < inner.size() && outer[i + 1] > inner[i]) return false;
  }
  return true;
}

std::string render_parts(const std::vector<int>& parts, int inf_count) {
  bool compact = inf_count == 0;
  for (int p : parts) compact = compact && p >= 0 && p <= 9;
  std::string out;
  if (compact) {
    for (int p : parts) out += static_cast<char>('0' + p);
    return out.empty() ? "0" : out;
  }
  out = "[";
  bool first = true;
  auto emit = [&](const std::string& token) {
    if (!first) out += ",";
    out += token;
    first = false;
  };
  for (int i = 0; i < inf_count; ++i) emit("inf");
  for (int p : parts) emit(std::to_string(p));
  return out + "]";
}

}  // namespace

bool cross_less(Cell c, Cell d) { return c.col >= d.col && c.row < d.row; }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_decreasing(parts_, "partition");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (!parts_.empty() && parts_.back() < 0) throw InvalidShape("partition parts must be nonnegative");
}

int Partition::part(int row) const {
  if (row < 1) throw PreconditionError("rows are 1-indexed");
  return row <= length() ? parts_[row - 1] : 0;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int length) const {
  if (length < this->length()) throw PreconditionError("cannot pad a partition to fewer rows");
  std::vector<int> out = parts_;
  out.resize(length, 0);
  return out;
}

GeneralShape::GeneralShape(std::initializer_list<int> parts)
    : GeneralShape(std::vector<int>(parts)) {}

GeneralShape::GeneralShape(std::vector<int> parts) : parts_(std::move(parts)) {
  require_decreasing(parts_, "general shape");
}

GeneralShape GeneralShape::from_partition(const Partition& p, int length) {
  return GeneralShape(p.padded(length));
}

int GeneralShape::part(int row) const {
  if (row < 1 || row > length()) throw PreconditionError("row outside general shape");
  return parts_[row - 1];
}

int GeneralShape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool GeneralShape::is_partition() const { return parts_.empty() || parts_.back() >= 0; }

Partition GeneralShape::to_partition() const {
  if (!is_partition()) throw InvalidShape("general shape has negative parts");
  return Partition(parts_);
}

StableShape::StableShape(int inf_count, std::vector<int> finite)
    : inf_count_(inf_count), finite_(std::move(finite)) {
  if (inf_count_ < 0) throw InvalidShape("negative count of infinite parts");
  require_decreasing(finite_, "stable shape");
}

int StableShape::part(int row) const {
  if (row < 1) throw PreconditionError("rows are 1-indexed");
  if (row <= inf_count_) return kInfinity;
  if (row <= row_span()) return finite_[row - inf_count_ - 1];
  return -kInfinity;
}

std::vector<int> StableShape::rows(int n) const {
  std::vector<int> out(n);
  for (int r = 1; r <= n; ++r) out[r - 1] = part(r);
  return out;
}

StableShape StableShape::from_rows(const std::vector<int>& rows) {
  std::size_t i = 0;
  while (i < rows.size() && rows[i] >= kInfinity) ++i;
  int infs = static_cast<int>(i);
  std::vector<int> finite;
  while (i < rows.size() && rows[i] > -kInfinity) {
    if (rows[i] >= kInfinity) throw InvalidShape("infinite part after a finite part");
    finite.push_back(rows[i++]);
  }
  for (; i < rows.size(); ++i) {
    if (rows[i] > -kInfinity) throw InvalidShape("finite part after -infinity");
  }
  return StableShape(infs, std::move(finite));
}

bool contains(const Partition& a, const Partition& b) {
  if (a.length() > b.length()) return false;
  for (int r = 1; r <= a.length(); ++r) {
    if (a.part(r) > b.part(r)) return false;
  }
  return true;
}

bool contains(const GeneralShape& a, const GeneralShape& b) {
  require_same_length(a, b);
  for (int i = 0; i < a.length(); ++i) {
    if (a.parts()[i] > b.parts()[i]) return false;
  }
  return true;
}

bool contains(const StableShape& a, const StableShape& b) {
  int n = std::max(a.row_span(), b.row_span()) + 1;
  auto ra = a.rows(n), rb = b.rows(n);
  for (int i = 0; i < n; ++i) {
    if (ra[i] > rb[i]) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  int n = std::max(inner.length(), outer.length());
  return interleaves(inner.padded(n), outer.padded(n));
}

bool is_horizontal_strip(const GeneralShape& inner, const GeneralShape& outer) {
  if (inner.length() != outer.length()) return false;
  return interleaves(inner.parts(), outer.parts());
}

bool is_stable_horizontal_strip(const StableShape& inner, const StableShape& outer) {
  if (outer.inf_count() != inner.inf_count() + 1) return false;
  const auto& a = inner.finite();
  const auto& b = outer.finite();
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return false;
    if (j + 1 < a.size() && b[j] < a[j + 1]) return false;
  }
  return true;
}

Partition join(const Partition& a, const Partition& b) {
  int n = std::max(a.length(), b.length());
  std::vector<int> out(n);
  for (int r = 1; r <= n; ++r) out[r - 1] = std::max(a.part(r), b.part(r));
  return Partition(out);
}

Partition meet(const Partition& a, const Partition& b) {
  int n = std::max(a.length(), b.length());
  std::vector<int> out(n);
  for (int r = 1; r <= n; ++r) out[r - 1] = std::min(a.part(r), b.part(r));
  return Partition(out);
}

GeneralShape join(const GeneralShape& a, const GeneralShape& b) {
  require_same_length(a, b);
  std::vector<int> out(a.length());
  for (int i = 0; i < a.length(); ++i) out[i] = std::max(a.parts()[i], b.parts()[i]);
  return GeneralShape(out);
}

GeneralShape meet(const GeneralShape& a, const GeneralShape& b) {
  require_same_length(a, b);
  std::vector<int> out(a.length());
  for (int i = 0; i < a.length(); ++i) out[i] = std::min(a.parts()[i], b.parts()[i]);
  return GeneralShape(out);
}

bool covers(const Partition& a, const Partition& b) {
  return contains(a, b) && b.size() == a.size() + 1;
}

bool covers(const GeneralShape& a, const GeneralShape& b) {
  return a.length() == b.length() && contains(a, b) && b.size() == a.size() + 1;
}

bool covers(const StableShape& a, const StableShape& b) {
  if (a.inf_count() != b.inf_count() || a.finite().size() != b.finite().size()) return false;
  int diff = 0;
  for (std::size_t i = 0; i < a.finite().size(); ++i) {
    int d = b.finite()[i] - a.finite()[i];
    if (d < 0) return false;
    diff += d;
  }
  return diff == 1;
}

std::vector<Cell> inner_corners(const SkewShape& s) {
  std::vector<Cell> out;
  const Partition& mu = s.inner;
  for (int r = 1; r <= mu.length(); ++r) {
    if (mu.part(r) > mu.part(r + 1)) out.push_back({r, mu.part(r)});
  }
  return out;
}

std::vector<Cell> outer_corners(const SkewShape& s) {
  std::vector<Cell> out;
  const Partition& la = s.outer;
  for (int r = 1; r <= la.length() + 1; ++r) {
    if (r == 1 || la.part(r - 1) > la.part(r)) out.push_back({r, la.part(r) + 1});
  }
  return out;
}

Partition prepend(const Partition& s, int value, int count) {
  if (count > 0 && value < s.part(1)) throw InvalidShape("prepended part smaller than first part");
  std::vector<int> parts(count, value);
  parts.insert(parts.end(), s.parts().begin(), s.parts().end());
  return Partition(parts);
}

GeneralShape prepend(const GeneralShape& s, int value, int count) {
  if (count > 0 && s.length() > 0 && value < s.parts()[0]) {
    throw InvalidShape("prepended part smaller than first part");
  }
  std::vector<int> parts(count, value);
  parts.insert(parts.end(), s.parts().begin(), s.parts().end());
  return GeneralShape(parts);
}

StableShape prepend_infinity(const StableShape& s, int count) {
  return StableShape(s.inf_count() + count, s.finite());
}

std::vector<Cell> skew_cells(const Partition& inner, const Partition& outer) {
  std::vector<Cell> out;
  for (int r = 1; r <= outer.length(); ++r) {
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) out.push_back({r, c});
  }
  return out;
}

std::vector<Cell> skew_cells(const GeneralShape& inner, const GeneralShape& outer) {
  require_same_length(inner, outer);
  std::vector<Cell> out;
  for (int r = 1; r <= outer.length(); ++r) {
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) out.push_back({r, c});
  }
  return out;
}

Cell added_box(const Partition& a, const Partition& b) {
  if (!covers(a, b)) throw PreconditionError("not a cover relation");
  for (int r = 1; r <= b.length(); ++r) {
    if (b.part(r) != a.part(r)) return {r, b.part(r)};
  }
  throw InternalError("cover without a box");
}

Cell added_box(const GeneralShape& a, const GeneralShape& b) {
  if (!covers(a, b)) throw PreconditionError("not a cover relation");
  for (int r = 1; r <= b.length(); ++r) {
    if (b.part(r) != a.part(r)) return {r, b.part(r)};
  }
  throw InternalError("cover without a box");
}

std::string to_string(const Partition& p) { return render_parts(p.parts(), 0); }

std::string to_string(const GeneralShape& g) {
  std::vector<int> parts = g.parts();
  bool nonneg = g.is_partition();
  if (nonneg) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }
  return render_parts(parts, 0);
}

std::string to_string(const StableShape& s) { return render_parts(s.finite(), s.inf_count()); }

}  // namespace tableaux
