#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace tableaux {

struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// c precedes d when c sits in the same or a later column and an earlier row.
bool cross_less(Cell c, Cell d);

// Sentinel used when stable rows are materialized as plain integers.
inline constexpr int kInfinity = 1 << 28;

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // 1-indexed; rows past the end are 0.
  int part(int row) const;
  int size() const;
  bool empty() const { return parts_.empty(); }
  std::vector<int> padded(int length) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Fixed-length weakly decreasing integer sequence; parts may be negative.
class GeneralShape {
 public:
  GeneralShape() = default;
  GeneralShape(std::initializer_list<int> parts);
  explicit GeneralShape(std::vector<int> parts);
  static GeneralShape from_partition(const Partition& p, int length);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int row) const;
  int size() const;
  bool is_partition() const;
  Partition to_partition() const;

  friend bool operator==(const GeneralShape&, const GeneralShape&) = default;
  friend auto operator<=>(const GeneralShape&, const GeneralShape&) = default;

 private:
  std::vector<int> parts_;
};

// inf_count leading parts equal to +infinity, then finite parts, then
// implicitly -infinity forever.
class StableShape {
 public:
  StableShape() = default;
  StableShape(int inf_count, std::vector<int> finite);

  int inf_count() const { return inf_count_; }
  const std::vector<int>& finite() const { return finite_; }
  // 1-indexed; returns kInfinity, a finite part, or -kInfinity.
  int part(int row) const;
  // The first n rows with sentinels in place of the infinite parts.
  std::vector<int> rows(int n) const;
  int row_span() const { return inf_count_ + static_cast<int>(finite_.size()); }
  static StableShape from_rows(const std::vector<int>& rows);

  friend bool operator==(const StableShape&, const StableShape&) = default;
  friend auto operator<=>(const StableShape&, const StableShape&) = default;

 private:
  int inf_count_ = 0;
  std::vector<int> finite_;
};

template <class S>
struct Skew {
  S inner;
  S outer;
};
using SkewShape = Skew<Partition>;

bool contains(const Partition& a, const Partition& b);
bool contains(const GeneralShape& a, const GeneralShape& b);
bool contains(const StableShape& a, const StableShape& b);

bool is_horizontal_strip(const Partition& inner, const Partition& outer);
bool is_horizontal_strip(const GeneralShape& inner, const GeneralShape& outer);
bool is_stable_horizontal_strip(const StableShape& inner, const StableShape& outer);

// Uniform name for the chain validators.
inline bool is_strip(const Partition& a, const Partition& b) { return is_horizontal_strip(a, b); }
inline bool is_strip(const GeneralShape& a, const GeneralShape& b) { return is_horizontal_strip(a, b); }
inline bool is_strip(const StableShape& a, const StableShape& b) { return is_stable_horizontal_strip(a, b); }

Partition join(const Partition& a, const Partition& b);
Partition meet(const Partition& a, const Partition& b);
GeneralShape join(const GeneralShape& a, const GeneralShape& b);
GeneralShape meet(const GeneralShape& a, const GeneralShape& b);

bool covers(const Partition& a, const Partition& b);
bool covers(const GeneralShape& a, const GeneralShape& b);
bool covers(const StableShape& a, const StableShape& b);

std::vector<Cell> inner_corners(const SkewShape& s);
std::vector<Cell> outer_corners(const SkewShape& s);

Partition prepend(const Partition& s, int value, int count);
GeneralShape prepend(const GeneralShape& s, int value, int count);
StableShape prepend_infinity(const StableShape& s, int count);

// Cells of outer/inner, row by row.
std::vector<Cell> skew_cells(const Partition& inner, const Partition& outer);
std::vector<Cell> skew_cells(const GeneralShape& inner, const GeneralShape& outer);

// The single box of b/a; requires covers(a, b).
Cell added_box(const Partition& a, const Partition& b);
Cell added_box(const GeneralShape& a, const GeneralShape& b);

std::string to_string(const Partition& p);
std::string to_string(const GeneralShape& g);
std::string to_string(const StableShape& s);

}  // namespace tableaux
