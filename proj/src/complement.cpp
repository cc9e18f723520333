#include "tableaux/complement.hpp"

#include "tableaux/error.hpp"

namespace tableaux {

namespace {

// Pads with copies of the outer shape, or drops trailing empty strips, so
// that t has alphabet size exactly k.
std::vector<Partition> with_alphabet(const Tableau& t, int k) {
  std::vector<Partition> shapes = t.shapes();
  while (static_cast<int>(shapes.size()) < k + 1) shapes.push_back(shapes.back());
  while (static_cast<int>(shapes.size()) > k + 1) {
    if (shapes[shapes.size() - 2] != shapes.back()) throw ParameterError("entries exceed k");
    shapes.pop_back();
  }
  return shapes;
}

}  // namespace

Tableau complement(const Tableau& t, const ComplementParams& p) {
  if (p.k < 0) throw ParameterError("k must be nonnegative");
  auto shapes = with_alphabet(t, p.k);
  if (shapes.back().part(1) > p.l) throw ParameterError("l is smaller than the first part of the outer border");
  std::vector<Partition> out;
  for (int i = 0; i <= p.k; ++i) out.push_back(prepend(shapes[p.k - i], p.l, i));
  return Tableau(std::move(out));
}

bool complement_involution_check(const Tableau& t, const ComplementParams& p) {
  return equal_up_to_vshift(complement(complement(t, p), p), t, p.l);
}

StableTableau stable_complement(const GeneralTableau& t) {
  int k = t.alphabet_size();
  std::vector<StableShape> out;
  for (int i = 0; i <= k; ++i) out.emplace_back(i, t[k - i].parts());
  return StableTableau(std::move(out));
}

StableTableau stable_complement(const Tableau& t) { return stable_complement(to_general(t, max_length(t))); }

GeneralTableau stable_complement(const StableTableau& t) {
  int k = t.alphabet_size();
  std::vector<GeneralShape> out;
  for (int i = 0; i <= k; ++i) out.emplace_back(t[k - i].finite());
  return GeneralTableau(std::move(out));
}

GrowthDiagram<Partition> complement_growth_rows(const GrowthDiagram<Partition>& g,
                                                const ComplementParams& p) {
  GrowthDiagram<Partition> out;
  for (int i = 0; i < g.rows(); ++i) {
    if (g.cols() - 1 != p.k) throw ParameterError("row alphabet differs from k");
    out.grid.push_back(complement(g.row(i), p).shapes());
  }
  return out;
}

GrowthDiagram<Partition> complement_growth_cols(const GrowthDiagram<Partition>& g,
                                                const ComplementParams& p) {
  if (g.rows() - 1 != p.k) throw ParameterError("column alphabet differs from k");
  GrowthDiagram<Partition> out;
  out.grid.assign(g.rows(), std::vector<Partition>(g.cols()));
  for (int j = 0; j < g.cols(); ++j) {
    auto c = complement(g.col(j), p);
    for (int i = 0; i < g.rows(); ++i) out.grid[i][j] = c[i];
  }
  return out;
}

}  // namespace tableaux
