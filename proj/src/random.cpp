#include "tableaux/random.hpp"

#include <map>
#include <mutex>
#include <optional>

#include "tableaux/complement.hpp"

#include "tableaux/error.hpp"

namespace tableaux {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ParameterError("empty range");
  std::uint64_t limit = -n % n;  // 2^64 mod n
  while (true) {
    std::uint64_t x = next();
    if (x >= limit) return x % n;
  }
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
  Rng r(seed ^ (i * 0xd1b54a32d192ed03ULL));
  return r.next();
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= max; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, cols);
  return out;
}

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  if (__builtin_add_overflow(a, b, &s)) throw ParameterError("instance too large to count");
  return s;
}

struct Box {
  std::vector<Partition> parts;
  std::vector<std::vector<int>> below;  // indices of partitions contained in parts[i]
};

const Box& box(int rows, int cols) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Box> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({rows, cols});
  if (fresh) {
    it->second.parts = partitions_in_box(rows, cols);
    const auto& ps = it->second.parts;
    it->second.below.resize(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (contains(ps[j], ps[i])) it->second.below[i].push_back(static_cast<int>(j));
      }
    }
  }
  return it->second;
}

// Shapes between inner and outer, indexed for the chain counts.
std::vector<Partition> between(const Partition& inner, const Partition& outer) {
  std::vector<Partition> out;
  int n = outer.length();
  std::vector<int> cur(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    int hi = outer.part(i + 1);
    if (i > 0) hi = std::min(hi, cur[i - 1]);
    for (int p = inner.part(i + 1); p <= hi; ++p) {
      cur[i] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

int boxes(const Partition& a, const Partition& b) {
  int n = 0;
  for (int i = 1; i <= b.length(); ++i) n += b.part(i) - a.part(i);
  return n;
}

bool strip_step(const Partition& a, const Partition& b, bool single) {
  if (!contains(a, b)) return false;
  return single ? covers(a, b) : is_horizontal_strip(a, b);
}

// counts[i][s] = number of chains from shape s at step i to outer at step k.
struct ChainCounts {
  std::vector<Partition> shapes;
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::vector<int>> next;  // shapes reachable from s in one step
};

ChainCounts chain_counts(const Partition& inner, const Partition& outer, int k, bool single) {
  if (!contains(inner, outer)) throw PreconditionError("inner shape is not contained in outer");
  ChainCounts cc;
  cc.shapes = between(inner, outer);
  std::size_t n = cc.shapes.size();
  std::vector<std::vector<int>> step(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (strip_step(cc.shapes[a], cc.shapes[b], single)) step[a].push_back(static_cast<int>(b));
    }
  }
  cc.counts.assign(k + 1, std::vector<std::uint64_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s) cc.counts[k][s] = cc.shapes[s] == outer;
  for (int i = k - 1; i >= 0; --i) {
    for (std::size_t s = 0; s < n; ++s) {
      std::uint64_t total = 0;
      for (int t : step[s]) total = add(total, cc.counts[i + 1][t]);
      cc.counts[i][s] = total;
    }
  }
  cc.next = std::move(step);
  return cc;
}

Tableau sample_chain(Rng& rng, const Partition& inner, const Partition& outer, int k, bool single) {
  auto cc = chain_counts(inner, outer, k, single);
  std::size_t s = 0;
  while (cc.shapes[s] != inner) ++s;
  if (cc.counts[0][s] == 0) throw PreconditionError("shape has no fillings with these entries");
  std::vector<Partition> chain{inner};
  for (int i = 1; i <= k; ++i) {
    std::uint64_t r = rng.below(cc.counts[i - 1][s]);
    for (int t : cc.next[s]) {
      std::uint64_t c = cc.counts[i][t];
      if (r < c) {
        s = static_cast<std::size_t>(t);
        break;
      }
      r -= c;
    }
    chain.push_back(cc.shapes[s]);
  }
  return Tableau(std::move(chain));
}

}  // namespace

std::vector<Partition> random_nested(Rng& rng, int m, int rows, int cols) {
  if (m < 1) throw ParameterError("need at least one partition");
  const Box& b = box(rows, cols);
  std::size_t n = b.parts.size();
  // ways[j][i]: chains of length j+1 ending at parts[i].
  std::vector<std::vector<std::uint64_t>> ways(m, std::vector<std::uint64_t>(n, 1));
  for (int j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t total = 0;
      for (int l : b.below[i]) total = add(total, ways[j - 1][l]);
      ways[j][i] = total;
    }
  }
  std::vector<Partition> out(m);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total = add(total, ways[m - 1][i]);
  std::uint64_t r = rng.below(total);
  std::size_t cur = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r < ways[m - 1][i]) {
      cur = i;
      break;
    }
    r -= ways[m - 1][i];
  }
  out[m - 1] = b.parts[cur];
  for (int j = m - 2; j >= 0; --j) {
    std::uint64_t t = 0;
    for (int l : b.below[cur]) t += ways[j][l];
    std::uint64_t x = rng.below(t);
    for (int l : b.below[cur]) {
      if (x < ways[j][l]) {
        cur = static_cast<std::size_t>(l);
        break;
      }
      x -= ways[j][l];
    }
    out[j] = b.parts[cur];
  }
  return out;
}

std::uint64_t count_tableaux(const Partition& inner, const Partition& outer, int k) {
  auto cc = chain_counts(inner, outer, k, false);
  for (std::size_t s = 0; s < cc.shapes.size(); ++s) {
    if (cc.shapes[s] == inner) return cc.counts[0][s];
  }
  return 0;
}

Tableau random_tableau(Rng& rng, const Partition& inner, const Partition& outer, int k) {
  return sample_chain(rng, inner, outer, k, false);
}

Tableau random_standard_tableau(Rng& rng, const Partition& inner, const Partition& outer) {
  return sample_chain(rng, inner, outer, boxes(inner, outer), true);
}

Tableau random_skew_tableau(Rng& rng, const RandomBounds& b) {
  while (true) {
    auto s = random_nested(rng, 2, b.max_rows, b.max_cols);
    if (boxes(s[0], s[1]) > b.max_boxes) continue;
    if (count_tableaux(s[0], s[1], b.max_entry) == 0) continue;
    return random_tableau(rng, s[0], s[1], b.max_entry);
  }
}

Tableau random_standard_skew_tableau(Rng& rng, const RandomBounds& b) {
  while (true) {
    auto s = random_nested(rng, 2, b.max_rows, b.max_cols);
    if (boxes(s[0], s[1]) > b.max_boxes) continue;
    return random_standard_tableau(rng, s[0], s[1]);
  }
}

Word random_word(Rng& rng, int length, int k) {
  Word w(length);
  for (int& x : w) x = rng.between(1, k);
  return w;
}

namespace {

// A uniform filling of outer/inner with a random alphabet, if one fits.
std::optional<Tableau> try_fill(Rng& rng, const Partition& inner, const Partition& outer,
                                const RandomBounds& b) {
  if (boxes(inner, outer) > b.max_boxes) return std::nullopt;
  int k = rng.between(1, b.max_entry);
  if (count_tableaux(inner, outer, k) == 0) return std::nullopt;
  return random_tableau(rng, inner, outer, k);
}

}  // namespace

std::pair<Tableau, Tableau> random_shared_inner_pair(Rng& rng, const RandomBounds& b) {
  while (true) {
    auto s = random_nested(rng, 2, b.max_rows, b.max_cols);
    auto t = random_nested(rng, 2, b.max_rows, b.max_cols);
    if (!contains(s[0], t[1])) continue;
    auto p = try_fill(rng, s[0], s[1], b);
    auto q = try_fill(rng, s[0], t[1], b);
    if (p && q) return {*p, *q};
  }
}

std::pair<Tableau, Tableau> random_extending_pair(Rng& rng, const RandomBounds& b) {
  while (true) {
    auto s = random_nested(rng, 3, b.max_rows, b.max_cols);
    auto p = try_fill(rng, s[0], s[1], b);
    auto q = try_fill(rng, s[1], s[2], b);
    if (p && q) return {*p, *q};
  }
}

HopscotchInstance random_hopscotch_instance(Rng& rng, const RandomBounds& b) {
  int m = b.max_rows;
  while (true) {
    auto s = random_nested(rng, 2, b.max_rows, b.max_cols);
    auto x = random_nested(rng, 1, b.max_rows, b.max_cols)[0];
    bool q_ext = rng.coin();
    // q = X^S extends p when X ends where p ends, and p extends q when X
    // starts where p starts.
    const Partition& xi = q_ext ? x : s[0];
    const Partition& xo = q_ext ? s[1] : x;
    if (!contains(xi, xo)) continue;
    auto p = try_fill(rng, s[0], s[1], b);
    auto big = try_fill(rng, xi, xo, b);
    if (!p || !big) continue;
    return {to_general(*p, m), normalize_stable(stable_complement(to_general(*big, m))),
            q_ext ? Extension::q_extends_p : Extension::p_extends_q};
  }
}

}  // namespace tableaux
