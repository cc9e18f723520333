#include "tableaux/dual.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include "tableaux/error.hpp"

namespace tableaux {

namespace {

using Parts = std::vector<int>;

Parts trimmed(Parts v, std::size_t n) {
  v.resize(n, 0);
  return v;
}

bool within(const RawChain& c, const Window& w) {
  for (const auto& s : c) {
    for (int x : s) {
      if (x < w.col_lo || x > w.col_hi) return false;
    }
  }
  return true;
}

std::optional<RawChain> slide_in_raw(const RawChain& c, int r) {
  std::size_t n = c[0].size();
  RawChain out(c.size());
  out[0] = c[0];
  out[0][r] -= 1;
  for (std::size_t j = 1; j < c.size(); ++j) {
    const Parts& d = c[j];
    out[j] = trimmed(rule_J_parts(out[j - 1], c[j - 1], d, d.empty() ? 0 : d[0]), n);
  }
  return out;
}

std::optional<RawChain> slide_out_raw(const RawChain& c, int r) {
  std::size_t n = c[0].size();
  RawChain out(c.size());
  out.back() = c.back();
  out.back()[r] += 1;
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    const Parts& d = out[i];
    out[i - 1] = trimmed(rule_J_parts(c[i - 1], c[i], d, d.empty() ? 0 : d[0]), n);
  }
  return out;
}

void enumerate_strips(const Parts& lo, const Parts& hi, Parts& cur, std::size_t i,
                      const std::function<void(const Parts&)>& emit) {
  if (i == lo.size()) {
    emit(cur);
    return;
  }
  for (int v = lo[i]; v <= hi[i]; ++v) {
    cur[i] = v;
    enumerate_strips(lo, hi, cur, i + 1, emit);
  }
}

}  // namespace

RawChain MoveSystem::embed(const Tableau& t) const {
  RawChain out;
  for (const auto& s : t.shapes()) {
    if (s.length() > window_.rows) throw PreconditionError("tableau taller than the window");
    out.push_back(s.padded(window_.rows));
  }
  return out;
}

std::vector<std::optional<RawChain>> MoveSystem::moves(const RawChain& c) const {
  std::vector<std::optional<RawChain>> out;
  const Parts& mu = c.front();
  const Parts& la = c.back();
  int m = static_cast<int>(mu.size());
  const Window& w = window_;
  if (family_ == MoveFamily::J) {
    for (int r = 0; r < m; ++r) {
      int below = r + 1 < m ? mu[r + 1] : 0;
      if (mu[r] > below) out.push_back(slide_in_raw(c, r));
    }
    for (int r = 0; r < m; ++r) {
      if ((r == 0 || la[r - 1] > la[r]) && la[r] + 1 <= w.col_hi) out.push_back(slide_out_raw(c, r));
    }
    return out;
  }
  std::size_t n = c.size() - 1;
  if (family_ == MoveFamily::C) {
    for (int r = 0; r < m; ++r) {
      if ((r > 0 && mu[r - 1] < mu[r] + 1) || mu[r] + 1 > w.col_hi) continue;
      RawChain t(n + 1);
      t[0] = mu;
      t[0][r] += 1;
      for (std::size_t j = 1; j <= n; ++j) t[j] = rule_C_parts(c[j - 1], c[j], t[j - 1]);
      if (within(t, w)) {
        out.push_back(std::move(t));
      } else {
        out.push_back(std::nullopt);
      }
    }
    for (int r = 0; r < m; ++r) {
      if ((r + 1 < m && la[r + 1] > la[r] - 1) || la[r] - 1 < w.col_lo) continue;
      RawChain t(n + 1);
      t[n] = la;
      t[n][r] -= 1;
      for (std::size_t j = n; j >= 1; --j) t[j - 1] = rule_C_reverse_parts(t[j], c[j - 1], c[j]);
      if (within(t, w)) {
        out.push_back(std::move(t));
      } else {
        out.push_back(std::nullopt);
      }
    }
    return out;
  }
  // H: companions on the inner side (p extends q), then the outer side.
  Parts lo(m), hi(m), cur(m);
  for (int j = 0; j < m; ++j) {
    lo[j] = mu[j];
    hi[j] = j == 0 ? w.col_hi : mu[j - 1];
  }
  enumerate_strips(lo, hi, cur, 0, [&](const Parts& q) {
    RawChain t(n + 1);
    t[0] = q;
    Parts a(m + 1), b(m + 1), d(m + 1);
    for (std::size_t i = 1; i <= n; ++i) {
      for (int j = 0; j < m; ++j) a[j] = t[i - 1][j];
      a[m] = -kInfinity;
      b[0] = d[0] = kInfinity;
      for (int j = 0; j < m; ++j) {
        b[j + 1] = c[i - 1][j];
        d[j + 1] = c[i][j];
      }
      Parts g = rule_H_parts(a, b, d);
      if (g[m] != -kInfinity) throw InternalError("hopscotch box left the finite rows");
      t[i].assign(g.begin(), g.begin() + m);
    }
    if (within(t, w)) {
      out.push_back(std::move(t));
    } else {
      out.push_back(std::nullopt);
    }
  });
  for (int j = 0; j < m; ++j) {
    lo[j] = j + 1 < m ? la[j + 1] : w.col_lo;
    hi[j] = la[j];
  }
  enumerate_strips(lo, hi, cur, 0, [&](const Parts& q) {
    RawChain t(n + 1);
    t[n] = q;
    Parts a(m + 1), b(m + 1), d(m + 1);
    for (std::size_t i = n; i >= 1; --i) {
      for (int j = 0; j < m; ++j) {
        a[j] = c[i - 1][j];
        b[j] = c[i][j];
        d[j + 1] = t[i][j];
      }
      a[m] = b[m] = -kInfinity;
      d[0] = kInfinity;
      Parts g = rule_H_reverse_parts(a, b, d);
      if (g[0] != kInfinity) throw InternalError("hopscotch box left the finite rows");
      t[i - 1].assign(g.begin() + 1, g.end());
    }
    if (within(t, w)) {
      out.push_back(std::move(t));
    } else {
      out.push_back(std::nullopt);
    }
  });
  return out;
}

std::vector<Partition> rectification_trace(const Tableau& t) {
  Tableau s = standard_renumbering(t);
  int n = max_length(s);
  RawChain c;
  for (const auto& p : s.shapes()) c.push_back(p.padded(n));
  std::vector<Partition> trace{Partition(c.back())};
  while (true) {
    int r = -1;
    for (int i = 0; i < n; ++i) {
      if (c[0][i] > (i + 1 < n ? c[0][i + 1] : 0)) r = i;
    }
    if (r < 0) break;
    c = *slide_in_raw(c, r);
    trace.emplace_back(c.back());
  }
  return trace;
}

namespace {

std::string key_of(const RawChain& c) {
  std::string k;
  for (const auto& s : c) {
    for (int x : s) k.push_back(static_cast<char>(x));
  }
  return k;
}

RawChain decode(const std::string& k, std::size_t rows) {
  RawChain c(k.size() / rows);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i].resize(rows);
    for (std::size_t j = 0; j < rows; ++j) c[i][j] = static_cast<signed char>(k[i * rows + j]);
  }
  return c;
}

std::string shape_key(const RawChain& c) { return key_of({c.front(), c.back()}); }

bool same_shape(const RawChain& a, const RawChain& b) {
  return a.front() == b.front() && a.back() == b.back();
}

bool pairwise_search(const MoveSystem& system, const RawChain& a, const RawChain& b, int depth) {
  if (!same_shape(a, b)) return false;
  std::set<std::pair<std::string, std::string>> seen;
  std::deque<std::tuple<RawChain, RawChain, int>> queue;
  seen.insert({key_of(a), key_of(b)});
  queue.emplace_back(a, b, 0);
  while (!queue.empty()) {
    auto [x, y, d] = std::move(queue.front());
    queue.pop_front();
    if (d >= depth) continue;
    auto mx = system.moves(x);
    auto my = system.moves(y);
    for (std::size_t i = 0; i < mx.size(); ++i) {
      if (mx[i].has_value() != my[i].has_value()) return false;
      if (!mx[i]) continue;
      if (!same_shape(*mx[i], *my[i])) return false;
      if (seen.insert({key_of(*mx[i]), key_of(*my[i])}).second) {
        queue.emplace_back(std::move(*mx[i]), std::move(*my[i]), d + 1);
      }
    }
  }
  return true;
}

int box_count(const Tableau& t) { return t.outer().size() - t.inner().size(); }

}  // namespace

bool dual_equivalent(const Tableau& a, const Tableau& b, std::optional<int> depth) {
  if (a.inner() != b.inner() || a.outer() != b.outer()) return false;
  return l_dual_equivalent(a, b, LocalRule{RuleKind::J, Direction::forward, std::nullopt}, depth);
}

bool l_dual_equivalent(const Tableau& p, const Tableau& p2, const LocalRule& rule,
                       std::optional<int> bound) {
  if (p.inner() != p2.inner() || p.outer() != p2.outer()) return false;
  Tableau a = standard_renumbering(p), b = standard_renumbering(p2);
  if (a == b) return true;
  int depth = bound.value_or(2 * box_count(a));
  int rows = max_length(a), cols = a.outer().part(1);
  MoveFamily family;
  Window w;
  switch (rule.kind) {
    case RuleKind::J:
      family = MoveFamily::J;
      w = {rows + 2, 0, cols + 2};
      break;
    case RuleKind::C:
      family = MoveFamily::C;
      w = {rows, -2, cols + 2};
      break;
    case RuleKind::H:
      family = MoveFamily::H;
      w = {rows, -2, cols + 2};
      break;
    default:
      throw ParameterError("dual equivalence moves are provided for J, C and H");
  }
  MoveSystem system(family, w);
  return pairwise_search(system, system.embed(a), system.embed(b), depth);
}

Refinement refine_dual_classes(const MoveSystem& system, const std::vector<RawChain>& seeds) {
  std::size_t rows = static_cast<std::size_t>(system.window().rows);
  std::unordered_map<std::string, int> index;
  std::vector<const std::string*> states;
  std::vector<int> succ;
  std::vector<std::size_t> succ_begin;
  auto intern = [&](const RawChain& c) {
    auto [it, fresh] = index.try_emplace(key_of(c), static_cast<int>(states.size()));
    if (fresh) states.push_back(&it->first);
    return it->second;
  };
  Refinement result;
  for (const auto& s : seeds) result.seed_class.push_back(intern(s));
  for (std::size_t i = 0; i < states.size(); ++i) {
    RawChain c = decode(*states[i], rows);
    succ_begin.push_back(succ.size());
    for (auto& m : system.moves(c)) succ.push_back(m ? intern(*m) : -1);
  }
  succ_begin.push_back(succ.size());
  result.states = states.size();

  std::vector<int> cls(states.size());
  {
    std::unordered_map<std::string, int> ids;
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto k = shape_key(decode(*states[i], rows));
      cls[i] = ids.try_emplace(k, static_cast<int>(ids.size())).first->second;
    }
  }
  std::size_t count = 0;
  while (true) {
    ++result.rounds;
    std::unordered_map<std::string, int> ids;
    std::vector<int> next(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      std::string sig(reinterpret_cast<const char*>(&cls[i]), sizeof(int));
      for (std::size_t e = succ_begin[i]; e < succ_begin[i + 1]; ++e) {
        int v = succ[e] < 0 ? -1 : cls[succ[e]];
        sig.append(reinterpret_cast<const char*>(&v), sizeof(int));
      }
      next[i] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    cls = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  for (int& s : result.seed_class) s = cls[s];
  return result;
}

std::vector<Tableau> standard_census(int rows, int cols, int n) {
  std::vector<Parts> partitions;
  Parts cur(rows, 0);
  std::function<void(int, int)> gen = [&](int r, int cap) {
    if (r == rows) {
      partitions.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[r] = v;
      gen(r + 1, v);
    }
  };
  gen(0, cols);
  std::vector<Tableau> out;
  for (const auto& mu : partitions) {
    for (const auto& la : partitions) {
      int diff = 0;
      bool inside = true;
      for (int r = 0; r < rows; ++r) {
        diff += la[r] - mu[r];
        inside = inside && mu[r] <= la[r];
      }
      if (!inside || diff != n) continue;
      std::vector<Parts> chain{mu};
      std::function<void()> grow = [&]() {
        Parts s = chain.back();
        if (s == la) {
          std::vector<Partition> shapes(chain.begin(), chain.end());
          out.emplace_back(std::move(shapes));
          return;
        }
        for (int r = 0; r < rows; ++r) {
          if (s[r] < la[r] && (r == 0 || s[r - 1] > s[r])) {
            Parts next = s;
            next[r] += 1;
            chain.push_back(next);
            grow();
            chain.pop_back();
          }
        }
      };
      grow();
    }
  }
  return out;
}

}  // namespace tableaux
