#include "tableaux/text.hpp"

#include <charconv>
#include <sstream>

#include "tableaux/error.hpp"

namespace tableaux {

namespace {

struct RawShape {
  std::vector<int> parts;  // may hold +-kInfinity from bracket tokens
  std::size_t pos = 0;
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw ParseError("at offset " + std::to_string(pos) + ": " + what);
}

bool is_sep(char c) { return c == ',' || c == '>' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

int parse_int(std::string_view tok, std::size_t pos) {
  if (tok == "inf" || tok == "+inf") return kInfinity;
  if (tok == "-inf") return -kInfinity;
  int v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    fail(pos, "bad token '" + std::string(tok) + "'");
  }
  if (v >= kInfinity || v <= -kInfinity) fail(pos, "part out of range");
  return v;
}

std::vector<RawShape> split_shapes(std::string_view s) {
  std::vector<RawShape> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_sep(s[i])) {
      ++i;
      continue;
    }
    RawShape shape;
    shape.pos = i;
    if (s[i] == '[') {
      std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) fail(i, "unclosed '['");
      std::string_view body = s.substr(i + 1, close - i - 1);
      std::size_t j = 0;
      while (j <= body.size()) {
        std::size_t comma = body.find(',', j);
        if (comma == std::string_view::npos) comma = body.size();
        std::string_view tok = body.substr(j, comma - j);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty()) {
          shape.parts.push_back(parse_int(tok, i + 1 + j));
        } else if (comma < body.size()) {
          fail(i + 1 + j, "empty token");
        }
        j = comma + 1;
      }
      i = close + 1;
    } else {
      while (i < s.size() && !is_sep(s[i])) {
        if (s[i] < '0' || s[i] > '9') fail(i, std::string("unexpected character '") + s[i] + "'");
        shape.parts.push_back(s[i] - '0');
        ++i;
      }
    }
    out.push_back(std::move(shape));
  }
  if (out.empty()) fail(0, "no shapes");
  return out;
}

template <class S, class Make>
BasicTableau<S> build(const std::vector<RawShape>& raw, Make make) {
  std::vector<S> shapes;
  for (const auto& r : raw) {
    try {
      shapes.push_back(make(r.parts));
    } catch (const InvalidShape& e) {
      fail(r.pos, e.what());
    }
  }
  try {
    return BasicTableau<S>(std::move(shapes));
  } catch (const InvalidTableau& e) {
    throw ParseError(std::string("not a tableau: ") + e.what());
  } catch (const InvalidShape& e) {
    throw ParseError(std::string("not a tableau: ") + e.what());
  }
}

void require_finite(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p == kInfinity || p == -kInfinity) throw InvalidShape("infinite part in a finite shape");
  }
}

std::string digits_or_brackets(const std::vector<int>& parts, int inf_count) {
  bool compact = inf_count == 0 && !parts.empty();
  for (int p : parts) compact = compact && p >= 0 && p <= 9;
  std::string out;
  if (compact) {
    for (int p : parts) out += static_cast<char>('0' + p);
    return out;
  }
  out = "[";
  for (int i = 0; i < inf_count; ++i) out += (i ? ",inf" : "inf");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (inf_count > 0 || i > 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

}  // namespace

Tableau parse_chain(std::string_view text) {
  return build<Partition>(split_shapes(text), [](const std::vector<int>& p) {
    require_finite(p);
    return Partition(p);
  });
}

GeneralTableau parse_general_chain(std::string_view text, int length) {
  auto raw = split_shapes(text);
  std::size_t n = static_cast<std::size_t>(std::max(length, 0));
  for (const auto& r : raw) n = std::max(n, r.parts.size());
  return build<GeneralShape>(raw, [n](std::vector<int> p) {
    require_finite(p);
    p.resize(n, 0);
    return GeneralShape(std::move(p));
  });
}

StableTableau parse_stable_chain(std::string_view text) {
  return build<StableShape>(split_shapes(text),
                            [](const std::vector<int>& p) { return StableShape::from_rows(p); });
}

std::string render_shape(const Partition& p) { return to_string(p); }

std::string render_shape(const GeneralShape& g) { return digits_or_brackets(g.parts(), 0); }

std::string render_shape(const StableShape& s) {
  return digits_or_brackets(s.finite(), s.inf_count());
}

template <class S>
std::string render_chain(const BasicTableau<S>& t, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < t.shapes().size(); ++i) {
    if (i) out += sep;
    out += render_shape(t[i]);
  }
  return out;
}

template std::string render_chain(const Tableau&, std::string_view);
template std::string render_chain(const GeneralTableau&, std::string_view);
template std::string render_chain(const StableTableau&, std::string_view);

Filling parse_grid(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) lines.push_back(line);
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos) {
    lines.pop_back();
  }
  std::vector<int> inner;
  std::map<Cell, int> entries;
  std::set<Cell> stars;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    int row = static_cast<int>(r) + 1;
    std::istringstream ls(lines[r]);
    std::string tok;
    int col = 1;
    int border = 0;
    bool first = true;
    bool content = false;
    while (ls >> tok) {
      auto where = [&] { return "row " + std::to_string(row) + ", column " + std::to_string(col); };
      if (first && tok[0] == '@') {
        std::string_view v(tok);
        v.remove_prefix(1);
        int c = 0;
        auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), c);
        if (ec != std::errc() || end != v.data() + v.size()) {
          throw ParseError("bad column offset '" + tok + "' in row " + std::to_string(row));
        }
        col = c;
        border = c - 1;
      } else if (tok == ".") {
        if (content) throw ParseError("inner cell after an entry at " + where());
        border = col++;
      } else if (tok == "*") {
        stars.insert({row, col++});
        content = true;
      } else {
        int v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size() || v < 1) {
          throw ParseError("bad entry '" + tok + "' at " + where());
        }
        auto left = entries.find({row, col - 1});
        if (left != entries.end() && left->second > v) {
          throw ParseError("row decreasing at " + where());
        }
        entries[{row, col++}] = v;
        content = true;
      }
      first = false;
    }
    inner.push_back(border);
  }
  for (const auto& [c, v] : entries) {
    auto above = entries.find({c.row - 1, c.col});
    if (above != entries.end() && above->second >= v) {
      throw ParseError("column not strictly increasing at row " + std::to_string(c.row) +
                       ", column " + std::to_string(c.col));
    }
  }
  try {
    return Filling(std::move(inner), std::move(entries), std::move(stars));
  } catch (const InvalidTableau& e) {
    throw ParseError(e.what());
  }
}

std::string render_grid(const Filling& f) {
  std::string out;
  for (int r = 1; r <= f.rows(); ++r) {
    std::vector<std::string> toks;
    int b = f.inner_part(r);
    if (b >= 0) {
      toks.assign(b, ".");
    } else {
      toks.push_back("@" + std::to_string(b + 1));
    }
    for (int c = b + 1;; ++c) {
      if (auto v = f.at({r, c})) {
        toks.push_back(std::to_string(*v));
      } else if (f.stars().count({r, c})) {
        toks.push_back("*");
      } else {
        break;
      }
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i) out += ' ';
      out += toks[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace tableaux
