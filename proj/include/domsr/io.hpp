#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domsr/algebra.hpp"
#include "domsr/models.hpp"

namespace domsr::io {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

namespace detail {

struct Lines {
  struct Entry {
    int number;
    std::vector<std::string> tokens;
  };
  std::vector<Entry> entries;
  std::size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (!toks.empty()) entries.push_back({number, std::move(toks)});
    }
  }
  bool done() const { return pos >= entries.size(); }
  const Entry& peek() const { return entries[pos]; }
  const Entry& next() { return entries[pos++]; }
};

struct NameTable {
  std::map<std::string, int> index;
  int resolve(const std::string& name, int line) const {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line, "unknown element '" + name + "'");
    return it->second;
  }
};

}  // namespace detail

/// Parse one `algebra ... end` block starting at the current position.
inline FiniteAlgebra parse_algebra_block(detail::Lines& in) {
  using detail::NameTable;
  if (in.done()) throw ParseError(0, "empty input");
  auto head = in.next();
  if (head.tokens[0] != "algebra" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected 'algebra <name>'");
  FiniteAlgebra s;
  s.name = head.tokens[1];
  NameTable names;
  bool have_elements = false, have_zero = false, have_one = false, have_add = false,
       have_mul = false, ended = false;
  int k = 0;

  auto read_table = [&](int line) {
    std::vector<int> tbl;
    tbl.reserve((std::size_t)k * k);
    for (int row = 0; row < k; ++row) {
      if (in.done()) throw ParseError(line, "table truncated: expected " + std::to_string(k) + " rows");
      auto e = in.next();
      if ((int)e.tokens.size() != k)
        throw ParseError(e.number, "ragged row (expected " + std::to_string(k) + " entries, got " +
                                       std::to_string(e.tokens.size()) + ")");
      for (const auto& t : e.tokens) tbl.push_back(names.resolve(t, e.number));
    }
    return tbl;
  };
  auto read_vector = [&](const detail::Lines::Entry& e) {
    if ((int)e.tokens.size() != k + 1)
      throw ParseError(e.number, "expected " + std::to_string(k) + " names");
    std::vector<int> v;
    for (std::size_t i = 1; i < e.tokens.size(); ++i) v.push_back(names.resolve(e.tokens[i], e.number));
    return v;
  };
  auto once = [&](bool& flag, const detail::Lines::Entry& e) {
    if (flag) throw ParseError(e.number, "duplicate section '" + e.tokens[0] + "'");
    flag = true;
  };

  while (!in.done()) {
    auto e = in.next();
    const std::string& kw = e.tokens[0];
    if (kw == "end") {
      ended = true;
      break;
    }
    if (kw == "elements") {
      once(have_elements, e);
      if (e.tokens.size() < 2) throw ParseError(e.number, "empty element list");
      for (std::size_t i = 1; i < e.tokens.size(); ++i) {
        if (names.index.count(e.tokens[i]))
          throw ParseError(e.number, "duplicate element name '" + e.tokens[i] + "'");
        names.index[e.tokens[i]] = (int)(i - 1);
        s.elems.push_back(e.tokens[i]);
      }
      k = (int)s.elems.size();
      s.n = k;
    } else if (!have_elements) {
      throw ParseError(e.number, "'elements' must come before '" + kw + "'");
    } else if (kw == "zero") {
      once(have_zero, e);
      if (e.tokens.size() != 2) throw ParseError(e.number, "expected 'zero <name>'");
      s.zero = names.resolve(e.tokens[1], e.number);
    } else if (kw == "one") {
      once(have_one, e);
      if (e.tokens.size() != 2) throw ParseError(e.number, "expected 'one <name>'");
      s.one = names.resolve(e.tokens[1], e.number);
    } else if (kw == "add") {
      once(have_add, e);
      s.add = read_table(e.number);
    } else if (kw == "mul") {
      once(have_mul, e);
      s.mul = read_table(e.number);
    } else if (kw == "dom") {
      if (s.dom) throw ParseError(e.number, "duplicate section 'dom'");
      s.dom = read_vector(e);
    } else if (kw == "adom") {
      if (s.adom) throw ParseError(e.number, "duplicate section 'adom'");
      s.adom = read_vector(e);
    } else if (kw == "tests") {
      if (s.tests) throw ParseError(e.number, "duplicate section 'tests'");
      Subset t(k);
      for (std::size_t i = 1; i < e.tokens.size(); ++i) t.set(names.resolve(e.tokens[i], e.number));
      s.tests = t;
    } else if (kw == "compl") {
      if (s.cmpl) throw ParseError(e.number, "duplicate section 'compl'");
      std::vector<int> c(k, -1);
      for (std::size_t i = 1; i < e.tokens.size(); ++i) {
        auto colon = e.tokens[i].find(':');
        if (colon == std::string::npos)
          throw ParseError(e.number, "expected 'p:q' pair, got '" + e.tokens[i] + "'");
        int p = names.resolve(e.tokens[i].substr(0, colon), e.number);
        int q = names.resolve(e.tokens[i].substr(colon + 1), e.number);
        c[p] = q;
      }
      s.cmpl = std::move(c);
    } else {
      throw ParseError(e.number, "unknown section '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(head.number, "missing 'end'");
  if (!have_elements) throw ParseError(head.number, "missing section 'elements'");
  if (!have_zero) throw ParseError(head.number, "missing section 'zero'");
  if (!have_one) throw ParseError(head.number, "missing section 'one'");
  if (!have_add) throw ParseError(head.number, "missing section 'add'");
  if (!have_mul) throw ParseError(head.number, "missing section 'mul'");
  return s;
}

inline FiniteAlgebra parse_algebra_file(const std::string& text) {
  detail::Lines in(text);
  return parse_algebra_block(in);
}

/// All `algebra` blocks in the text (search output carries several).
inline std::vector<FiniteAlgebra> parse_algebra_stream(const std::string& text) {
  detail::Lines in(text);
  std::vector<FiniteAlgebra> out;
  while (!in.done()) out.push_back(parse_algebra_block(in));
  return out;
}

inline std::string render_algebra(const FiniteAlgebra& s) {
  std::ostringstream out;
  out << "algebra " << s.name << "\n";
  out << "elements";
  for (const auto& e : s.elems) out << " " << e;
  out << "\n";
  out << "zero " << s.ename(s.zero) << "\n";
  out << "one " << s.ename(s.one) << "\n";
  auto table = [&](const char* kw, const std::vector<int>& t) {
    out << kw << "\n";
    for (int x = 0; x < s.n; ++x) {
      for (int y = 0; y < s.n; ++y) out << (y ? " " : "") << s.ename(t[x * s.n + y]);
      out << "\n";
    }
  };
  table("add", s.add);
  table("mul", s.mul);
  auto vec = [&](const char* kw, const std::vector<int>& v) {
    out << kw;
    for (int x = 0; x < s.n; ++x) out << " " << s.ename(v[x]);
    out << "\n";
  };
  if (s.dom) vec("dom", *s.dom);
  if (s.adom) vec("adom", *s.adom);
  if (s.tests) {
    out << "tests";
    s.tests->for_each([&](int p) { out << " " << s.ename(p); });
    out << "\n";
  }
  if (s.cmpl) {
    out << "compl";
    for (int p = 0; p < s.n; ++p)
      if ((*s.cmpl)[p] >= 0) out << " " << s.ename(p) << ":" << s.ename((*s.cmpl)[p]);
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Graph files
// ---------------------------------------------------------------------------

inline models::Dag parse_graph_file(const std::string& text) {
  detail::Lines in(text);
  if (in.done()) throw ParseError(0, "empty input");
  auto head = in.next();
  if (head.tokens[0] != "graph" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected 'graph <name>'");
  models::Dag g;
  g.name = head.tokens[1];
  std::map<std::string, int> vidx;
  std::map<std::string, int> eidx;
  bool have_vertices = false, ended = false;
  while (!in.done()) {
    auto e = in.next();
    const std::string& kw = e.tokens[0];
    if (kw == "end") {
      ended = true;
      break;
    }
    if (kw == "vertices") {
      if (have_vertices) throw ParseError(e.number, "duplicate section 'vertices'");
      have_vertices = true;
      for (std::size_t i = 1; i < e.tokens.size(); ++i) {
        if (vidx.count(e.tokens[i]))
          throw ParseError(e.number, "duplicate vertex '" + e.tokens[i] + "'");
        vidx[e.tokens[i]] = (int)g.vertices.size();
        g.vertices.push_back(e.tokens[i]);
      }
    } else if (kw == "edge") {
      if (!have_vertices) throw ParseError(e.number, "'vertices' must come before 'edge'");
      if (e.tokens.size() != 4) throw ParseError(e.number, "expected 'edge <name> <src> <dst>'");
      if (eidx.count(e.tokens[1])) throw ParseError(e.number, "duplicate edge '" + e.tokens[1] + "'");
      auto vit = vidx.find(e.tokens[2]);
      if (vit == vidx.end()) throw ParseError(e.number, "unknown vertex '" + e.tokens[2] + "'");
      int src = vit->second;
      vit = vidx.find(e.tokens[3]);
      if (vit == vidx.end()) throw ParseError(e.number, "unknown vertex '" + e.tokens[3] + "'");
      eidx[e.tokens[1]] = (int)g.edges.size();
      g.edges.push_back({e.tokens[1], src, vit->second});
    } else {
      throw ParseError(e.number, "unknown section '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(head.number, "missing 'end'");
  if (!have_vertices) throw ParseError(head.number, "missing section 'vertices'");
  return g;
}

inline std::string render_graph(const models::Dag& g) {
  std::ostringstream out;
  out << "graph " << g.name << "\n";
  out << "vertices";
  for (const auto& v : g.vertices) out << " " << v;
  out << "\n";
  for (const auto& e : g.edges)
    out << "edge " << e.name << " " << g.vertices[e.src] << " " << g.vertices[e.dst] << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace domsr::io
