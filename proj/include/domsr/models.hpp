#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domsr/algebra.hpp"
#include "domsr/lattice.hpp"

namespace domsr::models {

// ---------------------------------------------------------------------------
// Binary relations over an m-point universe.  Relations are m*m-bit masks
// (cell (i,j) is bit i*m+j) and the carrier index of a relation is its mask,
// so witnesses are reproducible.  add is union, mul relational composition,
// dom/ad the diagonal formulas.
// ---------------------------------------------------------------------------

inline FiniteAlgebra rel_algebra(int m) {
  if (m < 1 || m > 3) throw std::invalid_argument("rel_algebra: universe size must be 1..3");
  static const char* points = "abc";
  const int cells = m * m;
  const int n = 1 << cells;
  FiniteAlgebra s;
  s.name = "rel" + std::to_string(m);
  s.n = n;
  s.elems.resize(n);
  for (int r = 0; r < n; ++r) {
    std::string nm = "{";
    bool first = true;
    for (int c = 0; c < cells; ++c)
      if (r >> c & 1) {
        if (!first) nm += ",";
        nm += std::string("(") + points[c / m] + "," + points[c % m] + ")";
        first = false;
      }
    s.elems[r] = nm + "}";
  }
  s.zero = 0;
  int id = 0;
  for (int i = 0; i < m; ++i) id |= 1 << (i * m + i);
  s.one = id;
  s.add.resize((std::size_t)n * n);
  s.mul.resize((std::size_t)n * n);
  // row masks for composition: row i of R as an m-bit set
  auto row = [&](int r, int i) { return (r >> (i * m)) & ((1 << m) - 1); };
  for (int r = 0; r < n; ++r)
    for (int q = 0; q < n; ++q) {
      s.add[(std::size_t)r * n + q] = r | q;
      int comp = 0;
      for (int i = 0; i < m; ++i) {
        int out = 0;
        int mid = row(r, i);
        for (int j = 0; j < m; ++j)
          if (mid >> j & 1) out |= row(q, j);
        comp |= out << (i * m);
      }
      s.mul[(std::size_t)r * n + q] = comp;
    }
  std::vector<int> dom(n), adom(n);
  for (int r = 0; r < n; ++r) {
    int dmask = 0, amask = 0;
    for (int i = 0; i < m; ++i) {
      if (row(r, i)) dmask |= 1 << (i * m + i);
      else amask |= 1 << (i * m + i);
    }
    dom[r] = dmask;
    adom[r] = amask;
  }
  s.dom = std::move(dom);
  s.adom = std::move(adom);
  return s;
}

// ---------------------------------------------------------------------------
// Sets of paths over a finite DAG.  A path alternates vertices and edges;
// a single vertex is a path.  Path sets are bitmasks over the enumerated
// path list, ordered by edge count and then lexicographically, so carrier
// indices are again reproducible.  Composition glues on a shared endpoint.
// ---------------------------------------------------------------------------

struct Dag {
  std::string name;
  std::vector<std::string> vertices;
  struct Edge {
    std::string name;
    int src = 0;
    int dst = 0;
  };
  std::vector<Edge> edges;
};

namespace detail {

struct Path {
  std::vector<int> verts;
  std::vector<int> edges;
  int src() const { return verts.front(); }
  int dst() const { return verts.back(); }
};

inline bool dag_has_cycle(const Dag& g) {
  const int nv = (int)g.vertices.size();
  std::vector<int> state(nv, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::vector<int>> out(nv);
  for (const auto& e : g.edges) out[e.src].push_back(e.dst);
  // iterative DFS
  for (int root = 0; root < nv; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < out[v].size()) {
        int w = out[v][idx++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace detail

inline constexpr int kMaxPaths = 12;

inline FiniteAlgebra path_algebra(const Dag& g) {
  if (detail::dag_has_cycle(g)) throw std::invalid_argument("path_algebra: cyclic graph");
  using detail::Path;
  std::vector<Path> paths;
  for (int v = 0; v < (int)g.vertices.size(); ++v) paths.push_back({{v}, {}});
  std::size_t level_begin = 0;
  while (level_begin < paths.size()) {
    std::size_t level_end = paths.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      const Path base = paths[k];  // growing the vector invalidates references
      for (int e = 0; e < (int)g.edges.size(); ++e)
        if (g.edges[e].src == base.dst()) {
          Path p = base;
          p.edges.push_back(e);
          p.verts.push_back(g.edges[e].dst);
          paths.push_back(std::move(p));
          if ((int)paths.size() > kMaxPaths)
            throw std::invalid_argument("path_algebra: more than " + std::to_string(kMaxPaths) +
                                        " paths in '" + g.name + "'");
        }
    }
    level_begin = level_end;
  }
  const int np = (int)paths.size();
  const int n = 1 << np;

  auto path_name = [&](const Path& p) {
    std::string nm = "(" + g.vertices[p.verts[0]];
    for (std::size_t i = 0; i < p.edges.size(); ++i)
      nm += "," + g.edges[p.edges[i]].name + "," + g.vertices[p.verts[i + 1]];
    return nm + ")";
  };

  FiniteAlgebra s;
  s.name = g.name.empty() ? "paths" : "paths-" + g.name;
  s.n = n;
  s.elems.resize(n);
  for (int mask = 0; mask < n; ++mask) {
    std::string nm = "{";
    bool first = true;
    for (int i = 0; i < np; ++i)
      if (mask >> i & 1) {
        if (!first) nm += ",";
        nm += path_name(paths[i]);
        first = false;
      }
    s.elems[mask] = nm + "}";
  }
  s.zero = 0;
  int one = 0;
  for (int i = 0; i < np; ++i)
    if (paths[i].edges.empty()) one |= 1 << i;
  s.one = one;

  // glue[i][j]: index of paths[i];paths[j], or -1 when endpoints mismatch
  std::vector<int> glue((std::size_t)np * np, -1);
  auto find_path = [&](const Path& p) {
    for (int k = 0; k < np; ++k)
      if (paths[k].verts == p.verts && paths[k].edges == p.edges) return k;
    return -1;
  };
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (paths[i].dst() == paths[j].src()) {
        Path p = paths[i];
        p.edges.insert(p.edges.end(), paths[j].edges.begin(), paths[j].edges.end());
        p.verts.insert(p.verts.end(), paths[j].verts.begin() + 1, paths[j].verts.end());
        glue[(std::size_t)i * np + j] = find_path(p);
        if (glue[(std::size_t)i * np + j] < 0)
          throw std::logic_error("path_algebra: glued path not enumerated");
      }
  // comp_right[i][Q] = union over j in Q of glue(i,j)
  std::vector<int> comp_right((std::size_t)np * n, 0);
  for (int i = 0; i < np; ++i)
    for (int q = 0; q < n; ++q) {
      int acc = 0;
      for (int j = 0; j < np; ++j)
        if ((q >> j & 1) && glue[(std::size_t)i * np + j] >= 0)
          acc |= 1 << glue[(std::size_t)i * np + j];
      comp_right[(std::size_t)i * n + q] = acc;
    }
  s.add.resize((std::size_t)n * n);
  s.mul.resize((std::size_t)n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      s.add[(std::size_t)p * n + q] = p | q;
      int acc = 0;
      for (int i = 0; i < np; ++i)
        if (p >> i & 1) acc |= comp_right[(std::size_t)i * n + q];
      s.mul[(std::size_t)p * n + q] = acc;
    }
  std::vector<int> dom(n), adom(n);
  for (int p = 0; p < n; ++p) {
    int dmask = 0;
    for (int i = 0; i < np; ++i)
      if (p >> i & 1) dmask |= 1 << paths[i].src();  // vertex v is path index v
    dom[p] = dmask;
    adom[p] = one & ~dmask;
  }
  s.dom = std::move(dom);
  s.adom = std::move(adom);
  return s;
}

// ---------------------------------------------------------------------------
// Built-in structures
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"chain3-id", "chain3-d01", "nonlocal4",
                                                 "weakdom4", "rel2", "pathdag3"};
  return names;
}

inline Dag line3_dag() {
  Dag g;
  g.name = "line3";
  g.vertices = {"u", "v", "w"};
  g.edges = {{"e1", 0, 1}, {"e2", 1, 2}};
  return g;
}

namespace detail {

// chain 0 < a < 1: join is max, meet is min (indices 0,1,2 in chain order)
inline FiniteAlgebra chain3(const std::string& name) {
  FiniteAlgebra s;
  s.name = name;
  s.n = 3;
  s.elems = {"0", "a", "1"};
  s.zero = 0;
  s.one = 2;
  s.add.resize(9);
  s.mul.resize(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      s.add[x * 3 + y] = std::max(x, y);
      s.mul[x * 3 + y] = std::min(x, y);
    }
  return s;
}

// diamond 0 < a,1 < T with a and 1 incomparable; mul filled per caller
inline FiniteAlgebra diamond4(const std::string& name, const std::string& bottom) {
  FiniteAlgebra s;
  s.name = name;
  s.n = 4;
  s.elems = {bottom, "a", "1", "T"};
  s.zero = 0;
  s.one = 2;
  s.add.resize(16);
  auto join = [](int x, int y) {
    if (x == y) return x;
    if (x > y) std::swap(x, y);
    if (x == 0) return y;
    return 3;  // a+1, a+T, 1+T
  };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) s.add[x * 4 + y] = join(x, y);
  s.mul.assign(16, 0);
  for (int x = 0; x < 4; ++x) {
    s.mul[2 * 4 + x] = x;  // 1*x
    s.mul[x * 4 + 2] = x;  // x*1
    s.mul[0 * 4 + x] = 0;
    s.mul[x * 4 + 0] = 0;
  }
  return s;
}

}  // namespace detail

inline FiniteAlgebra builtin(std::string_view name) {
  if (name == "chain3-id") {
    auto s = detail::chain3("chain3-id");
    s.dom = std::vector<int>{0, 1, 2};
    return s;
  }
  if (name == "chain3-d01") {
    auto s = detail::chain3("chain3-d01");
    s.dom = std::vector<int>{0, 2, 2};
    s.adom = std::vector<int>{2, 0, 0};
    return s;
  }
  if (name == "nonlocal4") {
    auto s = detail::diamond4("nonlocal4", "0");
    s.mul[1 * 4 + 1] = 0;  // aa = 0
    s.mul[1 * 4 + 3] = 1;  // aT = a
    s.mul[3 * 4 + 1] = 1;  // Ta = a
    s.mul[3 * 4 + 3] = 3;  // TT = T
    s.dom = std::vector<int>{0, 2, 2, 2};
    return s;
  }
  if (name == "weakdom4") {
    auto s = detail::diamond4("weakdom4", "bot");
    s.mul[1 * 4 + 1] = 1;  // aa = a
    s.mul[1 * 4 + 3] = 1;  // aT = a
    s.mul[3 * 4 + 1] = 1;  // Ta = a
    s.mul[3 * 4 + 3] = 3;  // TT = T
    return s;
  }
  if (name == "rel2") {
    auto s = rel_algebra(2);
    s.name = "rel2";
    return s;
  }
  if (name == "pathdag3") {
    auto s = path_algebra(line3_dag());
    s.name = "pathdag3";
    return s;
  }
  std::string known;
  for (const auto& nm : builtin_names()) known += (known.empty() ? "" : ", ") + nm;
  throw std::invalid_argument("unknown builtin '" + std::string(name) + "' (known: " + known + ")");
}

// ---------------------------------------------------------------------------
// Candidate domain maps from the order structure.  Neither formula installs
// a certified dom; feed the result to the law checker.
// ---------------------------------------------------------------------------

/// x |-> 1 meet x*top, the relation-algebraic formula.
inline std::vector<int> dom_via_top(const FiniteAlgebra& s) {
  LatticeView lv = lattice_view(s);
  std::vector<int> d(s.n);
  for (int x = 0; x < s.n; ++x) d[x] = lv.inf(s.one, s.prod(x, lv.top));
  return d;
}

/// x |-> Inf { p complemented subidentity | x <= p*top }.
inline std::vector<int> dom_via_inf(const FiniteAlgebra& s) {
  LatticeView lv = lattice_view(s);
  Subset q1 = complemented_subidentities(s);
  std::vector<int> d(s.n);
  for (int x = 0; x < s.n; ++x) {
    int acc = lv.top;
    q1.for_each([&](int p) {
      if (s.leq(x, s.prod(p, lv.top))) acc = lv.inf(acc, p);
    });
    d[x] = acc;
  }
  return d;
}

}  // namespace domsr::models
