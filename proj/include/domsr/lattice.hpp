#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "domsr/algebra.hpp"

namespace domsr {

/// Order-theoretic view of a dioid: x <= y iff x+y = y.  Joins are `add`;
/// meets are derived as joins of common lower bounds, never read from input.
/// A finite join-semilattice with bottom always has a top (the join of the
/// whole carrier), so meets are total here.
struct LatticeView {
  int n = 0;
  const FiniteAlgebra* alg = nullptr;
  std::vector<Subset> below;  // below[x] = { z | z <= x }
  int top = 0;
  std::vector<int> inf_tbl;   // empty when derived on the fly

  bool leq(int x, int y) const { return below[y].test(x); }
  int sup(int x, int y) const { return alg->sum(x, y); }

  int inf(int x, int y) const {
    if (!inf_tbl.empty()) return inf_tbl[x * n + y];
    return meet_of(below[x] & below[y]);
  }

  // Join over a set of common lower bounds; stays inside the set's cone.
  int meet_of(const Subset& lower) const {
    int acc = alg->zero;
    lower.for_each([&](int z) { acc = alg->sum(acc, z); });
    return acc;
  }
};

namespace detail {

inline void check_semilattice(const FiniteAlgebra& s) {
  const int n = s.n;
  auto refuse = [&](const char* what) {
    throw std::invalid_argument("lattice_view: add is not idempotent-commutative-associative (" +
                                std::string(what) + ") in '" + s.name + "'");
  };
  for (int x = 0; x < n; ++x)
    if (s.sum(x, x) != x) refuse("idempotence");
  for (int x = 0; x < n; ++x) {
    if (s.sum(s.zero, x) != x || s.sum(x, s.zero) != x) refuse("unit");
    for (int y = 0; y < n; ++y)
      if (s.sum(x, y) != s.sum(y, x)) refuse("commutativity");
  }
  // Exhaustive associativity up to ~16M triples, sampled beyond.
  std::int64_t triples = (std::int64_t)n * n * n;
  if (triples <= (1 << 24)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (s.sum(s.sum(x, y), z) != s.sum(x, s.sum(y, z))) refuse("associativity");
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int k = 0; k < 100000; ++k) {
      int x = d(rng), y = d(rng), z = d(rng);
      if (s.sum(s.sum(x, y), z) != s.sum(x, s.sum(y, z))) refuse("associativity");
    }
  }
}

}  // namespace detail

/// Derive the order view.  Refuses structures whose add is not a semilattice
/// with unit zero.  The returned view borrows `s`; keep the algebra alive.
inline LatticeView lattice_view(const FiniteAlgebra& s) {
  detail::check_semilattice(s);
  LatticeView v;
  v.n = s.n;
  v.alg = &s;
  v.below.assign(s.n, Subset(s.n));
  int t = s.zero;
  for (int x = 0; x < s.n; ++x) t = s.sum(t, x);
  v.top = t;
  for (int y = 0; y < s.n; ++y)
    for (int x = 0; x < s.n; ++x)
      if (s.leq(x, y)) v.below[y].set(x);
  if (s.n <= 2048) {
    v.inf_tbl.resize((std::size_t)s.n * s.n);
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y <= x; ++y) {
        int m = v.meet_of(v.below[x] & v.below[y]);
        v.inf_tbl[x * s.n + y] = m;
        v.inf_tbl[y * s.n + x] = m;
      }
  }
  return v;
}

}  // namespace domsr
