#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domsr/subset.hpp"

namespace domsr {

/// A finite algebra given by operation tables over the carrier {0..n-1}.
///
/// Only `add`, `mul`, `zero` and `one` are mandatory. The optional tables
/// carry a domain map, an antidomain map, a designated test algebra and a
/// complementation on it. Structures are immutable once validated; every
/// operation below is a pure function of its arguments.
struct FiniteAlgebra {
  std::string name;
  int n = 0;
  std::vector<std::string> elems;  // display names, size n
  std::vector<int> add;            // n*n, row-major
  std::vector<int> mul;            // n*n, row-major
  int zero = 0;
  int one = 0;
  std::optional<std::vector<int>> dom;
  std::optional<std::vector<int>> adom;
  std::optional<Subset> tests;
  std::optional<std::vector<int>> cmpl;  // complement on tests, -1 where undefined

  int sum(int x, int y) const { return add[x * n + y]; }
  int prod(int x, int y) const { return mul[x * n + y]; }

  // x <= y  iff  x + y = y
  bool leq(int x, int y) const { return sum(x, y) == y; }

  const std::string& ename(int x) const { return elems[x]; }
};

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

/// Structural well-formedness only; the dioid laws live in the law checker.
inline ValidationReport validate(const FiniteAlgebra& s) {
  ValidationReport r;
  auto err = [&](const std::string& m) { r.errors.push_back(m); };
  const int n = s.n;
  if (n <= 0) {
    err("empty carrier");
    return r;
  }
  if ((int)s.elems.size() != n) err("element name list does not match carrier size");
  auto check_table = [&](const std::vector<int>& t, const char* which) {
    if ((int)t.size() != n * n) {
      err(std::string("non-square table: ") + which);
      return;
    }
    for (int i = 0; i < n * n; ++i)
      if (t[i] < 0 || t[i] >= n) {
        err(std::string("out-of-range index in ") + which + " table at cell (" +
            std::to_string(i / n) + "," + std::to_string(i % n) + ")");
        return;
      }
  };
  check_table(s.add, "add");
  check_table(s.mul, "mul");
  if (s.zero < 0 || s.zero >= n) err("out-of-range index: zero");
  if (s.one < 0 || s.one >= n) err("out-of-range index: one");
  auto check_vec = [&](const std::vector<int>& v, const char* which) {
    if ((int)v.size() != n) {
      err(std::string(which) + " vector does not match carrier size");
      return;
    }
    for (int i = 0; i < n; ++i)
      if (v[i] < 0 || v[i] >= n) {
        err(std::string("out-of-range index in ") + which + " at " + std::to_string(i));
        return;
      }
  };
  if (s.dom) check_vec(*s.dom, "dom");
  if (s.adom) check_vec(*s.adom, "adom");
  if (s.tests && s.tests->size() != n) err("tests subset does not match carrier size");
  if (s.cmpl) {
    if ((int)s.cmpl->size() != n) {
      err("compl map does not match carrier size");
    } else if (!s.tests) {
      err("compl defined outside testset: no testset designated");
    } else {
      for (int p = 0; p < n; ++p) {
        int q = (*s.cmpl)[p];
        if (q == -1) continue;
        if (!s.tests->test(p) || q < 0 || q >= n || !s.tests->test(q)) {
          err("compl defined outside testset at " + s.elems[p]);
          break;
        }
        if ((*s.cmpl)[q] != p) {
          err("compl is not an involution at " + s.elems[p]);
          break;
        }
      }
      bool total = true;
      s.tests->for_each([&](int p) { total = total && (*s.cmpl)[p] != -1; });
      if (!total) err("compl is partial on testset");
    }
  }
  return r;
}

inline void require_valid(const FiniteAlgebra& s) {
  auto r = validate(s);
  if (!r.ok()) throw std::invalid_argument("invalid algebra '" + s.name + "': " + r.errors.front());
}

/// S1 = { x | x <= 1 }.
inline Subset subidentities(const FiniteAlgebra& s) {
  Subset r(s.n);
  for (int x = 0; x < s.n; ++x)
    if (s.leq(x, s.one)) r.set(x);
  return r;
}

/// { x | f(x) = x }.
inline Subset fixpoints(const FiniteAlgebra& s, const std::vector<int>& f) {
  if ((int)f.size() != s.n) throw std::invalid_argument("fixpoints: map does not match carrier size");
  Subset r(s.n);
  for (int x = 0; x < s.n; ++x)
    if (f[x] == x) r.set(x);
  return r;
}

/// f(S), the image of the carrier under f.
inline Subset map_image(const FiniteAlgebra& s, const std::vector<int>& f) {
  if ((int)f.size() != s.n) throw std::invalid_argument("map_image: map does not match carrier size");
  Subset r(s.n);
  for (int x = 0; x < s.n; ++x) r.set(f[x]);
  return r;
}

struct BoolAlgCheck {
  bool ok = true;
  std::string reason;  // first failing element/law
};

/// Is B a boolean subalgebra of S1, bounded by 0 and 1, with + as sup and
/// * as inf?  B not within S1 is a precondition violation, not a `false`.
inline BoolAlgCheck is_boolean_subalgebra(const FiniteAlgebra& s, const Subset& B) {
  if (!subidentities(s).contains(B))
    throw std::invalid_argument("is_boolean_subalgebra: B is not a set of subidentities");
  auto fail = [&](const std::string& why) { return BoolAlgCheck{false, why}; };
  if (!B.test(s.zero)) return fail("0 not in B");
  if (!B.test(s.one)) return fail("1 not in B");
  auto members = B.to_vector();
  // closure
  for (int p : members)
    for (int q : members) {
      if (!B.test(s.sum(p, q))) return fail("not closed under add at " + s.ename(p) + "+" + s.ename(q));
      if (!B.test(s.prod(p, q))) return fail("not closed under mul at " + s.ename(p) + "*" + s.ename(q));
    }
  // * must be the meet of the order restricted to B
  for (int p : members)
    for (int q : members) {
      int m = s.prod(p, q);
      if (s.prod(q, p) != m) return fail("mul not commutative at " + s.ename(p) + "*" + s.ename(q));
      if (!s.leq(m, p) || !s.leq(m, q))
        return fail("mul not a lower bound at " + s.ename(p) + "*" + s.ename(q));
      for (int r : members)
        if (s.leq(r, p) && s.leq(r, q) && !s.leq(r, m))
          return fail("mul not the meet at " + s.ename(p) + "*" + s.ename(q));
    }
  // distributivity
  for (int p : members)
    for (int q : members)
      for (int r : members)
        if (s.prod(p, s.sum(q, r)) != s.sum(s.prod(p, q), s.prod(p, r)))
          return fail("not distributive at " + s.ename(p) + "*(" + s.ename(q) + "+" + s.ename(r) + ")");
  // complements
  for (int p : members) {
    bool found = false;
    for (int q : members)
      if (s.sum(p, q) == s.one && s.prod(p, q) == s.zero && s.prod(q, p) == s.zero) {
        found = true;
        break;
      }
    if (!found) return fail("witness " + s.ename(p) + " uncomplemented");
  }
  return {};
}

/// All p in S1 with a q in S1 such that p+q = 1 and qp = 0.  Candidate for
/// the maximal boolean subalgebra bounded by 0 and 1.
inline Subset complemented_subidentities(const FiniteAlgebra& s) {
  Subset s1 = subidentities(s);
  Subset r(s.n);
  s1.for_each([&](int p) {
    for (int q = 0; q < s.n; ++q)
      if (s1.test(q) && s.sum(p, q) == s.one && s.prod(q, p) == s.zero) {
        r.set(p);
        return;
      }
  });
  return r;
}

/// Quantification domain for test variables: the designated testset when
/// present, else the complemented subidentities.
inline Subset default_tests(const FiniteAlgebra& s) {
  if (s.tests) return *s.tests;
  return complemented_subidentities(s);
}

/// "{0,a,1}" in index order.
inline std::string subset_names(const FiniteAlgebra& s, const Subset& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](int i) {
    if (!first) out += ",";
    out += s.ename(i);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace domsr
