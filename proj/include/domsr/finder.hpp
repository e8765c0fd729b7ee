#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domsr/algebra.hpp"
#include "domsr/laws.hpp"

namespace domsr::finder {

// ---------------------------------------------------------------------------
// Canonical forms under relabeling.  Zero maps to index 0 and one to index 1
// (when distinct); the residual permutations are searched exhaustively.
// ---------------------------------------------------------------------------

inline std::vector<int> canonical_form(const FiniteAlgebra& s, bool include_dom = true) {
  const int n = s.n;
  std::vector<int> fixed_sources;
  fixed_sources.push_back(s.zero);
  if (s.one != s.zero) fixed_sources.push_back(s.one);
  std::vector<int> rest;
  for (int x = 0; x < n; ++x)
    if (x != s.zero && x != s.one) rest.push_back(x);

  std::vector<int> best;
  std::vector<int> inv(n), pos(n), flat;
  flat.reserve(2 * n * n + n);
  std::sort(rest.begin(), rest.end());
  do {
    for (std::size_t i = 0; i < fixed_sources.size(); ++i) inv[i] = fixed_sources[i];
    for (std::size_t i = 0; i < rest.size(); ++i) inv[fixed_sources.size() + i] = rest[i];
    for (int t = 0; t < n; ++t) pos[inv[t]] = t;
    flat.clear();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) flat.push_back(pos[s.sum(inv[x], inv[y])]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) flat.push_back(pos[s.prod(inv[x], inv[y])]);
    if (include_dom && s.dom)
      for (int x = 0; x < n; ++x) flat.push_back(pos[(*s.dom)[inv[x]]]);
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Dioid enumeration: every idempotent semiring on {0..n-1} with zero = 0 and
// one = 1.  Join-semilattice add tables are enumerated first (lexicographic
// in the free upper-triangle cells), then mul tables with the unit and
// annihilator rows fixed, backtracking on associativity, distributivity and
// monotonicity at the earliest undetermined cell.
// ---------------------------------------------------------------------------

namespace detail {

struct Enumerator {
  int n;
  bool iso_reject;
  const std::function<bool(const FiniteAlgebra&)>& yield;
  std::vector<int> add, mul;  // -1 undefined
  std::vector<std::pair<int, int>> add_cells, mul_cells;
  bool stopped = false;

  Enumerator(int n_, bool iso, const std::function<bool(const FiniteAlgebra&)>& y)
      : n(n_), iso_reject(iso), yield(y) {}

  int at(const std::vector<int>& t, int x, int y) const { return t[x * n + y]; }

  bool add_partial_ok() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = at(add, x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n; ++z) {
          int yz = at(add, y, z);
          if (yz < 0) continue;
          int l = at(add, xy, z), r = at(add, x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool leq(int x, int y) const { return at(add, x, y) == y; }

  bool mul_partial_ok() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = at(mul, x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n; ++z) {
          // associativity
          int yz = at(mul, y, z);
          if (yz >= 0) {
            int l = at(mul, xy, z), r = at(mul, x, yz);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
          // left distributivity: x(y+z) = xy+xz
          int xz = at(mul, x, z);
          if (xz >= 0) {
            int l = at(mul, x, at(add, y, z));
            if (l >= 0 && l != at(add, xy, xz)) return false;
          }
          // right distributivity: (x+y)z = xz+yz
          int yzr = at(mul, y, z);
          int xzr = at(mul, x, z);
          if (xzr >= 0 && yzr >= 0) {
            int l = at(mul, at(add, x, y), z);
            if (l >= 0 && l != at(add, xzr, yzr)) return false;
          }
          // monotonicity in both arguments
          if (leq(y, z)) {
            int a = at(mul, x, y), b = at(mul, x, z);
            if (a >= 0 && b >= 0 && !leq(a, b)) return false;
            a = at(mul, y, x), b = at(mul, z, x);
            if (a >= 0 && b >= 0 && !leq(a, b)) return false;
          }
        }
      }
    return true;
  }

  void emit() {
    FiniteAlgebra s;
    s.n = n;
    s.name = "enum" + std::to_string(n);
    s.elems.resize(n);
    s.elems[0] = "0";
    if (n > 1) s.elems[1] = "1";
    for (int i = 2; i < n; ++i) s.elems[i] = "e" + std::to_string(i);
    s.zero = 0;
    s.one = n > 1 ? 1 : 0;
    s.add = add;
    s.mul = mul;
    if (iso_reject) {
      std::vector<int> self;
      self.reserve(2 * (std::size_t)n * n);
      self.insert(self.end(), add.begin(), add.end());
      self.insert(self.end(), mul.begin(), mul.end());
      if (canonical_form(s, false) != self) return;
    }
    if (!yield(s)) stopped = true;
  }

  void fill_mul(std::size_t k) {
    if (stopped) return;
    if (k == mul_cells.size()) {
      emit();
      return;
    }
    auto [i, j] = mul_cells[k];
    for (int v = 0; v < n && !stopped; ++v) {
      mul[i * n + j] = v;
      if (mul_partial_ok()) fill_mul(k + 1);
    }
    mul[i * n + j] = -1;
  }

  void start_mul() {
    mul.assign((std::size_t)n * n, -1);
    for (int x = 0; x < n; ++x) {
      mul[0 * n + x] = 0;
      mul[x * n + 0] = 0;
      mul[1 * n + x] = x;
      mul[x * n + 1] = x;
    }
    mul_cells.clear();
    for (int i = 2; i < n; ++i)
      for (int j = 2; j < n; ++j) mul_cells.push_back({i, j});
    fill_mul(0);
  }

  void fill_add(std::size_t k) {
    if (stopped) return;
    if (k == add_cells.size()) {
      start_mul();
      return;
    }
    auto [i, j] = add_cells[k];
    for (int v = 0; v < n && !stopped; ++v) {
      add[i * n + j] = v;
      add[j * n + i] = v;
      if (add_partial_ok()) fill_add(k + 1);
    }
    add[i * n + j] = -1;
    add[j * n + i] = -1;
  }

  void run() {
    add.assign((std::size_t)n * n, -1);
    for (int x = 0; x < n; ++x) {
      add[0 * n + x] = x;
      add[x * n + 0] = x;
      add[x * n + x] = x;
    }
    add_cells.clear();
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) add_cells.push_back({i, j});
    fill_add(0);
  }
};

}  // namespace detail

/// Stream every dioid on {0..n-1} with zero = 0 and one = 1; the callback
/// returns false to stop.  Deterministic order.
inline void enumerate_dioids(int n, const std::function<bool(const FiniteAlgebra&)>& yield,
                             bool iso_reject = false) {
  if (n < 1 || n > 6) throw std::invalid_argument("enumerate_dioids: size must be 1..6");
  if (n == 1) {
    FiniteAlgebra s;
    s.n = 1;
    s.name = "enum1";
    s.elems = {"0"};
    s.zero = s.one = 0;
    s.add = {0};
    s.mul = {0};
    yield(s);
    return;
  }
  detail::Enumerator e{n, iso_reject, yield};
  e.run();
}

// ---------------------------------------------------------------------------
// Domain / antidomain map enumeration by brute force over the n^n candidates
// with pointwise pruning.
// ---------------------------------------------------------------------------

enum class MapLawSet { predomain, domain_semiring, antidomain };

inline std::vector<std::vector<int>> enumerate_domain_maps(const FiniteAlgebra& s, MapLawSet set,
                                                           const laws::CheckOptions& opt = {}) {
  const int n = s.n;
  Subset tests = default_tests(s);
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x)
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      switch (set) {
        case MapLawSet::predomain:
          ok = tests.test(v) && s.leq(x, s.prod(v, x));
          break;
        case MapLawSet::domain_semiring:
          ok = s.leq(v, s.one) && s.leq(x, s.prod(v, x));
          if (x == s.zero) ok = ok && v == s.zero;
          if (x == s.one) ok = ok && v == s.one;
          break;
        case MapLawSet::antidomain:
          ok = s.prod(v, x) == s.zero;
          break;
      }
      if (ok) cand[x].push_back(v);
    }

  std::vector<laws::LawId> final_laws;
  switch (set) {
    case MapLawSet::predomain:
      final_laws = {laws::LawId::predomain_1, laws::LawId::predomain_2};
      break;
    case MapLawSet::domain_semiring:
      final_laws = laws::expand_law_name("domain-semiring");
      break;
    case MapLawSet::antidomain:
      final_laws = laws::expand_law_name("antidomain");
      break;
  }

  std::vector<std::vector<int>> found;
  std::vector<int> idx(n, 0), f(n);
  for (int x = 0; x < n; ++x)
    if (cand[x].empty()) return found;
  FiniteAlgebra probe = s;
  for (;;) {
    for (int x = 0; x < n; ++x) f[x] = cand[x][idx[x]];
    if (set == MapLawSet::antidomain) probe.adom = f;
    else probe.dom = f;
    if (laws::check(probe, final_laws, opt).all_pass()) found.push_back(f);
    int x = n - 1;
    while (x >= 0 && ++idx[x] == (int)cand[x].size()) idx[x--] = 0;
    if (x < 0) break;
  }
  return found;
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

struct SearchQuery {
  std::vector<laws::LawId> satisfy;
  std::vector<laws::LawId> violate;
  int max_size = 4;
  bool iso_reject = false;
  int limit = 1;
};

struct SearchStats {
  long long dioids = 0;      // dioids streamed
  long long pruned = 0;      // dioids rejected by structural satisfy-laws
  long long candidates = 0;  // candidate models (dioid x maps) generated
  long long checked = 0;     // candidate models fully law-checked
};

struct FoundModel {
  FiniteAlgebra model;
  std::string violated;  // first failed violate-law with its witness
};

struct SearchResult {
  std::vector<FoundModel> models;
  bool exhausted = false;  // search space fully covered, limit not reached
  SearchStats stats;
};

namespace detail {

inline bool needs_dom(const std::vector<laws::LawId>& ids) {
  return std::any_of(ids.begin(), ids.end(),
                     [](laws::LawId id) { return laws::law_info(id).needs_dom; });
}
inline bool needs_adom(const std::vector<laws::LawId>& ids) {
  return std::any_of(ids.begin(), ids.end(),
                     [](laws::LawId id) { return laws::law_info(id).needs_adom; });
}

// Pointwise constraints implied by the satisfy-set, used to shrink the n^n
// candidate spaces.  Only satisfy-laws may prune; violate-laws never do.
inline std::vector<std::vector<int>> dom_candidates(const FiniteAlgebra& s,
                                                    const std::vector<laws::LawId>& satisfy) {
  using laws::LawId;
  auto has = [&](LawId id) { return std::find(satisfy.begin(), satisfy.end(), id) != satisfy.end(); };
  bool want_d1 = has(LawId::d1) || has(LawId::predomain_1) || has(LawId::tdd);
  bool want_sub1 = has(LawId::d3) || has(LawId::predomain_2);
  bool want_d0 = has(LawId::d4) || has(LawId::predomain_2) || has(LawId::lla) || has(LawId::tdd);
  bool want_tests = has(LawId::tdd);
  bool want_lla = has(LawId::lla);
  bool want_adj = has(LawId::d_adj);
  Subset tests = want_tests || want_lla || want_adj ? default_tests(s) : Subset(s.n);
  int top = s.zero;
  for (int x = 0; x < s.n; ++x) top = s.sum(top, x);

  std::vector<std::vector<int>> cand(s.n);
  for (int x = 0; x < s.n; ++x)
    for (int v = 0; v < s.n; ++v) {
      if (want_d1 && !s.leq(x, s.prod(v, x))) continue;
      if (want_sub1 && !s.leq(v, s.one)) continue;
      if (want_d0 && x == s.zero && v != s.zero) continue;
      if (want_tests && !tests.test(v)) continue;
      if (want_lla) {
        bool ok = true;
        tests.for_each([&](int p) {
          if (s.leq(v, p) != s.leq(x, s.prod(p, x))) ok = false;
        });
        if (!ok) continue;
      }
      if (want_adj) {
        bool ok = true;
        tests.for_each([&](int p) {
          if (s.leq(v, p) != s.leq(x, s.prod(p, top))) ok = false;
        });
        if (!ok) continue;
      }
      cand[x].push_back(v);
    }
  return cand;
}

inline std::vector<std::vector<int>> adom_candidates(const FiniteAlgebra& s,
                                                     const std::vector<laws::LawId>& satisfy) {
  using laws::LawId;
  auto has = [&](LawId id) { return std::find(satisfy.begin(), satisfy.end(), id) != satisfy.end(); };
  bool want_a1 = has(LawId::a1);
  std::vector<std::vector<int>> cand(s.n);
  for (int x = 0; x < s.n; ++x)
    for (int v = 0; v < s.n; ++v) {
      if (want_a1 && s.prod(v, x) != s.zero) continue;
      cand[x].push_back(v);
    }
  return cand;
}

template <class Fn>
bool for_each_map(const std::vector<std::vector<int>>& cand, Fn&& fn) {
  const int n = (int)cand.size();
  for (int x = 0; x < n; ++x)
    if (cand[x].empty()) return true;
  std::vector<int> idx(n, 0), f(n);
  for (;;) {
    for (int x = 0; x < n; ++x) f[x] = cand[x][idx[x]];
    if (!fn(f)) return false;
    int x = n - 1;
    while (x >= 0 && ++idx[x] == (int)cand[x].size()) idx[x--] = 0;
    if (x < 0) return true;
  }
}

}  // namespace detail

inline SearchResult search(const SearchQuery& q, const laws::CheckOptions& opt = {}) {
  for (auto id : q.satisfy)
    if (std::find(q.violate.begin(), q.violate.end(), id) != q.violate.end())
      throw std::invalid_argument(std::string("contradictory query: '") + laws::law_name(id) +
                                  "' both satisfied and violated");
  if (q.max_size < 1 || q.max_size > 6)
    throw std::invalid_argument("search: max size must be 1..6");
  if (q.limit < 1) throw std::invalid_argument("search: limit must be positive");

  std::vector<laws::LawId> sat_struct, sat_map, vio_struct, vio_map;
  for (auto id : q.satisfy) {
    const auto& i = laws::law_info(id);
    (i.needs_dom || i.needs_adom ? sat_map : sat_struct).push_back(id);
  }
  for (auto id : q.violate) {
    const auto& i = laws::law_info(id);
    (i.needs_dom || i.needs_adom ? vio_map : vio_struct).push_back(id);
  }
  bool need_dom = detail::needs_dom(q.satisfy) || detail::needs_dom(q.violate);
  bool need_adom = detail::needs_adom(q.satisfy) || detail::needs_adom(q.violate);

  SearchResult res;
  for (int n = 1; n <= q.max_size; ++n) {
    bool keep_going = true;
    enumerate_dioids(
        n,
        [&](const FiniteAlgebra& dioid) {
          res.stats.dioids++;
          if (!sat_struct.empty() && !laws::check(dioid, sat_struct, opt).all_pass()) {
            res.stats.pruned++;
            return true;
          }
          std::string struct_violation;
          if (!vio_struct.empty()) {
            auto rep = laws::check(dioid, vio_struct, opt);
            for (const auto& r : rep.results)
              if (r.status == laws::LawStatus::fail) {
                struct_violation = std::string(laws::law_name(r.id)) +
                                   (r.detail.empty() ? "" : " (" + r.detail + ")");
                break;
              }
          }

          auto consider = [&](FiniteAlgebra model) -> bool {
            res.stats.checked++;
            if (!sat_map.empty() && !laws::check(model, sat_map, opt).all_pass()) return true;
            std::string violation = struct_violation;
            if (violation.empty() && !vio_map.empty()) {
              auto rep = laws::check(model, vio_map, opt);
              for (const auto& r : rep.results)
                if (r.status == laws::LawStatus::fail) {
                  std::string wit;
                  for (const auto& b : r.witness)
                    wit += (wit.empty() ? "" : " ") + b.var + "=" + model.ename(b.elem);
                  violation = std::string(laws::law_name(r.id)) +
                              (wit.empty() ? "" : " (witness " + wit + ")");
                  break;
                }
            }
            if (!q.violate.empty() && violation.empty()) return true;
            model.name = "model-" + std::to_string(res.models.size() + 1);
            res.models.push_back({std::move(model), violation});
            if ((int)res.models.size() >= q.limit) {
              keep_going = false;
              return false;
            }
            return true;
          };

          if (!need_dom && !need_adom) {
            FiniteAlgebra model = dioid;
            res.stats.candidates++;
            return consider(std::move(model));
          }
          auto dom_cand = need_dom ? detail::dom_candidates(dioid, q.satisfy)
                                   : std::vector<std::vector<int>>{};
          auto adom_cand = need_adom ? detail::adom_candidates(dioid, q.satisfy)
                                     : std::vector<std::vector<int>>{};
          bool cont = true;
          if (need_dom && need_adom) {
            cont = detail::for_each_map(dom_cand, [&](const std::vector<int>& d) {
              return detail::for_each_map(adom_cand, [&](const std::vector<int>& a) {
                FiniteAlgebra model = dioid;
                model.dom = d;
                model.adom = a;
                res.stats.candidates++;
                return consider(std::move(model));
              });
            });
          } else if (need_dom) {
            cont = detail::for_each_map(dom_cand, [&](const std::vector<int>& d) {
              FiniteAlgebra model = dioid;
              model.dom = d;
              res.stats.candidates++;
              return consider(std::move(model));
            });
          } else {
            cont = detail::for_each_map(adom_cand, [&](const std::vector<int>& a) {
              FiniteAlgebra model = dioid;
              model.adom = a;
              res.stats.candidates++;
              return consider(std::move(model));
            });
          }
          return cont;
        },
        q.iso_reject);
    if (!keep_going) {
      res.exhausted = false;
      return res;
    }
  }
  res.exhausted = true;
  return res;
}

}  // namespace domsr::finder
