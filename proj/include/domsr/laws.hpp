#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "domsr/algebra.hpp"
#include "domsr/lattice.hpp"

namespace domsr::laws {

// ---------------------------------------------------------------------------
// Catalogue
// ---------------------------------------------------------------------------

enum class LawId : int {
  add_assoc,
  add_comm,
  add_idem,
  add_zero,
  mul_assoc,
  mul_one,
  mul_zero,
  dist_l,
  dist_r,
  full,
  test_dioid,
  tests_meet,
  galois_aux_1,
  galois_aux_2,
  predomain_1,
  predomain_2,
  locality,
  weak_locality,
  lla,
  d_adj,
  d1,
  d2,
  d3,
  d4,
  d5,
  a1,
  a2,
  a3,
  tdd,
  sd_boolean,
  boolean_monoid,
  quantale_d_sup,
  quantale_d_inf,
  quantale_d_inf_mul,
  meet_one_fix,
  COUNT_
};

constexpr int kLawCount = static_cast<int>(LawId::COUNT_);

struct LawInfo {
  LawId id;
  const char* name;
  const char* quant;  // quantifier structure, for the catalogue listing
  bool needs_dom;
  bool needs_adom;
  bool needs_compl;
  bool uses_tests;  // quantifies a variable over the test algebra
};

inline const std::array<LawInfo, kLawCount>& law_catalogue() {
  static const std::array<LawInfo, kLawCount> tbl = {{
      {LawId::add_assoc, "add-assoc", "forall x,y,z: (x+y)+z = x+(y+z)", false, false, false, false},
      {LawId::add_comm, "add-comm", "forall x,y: x+y = y+x", false, false, false, false},
      {LawId::add_idem, "add-idem", "forall x: x+x = x", false, false, false, false},
      {LawId::add_zero, "add-zero", "forall x: 0+x = x = x+0", false, false, false, false},
      {LawId::mul_assoc, "mul-assoc", "forall x,y,z: (x*y)*z = x*(y*z)", false, false, false, false},
      {LawId::mul_one, "mul-one", "forall x: 1*x = x = x*1", false, false, false, false},
      {LawId::mul_zero, "mul-zero", "forall x: 0*x = 0 = x*0", false, false, false, false},
      {LawId::dist_l, "dist-l", "forall x,y,z: x*(y+z) = x*y+x*z", false, false, false, false},
      {LawId::dist_r, "dist-r", "forall x,y,z: (x+y)*z = x*z+y*z", false, false, false, false},
      {LawId::full, "full", "S1 is a boolean algebra bounded by 0,1 with + as sup, * as inf", false, false, false, false},
      {LawId::test_dioid, "test-dioid", "B is a boolean subalgebra of S1 closed under *", false, false, false, true},
      {LawId::tests_meet, "tests-meet", "forall p,q in B: p*q is the meet of p,q in B", false, false, false, true},
      {LawId::galois_aux_1, "galois-aux-1", "forall x, p in B: x <= p*x  iff  p'*x = 0", false, false, true, true},
      {LawId::galois_aux_2, "galois-aux-2", "forall x, p in B: x <= p*x  iff  x <= p*top", false, false, false, true},
      {LawId::predomain_1, "predomain-1", "forall x: x <= d(x)*x", true, false, false, false},
      {LawId::predomain_2, "predomain-2", "forall x, p in B: d(p*x) <= p", true, false, false, true},
      {LawId::locality, "locality", "forall x,y: d(x*d(y)) <= d(x*y)", true, false, false, false},
      {LawId::weak_locality, "weak-locality", "forall x,y: d(x*y) <= d(x*d(y))", true, false, false, false},
      {LawId::lla, "lla", "forall x, p in B: d(x) <= p  iff  x <= p*x", true, false, false, true},
      {LawId::d_adj, "d-adj", "forall x, p in B: d(x) <= p  iff  x <= p*top", true, false, false, true},
      {LawId::d1, "d1", "forall x: x <= d(x)*x", true, false, false, false},
      {LawId::d2, "d2", "forall x,y: d(x*d(y)) = d(x*y)", true, false, false, false},
      {LawId::d3, "d3", "forall x: d(x) <= 1", true, false, false, false},
      {LawId::d4, "d4", "d(0) = 0", true, false, false, false},
      {LawId::d5, "d5", "forall x,y: d(x+y) = d(x)+d(y)", true, false, false, false},
      {LawId::a1, "a1", "forall x: ad(x)*x = 0", false, true, false, false},
      {LawId::a2, "a2", "forall x: ad(x) + ad(ad(x)) = 1", false, true, false, false},
      {LawId::a3, "a3", "forall x,y: ad(x*y) <= ad(x*ad(ad(y)))", false, true, false, false},
      {LawId::tdd, "tdd", "test dioid with domain: test-dioid, d into B, predomain-1/2, locality", true, false, false, true},
      {LawId::sd_boolean, "sd-boolean", "S_d is a boolean subalgebra bounded by 0,1", true, false, false, false},
      {LawId::boolean_monoid, "boolean-monoid", "the order on S is a boolean algebra with top", false, false, false, false},
      {LawId::quantale_d_sup, "quantale-d-sup", "forall X: d(Sup X) = Sup d(X)", true, false, false, false},
      {LawId::quantale_d_inf, "quantale-d-inf", "forall X: d(Inf X) <= Inf d(X)", true, false, false, false},
      {LawId::quantale_d_inf_mul, "quantale-d-inf-mul", "forall x, Y nonempty: d(x)*(Inf Y) = Inf d(x)*Y", true, false, false, false},
      {LawId::meet_one_fix, "meet-one-fix", "forall x: d(x meet 1) = x meet 1", true, false, false, false},
  }};
  return tbl;
}

inline const LawInfo& law_info(LawId id) { return law_catalogue()[static_cast<int>(id)]; }
inline const char* law_name(LawId id) { return law_info(id).name; }

inline std::optional<LawId> law_from_name(const std::string& name) {
  for (const auto& li : law_catalogue())
    if (name == li.name) return li.id;
  return std::nullopt;
}

/// Parse a law name or group name; groups expand to their members.
/// Groups: dioid, predomain, domain-semiring, antidomain.
inline std::vector<LawId> expand_law_name(const std::string& name) {
  using L = LawId;
  if (name == "dioid")
    return {L::add_assoc, L::add_comm, L::add_idem, L::add_zero, L::mul_assoc,
            L::mul_one, L::mul_zero, L::dist_l, L::dist_r};
  if (name == "predomain") return {L::predomain_1, L::predomain_2};
  if (name == "domain-semiring") return {L::d1, L::d2, L::d3, L::d4, L::d5};
  if (name == "antidomain") return {L::a1, L::a2, L::a3};
  if (auto id = law_from_name(name)) return {*id};
  throw std::invalid_argument("unknown law '" + name + "'");
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

enum class LawStatus { pass, fail, na, bug };

inline const char* status_name(LawStatus st) {
  switch (st) {
    case LawStatus::pass: return "PASS";
    case LawStatus::fail: return "FAIL";
    case LawStatus::na: return "N/A";
    case LawStatus::bug: return "BUG";
  }
  return "?";
}

struct Binding {
  std::string var;
  int elem;
};

struct LawResult {
  LawId id{};
  LawStatus status = LawStatus::pass;
  std::vector<Binding> witness;  // set on fail: all quantified variables
  std::string detail;            // values at the witness, or the N/A reason
  std::string note;              // p-domain used, subset/binary mode, sampling
  bool sampled = false;

  LawResult() = default;
  explicit LawResult(LawId i) : id(i) {}

  bool pass() const { return status == LawStatus::pass; }
};

struct LawReport {
  std::vector<LawResult> results;  // in catalogue order
  std::optional<bool> is_dioid, is_test_dioid, is_tdd, is_domain_semiring,
      is_antidomain_semiring, is_full, is_boolean_quantale;

  const LawResult* find(LawId id) const {
    for (const auto& r : results)
      if (r.id == id) return &r;
    return nullptr;
  }
  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.pass(); });
  }
};

struct CheckOptions {
  bool exhaustive = false;       // disable sampling and subset-mode caps
  long long sample_count = 100000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: DOMSR_THREADS env, else hardware concurrency
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DOMSR_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

struct Env {
  const FiniteAlgebra& s;
  CheckOptions opt;
  Subset tests;
  bool tests_designated = false;
  std::optional<LatticeView> lv;  // built only when some law needs the order

  std::string tests_note() const {
    return "p over " + subset_names(s, tests) +
           (tests_designated ? " (designated tests)" : " (complemented subidentities)");
  }
};

inline std::uint64_t law_seed(const CheckOptions& opt, LawId id) {
  return opt.seed * 0x9E3779B97F4A7C15ull + 0x100 + static_cast<std::uint64_t>(id);
}

inline std::string vb(const FiniteAlgebra& s, const char* expr, int val) {
  return std::string(expr) + "=" + s.ename(val);
}

template <class Pred, class Detail>
LawResult forall1(const Env& e, LawId id, const char* v1, Pred ok, Detail detail) {
  LawResult r{id};
  for (int x = 0; x < e.s.n; ++x)
    if (!ok(x)) {
      r.status = LawStatus::fail;
      r.witness = {{v1, x}};
      r.detail = detail(x);
      return r;
    }
  return r;
}

template <class Pred, class Detail>
LawResult forall2(const Env& e, LawId id, const char* v1, const char* v2, Pred ok, Detail detail) {
  LawResult r{id};
  for (int x = 0; x < e.s.n; ++x)
    for (int y = 0; y < e.s.n; ++y)
      if (!ok(x, y)) {
        r.status = LawStatus::fail;
        r.witness = {{v1, x}, {v2, y}};
        r.detail = detail(x, y);
        return r;
      }
  return r;
}

// Ternary quantifiers switch to seeded sampling on large carriers unless
// exhaustive mode is requested.
template <class Pred, class Detail>
LawResult forall3(const Env& e, LawId id, const char* v1, const char* v2, const char* v3, Pred ok,
                  Detail detail) {
  LawResult r{id};
  const int n = e.s.n;
  auto fail_at = [&](int x, int y, int z) {
    r.status = LawStatus::fail;
    r.witness = {{v1, x}, {v2, y}, {v3, z}};
    r.detail = detail(x, y, z);
  };
  long long tuples = (long long)n * n * n;
  if (e.opt.exhaustive || tuples <= (1ll << 24)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!ok(x, y, z)) {
            fail_at(x, y, z);
            return r;
          }
  } else {
    r.sampled = true;
    r.note = "sampled " + std::to_string(e.opt.sample_count) + " tuples, seed " +
             std::to_string(e.opt.seed);
    std::mt19937_64 rng(law_seed(e.opt, id));
    std::uniform_int_distribution<int> d(0, n - 1);
    for (long long k = 0; k < e.opt.sample_count; ++k) {
      int x = d(rng), y = d(rng), z = d(rng);
      if (!ok(x, y, z)) {
        fail_at(x, y, z);
        return r;
      }
    }
  }
  return r;
}

// forall over x in S and p in the test algebra, in (x, p) order.
template <class Pred, class Detail>
LawResult forall_x_p(const Env& e, LawId id, Pred ok, Detail detail) {
  LawResult r{id};
  r.note = e.tests_note();
  auto ps = e.tests.to_vector();
  for (int x = 0; x < e.s.n; ++x)
    for (int p : ps)
      if (!ok(x, p)) {
        r.status = LawStatus::fail;
        r.witness = {{"x", x}, {"p", p}};
        r.detail = detail(x, p);
        return r;
      }
  return r;
}

inline LawResult not_applicable(LawId id, const std::string& why) {
  LawResult r{id};
  r.status = LawStatus::na;
  r.detail = why;
  return r;
}

LawResult eval_law(const Env& e, LawId id);

inline LawResult eval_boolalg(const Env& e, LawId id, const Subset& B, const std::string& note) {
  LawResult r{id};
  r.note = note;
  if (!subidentities(e.s).contains(B)) {
    r.status = LawStatus::fail;
    r.detail = "B is not a set of subidentities";
    return r;
  }
  auto bc = is_boolean_subalgebra(e.s, B);
  if (!bc.ok) {
    r.status = LawStatus::fail;
    r.detail = bc.reason;
  }
  return r;
}

// subset iteration for the quantale laws; carriers up to 20 elements
inline bool subset_mode(const Env& e) {
  return e.s.n <= 12 || (e.opt.exhaustive && e.s.n <= 20);
}

inline LawResult eval_quantale(const Env& e, LawId id) {
  const auto& s = e.s;
  const auto& d = *s.dom;
  const LatticeView& lv = *e.lv;
  LawResult r{id};
  if (!subset_mode(e)) {
    // binary + nullary reduction, sound by finiteness
    auto tag = [](LawResult res) {
      res.note = res.note.empty() ? "mode binary" : "mode binary; " + res.note;
      return res;
    };
    switch (id) {
      case LawId::quantale_d_sup: {
        if (d[s.zero] != s.zero) {
          r.status = LawStatus::fail;
          r.detail = "d(0)=" + s.ename(d[s.zero]);
          return tag(r);
        }
        return tag(forall2(
            e, id, "x", "y", [&](int x, int y) { return d[s.sum(x, y)] == s.sum(d[x], d[y]); },
            [&](int x, int y) {
              return vb(s, "d(x+y)", d[s.sum(x, y)]) + " " + vb(s, "d(x)+d(y)", s.sum(d[x], d[y]));
            }));
      }
      case LawId::quantale_d_inf:
        return tag(forall2(
            e, id, "x", "y",
            [&](int x, int y) { return s.leq(d[lv.inf(x, y)], lv.inf(d[x], d[y])); },
            [&](int x, int y) {
              return vb(s, "d(x^y)", d[lv.inf(x, y)]) + " " + vb(s, "d(x)^d(y)", lv.inf(d[x], d[y]));
            }));
      case LawId::quantale_d_inf_mul:
        return tag(forall3(
            e, id, "x", "y", "z",
            [&](int x, int y, int z) {
              return s.prod(d[x], lv.inf(y, z)) == lv.inf(s.prod(d[x], y), s.prod(d[x], z));
            },
            [&](int x, int y, int z) {
              return vb(s, "d(x)*(y^z)", s.prod(d[x], lv.inf(y, z))) + " " +
                     vb(s, "d(x)*y^d(x)*z", lv.inf(s.prod(d[x], y), s.prod(d[x], z)));
            }));
      default: break;
    }
  }
  r.note = "mode subsets";
  const int n = s.n;
  const std::uint32_t limit = 1u << n;
  auto fold_sup = [&](std::uint32_t X, auto&& f) {
    int acc = s.zero;
    for (int i = 0; i < n; ++i)
      if (X >> i & 1) acc = s.sum(acc, f(i));
    return acc;
  };
  auto fold_inf = [&](std::uint32_t X, auto&& f) {
    int acc = lv.top;
    for (int i = 0; i < n; ++i)
      if (X >> i & 1) acc = lv.inf(acc, f(i));
    return acc;
  };
  auto ident = [](int i) { return i; };
  auto set_witness = [&](std::uint32_t X, const char* xs, std::string det) {
    r.status = LawStatus::fail;
    Subset w(n);
    for (int i = 0; i < n; ++i)
      if (X >> i & 1) w.set(i);
    r.detail = std::string(xs) + "=" + subset_names(s, w) + ": " + std::move(det);
  };
  switch (id) {
    case LawId::quantale_d_sup:
      for (std::uint32_t X = 0; X < limit; ++X) {
        int lhs = d[fold_sup(X, ident)];
        int rhs = fold_sup(X, [&](int i) { return d[i]; });
        if (lhs != rhs) {
          set_witness(X, "X", vb(s, "d(Sup X)", lhs) + " " + vb(s, "Sup d(X)", rhs));
          return r;
        }
      }
      return r;
    case LawId::quantale_d_inf:
      for (std::uint32_t X = 0; X < limit; ++X) {
        int lhs = d[fold_inf(X, ident)];
        int rhs = fold_inf(X, [&](int i) { return d[i]; });
        if (!s.leq(lhs, rhs)) {
          set_witness(X, "X", vb(s, "d(Inf X)", lhs) + " " + vb(s, "Inf d(X)", rhs));
          return r;
        }
      }
      return r;
    case LawId::quantale_d_inf_mul:
      for (int x = 0; x < n; ++x)
        for (std::uint32_t Y = 1; Y < limit; ++Y) {
          int lhs = s.prod(d[x], fold_inf(Y, ident));
          int rhs = fold_inf(Y, [&](int i) { return s.prod(d[x], i); });
          if (lhs != rhs) {
            r.witness = {{"x", x}};
            set_witness(Y, "Y", vb(s, "d(x)*(Inf Y)", lhs) + " " + vb(s, "Inf d(x)*Y", rhs));
            return r;
          }
        }
      return r;
    default: break;
  }
  return r;
}

inline LawResult eval_law(const Env& e, LawId id) {
  const auto& s = e.s;
  const auto& info = law_info(id);
  if (info.needs_dom && !s.dom) return not_applicable(id, "no dom table");
  if (info.needs_adom && !s.adom) return not_applicable(id, "no adom table");
  if (info.needs_compl && !s.cmpl) return not_applicable(id, "no compl table");
  static const std::vector<int> kNoMap;
  const std::vector<int>& d = s.dom ? *s.dom : kNoMap;
  const std::vector<int>& ad = s.adom ? *s.adom : kNoMap;

  switch (id) {
    case LawId::add_assoc:
      return forall3(
          e, id, "x", "y", "z",
          [&](int x, int y, int z) { return s.sum(s.sum(x, y), z) == s.sum(x, s.sum(y, z)); },
          [&](int x, int y, int z) {
            return vb(s, "(x+y)+z", s.sum(s.sum(x, y), z)) + " " + vb(s, "x+(y+z)", s.sum(x, s.sum(y, z)));
          });
    case LawId::add_comm:
      return forall2(
          e, id, "x", "y", [&](int x, int y) { return s.sum(x, y) == s.sum(y, x); },
          [&](int x, int y) { return vb(s, "x+y", s.sum(x, y)) + " " + vb(s, "y+x", s.sum(y, x)); });
    case LawId::add_idem:
      return forall1(
          e, id, "x", [&](int x) { return s.sum(x, x) == x; },
          [&](int x) { return vb(s, "x+x", s.sum(x, x)); });
    case LawId::add_zero:
      return forall1(
          e, id, "x", [&](int x) { return s.sum(s.zero, x) == x && s.sum(x, s.zero) == x; },
          [&](int x) { return vb(s, "0+x", s.sum(s.zero, x)) + " " + vb(s, "x+0", s.sum(x, s.zero)); });
    case LawId::mul_assoc:
      return forall3(
          e, id, "x", "y", "z",
          [&](int x, int y, int z) { return s.prod(s.prod(x, y), z) == s.prod(x, s.prod(y, z)); },
          [&](int x, int y, int z) {
            return vb(s, "(x*y)*z", s.prod(s.prod(x, y), z)) + " " + vb(s, "x*(y*z)", s.prod(x, s.prod(y, z)));
          });
    case LawId::mul_one:
      return forall1(
          e, id, "x", [&](int x) { return s.prod(s.one, x) == x && s.prod(x, s.one) == x; },
          [&](int x) { return vb(s, "1*x", s.prod(s.one, x)) + " " + vb(s, "x*1", s.prod(x, s.one)); });
    case LawId::mul_zero:
      return forall1(
          e, id, "x",
          [&](int x) { return s.prod(s.zero, x) == s.zero && s.prod(x, s.zero) == s.zero; },
          [&](int x) { return vb(s, "0*x", s.prod(s.zero, x)) + " " + vb(s, "x*0", s.prod(x, s.zero)); });
    case LawId::dist_l:
      return forall3(
          e, id, "x", "y", "z",
          [&](int x, int y, int z) { return s.prod(x, s.sum(y, z)) == s.sum(s.prod(x, y), s.prod(x, z)); },
          [&](int x, int y, int z) {
            return vb(s, "x*(y+z)", s.prod(x, s.sum(y, z))) + " " +
                   vb(s, "x*y+x*z", s.sum(s.prod(x, y), s.prod(x, z)));
          });
    case LawId::dist_r:
      return forall3(
          e, id, "x", "y", "z",
          [&](int x, int y, int z) { return s.prod(s.sum(x, y), z) == s.sum(s.prod(x, z), s.prod(y, z)); },
          [&](int x, int y, int z) {
            return vb(s, "(x+y)*z", s.prod(s.sum(x, y), z)) + " " +
                   vb(s, "x*z+y*z", s.sum(s.prod(x, z), s.prod(y, z)));
          });

    case LawId::full:
      return eval_boolalg(e, id, subidentities(s), "");
    case LawId::test_dioid:
      return eval_boolalg(e, id, e.tests, e.tests_note());
    case LawId::tests_meet: {
      LawResult r{id};
      r.note = e.tests_note();
      auto ps = e.tests.to_vector();
      for (int p : ps)
        for (int q : ps) {
          int m = s.prod(p, q);
          auto fail = [&](const std::string& why) {
            r.status = LawStatus::fail;
            r.witness = {{"p", p}, {"q", q}};
            r.detail = why;
          };
          if (!e.tests.test(m)) {
            fail(vb(s, "p*q", m) + " not in B");
            return r;
          }
          if (!s.leq(m, p) || !s.leq(m, q)) {
            fail(vb(s, "p*q", m) + " not a lower bound");
            return r;
          }
          for (int t : ps)
            if (s.leq(t, p) && s.leq(t, q) && !s.leq(t, m)) {
              fail(vb(s, "p*q", m) + " below " + s.ename(t) + " fails");
              return r;
            }
        }
      return r;
    }
    case LawId::galois_aux_1:
      return forall_x_p(
          e, id,
          [&](int x, int p) {
            int pc = (*s.cmpl)[p];
            if (pc < 0) return true;  // complement undefined outside testset
            bool lhs = s.leq(x, s.prod(p, x));
            bool rhs = s.prod(pc, x) == s.zero;
            return lhs == rhs;
          },
          [&](int x, int p) {
            int pc = (*s.cmpl)[p];
            return vb(s, "p*x", s.prod(p, x)) + " " + vb(s, "p'*x", s.prod(pc, x));
          });
    case LawId::galois_aux_2:
      return forall_x_p(
          e, id,
          [&](int x, int p) {
            return s.leq(x, s.prod(p, x)) == s.leq(x, s.prod(p, e.lv->top));
          },
          [&](int x, int p) {
            return vb(s, "p*x", s.prod(p, x)) + " " + vb(s, "p*top", s.prod(p, e.lv->top));
          });

    case LawId::predomain_1:
    case LawId::d1:
      return forall1(
          e, id, "x", [&](int x) { return s.leq(x, s.prod(d[x], x)); },
          [&](int x) { return vb(s, "d(x)", d[x]) + " " + vb(s, "d(x)*x", s.prod(d[x], x)); });
    case LawId::predomain_2:
      return forall_x_p(
          e, id, [&](int x, int p) { return s.leq(d[s.prod(p, x)], p); },
          [&](int x, int p) { return vb(s, "d(p*x)", d[s.prod(p, x)]); });
    case LawId::locality:
      return forall2(
          e, id, "x", "y",
          [&](int x, int y) { return s.leq(d[s.prod(x, d[y])], d[s.prod(x, y)]); },
          [&](int x, int y) {
            return vb(s, "d(x*d(y))", d[s.prod(x, d[y])]) + " " + vb(s, "d(x*y)", d[s.prod(x, y)]);
          });
    case LawId::weak_locality:
      return forall2(
          e, id, "x", "y",
          [&](int x, int y) { return s.leq(d[s.prod(x, y)], d[s.prod(x, d[y])]); },
          [&](int x, int y) {
            return vb(s, "d(x*y)", d[s.prod(x, y)]) + " " + vb(s, "d(x*d(y))", d[s.prod(x, d[y])]);
          });
    case LawId::lla:
      return forall_x_p(
          e, id,
          [&](int x, int p) { return s.leq(d[x], p) == s.leq(x, s.prod(p, x)); },
          [&](int x, int p) {
            return vb(s, "d(x)", d[x]) + " " + vb(s, "p*x", s.prod(p, x));
          });
    case LawId::d_adj:
      return forall_x_p(
          e, id,
          [&](int x, int p) { return s.leq(d[x], p) == s.leq(x, s.prod(p, e.lv->top)); },
          [&](int x, int p) {
            return vb(s, "d(x)", d[x]) + " " + vb(s, "p*top", s.prod(p, e.lv->top));
          });
    case LawId::d2:
      return forall2(
          e, id, "x", "y",
          [&](int x, int y) { return d[s.prod(x, d[y])] == d[s.prod(x, y)]; },
          [&](int x, int y) {
            return vb(s, "d(x*d(y))", d[s.prod(x, d[y])]) + " " + vb(s, "d(x*y)", d[s.prod(x, y)]);
          });
    case LawId::d3:
      return forall1(
          e, id, "x", [&](int x) { return s.leq(d[x], s.one); },
          [&](int x) { return vb(s, "d(x)", d[x]); });
    case LawId::d4: {
      LawResult r{id};
      if (d[s.zero] != s.zero) {
        r.status = LawStatus::fail;
        r.witness = {{"x", s.zero}};
        r.detail = vb(s, "d(0)", d[s.zero]);
      }
      return r;
    }
    case LawId::d5:
      return forall2(
          e, id, "x", "y",
          [&](int x, int y) { return d[s.sum(x, y)] == s.sum(d[x], d[y]); },
          [&](int x, int y) {
            return vb(s, "d(x+y)", d[s.sum(x, y)]) + " " + vb(s, "d(x)+d(y)", s.sum(d[x], d[y]));
          });

    case LawId::a1:
      return forall1(
          e, id, "x", [&](int x) { return s.prod(ad[x], x) == s.zero; },
          [&](int x) { return vb(s, "ad(x)*x", s.prod(ad[x], x)); });
    case LawId::a2:
      return forall1(
          e, id, "x", [&](int x) { return s.sum(ad[x], ad[ad[x]]) == s.one; },
          [&](int x) { return vb(s, "ad(x)+ad(ad(x))", s.sum(ad[x], ad[ad[x]])); });
    case LawId::a3:
      return forall2(
          e, id, "x", "y",
          [&](int x, int y) { return s.leq(ad[s.prod(x, y)], ad[s.prod(x, ad[ad[y]])]); },
          [&](int x, int y) {
            return vb(s, "ad(x*y)", ad[s.prod(x, y)]) + " " +
                   vb(s, "ad(x*ad(ad(y)))", ad[s.prod(x, ad[ad[y]])]);
          });

    case LawId::tdd: {
      LawResult r{id};
      r.note = e.tests_note();
      auto component = [&](LawId part) -> bool {
        LawResult pr = eval_law(e, part);
        if (pr.pass()) return true;
        r.status = LawStatus::fail;
        r.witness = pr.witness;
        r.detail = std::string("component ") + law_name(part) +
                   (pr.detail.empty() ? "" : ": " + pr.detail);
        return false;
      };
      if (!component(LawId::test_dioid)) return r;
      for (int x = 0; x < s.n; ++x)
        if (!e.tests.test(d[x])) {
          r.status = LawStatus::fail;
          r.witness = {{"x", x}};
          r.detail = "d does not map into B: " + vb(s, "d(x)", d[x]);
          return r;
        }
      if (!component(LawId::predomain_1)) return r;
      if (!component(LawId::predomain_2)) return r;
      if (!component(LawId::locality)) return r;
      return r;
    }
    case LawId::sd_boolean: {
      Subset sd = fixpoints(s, d);
      LawResult r{id};
      r.note = "S_d = " + subset_names(s, sd);
      if (!subidentities(s).contains(sd)) {
        r.status = LawStatus::fail;
        r.detail = "S_d is not a set of subidentities";
        return r;
      }
      auto bc = is_boolean_subalgebra(s, sd);
      if (!bc.ok) {
        r.status = LawStatus::fail;
        r.detail = bc.reason;
      }
      return r;
    }
    case LawId::boolean_monoid: {
      const LatticeView& lv = *e.lv;
      LawResult r = forall1(
          e, id, "x",
          [&](int x) {
            for (int y = 0; y < s.n; ++y)
              if (s.sum(x, y) == lv.top && lv.inf(x, y) == s.zero) return true;
            return false;
          },
          [&](int) { return std::string("no complement under join top / meet 0"); });
      if (!r.pass()) return r;
      return forall3(
          e, id, "x", "y", "z",
          [&](int x, int y, int z) {
            return lv.inf(x, s.sum(y, z)) == s.sum(lv.inf(x, y), lv.inf(x, z));
          },
          [&](int x, int y, int z) {
            return vb(s, "x^(y+z)", lv.inf(x, s.sum(y, z))) + " " +
                   vb(s, "(x^y)+(x^z)", s.sum(lv.inf(x, y), lv.inf(x, z)));
          });
    }
    case LawId::quantale_d_sup:
    case LawId::quantale_d_inf:
    case LawId::quantale_d_inf_mul:
      return eval_quantale(e, id);
    case LawId::meet_one_fix:
      return forall1(
          e, id, "x",
          [&](int x) {
            int m = e.lv->inf(x, s.one);
            return d[m] == m;
          },
          [&](int x) {
            int m = e.lv->inf(x, s.one);
            return vb(s, "x^1", m) + " " + vb(s, "d(x^1)", d[m]);
          });
    default: break;
  }
  throw std::logic_error("unhandled law");
}

inline bool law_needs_lattice(LawId id) {
  switch (id) {
    case LawId::galois_aux_2:
    case LawId::d_adj:
    case LawId::boolean_monoid:
    case LawId::quantale_d_sup:
    case LawId::quantale_d_inf:
    case LawId::quantale_d_inf_mul:
    case LawId::meet_one_fix:
      return true;
    default:
      return false;
  }
}

inline Env make_env(const FiniteAlgebra& s, const CheckOptions& opt, bool need_lattice) {
  Env e{s, opt, default_tests(s), s.tests.has_value(), std::nullopt};
  if (need_lattice) e.lv = lattice_view(s);
  return e;
}

}  // namespace detail

/// Evaluate one law.
inline LawResult eval_law(const FiniteAlgebra& s, LawId id, const CheckOptions& opt = {}) {
  auto env = detail::make_env(s, opt, detail::law_needs_lattice(id));
  return detail::eval_law(env, id);
}

/// Exhaustively evaluate the given laws; results in catalogue order with
/// minimal witnesses.  Distinct laws may be evaluated concurrently (capped by
/// DOMSR_THREADS); the merged report is deterministic either way.
inline LawReport check(const FiniteAlgebra& s, std::vector<LawId> ids, const CheckOptions& opt = {}) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  bool need_lattice = std::any_of(ids.begin(), ids.end(), detail::law_needs_lattice);
  auto env = detail::make_env(s, opt, need_lattice);

  LawReport rep;
  rep.results.resize(ids.size());
  int workers = std::min<int>(detail::worker_count(opt.threads), (int)ids.size());
  if (workers > 1 && ids.size() > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < ids.size();)
          rep.results[k] = detail::eval_law(env, ids[k]);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t k = 0; k < ids.size(); ++k) rep.results[k] = detail::eval_law(env, ids[k]);
  }

  auto have_all = [&](std::initializer_list<LawId> group) -> std::optional<bool> {
    bool all = true;
    for (LawId g : group) {
      const LawResult* r = rep.find(g);
      if (!r || r->status == LawStatus::na) return std::nullopt;
      all = all && r->pass();
    }
    return all;
  };
  using L = LawId;
  rep.is_dioid = have_all({L::add_assoc, L::add_comm, L::add_idem, L::add_zero, L::mul_assoc,
                           L::mul_one, L::mul_zero, L::dist_l, L::dist_r});
  rep.is_test_dioid = have_all({L::test_dioid});
  rep.is_tdd = have_all({L::tdd});
  rep.is_domain_semiring = have_all({L::d1, L::d2, L::d3, L::d4, L::d5});
  rep.is_antidomain_semiring = have_all({L::a1, L::a2, L::a3});
  rep.is_full = have_all({L::full});
  if (rep.is_dioid && rep.find(L::boolean_monoid) &&
      rep.find(L::boolean_monoid)->status != LawStatus::na)
    rep.is_boolean_quantale = *rep.is_dioid && rep.find(L::boolean_monoid)->pass();
  return rep;
}

inline LawReport check(const FiniteAlgebra& s, std::initializer_list<LawId> ids,
                       const CheckOptions& opt = {}) {
  return check(s, std::vector<LawId>(ids), opt);
}

inline std::vector<LawId> dioid_laws() {
  return expand_law_name("dioid");
}

inline bool certify_domain_semiring(const FiniteAlgebra& s, const CheckOptions& opt = {}) {
  if (!s.dom) return false;
  auto rep = check(s, expand_law_name("domain-semiring"), opt);
  return rep.is_domain_semiring.value_or(false);
}

}  // namespace domsr::laws
