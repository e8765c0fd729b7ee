#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domsr/algebra.hpp"
#include "domsr/lattice.hpp"
#include "domsr/laws.hpp"

namespace domsr::laws {

// ---------------------------------------------------------------------------
// Derived-law suite
//
// Statements provable from the domain semiring axioms.  On a certified
// structure these cannot fail as a property of the model; a failure is
// reported with the distinguished BUG status.
// ---------------------------------------------------------------------------

struct DerivedResult {
  std::string name;
  LawStatus status = LawStatus::pass;
  std::string detail;

  DerivedResult() = default;
  explicit DerivedResult(std::string n) : name(std::move(n)) {}

  bool pass() const { return status == LawStatus::pass; }
};

struct DerivedReport {
  std::vector<DerivedResult> results;
  bool ok() const {
    for (const auto& r : results)
      if (!r.pass()) return false;
    return true;
  }
};

inline DerivedReport derived_suite(const FiniteAlgebra& s, const CheckOptions& opt = {}) {
  if (!certify_domain_semiring(s, opt))
    throw std::invalid_argument("derived_suite: '" + s.name + "' is not a certified domain semiring");
  const auto& d = *s.dom;
  const LatticeView lv = lattice_view(s);
  DerivedReport rep;
  auto item = [&](const std::string& name, auto&& body) {
    DerivedResult r{name};
    body(r);
    rep.results.push_back(std::move(r));
  };
  auto bug = [&](DerivedResult& r, const std::string& why) {
    r.status = LawStatus::bug;
    r.detail = why;
  };

  item("dioid", [&](DerivedResult& r) {
    auto lr = check(s, dioid_laws(), opt);
    if (!lr.is_dioid.value_or(false))
      for (const auto& res : lr.results)
        if (!res.pass()) {
          bug(r, std::string(law_name(res.id)) + " fails: " + res.detail);
          return;
        }
  });
  item("d-strengthened", [&](DerivedResult& r) {  // d(x)x = x
    for (int x = 0; x < s.n; ++x)
      if (s.prod(d[x], x) != x) return bug(r, "d(x)*x != x at x=" + s.ename(x));
  });
  item("d-one", [&](DerivedResult& r) {
    if (d[s.one] != s.one) bug(r, "d(1) = " + s.ename(d[s.one]));
  });
  item("d-preserves-order", [&](DerivedResult& r) {
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y)
        if (s.leq(x, y) && !s.leq(d[x], d[y]))
          return bug(r, "x=" + s.ename(x) + " y=" + s.ename(y));
  });
  item("d-test-push", [&](DerivedResult& r) {  // d(px) = p d(x) for p in S_d
    Subset sd = fixpoints(s, d);
    for (int x = 0; x < s.n; ++x) {
      bool bad = false;
      sd.for_each([&](int p) {
        if (d[s.prod(p, x)] != s.prod(p, d[x])) bad = true;
      });
      if (bad) return bug(r, "at x=" + s.ename(x));
    }
  });
  item("d-top", [&](DerivedResult& r) {
    if (d[lv.top] != s.one) bug(r, "d(top) = " + s.ename(d[lv.top]));
  });
  item("weak-locality", [&](DerivedResult& r) {
    auto lr = eval_law(s, LawId::weak_locality, opt);
    if (!lr.pass()) bug(r, lr.detail);
  });
  item("d-idempotent", [&](DerivedResult& r) {
    for (int x = 0; x < s.n; ++x)
      if (d[d[x]] != d[x]) return bug(r, "at x=" + s.ename(x));
  });
  item("sd-equals-image", [&](DerivedResult& r) {
    if (!(fixpoints(s, d) == map_image(s, d))) bug(r, "S_d != d(S)");
  });
  item("sd-bounded-distributive-lattice", [&](DerivedResult& r) {
    Subset sd = fixpoints(s, d);
    if (!sd.test(s.zero) || !sd.test(s.one)) return bug(r, "0 or 1 not in S_d");
    auto mem = sd.to_vector();
    for (int p : mem)
      for (int q : mem) {
        if (!sd.test(s.sum(p, q)) || !sd.test(s.prod(p, q)))
          return bug(r, "S_d not closed at " + s.ename(p) + "," + s.ename(q));
        int m = s.prod(p, q);
        if (s.prod(q, p) != m || !s.leq(m, p) || !s.leq(m, q))
          return bug(r, "mul not a meet on S_d at " + s.ename(p) + "," + s.ename(q));
        for (int t : mem)
          if (s.leq(t, p) && s.leq(t, q) && !s.leq(t, m))
            return bug(r, "mul not the greatest lower bound on S_d at " + s.ename(p) + "," + s.ename(q));
      }
    for (int p : mem)
      for (int q : mem)
        for (int t : mem)
          if (s.prod(p, s.sum(q, t)) != s.sum(s.prod(p, q), s.prod(p, t)))
            return bug(r, "S_d not distributive");
  });
  item("lla-on-sd", [&](DerivedResult& r) {
    Subset sd = fixpoints(s, d);
    for (int x = 0; x < s.n; ++x) {
      bool bad = false;
      sd.for_each([&](int p) {
        if (s.leq(d[x], p) != s.leq(x, s.prod(p, x))) bad = true;
      });
      if (bad) return bug(r, "at x=" + s.ename(x));
    }
  });
  item("d-adj-on-sd", [&](DerivedResult& r) {
    Subset sd = fixpoints(s, d);
    for (int x = 0; x < s.n; ++x) {
      bool bad = false;
      sd.for_each([&](int p) {
        if (s.leq(d[x], p) != s.leq(x, s.prod(p, lv.top))) bad = true;
      });
      if (bad) return bug(r, "at x=" + s.ename(x));
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Coincidence suite
//
// Cross-checks the two axiomatisations on one structure with a dom table.
// Any mismatch under the stated hypotheses would falsify the coincidence
// theorem; it is reported as a finding together with the full structure.
// ---------------------------------------------------------------------------

struct CoincidenceReport {
  bool is_full = false;
  std::string full_detail;
  Subset tests_B;       // complemented subidentities, the forced test algebra
  Subset s_d;           // fixpoints of dom
  Subset d_image;       // dom(S)
  bool tdd = false;
  std::string tdd_detail;
  bool domain_semiring = false;
  std::string ds_detail;
  std::optional<bool> coincidence_ok;   // set iff full: tdd <=> domain semiring
  std::optional<bool> b_eq_sd_eq_image; // set iff tdd: B = S_d = d(S)
  bool sd_contains_max_bool = false;
  std::string max_bool_detail;
  bool sd_boolean = false;
  std::string sd_boolean_detail;
  std::optional<std::vector<int>> derived_ad;  // compl . dom, when S_d boolean
  std::optional<LawReport> derived_ad_laws;    // a1..a3 on the derived ad
  std::vector<std::string> findings;           // theorem violations, if any
  std::optional<FiniteAlgebra> counterexample;

  bool contradiction() const { return !findings.empty(); }
};

namespace detail {

// Every boolean subalgebra bounded by 0,1 consists of complemented
// subidentities, so subsets of that candidate set cover them all.
inline bool sd_contains_every_boolean_subalgebra(const FiniteAlgebra& s, const Subset& candidates,
                                                 const Subset& sd, std::string& what) {
  auto cand = candidates.to_vector();
  if (is_boolean_subalgebra(s, candidates).ok) {
    // candidates form the largest boolean subalgebra themselves
    if (!sd.contains(candidates)) {
      what = "largest boolean subalgebra " + subset_names(s, candidates) + " not within S_d";
      return false;
    }
    what = subset_names(s, candidates);
    return true;
  }
  if ((int)cand.size() > 16) {
    what = "skipped: complemented subidentities not boolean and too large to enumerate";
    return true;
  }
  for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    Subset B(s.n);
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) B.set(cand[i]);
    if (!B.test(s.zero) || !B.test(s.one)) continue;
    if (!is_boolean_subalgebra(s, B).ok) continue;
    if (!sd.contains(B)) {
      what = "boolean subalgebra " + subset_names(s, B) + " not within S_d";
      return false;
    }
  }
  what = "all boolean subalgebras within " + subset_names(s, candidates);
  return true;
}

}  // namespace detail

inline CoincidenceReport coincidence_check(const FiniteAlgebra& s, const CheckOptions& opt = {}) {
  if (!s.dom) throw std::invalid_argument("coincidence_check: no dom table in '" + s.name + "'");
  CoincidenceReport rep;
  rep.tests_B = complemented_subidentities(s);
  rep.s_d = fixpoints(s, *s.dom);
  rep.d_image = map_image(s, *s.dom);

  // tdd status is always taken against the complemented subidentities;
  // a designated testset is ignored here on purpose.
  FiniteAlgebra plain = s;
  plain.tests.reset();
  plain.cmpl.reset();

  auto fullr = eval_law(plain, LawId::full, opt);
  rep.is_full = fullr.pass();
  rep.full_detail = fullr.detail;

  auto tddr = eval_law(plain, LawId::tdd, opt);
  rep.tdd = tddr.pass();
  rep.tdd_detail = tddr.detail;

  auto dsrep = check(plain, expand_law_name("domain-semiring"), opt);
  rep.domain_semiring = dsrep.is_domain_semiring.value_or(false);
  for (const auto& r : dsrep.results)
    if (!r.pass()) {
      rep.ds_detail = std::string(law_name(r.id)) + " fails: " + r.detail;
      break;
    }

  auto finding = [&](const std::string& msg) {
    rep.findings.push_back(msg);
    if (!rep.counterexample) rep.counterexample = s;
  };

  if (rep.is_full) {
    rep.coincidence_ok = (rep.tdd == rep.domain_semiring);
    if (!*rep.coincidence_ok)
      finding(std::string("coincidence violated on full dioid: tdd=") + (rep.tdd ? "yes" : "no") +
              " but domain-semiring=" + (rep.domain_semiring ? "yes" : "no"));
  }
  if (rep.tdd) {
    rep.b_eq_sd_eq_image = (rep.tests_B == rep.s_d) && (rep.tests_B == rep.d_image);
    if (!*rep.b_eq_sd_eq_image)
      finding("tdd holds but B = " + subset_names(s, rep.tests_B) + ", S_d = " +
              subset_names(s, rep.s_d) + ", d(S) = " + subset_names(s, rep.d_image) + " differ");
  }
  rep.sd_contains_max_bool =
      detail::sd_contains_every_boolean_subalgebra(s, rep.tests_B, rep.s_d, rep.max_bool_detail);
  if (!rep.sd_contains_max_bool && rep.domain_semiring)
    finding("domain semiring whose S_d misses a boolean subalgebra: " + rep.max_bool_detail);

  if (subidentities(s).contains(rep.s_d)) {
    auto bc = is_boolean_subalgebra(s, rep.s_d);
    rep.sd_boolean = bc.ok;
    rep.sd_boolean_detail = bc.reason;
  } else {
    rep.sd_boolean = false;
    rep.sd_boolean_detail = "S_d is not a set of subidentities";
  }

  if (rep.sd_boolean) {
    // ad := (_)' . dom with complements taken inside S_d
    std::vector<int> ad(s.n, -1);
    auto mem = rep.s_d.to_vector();
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) {
      int p = (*s.dom)[x];
      int comp = -1;
      for (int q : mem)
        if (s.sum(p, q) == s.one && s.prod(p, q) == s.zero && s.prod(q, p) == s.zero) {
          comp = q;
          break;
        }
      if (comp < 0) ok = false;
      ad[x] = comp;
    }
    if (ok) {
      FiniteAlgebra with_ad = plain;
      with_ad.adom = ad;
      rep.derived_ad = std::move(ad);
      rep.derived_ad_laws = check(with_ad, expand_law_name("antidomain"), opt);
      if (rep.domain_semiring && !rep.derived_ad_laws->all_pass())
        finding("boolean domain algebra but derived ad fails an antidomain axiom");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Quantale suite
//
// Every finite dioid is a quantale; the suite checks how the domain map
// interacts with sups and infs and probes the empty-meet boundary.
// ---------------------------------------------------------------------------

struct QuantaleReport {
  std::string mode;  // subsets | binary
  LawResult d_sup, d_inf, d_inf_mul;
  std::vector<int> top_defects;  // x with d(x)*top != top
  std::optional<int> first_defect_value;  // d(x)*top at the first defect
  LawResult meet_one_fix;
  Subset s_d, s_1;
  bool sd_eq_s1 = false;
  bool meet_one_fix_implication_ok = true;  // meet-one-fix => S_d = S1

  bool core_pass() const { return d_sup.pass() && d_inf.pass() && d_inf_mul.pass(); }
};

inline QuantaleReport quantale_suite(const FiniteAlgebra& s, const CheckOptions& opt = {}) {
  if (!certify_domain_semiring(s, opt))
    throw std::invalid_argument("quantale_suite: '" + s.name + "' is not a certified domain semiring");
  QuantaleReport rep;
  auto env = detail::make_env(s, opt, true);
  rep.mode = detail::subset_mode(env) ? "subsets" : "binary";
  rep.d_sup = detail::eval_law(env, LawId::quantale_d_sup);
  rep.d_inf = detail::eval_law(env, LawId::quantale_d_inf);
  rep.d_inf_mul = detail::eval_law(env, LawId::quantale_d_inf_mul);
  const auto& d = *s.dom;
  int top = env.lv->top;
  for (int x = 0; x < s.n; ++x)
    if (s.prod(d[x], top) != top) {
      if (rep.top_defects.empty()) rep.first_defect_value = s.prod(d[x], top);
      rep.top_defects.push_back(x);
    }
  rep.meet_one_fix = detail::eval_law(env, LawId::meet_one_fix);
  rep.s_d = fixpoints(s, d);
  rep.s_1 = subidentities(s);
  rep.sd_eq_s1 = rep.s_d == rep.s_1;
  rep.meet_one_fix_implication_ok = !rep.meet_one_fix.pass() || rep.sd_eq_s1;
  return rep;
}

}  // namespace domsr::laws
