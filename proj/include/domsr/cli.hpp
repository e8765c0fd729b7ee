#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domsr/algebra.hpp"
#include "domsr/finder.hpp"
#include "domsr/io.hpp"
#include "domsr/laws.hpp"
#include "domsr/models.hpp"
#include "domsr/suites.hpp"

namespace domsr::cli {

// Exit codes are a contract: 0 pass/found, 1 failure/error, 2 exhaustion.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitExhausted = 2;

inline laws::CheckOptions options_from_env() {
  laws::CheckOptions opt;
  if (const char* seed = std::getenv("DOMSR_SEED")) opt.seed = std::strtoull(seed, nullptr, 10);
  return opt;
}

struct CheckArgs {
  std::string file;     // path to an algebra or graph file
  std::string builtin;  // --builtin
  int rel = 0;          // --rel <m>
  std::string laws_csv;
  std::string suite;  // coincidence | quantale | derived | (empty: summary)
  std::string dom_via;  // top | inf
  bool exhaustive = false;
};

struct SearchArgs {
  std::string satisfy_csv;
  std::string violate_csv;
  int max_size = 4;
  int limit = 1;
  bool iso_reject = false;
  bool exhaustive = false;
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<laws::LawId> parse_laws(const std::string& csv) {
  std::vector<laws::LawId> ids;
  for (const auto& name : split_csv(csv))
    for (auto id : laws::expand_law_name(name)) ids.push_back(id);
  return ids;
}

inline std::string catalogue_listing() {
  std::ostringstream out;
  out << "law catalogue (groups: dioid, predomain, domain-semiring, antidomain):\n";
  for (const auto& li : laws::law_catalogue()) {
    out << "  " << li.name;
    std::string needs;
    if (li.needs_dom) needs += " dom";
    if (li.needs_adom) needs += " adom";
    if (li.needs_compl) needs += " compl";
    out << " -- " << li.quant;
    if (!needs.empty()) out << " [requires" << needs << "]";
    out << "\n";
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file may carry several algebra blocks (search output does); each one is
// checked in turn.
inline std::vector<FiniteAlgebra> load_algebras(const CheckArgs& a) {
  int sources = (!a.file.empty()) + (!a.builtin.empty()) + (a.rel > 0);
  if (sources != 1)
    throw std::runtime_error("expected exactly one of: <file>, --builtin, --rel");
  if (!a.builtin.empty()) return {models::builtin(a.builtin)};
  if (a.rel > 0) return {models::rel_algebra(a.rel)};
  std::string text = read_file(a.file);
  io::detail::Lines probe(text);
  if (!probe.done() && probe.peek().tokens[0] == "graph")
    return {models::path_algebra(io::parse_graph_file(text))};
  return io::parse_algebra_stream(text);
}

inline std::string law_line(const FiniteAlgebra& s, const laws::LawResult& r) {
  std::ostringstream out;
  out << "law " << laws::law_name(r.id) << " " << laws::status_name(r.status);
  if (!r.note.empty()) out << " [" << r.note << "]";
  if (!r.witness.empty()) {
    out << " witness";
    for (const auto& b : r.witness) out << " " << b.var << "=" << s.ename(b.elem);
  }
  if (!r.detail.empty()) out << ": " << r.detail;
  return out.str();
}

inline void print_report(std::ostream& out, const FiniteAlgebra& s, const laws::LawReport& rep) {
  for (const auto& r : rep.results) out << law_line(s, r) << "\n";
}

inline void print_summary(std::ostream& out, const FiniteAlgebra& s,
                          const laws::CheckOptions& opt) {
  using laws::LawId;
  Subset s1 = subidentities(s);
  out << "S1 = " << subset_names(s, s1) << "\n";
  auto s1b = is_boolean_subalgebra(s, s1);
  out << "S1 boolean: " << (s1b.ok ? "yes" : "no (" + s1b.reason + ")") << "\n";
  out << "full: " << (s1b.ok ? "yes" : "no") << "\n";
  out << "tests = " << subset_names(s, default_tests(s))
      << (s.tests ? " (designated)" : " (complemented subidentities)") << "\n";
  if (s.dom) {
    Subset sd = fixpoints(s, *s.dom);
    out << "S_d = " << subset_names(s, sd) << "\n";
    out << "d(S) = " << subset_names(s, map_image(s, *s.dom)) << "\n";
    if (subidentities(s).contains(sd)) {
      auto sdb = is_boolean_subalgebra(s, sd);
      out << "S_d boolean: " << (sdb.ok ? "yes" : "no (" + sdb.reason + ")") << "\n";
    } else {
      out << "S_d boolean: no (S_d is not a set of subidentities)\n";
    }
    auto tddr = laws::eval_law(s, LawId::tdd, opt);
    if (tddr.pass()) {
      out << "tdd: yes\n";
    } else {
      std::string why;
      for (const auto& b : tddr.witness) why += b.var + "=" + s.ename(b.elem) + " ";
      out << "tdd: no (" << why << tddr.detail << ")\n";
    }
  }
  auto bq = laws::check(s, {LawId::boolean_monoid}, opt);
  bool bm = bq.find(LawId::boolean_monoid)->pass();
  out << "boolean quantale: " << (bm ? "yes" : "no") << "\n";
}

inline void print_coincidence(std::ostream& out, const FiniteAlgebra& s,
                              const laws::CoincidenceReport& rep) {
  out << "coincidence report for " << s.name << "\n";
  out << "full: " << (rep.is_full ? "yes" : "no (" + rep.full_detail + ")") << "\n";
  out << "tests B (complemented subidentities) = " << subset_names(s, rep.tests_B) << "\n";
  out << "domain semiring: " << (rep.domain_semiring ? "yes" : "no (" + rep.ds_detail + ")") << "\n";
  out << "tdd: " << (rep.tdd ? "yes (B = " + subset_names(s, rep.tests_B) + ")"
                             : "no (" + rep.tdd_detail + ")")
      << "\n";
  out << "coincidence (full => tdd <=> domain-semiring): ";
  if (!rep.coincidence_ok)
    out << "n/a (not full)\n";
  else
    out << (*rep.coincidence_ok ? "confirmed" : "VIOLATED") << "\n";
  out << "B = S_d = d(S): ";
  if (!rep.b_eq_sd_eq_image)
    out << "n/a (tdd does not hold)\n";
  else if (*rep.b_eq_sd_eq_image)
    out << "yes (" << subset_names(s, rep.s_d) << ")\n";
  else
    out << "NO: S_d = " << subset_names(s, rep.s_d) << ", d(S) = " << subset_names(s, rep.d_image)
        << "\n";
  out << "S_d contains largest boolean subalgebra: "
      << (rep.sd_contains_max_bool ? "yes (" + rep.max_bool_detail + ")"
                                   : "NO: " + rep.max_bool_detail)
      << "\n";
  out << "S_d boolean: " << (rep.sd_boolean ? "yes" : "no (" + rep.sd_boolean_detail + ")") << "\n";
  if (rep.derived_ad) {
    if (s.n <= 16) {
      out << "derived ad:";
      for (int x = 0; x < s.n; ++x) out << " " << s.ename(x) << ":" << s.ename((*rep.derived_ad)[x]);
    } else {
      out << "derived ad: (" << s.n << " entries)";
    }
    out << "; antidomain laws: " << (rep.derived_ad_laws->all_pass() ? "PASS" : "FAIL") << "\n";
  }
  if (rep.findings.empty()) {
    out << "findings: none\n";
  } else {
    for (const auto& f : rep.findings) out << "FINDING: " << f << "\n";
    if (rep.counterexample) out << io::render_algebra(*rep.counterexample);
  }
}

inline void print_quantale(std::ostream& out, const FiniteAlgebra& s,
                           const laws::QuantaleReport& rep) {
  out << "quantale report for " << s.name << " (mode " << rep.mode << ")\n";
  out << law_line(s, rep.d_sup) << "\n";
  out << law_line(s, rep.d_inf) << "\n";
  out << law_line(s, rep.d_inf_mul) << "\n";
  if (rep.top_defects.empty()) {
    out << "empty-Y boundary: d(x)*top = top for all x\n";
  } else {
    int x0 = rep.top_defects.front();
    out << "empty-Y boundary: d(x)*top = top fails for " << rep.top_defects.size() << " of "
        << s.n << " elements; first witness x=" << s.ename(x0)
        << ": d(x)*top=" << s.ename(*rep.first_defect_value) << "\n";
  }
  out << law_line(s, rep.meet_one_fix) << "\n";
  out << "S_d = " << subset_names(s, rep.s_d) << "\n";
  out << "S1 = " << subset_names(s, rep.s_1) << "\n";
  out << "meet-one-fix => S_d = S1: "
      << (rep.meet_one_fix.pass() ? (rep.sd_eq_s1 ? "confirmed" : "VIOLATED")
                                  : "n/a (meet-one-fix fails)")
      << "\n";
}

inline void print_derived(std::ostream& out, const laws::DerivedReport& rep) {
  for (const auto& r : rep.results) {
    out << "derived " << r.name << " " << laws::status_name(r.status);
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
  }
}

}  // namespace detail

namespace detail {

inline bool check_one(FiniteAlgebra s, const CheckArgs& args, const laws::CheckOptions& opt,
                      std::ostream& out) {
  auto vr = validate(s);
  if (!vr.ok()) {
    for (const auto& e : vr.errors) out << "validation error: " << e << "\n";
    return false;
  }
  if (!args.dom_via.empty()) {
    std::vector<int> d;
    if (args.dom_via == "top")
      d = models::dom_via_top(s);
    else if (args.dom_via == "inf")
      d = models::dom_via_inf(s);
    else
      throw std::runtime_error("--dom-via expects 'top' or 'inf'");
    if (s.n <= 16) {
      out << "dom via " << args.dom_via << "-formula:";
      for (int x = 0; x < s.n; ++x) out << " " << s.ename(x) << ":" << s.ename(d[x]);
      out << "\n";
    } else {
      out << "dom via " << args.dom_via << "-formula installed (" << s.n << " entries)\n";
    }
    s.dom = std::move(d);
  }
  out << "algebra " << s.name << " (" << s.n << " elements)\n";

  bool ok = true;
  if (!args.laws_csv.empty()) {
    auto rep = laws::check(s, parse_laws(args.laws_csv), opt);
    print_report(out, s, rep);
    ok = rep.all_pass();
  } else if (args.suite.empty()) {
    std::vector<laws::LawId> ids = laws::dioid_laws();
    if (s.dom)
      for (auto id : laws::expand_law_name("domain-semiring")) ids.push_back(id);
    if (s.adom)
      for (auto id : laws::expand_law_name("antidomain")) ids.push_back(id);
    auto rep = laws::check(s, ids, opt);
    print_report(out, s, rep);
    print_summary(out, s, opt);
    ok = rep.all_pass();
  }

  if (args.suite == "coincidence") {
    auto rep = laws::coincidence_check(s, opt);
    print_coincidence(out, s, rep);
    // without fullness the two statuses may legitimately differ
    ok = ok && !rep.contradiction() && (!rep.is_full || rep.tdd == rep.domain_semiring);
  } else if (args.suite == "quantale") {
    auto rep = laws::quantale_suite(s, opt);
    print_quantale(out, s, rep);
    ok = ok && rep.core_pass() && rep.meet_one_fix_implication_ok;
  } else if (args.suite == "derived") {
    auto rep = laws::derived_suite(s, opt);
    print_derived(out, rep);
    ok = ok && rep.ok();
  } else if (!args.suite.empty()) {
    throw std::runtime_error("unknown suite '" + args.suite +
                             "' (known: coincidence, quantale, derived)");
  }
  return ok;
}

}  // namespace detail

inline int run_check(const CheckArgs& args, std::ostream& out) {
  laws::CheckOptions opt = options_from_env();
  opt.exhaustive = args.exhaustive;
  try {
    auto all = detail::load_algebras(args);
    if (all.empty()) throw std::runtime_error("no algebra blocks in input");
    bool ok = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) out << "\n";
      ok = detail::check_one(std::move(all[i]), args, opt, out) && ok;
    }
    return ok ? kExitPass : kExitFail;
  } catch (const std::invalid_argument& ex) {
    std::string msg = ex.what();
    out << "error: " << msg << "\n";
    if (msg.find("unknown law") != std::string::npos) out << detail::catalogue_listing();
    return kExitFail;
  } catch (const std::exception& ex) {
    out << "error: " << ex.what() << "\n";
    return kExitFail;
  }
}

inline int run_search(const SearchArgs& args, std::ostream& out) {
  laws::CheckOptions opt = options_from_env();
  opt.exhaustive = args.exhaustive;
  try {
    finder::SearchQuery q;
    try {
      q.satisfy = detail::parse_laws(args.satisfy_csv);
      q.violate = detail::parse_laws(args.violate_csv);
    } catch (const std::invalid_argument& ex) {
      out << "error: " << ex.what() << "\n" << detail::catalogue_listing();
      return kExitFail;
    }
    q.max_size = args.max_size;
    q.limit = args.limit;
    q.iso_reject = args.iso_reject;
    out << "# search satisfy=" << args.satisfy_csv << " violate=" << args.violate_csv
        << " max-size=" << args.max_size << " limit=" << args.limit
        << " iso-reject=" << (args.iso_reject ? "yes" : "no") << "\n";
    auto res = finder::search(q, opt);
    out << "# stats: dioids=" << res.stats.dioids << " pruned=" << res.stats.pruned
        << " candidates=" << res.stats.candidates << " checked=" << res.stats.checked << "\n";
    if (res.models.empty()) {
      out << "EXHAUSTED: none\n";
      return res.exhausted ? kExitExhausted : kExitFail;
    }
    for (const auto& fm : res.models) {
      out << io::render_algebra(fm.model);
      if (!fm.violated.empty()) out << "# " << fm.model.name << " violates " << fm.violated << "\n";
    }
    return kExitPass;
  } catch (const std::exception& ex) {
    out << "error: " << ex.what() << "\n";
    return kExitFail;
  }
}

}  // namespace domsr::cli
