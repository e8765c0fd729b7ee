#include <catch2/catch_amalgamated.hpp>

#include "domsr/finder.hpp"
#include "domsr/laws.hpp"
#include "domsr/models.hpp"
#include "domsr/suites.hpp"

using namespace domsr;
using laws::LawId;
using laws::LawStatus;

TEST_CASE("chain3-id is a domain semiring with dom = id") {
  auto s = models::builtin("chain3-id");
  auto rep = laws::check(s, laws::expand_law_name("domain-semiring"));
  CHECK(rep.all_pass());
  CHECK(rep.is_domain_semiring == true);
}

TEST_CASE("nonlocal4: lla holds, locality fails at x=a y=a") {
  auto s = models::builtin("nonlocal4");
  auto rep = laws::check(s, {LawId::lla, LawId::locality});
  const auto* lla = rep.find(LawId::lla);
  REQUIRE(lla);
  CHECK(lla->pass());
  CHECK(lla->note.find("{0,1}") != std::string::npos);
  const auto* loc = rep.find(LawId::locality);
  REQUIRE(loc);
  REQUIRE(loc->status == LawStatus::fail);
  REQUIRE(loc->witness.size() == 2);
  CHECK(s.ename(loc->witness[0].elem) == "a");
  CHECK(s.ename(loc->witness[1].elem) == "a");
  CHECK(loc->detail == "d(x*d(y))=1 d(x*y)=0");
}

TEST_CASE("weakdom4 with the top-formula dom fails d1 at a") {
  auto s = models::builtin("weakdom4");
  s.dom = models::dom_via_top(s);
  CHECK((*s.dom)[1] == 0);  // d(a) = bot
  auto r = laws::eval_law(s, LawId::d1);
  REQUIRE(r.status == LawStatus::fail);
  REQUIRE(r.witness.size() == 1);
  CHECK(s.ename(r.witness[0].elem) == "a");
}

TEST_CASE("chain3-d01 satisfies the antidomain axioms") {
  auto s = models::builtin("chain3-d01");
  auto rep = laws::check(s, laws::expand_law_name("antidomain"));
  CHECK(rep.all_pass());
  CHECK(rep.is_antidomain_semiring == true);
}

TEST_CASE("laws requiring a missing table report N/A, never a pass") {
  auto s = models::builtin("chain3-id");  // no adom
  auto rep = laws::check(s, {LawId::a1, LawId::a2});
  for (const auto& r : rep.results) {
    CHECK(r.status == LawStatus::na);
    CHECK_FALSE(r.pass());
  }
  CHECK_FALSE(rep.all_pass());
  // galois-aux-1 needs an explicit compl table
  auto g = laws::eval_law(s, LawId::galois_aux_1);
  CHECK(g.status == LawStatus::na);
}

TEST_CASE("galois-aux holds on a test dioid with compl") {
  auto s = models::builtin("chain3-d01");
  s.tests = Subset(3, {0, 2});
  s.cmpl = std::vector<int>{2, -1, 0};
  REQUIRE(validate(s).ok());
  auto rep = laws::check(s, {LawId::galois_aux_1, LawId::galois_aux_2, LawId::test_dioid,
                             LawId::tests_meet});
  CHECK(rep.all_pass());

  // and on rel2 with complement relative to the identity relation
  auto r2 = models::rel_algebra(2);
  const int id = r2.one;
  Subset tests = subidentities(r2);
  std::vector<int> cmpl(r2.n, -1);
  tests.for_each([&](int p) { cmpl[p] = id & ~p; });
  r2.tests = tests;
  r2.cmpl = cmpl;
  REQUIRE(validate(r2).ok());
  CHECK(laws::check(r2, {LawId::galois_aux_1, LawId::galois_aux_2}).all_pass());
}

TEST_CASE("designated testset is used as the quantifier domain") {
  auto s = models::builtin("chain3-d01");
  s.tests = Subset(3, {0, 2});
  auto r = laws::eval_law(s, LawId::lla);
  CHECK(r.pass());
  CHECK(r.note.find("designated tests") != std::string::npos);
}

TEST_CASE("derived suite passes on certified structures") {
  for (const auto& name : {"chain3-id", "chain3-d01", "rel2", "pathdag3"}) {
    auto s = models::builtin(name);
    INFO(name);
    auto rep = laws::derived_suite(s);
    CHECK(rep.ok());
  }
  CHECK_THROWS_AS(laws::derived_suite(models::builtin("weakdom4")), std::invalid_argument);
}

TEST_CASE("coincidence on chain3-id: domain semiring, not full, no contradiction") {
  auto rep = laws::coincidence_check(models::builtin("chain3-id"));
  CHECK_FALSE(rep.is_full);
  CHECK(rep.full_detail == "witness a uncomplemented");
  CHECK(rep.domain_semiring);
  CHECK_FALSE(rep.tdd);  // d = id does not map into B = {0,1}
  CHECK_FALSE(rep.coincidence_ok.has_value());
  CHECK_FALSE(rep.sd_boolean);
  CHECK_FALSE(rep.contradiction());
}

TEST_CASE("coincidence on chain3-d01: tdd with B = S_d proper subset of S1") {
  auto s = models::builtin("chain3-d01");
  auto rep = laws::coincidence_check(s);
  CHECK(rep.tdd);
  CHECK(rep.domain_semiring);
  CHECK(rep.tests_B == Subset(3, {0, 2}));
  CHECK(rep.b_eq_sd_eq_image == true);
  CHECK(rep.sd_boolean);
  REQUIRE(rep.derived_ad.has_value());
  CHECK(*rep.derived_ad == std::vector<int>{2, 0, 0});  // the lattice2 antidomain
  CHECK(rep.derived_ad_laws->all_pass());
  CHECK(subidentities(s).count() == 3);  // S_d = {0,1} sits strictly inside S1
  CHECK_FALSE(rep.contradiction());
}

TEST_CASE("coincidence on rel2: full, tdd and domain semiring coincide") {
  auto rep = laws::coincidence_check(models::rel_algebra(2));
  CHECK(rep.is_full);
  CHECK(rep.tdd);
  CHECK(rep.domain_semiring);
  CHECK(rep.coincidence_ok == true);
  CHECK(rep.b_eq_sd_eq_image == true);
  CHECK(rep.sd_contains_max_bool);
  CHECK(rep.sd_boolean);
  CHECK(rep.derived_ad_laws->all_pass());
  CHECK_FALSE(rep.contradiction());
}

TEST_CASE("quantale suite on rel2 exhibits the empty-Y boundary") {
  laws::CheckOptions opt;
  opt.exhaustive = true;  // subset mode at 16 elements
  auto s = models::rel_algebra(2);
  auto rep = laws::quantale_suite(s, opt);
  CHECK(rep.mode == "subsets");
  CHECK(rep.core_pass());
  // R = {(a,a)} is carrier index 1; d(R)*top = {(a,a),(a,b)} = mask 3
  CHECK(std::find(rep.top_defects.begin(), rep.top_defects.end(), 1) != rep.top_defects.end());
  CHECK(s.prod((*s.dom)[1], 15) == 3);
  CHECK(rep.meet_one_fix.pass());
  CHECK(rep.sd_eq_s1);
  CHECK(rep.meet_one_fix_implication_ok);
}

TEST_CASE("quantale suite on chain3-id and the one-element algebra") {
  auto rep = laws::quantale_suite(models::builtin("chain3-id"));
  CHECK(rep.mode == "subsets");
  CHECK(rep.core_pass());
  CHECK(rep.meet_one_fix.pass());
  CHECK(rep.sd_eq_s1);

  FiniteAlgebra unit;
  unit.name = "unit";
  unit.n = 1;
  unit.elems = {"0"};
  unit.add = {0};
  unit.mul = {0};
  unit.dom = std::vector<int>{0};
  auto urep = laws::quantale_suite(unit);
  CHECK(urep.core_pass());
  CHECK(urep.top_defects.empty());
  CHECK(urep.meet_one_fix_implication_ok);
}

TEST_CASE("meet-one-fix fails on chain3-d01, matching S_d != S1") {
  // d(a meet 1) = d(a) = 1 but a meet 1 = a, so the identity fails; its
  // contrapositive agrees with S_d = {0,1} being a proper subset of S1
  auto rep = laws::quantale_suite(models::builtin("chain3-d01"));
  CHECK_FALSE(rep.meet_one_fix.pass());
  CHECK_FALSE(rep.sd_eq_s1);
  CHECK(rep.meet_one_fix_implication_ok);
}

TEST_CASE("d-adj matches lla on bounded structures") {
  for (const auto& name : {"chain3-id", "chain3-d01", "nonlocal4", "rel2", "pathdag3"}) {
    auto s = models::builtin(name);
    INFO(name);
    CHECK(laws::eval_law(s, LawId::lla).pass() == laws::eval_law(s, LawId::d_adj).pass());
  }
}

TEST_CASE("quantale suite falls back to the binary reduction on large models") {
  auto s = models::rel_algebra(2);
  auto rep = laws::quantale_suite(s);  // 16 > 12, no exhaustive flag
  CHECK(rep.mode == "binary");
  CHECK(rep.core_pass());
}

// soundness of the encodings: weak locality is derivable in every test dioid
// with predomain, so it must hold whenever those laws do
TEST_CASE("weak locality follows from predomain on every small model") {
  for (int n = 1; n <= 3; ++n)
    finder::enumerate_dioids(n, [&](const FiniteAlgebra& dioid) {
      for (auto& d : finder::enumerate_domain_maps(dioid, finder::MapLawSet::predomain)) {
        FiniteAlgebra s = dioid;
        s.dom = d;
        if (laws::check(s, {LawId::test_dioid, LawId::predomain_1, LawId::predomain_2}).all_pass())
          CHECK(laws::eval_law(s, LawId::weak_locality).pass());
      }
      return true;
    });
  for (const auto& name : {"chain3-id", "chain3-d01", "nonlocal4"}) {
    auto s = models::builtin(name);
    if (laws::check(s, {LawId::test_dioid, LawId::predomain_1, LawId::predomain_2}).all_pass())
      CHECK(laws::eval_law(s, LawId::weak_locality).pass());
  }
}

TEST_CASE("lla and predomain are equivalent on the full built-ins") {
  for (const auto& name : {"nonlocal4", "rel2", "pathdag3"}) {
    auto s = models::builtin(name);
    INFO(name);
    REQUIRE(laws::eval_law(s, LawId::full).pass());
    bool lla = laws::eval_law(s, LawId::lla).pass();
    bool pre = laws::check(s, {LawId::predomain_1, LawId::predomain_2}).all_pass();
    CHECK(lla == pre);
  }
}

TEST_CASE("summary booleans") {
  auto s = models::rel_algebra(2);
  std::vector<LawId> ids = laws::dioid_laws();
  for (auto id : {LawId::full, LawId::test_dioid, LawId::tdd, LawId::boolean_monoid})
    ids.push_back(id);
  for (auto id : laws::expand_law_name("domain-semiring")) ids.push_back(id);
  for (auto id : laws::expand_law_name("antidomain")) ids.push_back(id);
  auto rep = laws::check(s, ids);
  CHECK(rep.is_dioid == true);
  CHECK(rep.is_test_dioid == true);
  CHECK(rep.is_tdd == true);
  CHECK(rep.is_domain_semiring == true);
  CHECK(rep.is_antidomain_semiring == true);
  CHECK(rep.is_full == true);
  CHECK(rep.is_boolean_quantale == true);
}

TEST_CASE("each checker notices a single corrupted cell") {
  auto base = [] { return models::builtin("rel2"); };
  auto fails = [](const FiniteAlgebra& s, LawId id) {
    return laws::eval_law(s, id).status == LawStatus::fail;
  };
  {
    auto s = base();
    s.add[1 * s.n + 1] = 0;  // R+R corrupted for R = {(a,a)}
    CHECK(fails(s, LawId::add_idem));
  }
  {
    auto s = base();
    s.add[1 * s.n + 2] = 0;
    CHECK(fails(s, LawId::add_comm));
  }
  {
    auto s = base();
    s.mul[(std::size_t)s.one * s.n + 2] = 0;  // 1*x
    CHECK(fails(s, LawId::mul_one));
  }
  {
    auto s = base();
    s.mul[(std::size_t)s.zero * s.n + 2] = 2;  // 0*x
    CHECK(fails(s, LawId::mul_zero));
  }
  {
    auto s = base();
    (*s.dom)[s.zero] = s.one;
    CHECK(fails(s, LawId::d4));
  }
  {
    auto s = base();
    (*s.dom)[1] = 15;  // d(R) = top is no subidentity
    CHECK(fails(s, LawId::d3));
    CHECK(fails(s, LawId::d5));
  }
  {
    auto s = base();
    (*s.adom)[1] = s.one;  // ad(R)*R != 0
    CHECK(fails(s, LawId::a1));
  }
  {
    auto s = base();
    (*s.dom)[3] = 0;  // d({(a,a),(a,b)}) = 0 breaks d1
    CHECK(fails(s, LawId::d1));
  }
}

TEST_CASE("witnesses are lexicographically minimal") {
  // break commutativity at several cells; the reported witness must be the
  // first offending pair in row-major order
  auto s = models::builtin("chain3-id");
  s.add[0 * 3 + 2] = 0;  // 0+1 = 0 while 1+0 = 1
  s.add[1 * 3 + 2] = 1;  // a+1 = a while 1+a = 1
  auto r = laws::eval_law(s, LawId::add_comm);
  REQUIRE(r.status == LawStatus::fail);
  CHECK(r.witness[0].elem == 0);
  CHECK(r.witness[1].elem == 2);
}
