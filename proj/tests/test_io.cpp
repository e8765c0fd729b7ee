#include <catch2/catch_amalgamated.hpp>

#include "domsr/finder.hpp"
#include "domsr/io.hpp"
#include "domsr/laws.hpp"
#include "domsr/models.hpp"

using namespace domsr;

namespace {

bool same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.name == b.name && a.n == b.n && a.elems == b.elems && a.add == b.add &&
         a.mul == b.mul && a.zero == b.zero && a.one == b.one && a.dom == b.dom &&
         a.adom == b.adom && a.tests == b.tests && a.cmpl == b.cmpl;
}

}  // namespace

TEST_CASE("render then parse is the identity on all built-ins") {
  for (const auto& name : models::builtin_names()) {
    INFO(name);
    auto s = models::builtin(name);
    auto back = io::parse_algebra_file(io::render_algebra(s));
    CHECK(same_algebra(s, back));
  }
}

TEST_CASE("round-trip keeps the optional sections") {
  auto s = models::builtin("chain3-d01");
  s.tests = Subset(3, {0, 2});
  s.cmpl = std::vector<int>{2, -1, 0};
  auto back = io::parse_algebra_file(io::render_algebra(s));
  CHECK(same_algebra(s, back));
  // and rendering the reparse reproduces the exact text
  CHECK(io::render_algebra(back) == io::render_algebra(s));
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = R"(# a comment
algebra tiny

elements 0 1   # trailing comment
zero 0
one 1
add
0 1
1 1
mul
0 0
0 1
end
)";
  auto s = io::parse_algebra_file(text);
  CHECK(s.n == 2);
  CHECK(s.one == 1);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line, const std::string& needle) {
    try {
      io::parse_algebra_file(text);
      FAIL("expected a parse error for " + needle);
    } catch (const io::ParseError& e) {
      INFO(e.what());
      CHECK(e.line == line);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("algebra x\nelements 0 1\nzero 0\none q\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nend\n", 4,
               "unknown element 'q'");
  expect_error("algebra x\nelements 0 0\nzero 0\nend\n", 2, "duplicate element name");
  expect_error("algebra x\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1\nmul\n0 0\n0 1\nend\n", 7,
               "ragged row");
  expect_error("algebra x\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 1\nend\n", 1,
               "missing section 'mul'");
  expect_error("algebra x\nelements 0 1\nzero 0\nzero 0\n", 4, "duplicate section");
  expect_error("algebra x\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n", 1,
               "missing 'end'");
  expect_error("algebra x\nelements 0 1\ncompl 0:q\n", 3, "unknown element");
}

TEST_CASE("parsed structures feed the law checker like the originals") {
  auto s = models::builtin("nonlocal4");
  auto back = io::parse_algebra_file(io::render_algebra(s));
  auto a = laws::check(s, {laws::LawId::lla, laws::LawId::locality});
  auto b = laws::check(back, {laws::LawId::lla, laws::LawId::locality});
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].status == b.results[i].status);
    CHECK(a.results[i].detail == b.results[i].detail);
  }
}

TEST_CASE("graph files parse and expand") {
  std::string text = R"(graph line3
vertices u v w
edge e1 u v
edge e2 v w
end
)";
  auto g = io::parse_graph_file(text);
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.size() == 2);
  CHECK(io::render_graph(g) == text);
  auto s = models::path_algebra(g);
  CHECK(s.n == 64);
}

TEST_CASE("graph file errors") {
  CHECK_THROWS_AS(io::parse_graph_file("graph g\nvertices u\nedge e1 u x\nend\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_graph_file("graph g\nvertices u\nedge e u u\nedge e u u\nend\n"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_graph_file("graph g\nvertices u v\n"), io::ParseError);
}

TEST_CASE("round-trip holds across every enumerated model with maps") {
  for (int n = 1; n <= 3; ++n)
    finder::enumerate_dioids(n, [&](const FiniteAlgebra& dioid) {
      for (const auto& d :
           finder::enumerate_domain_maps(dioid, finder::MapLawSet::domain_semiring)) {
        FiniteAlgebra s = dioid;
        s.dom = d;
        auto back = io::parse_algebra_file(io::render_algebra(s));
        CHECK(same_algebra(s, back));
      }
      return true;
    });
}

TEST_CASE("a stream may carry several algebra blocks") {
  std::string text = io::render_algebra(models::builtin("chain3-id")) + "\n" +
                     io::render_algebra(models::builtin("nonlocal4"));
  auto all = io::parse_algebra_stream(text);
  REQUIRE(all.size() == 2);
  CHECK(all[0].name == "chain3-id");
  CHECK(all[1].name == "nonlocal4");
}
