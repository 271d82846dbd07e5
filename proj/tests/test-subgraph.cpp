#include <set>
#include <string>

#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

namespace fimon {

  namespace {
    Alphabet const xy{"x", "y"};
    GroupPtr const F = share(Group::free(xy));

    GroupElem el(char const* w) {
      return F->eval(parse_word(w, xy));
    }
    FTerm term(char const* t) {
      return parse_term(t, xy);
    }
    Word word(char const* w) {
      return parse_word(w, xy);
    }
    std::set<GroupElem> verts(std::initializer_list<char const*> ws) {
      std::set<GroupElem> out;
      for (auto w : ws) {
        out.insert(el(w));
      }
      return out;
    }
  }  // namespace

  TEST_CASE("span_path", "[subgraph]") {
    auto one = F->identity();
    auto d   = span_path(F, one, word("x x^-1"));
    CHECK(d.vertices() == verts({"", "x"}));
    CHECK(d.number_of_edges() == 1);
    CHECK(d.has_edge(one, pos(0)));
    CHECK(d.has_edge(el("x"), neg(0)));

    auto e = span_path(F, one, word(""));
    CHECK(e.vertices() == verts({""}));
    CHECK(e.number_of_edges() == 0);

    auto p = span_path(F, one, word("x y"));
    CHECK(p.vertices() == verts({"", "x", "x y"}));
    CHECK(p.number_of_edges() == 2);
    CHECK(is_connected(p));
  }

  TEST_CASE("span_journey", "[subgraph]") {
    auto one = F->identity();
    auto d   = span_journey(F, one, term("x^m y"));
    CHECK(d.vertices() == verts({"", "x", "x y"}));
    REQUIRE(d.number_of_edges() == 1);
    CHECK(d.has_edge(el("x"), pos(1)));
    CHECK(!is_connected(d));

    CHECK(span_journey(F, one, term("x y^-1 x")) == span_path(F, one, word("x y^-1 x")));

    auto jumps = span_journey(F, one, term("(x)^m (x^-1)^m"));
    CHECK(jumps.vertices() == verts({"", "x"}));
    CHECK(jumps.number_of_edges() == 0);
  }

  TEST_CASE("trace_path", "[subgraph]") {
    auto one = F->identity();
    auto d   = span_path(F, one, word("x"));
    CHECK(trace_path(d, one, word("x")) == el("x"));
    CHECK(!trace_path(d, one, word("y")));
    CHECK(trace_path(d, el("x"), word("x^-1")) == one);
    CHECK(trace_path(d, one, word("")) == one);
    CHECK(!trace_path(d, el("y"), word("")));
  }

  TEST_CASE("trace_journey", "[subgraph]") {
    auto     one = F->identity();
    auto     g   = el("x y x");
    Subgraph d(F);
    d.add_vertex(one);
    d.add_vertex(g);
    CHECK(trace_journey(d, one, term("(x y x)^m")) == g);
    CHECK(!trace_journey(d, one, term("x y x")));
    CHECK(!trace_journey(d, one, term("(x y)^m")));

    auto s = span_journey(F, one, term("x^m y"));
    CHECK(trace_journey(s, one, term("x^m y")) == el("x y"));
    CHECK(!trace_journey(s, one, term("x y")));
  }

  TEST_CASE("translate, union, contains", "[subgraph]") {
    test::Rng rng(8);
    auto      one = F->identity();
    for (int i = 0; i < 100; ++i) {
      auto d = test::random_subgraph(rng, F, 6, false);
      auto g = test::random_elem(rng, *F);
      CHECK(translate(one, d) == d);
      CHECK(translate(F->inverse(g), translate(g, d)) == d);
      CHECK(graph_union(d, d) == d);
      auto e = test::random_subgraph(rng, F, 6, false);
      CHECK(contains(graph_union(d, e), d));
      CHECK(contains(graph_union(d, e), e));
    }
    Subgraph single(F);
    single.add_vertex(one);
    CHECK(translate(el("x"), single).vertices() == verts({"x"}));

    Subgraph two = single;
    two.merge(translate(el("x"), single));
    CHECK(two.number_of_vertices() == 2);
    CHECK(components(two).size() == 2);

    Subgraph other(share(Group::free(Alphabet{"x"})));
    CHECK_THROWS_AS(graph_union(single, other), mismatch_error);
  }

  TEST_CASE("components", "[subgraph]") {
    auto one = F->identity();
    auto p   = span_path(F, one, word("x y x^-1"));
    auto c   = components(p);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == p);

    auto j  = span_journey(F, one, term("x^m y"));
    auto cj = components(j);
    REQUIRE(cj.size() == 2);
    CHECK(cj[0].vertices() == verts({""}));
    CHECK(cj[1] == span_path(F, el("x"), word("y")));
  }

  TEST_CASE("subgraph invariants", "[subgraph][property]") {
    test::Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      auto d = test::random_subgraph(rng, F, 6, false);
      for (auto const& v : d.vertices()) {
        for (auto l : {pos(0), neg(0), pos(1), neg(1)}) {
          // edge involution
          if (auto h = trace_path(d, v, Word{l})) {
            CHECK(trace_path(d, *h, Word{l.inverted()}) == v);
          }
        }
      }
      // components form a partition
      auto     parts = components(d);
      Subgraph joined(F);
      size_t   nv = 0, ne = 0;
      for (auto const& c : parts) {
        CHECK(is_connected(c));
        joined.merge(c);
        nv += c.number_of_vertices();
        ne += c.number_of_edges();
      }
      CHECK(joined == d);
      CHECK(nv == d.number_of_vertices());
      CHECK(ne == d.number_of_edges());

      // spans are G-equivariant and journeys end where the label says
      auto t = test::random_term(rng, 2, 8, 2);
      auto g = test::random_elem(rng, *F);
      auto s = span_journey(F, g, t);
      CHECK(s == translate(g, span_journey(F, F->identity(), t)));
      CHECK(trace_journey(s, g, t) == F->multiply(g, F->eval(t)));
      auto w = test::random_word(rng, 2, 8);
      CHECK(span_path(F, g, w) == translate(g, span_path(F, F->identity(), w)));
    }
  }

  TEST_CASE("to_dot", "[subgraph][dot]") {
    Subgraph single(F);
    single.add_vertex(F->identity());
    CHECK(to_dot(single)
          == "digraph \"subgraph\" {\n"
             "  node [shape=circle];\n"
             "  n0 [label=\"1\"];\n"
             "}\n");

    auto d = span_path(F, F->identity(), word("x"));
    CHECK(to_dot(d, {F->identity(), el("x")})
          == "digraph \"subgraph\" {\n"
             "  node [shape=circle];\n"
             "  n0 [label=\"1\", shape=doublecircle];\n"
             "  n1 [label=\"x\", shape=doublecircle];\n"
             "  n0 -> n1 [label=\"x\"];\n"
             "}\n");

    auto p = span_path(F, F->identity(), word("y^-1 x^-1"));
    auto q = span_path(F, F->identity(), word("y^-1"));
    q.merge(span_path(F, el("y^-1"), word("x^-1")));
    CHECK(to_dot(p) == to_dot(q));
    CHECK(to_dot(p).find("n1 -> n0 [label=\"y\"]") != std::string::npos);
  }

}  // namespace fimon
