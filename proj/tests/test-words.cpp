#include <string>

#include "catch_amalgamated.hpp"
#include "test-helpers.hpp"

namespace fimon {

  namespace {
    Alphabet const xy{"x", "y"};
    Letter const   x = pos(0), X = neg(0), y = pos(1), Y = neg(1);
  }  // namespace

  TEST_CASE("parse_word tokenizes without reducing", "[words]") {
    CHECK(parse_word("x y^-1 x", xy) == Word{x, Y, x});
    CHECK(parse_word("", xy).empty());
    CHECK(parse_word("   ", xy).empty());
    CHECK(parse_word("x x^-1", xy) == Word{x, X});
    CHECK(parse_word("(x y)^-1", xy) == Word{Y, X});
    CHECK(parse_word("(x (y x)^-1) y", xy) == Word{x, X, Y, y});
  }

  TEST_CASE("parse_word rejects malformed input", "[words]") {
    CHECK_THROWS_AS(parse_word("z", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x^2", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x^-1^-1", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x^-12", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x^", xy), parse_error);
    CHECK_THROWS_AS(parse_word("(x", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x)", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x^m", xy), parse_error);
    CHECK_THROWS_AS(parse_word("x, y", xy), parse_error);
  }

  TEST_CASE("Alphabet validates names", "[words]") {
    Alphabet a{"a1", "b_c", "Z"};
    CHECK(a.index("b_c") == 1);
    CHECK_THROWS_AS(a.index("q"), parse_error);
    CHECK_THROWS_AS(Alphabet({"1x"}), parse_error);
    CHECK_THROWS_AS(Alphabet({"x", "x"}), parse_error);
    CHECK_THROWS_AS(Alphabet({""}), parse_error);
  }

  TEST_CASE("invert_word", "[words]") {
    CHECK(invert_word(Word{x, y}) == Word{Y, X});
    CHECK(invert_word(Word{}).empty());
    test::Rng rng(1);
    for (int i = 0; i < 200; ++i) {
      auto w = test::random_word(rng, 3, 10);
      CHECK(invert_word(invert_word(w)) == w);
    }
  }

  TEST_CASE("free_reduce", "[words]") {
    CHECK(free_reduce(Word{x, X, y}) == Word{y});
    CHECK(free_reduce(Word{x, y, Y, x}) == Word{x, x});
    CHECK(free_reduce(Word{x, y, Y, X}).empty());
    CHECK(free_reduce(Word{X, x}).empty());
    test::Rng rng(2);
    for (int i = 0; i < 300; ++i) {
      auto w = test::random_word(rng, 2, 12);
      auto r = free_reduce(w);
      CHECK(free_reduce(r) == r);
      CHECK(is_reduced(r));
      CHECK(r.size() <= w.size());
      CHECK(free_reduce(w * invert_word(w)).empty());
    }
  }

  TEST_CASE("parse_term", "[words]") {
    auto t = parse_term("(x y)^m z", Alphabet{"x", "y", "z"});
    REQUIRE(t.jump_count() == 1);
    CHECK(t.segment(0).empty());
    CHECK(t.jump_word(0) == Word{pos(0), pos(1)});
    CHECK(t.segment(1) == Word{pos(2)});

    auto plain = parse_term("x", xy);
    CHECK(plain.is_word());
    CHECK(plain.as_word() == Word{x});

    auto single = parse_term("x^m y^m", xy);
    CHECK(single.jump_count() == 2);
    CHECK(single == FTerm::jump(Word{x}) * FTerm::jump(Word{y}));

    CHECK(parse_term("()^m", xy) == FTerm::jump(Word{}));
    CHECK(parse_term("((x)^m y)^-1", xy) == parse_term("y^-1 (x^-1)^m", xy));
  }

  TEST_CASE("parse_term rejects nested and malformed markers", "[words]") {
    CHECK_THROWS_AS(parse_term("(x^m)^m", xy), parse_error);
    CHECK_THROWS_AS(parse_term("(x (y)^m)^m", xy), parse_error);
    CHECK_THROWS_AS(parse_term("((x y)^m", xy), parse_error);
    CHECK_THROWS_AS(parse_term("x^m^m", xy), parse_error);
    CHECK_THROWS_AS(parse_term("x^M", xy), parse_error);
  }

  TEST_CASE("invert_term", "[words]") {
    Alphabet abc{"a", "b", "c"};
    auto     t = parse_term("a (b)^m c", abc);
    CHECK(invert_term(t) == parse_term("c^-1 (b^-1)^m a^-1", abc));
    auto w = parse_term("a b", abc);
    CHECK(invert_term(w) == FTerm(invert_word(w.as_word())));

    test::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      auto s = test::random_term(rng, 2, 10, 3);
      CHECK(invert_term(invert_term(s)) == s);
      CHECK(erase_m(invert_term(s)) == invert_word(erase_m(s)));
    }
  }

  TEST_CASE("erase_m", "[words]") {
    Alphabet abc{"x", "y", "z"};
    CHECK(erase_m(parse_term("(x y)^m z", abc)) == parse_word("x y z", abc));
    CHECK(erase_m(parse_term("x y", abc)) == parse_word("x y", abc));
    CHECK(erase_m(parse_term("x^m y^m", abc)) == parse_word("x y", abc));
  }

  TEST_CASE("printing", "[words]") {
    CHECK(to_string(Word{x, Y}, xy) == "x y^-1");
    CHECK(to_string(Word{}, xy).empty());
    CHECK(to_string(parse_term("x^m y", xy), xy) == "(x)^m y");
    CHECK(to_string(parse_term("(x y)^m ()^m", xy), xy) == "(x y)^m ()^m");
  }

  TEST_CASE("parse inverts print", "[words][property]") {
    test::Rng rng(4);
    for (int i = 0; i < 300; ++i) {
      auto t    = test::random_term(rng, 2, 12, 3);
      auto text = to_string(t, xy);
      CHECK(parse_term(text, xy) == t);
      CHECK(to_string(parse_term(text, xy), xy) == text);
    }
  }

}  // namespace fimon
