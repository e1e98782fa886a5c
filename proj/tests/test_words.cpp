#include "doctest.h"
#include "orefrac/braid_monoid.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/vec_monoid.hpp"
#include "orefrac/words.hpp"

using namespace orefrac;

TEST_CASE("positive words parse to letter sequences") {
  const auto klein = KleinMonoid::create();
  CHECK(parse_word(*klein, "x y x") == std::vector<std::size_t>{0, 1, 0});
  CHECK(parse_word(*klein, "  y\t x ") == std::vector<std::size_t>{1, 0});
  CHECK(parse_word(*klein, "1").empty());
  CHECK(parse_word(*klein, "x 1 y") == std::vector<std::size_t>{0, 1});
  CHECK(parse_word(*klein, "").empty());

  const auto vec = VecMonoid::create(2);
  CHECK(parse_word(*vec, "e1 e1 e2") == std::vector<std::size_t>{0, 0, 1});

  const auto braid = BraidMonoid::create(4);
  CHECK(parse_word(*braid, "s3 s1") == std::vector<std::size_t>{2, 0});
}

TEST_CASE("unknown tokens and stray inverses are rejected") {
  const auto klein = KleinMonoid::create();
  CHECK_THROWS_AS(parse_word(*klein, "x z"), ParseError);
  CHECK_THROWS_AS(parse_word(*klein, "x^-1"), ParseError);
  CHECK_THROWS_AS(parse_signed_word(*klein, "q^-1"), ParseError);

  const auto braid = BraidMonoid::create(3);
  CHECK_THROWS_AS(parse_word(*braid, "s3"), ParseError);  // only s1, s2
  CHECK_THROWS_AS(parse_word(*braid, "s0"), ParseError);
}

TEST_CASE("signed words carry inverse marks") {
  const auto braid = BraidMonoid::create(3);
  const auto word = parse_signed_word(*braid, "s1 s2^-1");
  REQUIRE(word.size() == 2);
  CHECK(word[0] == SignedLetter{0, false});
  CHECK(word[1] == SignedLetter{1, true});
  CHECK(render_signed_word(*braid, word) == "s1 s2^-1");
  CHECK(render_signed_word(*braid, {}) == "1");

  const auto klein = KleinMonoid::create();
  const auto w2 = parse_signed_word(*klein, "x 1 y^-1");
  REQUIRE(w2.size() == 2);
  CHECK(w2[1] == SignedLetter{1, true});
}
