#include "doctest.h"

#include "diskpath/word.hpp"

#include "helpers.hpp"

using namespace diskpath;

TEST_CASE("reduce cancels inverse pairs") {
  CHECK(reduce({1, -1}, 2).empty());
  CHECK(format_word(reduce({1, 2, -2, 1}, 2)) == "x1 x1");
  CHECK(format_word(reduce({1, 2}, 2)) == "x1 x2");
}

TEST_CASE("reduce rejects out-of-range letters") {
  CHECK_THROWS_AS(reduce({3}, 2), RankError);
  CHECK_THROWS_AS(Word(0), RankError);
  CHECK_THROWS_AS(Word(65), RankError);
}

TEST_CASE("concat reduces at the seam only") {
  Word u = parse_word("x1 x2", 2);
  CHECK(format_word(concat(u, parse_word("X2", 2))) == "x1");
  CHECK(concat(parse_word("x1", 2), parse_word("X1", 2)).empty());
  CHECK(format_word(concat(parse_word("x1", 2), parse_word("x2", 2))) ==
        "x1 x2");
  CHECK_THROWS_AS(concat(Word(2), Word(3)), RankError);
}

TEST_CASE("invert reverses and flips") {
  CHECK(format_word(invert(parse_word("x1 x2", 2))) == "X2 X1");
  CHECK(invert(Word(2)).empty());
  CHECK(format_word(invert(parse_word("X1", 2))) == "x1");
}

TEST_CASE("cyclic canonical forms") {
  // Conjugate of x2: strip the x1 ... X1 shell.
  CHECK(cyclic_canonical(parse_word("x1 x2 X1", 2), false).canonical() ==
        parse_word("x2", 2));
  // Rotations agree.
  CHECK(cyclic_canonical(parse_word("x1 x2", 2), false) ==
        cyclic_canonical(parse_word("x2 x1", 2), false));
  // Inversion needs the unoriented flag.
  CHECK(conjugate_eq(parse_word("X1", 2), parse_word("x1", 2), true));
  CHECK_FALSE(conjugate_eq(parse_word("X1", 2), parse_word("x1", 2), false));
}

TEST_CASE("conjugate_eq basics") {
  CHECK(conjugate_eq(parse_word("x1 x2", 2), parse_word("x2 x1", 2), false));
  CHECK_FALSE(conjugate_eq(parse_word("x1", 2), parse_word("x2", 2), false));
}

TEST_CASE("abelianize") {
  CHECK(abelianize(parse_word("x1 x2 X1", 2)) ==
        std::vector<long long>{0, 1});
  CHECK(abelianize(parse_word("x1 x1", 2)) == std::vector<long long>{2, 0});
  CHECK(abelianize(Word(2)) == std::vector<long long>{0, 0});
  CHECK(abelian_gcd(parse_word("x1 x2 X1 X2", 2)) == 0);
  CHECK(abelian_gcd(parse_word("x1 x1", 2)) == 2);
}

TEST_CASE("word text round trip and errors") {
  CHECK(parse_word("", 3).empty());
  CHECK(format_word(parse_word("  x1   X3 ", 3)) == "x1 X3");
  CHECK_THROWS_AS(parse_word("x1 y2", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x3", 2), ParseError);
  try {
    parse_word("x1 bad x2", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.token_position() == 2);
  }
}

TEST_CASE("conjugator finds an explicit conjugating word") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 3);
    Word t = testutil::random_reduced_word(rng, rank, 1 + static_cast<int>(rng() % 8));
    Word c = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 5));
    Word u = concat(concat(c, t), invert(c));
    auto w = conjugator(t, u);
    REQUIRE(w.has_value());
    CHECK(concat(concat(*w, t), invert(*w)) == u);
  }
  CHECK_FALSE(conjugator(parse_word("x1", 2), parse_word("x2", 2)).has_value());
}

TEST_CASE("word algebra properties on random samples") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 500; ++iter) {
    int rank = 1 + static_cast<int>(rng() % 4);
    Word u = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 12));
    Word v = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 12));
    Word w = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 12));

    // reduce is idempotent on already reduced input.
    CHECK(reduce(u.letters(), rank) == u);
    // invert is an involution and concat(u, u^{-1}) collapses.
    CHECK(invert(invert(u)) == u);
    CHECK(concat(u, invert(u)).empty());
    // associativity of reduced products.
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    // abelianization is additive.
    auto eu = abelianize(u), ev = abelianize(v), euv = abelianize(concat(u, v));
    for (std::size_t i = 0; i < eu.size(); ++i)
      CHECK(euv[i] == eu[i] + ev[i]);
    // conjugacy is invariant under conjugation and preserves abelianization.
    Word conj = concat(concat(w, u), invert(w));
    CHECK(conjugate_eq(u, conj, false));
    CHECK(abelianize(u) == abelianize(cyclic_canonical(u, false).canonical()));
  }
}

TEST_CASE("conjugate_eq is an equivalence relation on samples") {
  std::mt19937_64 rng(43);
  std::vector<Word> pool;
  for (int i = 0; i < 40; ++i)
    pool.push_back(testutil::random_reduced_word(rng, 2, static_cast<int>(rng() % 6)));
  for (const Word& a : pool) {
    CHECK(conjugate_eq(a, a, true));
    for (const Word& b : pool) {
      CHECK(conjugate_eq(a, b, true) == conjugate_eq(b, a, true));
      for (const Word& c : pool) {
        if (conjugate_eq(a, b, true) && conjugate_eq(b, c, true))
          CHECK(conjugate_eq(a, c, true));
      }
    }
  }
}
