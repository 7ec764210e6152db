#include "doctest.h"

#include "diskpath/whitehead.hpp"

#include "brute_orbit.hpp"
#include "helpers.hpp"

using namespace diskpath;

TEST_CASE("whitehead automorphism shapes") {
  // Multiplier x2, cut {x2, x1}: x1 -> x1 X2, x2 fixed.
  WhiteheadMove m{2, 0u};
  m.cut = (1u << letter_key(2)) | (1u << letter_key(1));
  Automorphism a = whitehead_automorphism(m, 2);
  CHECK(format_word(a.image(1)) == "x1 X2");
  CHECK(format_word(a.image(2)) == "x2");

  // Cut containing both x1 and X1 conjugates: x1 -> x2 x1 X2.
  WhiteheadMove c{2, 0u};
  c.cut = (1u << letter_key(2)) | (1u << letter_key(1)) | (1u << letter_key(-1));
  Automorphism b = whitehead_automorphism(c, 2);
  CHECK(format_word(b.image(1)) == "x2 x1 X2");

  CHECK_THROWS(whitehead_automorphism(WhiteheadMove{1, 0u}, 2));
}

TEST_CASE("whitehead move inverse") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 100; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 3);
    int mk = static_cast<int>(rng() % static_cast<unsigned>(2 * rank));
    WhiteheadMove m{letter_from_key(mk), 0u};
    m.cut = 1u << mk;
    for (int k = 0; k < 2 * rank; ++k) {
      if (k / 2 == mk / 2) continue;
      if (rng() % 2) m.cut |= 1u << k;
    }
    Automorphism a = whitehead_automorphism(m, rank);
    Automorphism b = whitehead_automorphism(whitehead_inverse(m), rank);
    CHECK(compose(a, b).is_identity());
  }
}

TEST_CASE("minimization on the spec staples") {
  MinimizationLog l1 = whitehead_minimize(parse_word("x1", 2));
  CHECK(l1.moves.empty());
  CHECK(l1.end.canonical() == parse_word("x1", 2));

  MinimizationLog l2 = whitehead_minimize(parse_word("x1 x2", 2));
  CHECK(l2.end.size() == 1);

  MinimizationLog l3 = whitehead_minimize(parse_word("x1 x1", 2));
  CHECK(l3.end.size() == 2);
  CHECK(l3.moves.empty());

  CHECK_THROWS(whitehead_minimize(Word(2)));
  CHECK_THROWS_AS(whitehead_minimize(parse_word("x1", 9)), RankError);
}

TEST_CASE("is_primitive basics") {
  CHECK(is_primitive(parse_word("x1", 2)));
  CHECK(is_primitive(parse_word("x1 x2", 2)));
  CHECK_FALSE(is_primitive(parse_word("x1 x2 X1 X2", 2)));
  CHECK_FALSE(is_primitive(parse_word("x1 x1", 2)));
  CHECK_THROWS(is_primitive(Word(2)));
}

TEST_CASE("primitivity is conjugation and inversion invariant") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 120; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 2);
    Word u = testutil::random_reduced_word(rng, rank,
                                           1 + static_cast<int>(rng() % 7));
    Word w = testutil::random_reduced_word(rng, rank,
                                           static_cast<int>(rng() % 5));
    bool p = is_primitive(u);
    CHECK(is_primitive(concat(concat(w, u), invert(w))) == p);
    CHECK(is_primitive(invert(u)) == p);
    if (p) CHECK(primitive_abelian_filter(u));
  }
}

TEST_CASE("images of x1 under random automorphisms are primitive") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 150; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 3);
    Automorphism a = testutil::random_automorphism(rng, rank, 15);
    CHECK(is_primitive(apply(a, generator_word(1, rank))));
  }
}

TEST_CASE("abelian filter") {
  CHECK_FALSE(primitive_abelian_filter(parse_word("x1 x1", 2)));
  CHECK(primitive_abelian_filter(parse_word("x1 x2", 2)));
  CHECK_FALSE(primitive_abelian_filter(parse_word("x1 x2 X1 X2", 2)));
}

TEST_CASE("extend_to_basis routes x1 to the word") {
  CHECK(extend_to_basis(parse_word("x1", 2)).is_identity());

  Word v2 = parse_word("x2", 2);
  Automorphism a2 = extend_to_basis(v2);
  CHECK(a2.verified());
  CHECK(conjugate_eq(apply(a2, generator_word(1, 2)), v2, false));

  std::mt19937_64 rng(24);
  for (int iter = 0; iter < 80; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 2);
    Automorphism a = testutil::random_automorphism(rng, rank, 10);
    Word v = apply(a, generator_word(1, rank));
    Automorphism ext = extend_to_basis(v);
    CHECK(ext.verified());
    CHECK(conjugate_eq(apply(ext, generator_word(1, rank)), v, false));
  }

  CHECK_THROWS_AS(extend_to_basis(parse_word("x1 x1", 2)), NotPrimitive);
}

TEST_CASE("serial and parallel move scans agree") {
  std::mt19937_64 rng(25);
  for (int iter = 0; iter < 60; ++iter) {
    int rank = 2 + static_cast<int>(rng() % 4);
    Word w = cyclic_reduce(testutil::random_reduced_word(
        rng, rank, 2 + static_cast<int>(rng() % 10)));
    if (w.empty()) continue;
    MoveSearchResult s = best_reducing_move_serial(w);
    MoveSearchResult p = best_reducing_move_parallel(w);
    CHECK(s.found == p.found);
    if (s.found) {
      CHECK(s.decrease == p.decrease);
      CHECK(s.move == p.move);
    }
  }
}

TEST_CASE("exhaustive agreement with the brute orbit oracle at rank 2") {
  testutil::BruteOrbit oracle(2, 8);
  // Every reduced word of length <= 6 over rank 2.
  std::vector<Word> stack{Word(2)};
  std::size_t checked = 0;
  std::vector<Word> frontier{Word(2)};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int k = 0; k < 4; ++k) {
        Letter l = letter_from_key(k);
        if (!w.empty() && w.letter(w.size() - 1) == -l) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(word_from_reduced(std::move(ls), 2));
      }
    }
    for (const Word& w : next) {
      CHECK(is_primitive(w) == oracle.contains(w));
      ++checked;
    }
    frontier = std::move(next);
  }
  CHECK(checked == 4 + 12 + 36 + 108 + 324 + 972);
}

TEST_CASE("primitivity cache is consistent") {
  PrimitivityCache cache;
  CHECK(cache.query(parse_word("x1 x2", 2)));
  CHECK(cache.query(parse_word("x2 x1", 2)));  // same class, cached
  CHECK_FALSE(cache.query(parse_word("x1 x1", 2)));
  CHECK(cache.size() == 2);
}
