#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diskpath/errors.hpp"

namespace diskpath {

inline constexpr int kMaxRank = 64;

// A letter is a signed generator index: +k encodes x_k, -k encodes x_k^{-1}.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter l) { return -l; }
inline int generator_of(Letter l) { return l < 0 ? -l : l; }
inline int sign_of(Letter l) { return l < 0 ? -1 : +1; }

// Total order on letters: x1 < X1 < x2 < X2 < ...
inline int letter_key(Letter l) {
  return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0);
}
inline Letter letter_from_key(int key) {
  Letter gen = key / 2 + 1;
  return (key % 2) ? -gen : gen;
}

/// Freely reduced word over the free group of the given rank.
class Word {
public:
  Word() : rank_(1) {}
  explicit Word(int rank) : rank_(check_rank(rank)) {}

  int rank() const { return rank_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter letter(std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  static int check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank)
      throw RankError("rank must be in 1.." + std::to_string(kMaxRank));
    return rank;
  }

private:
  friend Word reduce(const std::vector<Letter>&, int);
  friend Word concat(const Word&, const Word&);
  friend Word invert(const Word&);
  friend Word word_from_reduced(std::vector<Letter>, int);

  int rank_;
  std::vector<Letter> letters_;
};

Word reduce(const std::vector<Letter>& raw, int rank);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);

// Trusted constructor for letters already known to be freely reduced.
Word word_from_reduced(std::vector<Letter> letters, int rank);

Word generator_word(int index, int rank);

// Number of letters cancelling at the seam of a. b.
std::size_t seam_cancellation(const Word& a, const Word& b);

// Strips matching inverse end pairs; the result is a conjugate of u.
Word cyclic_reduce(const Word& u);

// Lexicographic on letter_key, shorter word first on prefix ties.
bool word_less(const Word& a, const Word& b);
// Length first, then word_less. Enumeration order.
bool word_less_shortlex(const Word& a, const Word& b);

/// Canonical representative of a conjugacy class: the cyclically reduced,
/// rotation-minimal form. With `unoriented`, rotations of the inverse
/// compete as well.
class CyclicWord {
public:
  CyclicWord() : unoriented_(true) {}

  const Word& canonical() const { return canonical_; }
  bool unoriented() const { return unoriented_; }
  std::size_t size() const { return canonical_.size(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.unoriented_ == b.unoriented_ && a.canonical_ == b.canonical_;
  }
  friend bool operator!=(const CyclicWord& a, const CyclicWord& b) {
    return !(a == b);
  }

private:
  friend CyclicWord cyclic_canonical(const Word&, bool);

  Word canonical_;
  bool unoriented_;
};

CyclicWord cyclic_canonical(const Word& u, bool unoriented);

bool conjugate_eq(const Word& u, const Word& v, bool unoriented);

// The stripped half: u = cyclic_prefix(u) . cyclic_reduce(u) . its inverse.
Word cyclic_prefix(const Word& u);

// Some w with u = w . t . w^{-1} when t and u are conjugate as oriented
// words; empty optional otherwise.
std::optional<Word> conjugator(const Word& t, const Word& u);

std::vector<long long> abelianize(const Word& u);

// gcd of the exponent-sum vector; 0 for the zero vector.
long long abelian_gcd(const Word& u);

// Text format: whitespace-separated tokens, x<k> for x_k and X<k> for its
// inverse. Empty text is the empty word.
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& u);

std::size_t word_hash(const Word& u);

} // namespace diskpath
