#pragma once

#include <random>
#include <vector>

#include "diskpath/automorphism.hpp"
#include "diskpath/word.hpp"

namespace testutil {

inline diskpath::Word random_reduced_word(std::mt19937_64& rng, int rank,
                                          int length) {
  std::vector<diskpath::Letter> letters;
  diskpath::Letter prev = 0;
  for (int i = 0; i < length; ++i) {
    for (;;) {
      int k = static_cast<int>(rng() % static_cast<unsigned>(2 * rank));
      diskpath::Letter l = diskpath::letter_from_key(k);
      if (l == -prev) continue;
      letters.push_back(l);
      prev = l;
      break;
    }
  }
  return diskpath::word_from_reduced(std::move(letters), rank);
}

inline diskpath::ElementaryMove random_move(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return diskpath::ElementaryMove::A;
    case 1: return diskpath::ElementaryMove::B;
    case 2: return diskpath::ElementaryMove::C;
    default: return diskpath::ElementaryMove::D;
  }
}

// Product of up to max_moves random elementary moves; always verified.
inline diskpath::Automorphism random_automorphism(std::mt19937_64& rng,
                                                  int rank, int max_moves) {
  diskpath::Automorphism acc(rank);
  int n = static_cast<int>(rng() % static_cast<unsigned>(max_moves + 1));
  for (int i = 0; i < n; ++i) {
    diskpath::ElementaryMove m = random_move(rng);
    if (rank < 2 && (m == diskpath::ElementaryMove::A ||
                     m == diskpath::ElementaryMove::C))
      m = diskpath::ElementaryMove::B;
    acc = diskpath::compose(diskpath::elementary(m, rank), acc);
  }
  return acc;
}

} // namespace testutil
