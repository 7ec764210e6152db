#pragma once

#include <string>
#include <vector>

#include "diskpath/word.hpp"

namespace diskpath {

/// The four elementary Nielsen transformations.
///   A: x1 -> x1 x2          (rank >= 2)
///   B: x1 -> x1^{-1}        (rank >= 1)
///   C: x1 <-> x2            (rank >= 2)
///   D: xj -> x_{j+1}, cyclic; the identity at rank 1
enum class ElementaryMove : std::uint8_t { A, B, C, D };

char move_char(ElementaryMove m);
ElementaryMove move_from_char(char c);

/// Automorphism of the rank-g free group, stored as the tuple of generator
/// images. `verified` means the images are known to form a free basis.
///
/// Composition convention is right-to-left throughout: compose(f, h) applies
/// h first, so apply(compose(f, h), u) == apply(f, apply(h, u)).
class Automorphism {
public:
  explicit Automorphism(int rank);  // identity, verified

  static Automorphism from_images(std::vector<Word> images,
                                  bool verified = false);

  int rank() const { return rank_; }
  bool verified() const { return verified_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const;  // 1-based

  void mark_verified() { verified_ = true; }

  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }
  friend bool operator!=(const Automorphism& a, const Automorphism& b) {
    return !(a == b);
  }

private:
  int rank_;
  std::vector<Word> images_;
  bool verified_;
};

Automorphism elementary(ElementaryMove m, int rank);

Word apply(const Automorphism& a, const Word& u);
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

// Computed by decomposing into elementary moves, inverting each and
// reversing. Defined in nielsen.cpp. Throws NotAnAutomorphism.
Automorphism inverse(const Automorphism& a);

// Column j is abelianize(image of x_j).
std::vector<std::vector<long long>> abelian_matrix(const Automorphism& a);
long long integer_det(std::vector<std::vector<long long>> m);

// Text format: `x1 -> x1 x2; x2 -> x2`, one assignment per generator,
// every generator assigned exactly once. Rank is the assignment count.
Automorphism parse_automorphism(const std::string& text);
std::string format_automorphism(const Automorphism& a);

} // namespace diskpath
