#include "diskpath/automorphism.hpp"

#include <algorithm>
#include <sstream>

namespace diskpath {

char move_char(ElementaryMove m) {
  switch (m) {
    case ElementaryMove::A: return 'A';
    case ElementaryMove::B: return 'B';
    case ElementaryMove::C: return 'C';
    case ElementaryMove::D: return 'D';
  }
  return '?';
}

ElementaryMove move_from_char(char c) {
  switch (c) {
    case 'A': return ElementaryMove::A;
    case 'B': return ElementaryMove::B;
    case 'C': return ElementaryMove::C;
    case 'D': return ElementaryMove::D;
  }
  throw ParseError(std::string("unknown move letter '") + c + "'");
}

Automorphism::Automorphism(int rank) : rank_(Word::check_rank(rank)), verified_(true) {
  images_.reserve(static_cast<std::size_t>(rank));
  for (int j = 1; j <= rank; ++j) images_.push_back(generator_word(j, rank));
}

Automorphism Automorphism::from_images(std::vector<Word> images, bool verified) {
  if (images.empty()) throw RankError("automorphism needs at least one image");
  int rank = images.front().rank();
  for (const Word& w : images)
    if (w.rank() != rank) throw RankError("image rank mismatch");
  if (static_cast<int>(images.size()) != rank)
    throw RankError("expected one image per generator");
  Automorphism a(rank);
  a.images_ = std::move(images);
  a.verified_ = verified;
  return a;
}

const Word& Automorphism::image(int generator) const {
  return images_.at(static_cast<std::size_t>(generator - 1));
}

bool Automorphism::is_identity() const {
  for (int j = 1; j <= rank_; ++j) {
    const Word& w = image(j);
    if (w.size() != 1 || w.letter(0) != j) return false;
  }
  return true;
}

Automorphism elementary(ElementaryMove m, int rank) {
  Word::check_rank(rank);
  if ((m == ElementaryMove::A || m == ElementaryMove::C) && rank < 2)
    throw RankError("move requires rank >= 2");
  Automorphism a(rank);
  std::vector<Word> img = a.images();
  switch (m) {
    case ElementaryMove::A:
      img[0] = concat(generator_word(1, rank), generator_word(2, rank));
      break;
    case ElementaryMove::B:
      img[0] = invert(generator_word(1, rank));
      break;
    case ElementaryMove::C:
      std::swap(img[0], img[1]);
      break;
    case ElementaryMove::D:
      std::rotate(img.begin(), img.begin() + 1, img.end());
      break;
  }
  return Automorphism::from_images(std::move(img), true);
}

Word apply(const Automorphism& a, const Word& u) {
  if (a.rank() != u.rank()) throw RankError("apply: rank mismatch");
  std::vector<Letter> out;
  out.reserve(u.size() * 2);
  auto push = [&out](Letter l) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  };
  for (Letter l : u.letters()) {
    const Word& img = a.image(generator_of(l));
    if (l > 0)
      for (Letter m : img.letters()) push(m);
    else
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        push(-*it);
  }
  return word_from_reduced(std::move(out), u.rank());
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.rank() != inner.rank()) throw RankError("compose: rank mismatch");
  std::vector<Word> img;
  img.reserve(static_cast<std::size_t>(inner.rank()));
  for (int j = 1; j <= inner.rank(); ++j) img.push_back(apply(outer, inner.image(j)));
  return Automorphism::from_images(std::move(img),
                                   outer.verified() && inner.verified());
}

std::vector<std::vector<long long>> abelian_matrix(const Automorphism& a) {
  std::size_t g = static_cast<std::size_t>(a.rank());
  std::vector<std::vector<long long>> m(g, std::vector<long long>(g, 0));
  for (std::size_t j = 0; j < g; ++j) {
    auto col = abelianize(a.image(static_cast<int>(j) + 1));
    for (std::size_t i = 0; i < g; ++i) m[i][j] = col[i];
  }
  return m;
}

// Fraction-free (Bareiss) elimination; exact for integer matrices.
long long integer_det(std::vector<std::vector<long long>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  using Wide = __int128;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

Automorphism parse_automorphism(const std::string& text) {
  // Split on ';' first, then parse `x<k> -> <word>` per part.
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  // Drop all-whitespace trailing parts.
  while (!parts.empty() &&
         parts.back().find_first_not_of(" \t\r\n") == std::string::npos)
    parts.pop_back();
  if (parts.empty()) throw ParseError("empty automorphism text");
  int rank = static_cast<int>(parts.size());
  Word::check_rank(rank);

  std::vector<Word> images(static_cast<std::size_t>(rank), Word(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  std::size_t pos = 0;
  for (const std::string& part : parts) {
    ++pos;
    std::size_t arrow = part.find("->");
    if (arrow == std::string::npos)
      throw ParseError("missing '->' in assignment '" + part + "'", pos);
    std::istringstream lhs(part.substr(0, arrow));
    std::string tok, extra;
    if (!(lhs >> tok) || (lhs >> extra))
      throw ParseError("bad assignment target in '" + part + "'", pos);
    if (tok.size() < 2 || tok[0] != 'x')
      throw ParseError("assignment target must be a generator", pos);
    int idx = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9')
        throw ParseError("bad generator '" + tok + "'", pos);
      idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1 || idx > rank)
      throw ParseError("generator index out of range in '" + tok + "'", pos);
    if (seen[static_cast<std::size_t>(idx - 1)])
      throw ParseError("generator x" + std::to_string(idx) + " assigned twice",
                       pos);
    seen[static_cast<std::size_t>(idx - 1)] = true;
    images[static_cast<std::size_t>(idx - 1)] =
        parse_word(part.substr(arrow + 2), rank);
  }
  return Automorphism::from_images(std::move(images), false);
}

std::string format_automorphism(const Automorphism& a) {
  std::ostringstream out;
  for (int j = 1; j <= a.rank(); ++j) {
    if (j > 1) out << "; ";
    out << 'x' << j << " -> " << format_word(a.image(j));
  }
  return out.str();
}

} // namespace diskpath
