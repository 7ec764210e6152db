#include "diskpath/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diskpath {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

void check_letter(Letter l, int rank) {
  int g = generator_of(l);
  if (l == 0 || g > rank)
    throw RankError("letter index " + std::to_string(g) +
                    " out of range for rank " + std::to_string(rank));
}

} // namespace

Word reduce(const std::vector<Letter>& raw, int rank) {
  Word w(rank);
  w.letters_.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(l, rank);
    push_reduced(w.letters_, l);
  }
  return w;
}

Word word_from_reduced(std::vector<Letter> letters, int rank) {
  Word w(rank);
  w.letters_ = std::move(letters);
  return w;
}

Word generator_word(int index, int rank) {
  if (index < 1 || index > rank)
    throw RankError("generator index out of range");
  return word_from_reduced({index}, rank);
}

std::size_t seam_cancellation(const Word& a, const Word& b) {
  std::size_t c = 0;
  while (c < a.size() && c < b.size() &&
         a.letter(a.size() - 1 - c) == -b.letter(c))
    ++c;
  return c;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw RankError("concat: rank mismatch");
  std::size_t c = seam_cancellation(u, v);
  Word w(u.rank());
  w.letters_.reserve(u.size() + v.size() - 2 * c);
  w.letters_.insert(w.letters_.end(), u.letters().begin(),
                    u.letters().end() - static_cast<std::ptrdiff_t>(c));
  w.letters_.insert(w.letters_.end(),
                    v.letters().begin() + static_cast<std::ptrdiff_t>(c),
                    v.letters().end());
  return w;
}

Word invert(const Word& u) {
  Word w(u.rank());
  w.letters_.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word cyclic_reduce(const Word& u) {
  std::size_t lo = 0, hi = u.size();
  while (hi - lo >= 2 && u.letter(lo) == -u.letter(hi - 1)) {
    ++lo;
    --hi;
  }
  std::vector<Letter> mid(u.letters().begin() + static_cast<std::ptrdiff_t>(lo),
                          u.letters().begin() + static_cast<std::ptrdiff_t>(hi));
  return word_from_reduced(std::move(mid), u.rank());
}

bool word_less(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ka = letter_key(a.letter(i)), kb = letter_key(b.letter(i));
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

bool word_less_shortlex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return word_less(a, b);
}

namespace {

// Compares rotation `ra` of w against rotation `rb`; w is cyclically reduced.
bool rotation_less(const std::vector<Letter>& w, std::size_t ra,
                   std::size_t rb) {
  std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    int ka = letter_key(w[(ra + i) % n]), kb = letter_key(w[(rb + i) % n]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::vector<Letter> min_rotation(const std::vector<Letter>& w) {
  std::size_t n = w.size(), best = 0;
  for (std::size_t r = 1; r < n; ++r)
    if (rotation_less(w, r, best)) best = r;
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(best + i) % n];
  return out;
}

} // namespace

CyclicWord cyclic_canonical(const Word& u, bool unoriented) {
  Word core = cyclic_reduce(u);
  CyclicWord cw;
  cw.unoriented_ = unoriented;
  if (core.empty()) {
    cw.canonical_ = core;
    return cw;
  }
  std::vector<Letter> best = min_rotation(core.letters());
  if (unoriented) {
    std::vector<Letter> alt = min_rotation(invert(core).letters());
    Word a = word_from_reduced(best, core.rank());
    Word b = word_from_reduced(alt, core.rank());
    if (word_less(b, a)) best = std::move(alt);
  }
  cw.canonical_ = word_from_reduced(std::move(best), core.rank());
  return cw;
}

bool conjugate_eq(const Word& u, const Word& v, bool unoriented) {
  if (u.rank() != v.rank())
    throw RankError("conjugate_eq: rank mismatch");
  return cyclic_canonical(u, unoriented) == cyclic_canonical(v, unoriented);
}

Word cyclic_prefix(const Word& u) {
  std::size_t lo = 0, hi = u.size();
  while (hi - lo >= 2 && u.letter(lo) == -u.letter(hi - 1)) {
    ++lo;
    --hi;
  }
  std::vector<Letter> pre(u.letters().begin(),
                          u.letters().begin() + static_cast<std::ptrdiff_t>(lo));
  return word_from_reduced(std::move(pre), u.rank());
}

std::optional<Word> conjugator(const Word& t, const Word& u) {
  if (t.rank() != u.rank()) throw RankError("conjugator: rank mismatch");
  Word a = cyclic_prefix(t), tc = cyclic_reduce(t);
  Word b = cyclic_prefix(u), uc = cyclic_reduce(u);
  if (tc.size() != uc.size()) return std::nullopt;
  if (tc.empty()) return Word(u.rank());
  std::size_t n = tc.size();
  for (std::size_t m = 0; m < n; ++m) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      match = uc.letter(i) == tc.letter((i + m) % n);
    if (!match) continue;
    // uc = y tc y^{-1} with y the length-(n-m) suffix of tc.
    std::vector<Letter> y(tc.letters().begin() + static_cast<std::ptrdiff_t>(m),
                          tc.letters().end());
    Word w = concat(b, word_from_reduced(std::move(y), t.rank()));
    return concat(w, invert(a));
  }
  return std::nullopt;
}

std::vector<long long> abelianize(const Word& u) {
  std::vector<long long> e(static_cast<std::size_t>(u.rank()), 0);
  for (Letter l : u.letters())
    e[static_cast<std::size_t>(generator_of(l) - 1)] += sign_of(l);
  return e;
}

long long abelian_gcd(const Word& u) {
  long long g = 0;
  for (long long e : abelianize(u)) g = std::gcd(g, e < 0 ? -e : e);
  return g;
}

Word parse_word(const std::string& text, int rank) {
  Word::check_rank(rank);
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> raw;
  std::size_t pos = 0;
  while (in >> tok) {
    ++pos;
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
      throw ParseError("bad word token '" + tok + "'", pos);
    int idx = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9')
        throw ParseError("bad word token '" + tok + "'", pos);
      idx = idx * 10 + (tok[i] - '0');
      if (idx > kMaxRank)
        throw ParseError("generator index too large in '" + tok + "'", pos);
    }
    if (idx < 1 || idx > rank)
      throw ParseError("generator index out of range in '" + tok + "'", pos);
    raw.push_back(tok[0] == 'x' ? idx : -idx);
  }
  return reduce(raw, rank);
}

std::string format_word(const Word& u) {
  std::ostringstream out;
  bool first = true;
  for (Letter l : u.letters()) {
    if (!first) out << ' ';
    first = false;
    out << (l > 0 ? 'x' : 'X') << generator_of(l);
  }
  return out.str();
}

std::size_t word_hash(const Word& u) {
  // FNV-1a over rank and letters.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(u.rank()));
  for (Letter l : u.letters())
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l)));
  return static_cast<std::size_t>(h);
}

} // namespace diskpath
