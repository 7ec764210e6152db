#include "diskpath/nielsen.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace diskpath {

Automorphism compose_moves(const MoveSequence& seq) {
  Automorphism acc(seq.rank);
  for (ElementaryMove m : seq.moves) acc = compose(elementary(m, seq.rank), acc);
  return acc;
}

MoveSequence parse_moves(const std::string& text, int rank) {
  MoveSequence seq{Word::check_rank(rank), {}};
  std::string tok;
  std::size_t pos = 0;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    ++pos;
    std::string t;
    for (char c : tok)
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') t.push_back(c);
    if (t.empty()) {
      if (pos == 1 && in.eof()) break;  // empty text: empty sequence
      throw ParseError("empty move token", pos);
    }
    if (t.size() != 1) throw ParseError("bad move token '" + t + "'", pos);
    seq.moves.push_back(move_from_char(t[0]));
  }
  return seq;
}

std::string format_moves(const MoveSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(move_char(seq.moves[i]));
  }
  return out;
}

std::string format_nielsen_move(const NielsenMove& m) {
  std::ostringstream out;
  switch (m.kind) {
    case NielsenMoveKind::MultiplyRight:
      out << "t" << m.i << " <- t" << m.i << " t" << m.j
          << (m.sign > 0 ? "" : "^-1");
      break;
    case NielsenMoveKind::MultiplyLeft:
      out << "t" << m.i << " <- t" << m.j << (m.sign > 0 ? "" : "^-1") << " t"
          << m.i;
      break;
    case NielsenMoveKind::Invert:
      out << "t" << m.i << " <- t" << m.i << "^-1";
      break;
    case NielsenMoveKind::Swap:
      out << "t" << m.i << " <-> t" << m.j;
      break;
  }
  return out.str();
}

namespace {

std::size_t idx(int slot) { return static_cast<std::size_t>(slot - 1); }

Word multiplied(const std::vector<Word>& t, const NielsenMove& m) {
  const Word& wi = t[idx(m.i)];
  const Word& wj = t[idx(m.j)];
  Word factor = m.sign > 0 ? wj : invert(wj);
  return m.kind == NielsenMoveKind::MultiplyRight ? concat(wi, factor)
                                                  : concat(factor, wi);
}

} // namespace

void apply_nielsen_move(std::vector<Word>& tuple, const NielsenMove& m) {
  switch (m.kind) {
    case NielsenMoveKind::MultiplyRight:
    case NielsenMoveKind::MultiplyLeft:
      tuple[idx(m.i)] = multiplied(tuple, m);
      break;
    case NielsenMoveKind::Invert:
      tuple[idx(m.i)] = invert(tuple[idx(m.i)]);
      break;
    case NielsenMoveKind::Swap:
      std::swap(tuple[idx(m.i)], tuple[idx(m.j)]);
      break;
  }
}

namespace {

// Resulting length of slot i after a multiplication move, without
// materializing the product.
std::size_t multiplied_length(const std::vector<Word>& t, int i, int j,
                              bool left, int sign) {
  const Word& a = t[idx(i)];
  const Word& b = t[idx(j)];
  std::size_t la = a.size(), lb = b.size(), c = 0;
  while (c < la && c < lb) {
    Letter x, y;
    if (!left) {
      // a . b^sign : compare tail of a against head of b^sign
      x = a.letter(la - 1 - c);
      y = sign > 0 ? b.letter(c) : -b.letter(lb - 1 - c);
    } else {
      // b^sign . a : compare tail of b^sign against head of a
      x = sign > 0 ? b.letter(lb - 1 - c) : -b.letter(c);
      y = a.letter(c);
    }
    if (x != -y) break;
    ++c;
  }
  return la + lb - 2 * c;
}

// Scans multiplication moves in tie-break order (side, then sign, inside
// the (i, j) loops) and keeps the first move with the maximal decrease.
bool best_decreasing_move(const std::vector<Word>& t, NielsenMove* out) {
  int g = static_cast<int>(t.size());
  long best = 0;
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      if (j == i) continue;
      for (int side = 0; side < 2; ++side) {
        for (int s = 0; s < 2; ++s) {
          int sign = s == 0 ? +1 : -1;
          long dec = static_cast<long>(t[idx(i)].size()) -
                     static_cast<long>(multiplied_length(t, i, j, side == 1, sign));
          if (dec > best) {
            best = dec;
            *out = {side == 0 ? NielsenMoveKind::MultiplyRight
                              : NielsenMoveKind::MultiplyLeft,
                    i, j, sign};
          }
        }
      }
    }
  }
  return best > 0;
}

bool has_decreasing_move(const std::vector<Word>& t) {
  NielsenMove m;
  return best_decreasing_move(t, &m);
}

std::string tuple_key(const std::vector<Word>& t) {
  std::string key;
  for (const Word& w : t) {
    key.append(reinterpret_cast<const char*>(w.letters().data()),
               w.letters().size() * sizeof(Letter));
    key.push_back('\0');
    key.push_back('\1');
  }
  return key;
}

constexpr std::size_t kPlateauBudget = 1u << 17;

// Breadth-first search through length-preserving moves (inversions and
// equal-length multiplications) for a tuple that admits a strict decrease.
// Greedy descent alone can stall on tuples where every product cancels
// exactly half of a factor; a basis is still reachable through such
// plateaus by length-preserving moves, so exhausting the plateau is what
// certifies "no basis" here.
bool plateau_escape(std::vector<Word>& tuple, std::vector<NielsenMove>& log) {
  int g = static_cast<int>(tuple.size());

  struct Node {
    std::vector<Word> t;
    std::size_t parent;
    NielsenMove via;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  nodes.push_back({tuple, 0, {}});
  seen.insert(tuple_key(tuple));

  auto visit = [&](std::size_t parent, const NielsenMove& m) -> bool {
    std::vector<Word> next = nodes[parent].t;
    apply_nielsen_move(next, m);
    if (!seen.insert(tuple_key(next)).second) return false;
    nodes.push_back({std::move(next), parent, m});
    return true;
  };

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes.size() > kPlateauBudget)
      throw std::runtime_error("nielsen_reduce: plateau search budget exceeded");
    if (head > 0 && has_decreasing_move(nodes[head].t)) {
      // Replay the move path onto the caller's tuple.
      std::vector<NielsenMove> path;
      for (std::size_t at = head; at != 0; at = nodes[at].parent)
        path.push_back(nodes[at].via);
      std::reverse(path.begin(), path.end());
      for (const NielsenMove& m : path) {
        apply_nielsen_move(tuple, m);
        log.push_back(m);
      }
      return true;
    }
    for (int i = 1; i <= g; ++i)
      visit(head, {NielsenMoveKind::Invert, i, 0, 0});
    for (int i = 1; i <= g; ++i) {
      for (int j = 1; j <= g; ++j) {
        if (j == i) continue;
        for (int side = 0; side < 2; ++side) {
          for (int s = 0; s < 2; ++s) {
            int sign = s == 0 ? +1 : -1;
            if (multiplied_length(nodes[head].t, i, j, side == 1, sign) !=
                nodes[head].t[idx(i)].size())
              continue;
            visit(head, {side == 0 ? NielsenMoveKind::MultiplyRight
                                   : NielsenMoveKind::MultiplyLeft,
                         i, j, sign});
          }
        }
      }
    }
  }
  return false;
}

bool is_letters_tuple(const std::vector<Word>& t) {
  std::vector<bool> used(t.size(), false);
  for (const Word& w : t) {
    if (w.size() != 1) return false;
    std::size_t gen = static_cast<std::size_t>(generator_of(w.letter(0)) - 1);
    if (used[gen]) return false;
    used[gen] = true;
  }
  return true;
}

void check_tuple(const std::vector<Word>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  int rank = tuple.front().rank();
  if (static_cast<int>(tuple.size()) != rank)
    throw std::invalid_argument("tuple size must equal the rank");
  for (const Word& w : tuple) {
    if (w.rank() != rank) throw RankError("tuple rank mismatch");
    if (w.empty()) throw std::invalid_argument("empty word in tuple");
  }
}

} // namespace

ReductionResult nielsen_reduce(std::vector<Word> tuple) {
  check_tuple(tuple);
  ReductionResult res;
  res.log.clear();
  for (;;) {
    NielsenMove m;
    if (best_decreasing_move(tuple, &m)) {
      apply_nielsen_move(tuple, m);
      res.log.push_back(m);
      continue;
    }
    if (is_letters_tuple(tuple)) break;
    if (!plateau_escape(tuple, res.log)) break;
  }
  res.tuple = std::move(tuple);
  return res;
}

bool is_basis(const std::vector<Word>& tuple) {
  check_tuple(tuple);
  // Cheap necessary condition before the full reduction.
  std::vector<std::vector<long long>> m(tuple.size(),
                                        std::vector<long long>(tuple.size()));
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    auto col = abelianize(tuple[j]);
    for (std::size_t i = 0; i < tuple.size(); ++i) m[i][j] = col[i];
  }
  long long det = integer_det(std::move(m));
  if (det != 1 && det != -1) return false;
  return is_letters_tuple(nielsen_reduce(tuple).tuple);
}

namespace {

using Letters = std::vector<ElementaryMove>;

void append(Letters& out, const Letters& more) {
  out.insert(out.end(), more.begin(), more.end());
}

void append_repeat(Letters& out, ElementaryMove m, int count) {
  for (int k = 0; k < count; ++k) out.push_back(m);
}

// Adjacent transposition (k, k+1) as elementary letters, first-applied first.
Letters adjacent_swap(int k, int g) {
  Letters out;
  append_repeat(out, ElementaryMove::D, (g - k + 1) % g);
  out.push_back(ElementaryMove::C);
  append_repeat(out, ElementaryMove::D, k - 1);
  return out;
}

// Letters composing to the permutation automorphism x_j -> x_{pi[j-1]}.
Letters perm_word(std::vector<int> pi, int g) {
  Letters out;
  // Bubble sort; each recorded position swap contributes one adjacent
  // transposition, earliest swap first.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 1; p < g; ++p) {
      if (pi[idx(p)] > pi[idx(p + 1)]) {
        std::swap(pi[idx(p)], pi[idx(p + 1)]);
        append(out, adjacent_swap(p, g));
        moved = true;
      }
    }
  }
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& pi) {
  std::vector<int> inv(pi.size());
  for (std::size_t p = 0; p < pi.size(); ++p)
    inv[static_cast<std::size_t>(pi[p] - 1)] = static_cast<int>(p) + 1;
  return inv;
}

// Permutation with pi(1) = i (and pi(2) = j when j > 0), remaining slots
// filled in increasing order.
std::vector<int> placing_perm(int i, int j, int g) {
  std::vector<int> pi;
  pi.push_back(i);
  if (j > 0) pi.push_back(j);
  for (int v = 1; v <= g; ++v)
    if (v != i && v != j) pi.push_back(v);
  return pi;
}

bool is_identity_perm(const std::vector<int>& pi) {
  for (std::size_t p = 0; p < pi.size(); ++p)
    if (pi[p] != static_cast<int>(p) + 1) return false;
  return true;
}

// base conjugated by the permutation automorphism of pi.
Letters conjugated(const Letters& base, const std::vector<int>& pi, int g) {
  if (is_identity_perm(pi)) return base;
  Letters out = perm_word(inverse_perm(pi), g);
  append(out, base);
  append(out, perm_word(pi, g));
  return out;
}

const Letters kRightPlus = {ElementaryMove::A};
const Letters kRightMinus = {ElementaryMove::C, ElementaryMove::B,
                             ElementaryMove::C, ElementaryMove::A,
                             ElementaryMove::C, ElementaryMove::B,
                             ElementaryMove::C};
const Letters kLeftPlus = {ElementaryMove::B, ElementaryMove::C,
                           ElementaryMove::B, ElementaryMove::C,
                           ElementaryMove::A, ElementaryMove::C,
                           ElementaryMove::B, ElementaryMove::C,
                           ElementaryMove::B};
const Letters kLeftMinus = {ElementaryMove::B, ElementaryMove::A,
                            ElementaryMove::B};

// Letters composing to the automorphism that performs the generalized move
// on generators: x_i -> x_i x_j^sign etc.
Letters expand_generalized(const NielsenMove& m, int g) {
  switch (m.kind) {
    case NielsenMoveKind::MultiplyRight:
      return conjugated(m.sign > 0 ? kRightPlus : kRightMinus,
                        placing_perm(m.i, m.j, g), g);
    case NielsenMoveKind::MultiplyLeft:
      return conjugated(m.sign > 0 ? kLeftPlus : kLeftMinus,
                        placing_perm(m.i, m.j, g), g);
    case NielsenMoveKind::Invert:
      return conjugated({ElementaryMove::B}, placing_perm(m.i, 0, g), g);
    case NielsenMoveKind::Swap: {
      // A pure permutation: (i j).
      std::vector<int> pi(static_cast<std::size_t>(g));
      for (int v = 1; v <= g; ++v) pi[idx(v)] = v;
      std::swap(pi[idx(m.i)], pi[idx(m.j)]);
      return perm_word(pi, g);
    }
  }
  return {};
}

NielsenMove inverse_generalized(const NielsenMove& m) {
  NielsenMove inv = m;
  if (m.kind == NielsenMoveKind::MultiplyRight ||
      m.kind == NielsenMoveKind::MultiplyLeft)
    inv.sign = -m.sign;
  return inv;
}

// Signed-permutation cleanup into exact identity; appends to log.
void normalize_letters(std::vector<Word>& t, std::vector<NielsenMove>& log) {
  int g = static_cast<int>(t.size());
  for (int i = 1; i <= g; ++i) {
    if (t[idx(i)].letter(0) < 0) {
      NielsenMove m{NielsenMoveKind::Invert, i, 0, 0};
      apply_nielsen_move(t, m);
      log.push_back(m);
    }
  }
  for (int pos = 1; pos <= g; ++pos) {
    int k = pos;
    while (generator_of(t[idx(k)].letter(0)) != pos) ++k;
    if (k != pos) {
      NielsenMove m{NielsenMoveKind::Swap, pos, k, 0};
      apply_nielsen_move(t, m);
      log.push_back(m);
    }
  }
}

} // namespace

MoveSequence decompose(const Automorphism& a) {
  int g = a.rank();
  for (const Word& w : a.images())
    if (w.empty()) throw NotAnAutomorphism("a generator image is empty");
  {
    long long det = integer_det(abelian_matrix(a));
    if (det != 1 && det != -1)
      throw NotAnAutomorphism("abelianization determinant is not a unit");
  }

  ReductionResult red = nielsen_reduce(a.images());
  if (!is_letters_tuple(red.tuple))
    throw NotAnAutomorphism("images do not form a free basis");
  std::vector<NielsenMove> log = std::move(red.log);
  normalize_letters(red.tuple, log);

  // Applying moves m_1..m_k to the image tuple multiplies the automorphism
  // on the right by the move automorphisms, ending at the identity, so
  //   a = rho(m_k)^{-1} o ... o rho(m_1)^{-1},
  // and rho(m_1)^{-1} acts first.
  MoveSequence out{g, {}};
  for (const NielsenMove& m : log)
    append(out.moves, expand_generalized(inverse_generalized(m), g));

  Automorphism recomposed = compose_moves(out);
  if (recomposed.images() != a.images())
    throw std::logic_error("decompose: recomposition mismatch");
  return out;
}

Automorphism inverse(const Automorphism& a) {
  MoveSequence seq = decompose(a);
  MoveSequence inv{a.rank(), {}};
  for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) {
    switch (*it) {
      case ElementaryMove::A:
        append(inv.moves, kRightMinus);
        break;
      case ElementaryMove::B:
        inv.moves.push_back(ElementaryMove::B);
        break;
      case ElementaryMove::C:
        inv.moves.push_back(ElementaryMove::C);
        break;
      case ElementaryMove::D:
        append_repeat(inv.moves, ElementaryMove::D, a.rank() - 1);
        break;
    }
  }
  return compose_moves(inv);
}

} // namespace diskpath
