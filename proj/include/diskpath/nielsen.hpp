#pragma once

#include <string>
#include <vector>

#include "diskpath/automorphism.hpp"

namespace diskpath {

/// Sequence of elementary moves. moves[0] is applied first:
/// the composite automorphism is elementary(moves[k-1]) o ... o elementary(moves[0]).
struct MoveSequence {
  int rank = 1;
  std::vector<ElementaryMove> moves;

  std::size_t size() const { return moves.size(); }

  friend bool operator==(const MoveSequence& a, const MoveSequence& b) {
    return a.rank == b.rank && a.moves == b.moves;
  }
};

Automorphism compose_moves(const MoveSequence& seq);

// Comma-separated letters, e.g. `A,B,D,D,C`. Empty text is the empty sequence.
MoveSequence parse_moves(const std::string& text, int rank);
std::string format_moves(const MoveSequence& seq);

/// Generalized Nielsen move on a tuple of words.
enum class NielsenMoveKind : std::uint8_t {
  MultiplyRight,  // t_i <- t_i t_j^sign
  MultiplyLeft,   // t_i <- t_j^sign t_i
  Invert,         // t_i <- t_i^{-1}
  Swap            // t_i <-> t_j
};

struct NielsenMove {
  NielsenMoveKind kind;
  int i = 0;     // 1-based slot
  int j = 0;     // 1-based slot; unused for Invert
  int sign = 0;  // +1/-1; used by multiplications only

  friend bool operator==(const NielsenMove& a, const NielsenMove& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.sign == b.sign;
  }
};

std::string format_nielsen_move(const NielsenMove& m);
void apply_nielsen_move(std::vector<Word>& tuple, const NielsenMove& m);

struct ReductionResult {
  std::vector<Word> tuple;
  std::vector<NielsenMove> log;
};

// Greedy length reduction by generalized Nielsen moves. Applies the move
// with maximal length decrease, ties broken lexicographically by
// (move type, i, j, side, sign). When no move decreases the total length
// but the tuple is not yet a signed permuted basis, a bounded search over
// length-preserving moves looks for a tuple that admits a further decrease;
// those moves enter the log as well.
ReductionResult nielsen_reduce(std::vector<Word> tuple);

// True iff nielsen_reduce ends at g single letters on g distinct generators.
bool is_basis(const std::vector<Word>& tuple);

// Elementary-move decomposition: compose_moves(result) == a, generator-wise
// as reduced words. The identity decomposes to the empty sequence.
// Throws NotAnAutomorphism when the images are not a free basis.
MoveSequence decompose(const Automorphism& a);

} // namespace diskpath
