#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "diskpath/automorphism.hpp"

namespace diskpath {

// Move enumeration is exponential in the rank; this caps the oracle.
inline constexpr int kMaxOracleRank = 8;

/// Multiplier-and-cut Whitehead automorphism. `cut` is a bitmask over
/// letter keys (see letter_key); the multiplier's bit is set and the bit of
/// its inverse is clear. Letters y outside {a, a^{-1}} map to
///   a^[y^{-1} in cut] . y . a^{-[y in cut]},
/// and the multiplier's generator is fixed. Signed permutations (the other
/// kind of Whitehead automorphism) never change cyclic length and play no
/// role in minimization.
struct WhiteheadMove {
  Letter multiplier = 0;
  std::uint32_t cut = 0;

  friend bool operator==(const WhiteheadMove& a, const WhiteheadMove& b) {
    return a.multiplier == b.multiplier && a.cut == b.cut;
  }
};

Automorphism whitehead_automorphism(const WhiteheadMove& m, int rank);
WhiteheadMove whitehead_inverse(const WhiteheadMove& m);

struct MinimizationLog {
  Word start;
  std::vector<WhiteheadMove> moves;
  CyclicWord end;  // oriented canonical form of the minimum
};

/// Greedy strict descent on cyclic length: while some Whitehead move
/// shortens the cyclic word, apply the best one (maximal decrease, ties by
/// smallest (multiplier key, cut mask)). The end has minimal cyclic length
/// in the automorphism orbit.
MinimizationLog whitehead_minimize(const Word& u);

bool is_primitive(const Word& u);

/// Verified automorphism a with apply(a, x1) conjugate to v (orientation
/// preserved). Built by inverting the replayed minimization log.
Automorphism extend_to_basis(const Word& v);

// gcd of the exponent vector is 1. Necessary for primitivity.
bool primitive_abelian_filter(const Word& u);

// One step of the descent: the best strictly reducing move on a cyclically
// reduced word, or found=false. The parallel kernel scans candidates with
// OpenMP and reduces deterministically, so both return identical results.
struct MoveSearchResult {
  bool found = false;
  long decrease = 0;
  WhiteheadMove move;
};

MoveSearchResult best_reducing_move_serial(const Word& cyc);
MoveSearchResult best_reducing_move_parallel(const Word& cyc);

/// Thread-safe memo for is_primitive, keyed by the unoriented canonical
/// text (primitivity is conjugation- and inversion-invariant).
class PrimitivityCache {
public:
  bool query(const Word& u);
  std::size_t size() const;

private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, bool> memo_;
};

} // namespace diskpath
