#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diskpath/ledger.hpp"
#include "diskpath/whitehead.hpp"

namespace diskpath {

enum class CertificateType : std::uint8_t { Equal, Disjoint, Terminal };

/// Step certificate. Equal: the move fixes the tracked disk, the next word
/// is the same word. Disjoint: the tracked disk moves; the pair of W-side
/// witnesses from the fact table, pushed through the step prefix, certifies
/// the adjacency. Terminal: last step.
struct Certificate {
  CertificateType type = CertificateType::Terminal;
  std::optional<WitnessPair> witnesses;        // Disjoint only
  std::optional<ElementaryMove> ledger_ref;    // Disjoint only
};

struct PathStep {
  Word word;
  std::optional<ElementaryMove> move;  // absent on the last step
  Certificate certificate;
};

/// Certified sequence of primitive words from `source` to a word conjugate
/// to `target`. A compressed path has its Equal steps removed; witness
/// prefixes still record the dropped moves.
struct HPath {
  int rank = 1;
  Word source;
  Word target;
  bool compressed = false;
  std::vector<PathStep> steps;
};

/// Builds the certified path: normalizes u to the base generator, routes to
/// v by a decomposed automorphism, and attaches one certificate per move
/// with the tracked disk held at index 1. Throws NotPrimitive.
HPath synthesize(const Word& u, const Word& v);

/// Drops steps whose certificate is Equal (they produce no motion).
HPath compress(const HPath& p);

struct VerificationReport {
  bool wellformed = false;        // parseable words, first word = source
  bool primitive_words = false;   // (a), oracle-checked
  bool equal_steps = false;       // (b), algebraic
  bool disjoint_steps = false;    // (c), structural against the fact table
  bool endpoints = false;         // (d), algebraic
  std::vector<std::string> failures;

  bool pass() const {
    return wellformed && primitive_words && equal_steps && disjoint_steps &&
           endpoints;
  }
};

/// Re-checks every clause independently of synthesis. Clauses (a), (b), (d)
/// are verified algebraically; clause (c) reconstructs the expected
/// witnesses from the move list and the fact table, whose disjointness
/// statements are taken on trust.
VerificationReport verify(const HPath& p);
VerificationReport verify(const HPath& p, PrimitivityCache& cache);

nlohmann::json path_to_json(const HPath& p);
HPath path_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& r);

} // namespace diskpath
