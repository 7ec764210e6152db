#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diskpath/nielsen.hpp"

namespace diskpath {

/// Disk labels of the dual pair: V-side disks carry the generator words,
/// W-side disks are their duals.
enum class Side : std::uint8_t { V, W };

struct DiskLabel {
  Side side;
  int index;  // 1..g

  friend bool operator==(const DiskLabel& a, const DiskLabel& b) {
    return a.side == b.side && a.index == b.index;
  }
  friend bool operator<(const DiskLabel& a, const DiskLabel& b) {
    if (a.side != b.side) return a.side < b.side;
    return a.index < b.index;
  }
};

std::string format_label(const DiskLabel& l);
DiskLabel parse_label(const std::string& text);

/// A disk obtained from a base label by a composite of realized moves.
/// The prefix is a MoveSequence under the module-wide convention:
/// prefix[0] acts first at the base, so the composite automorphism of the
/// expression is elementary(prefix[k-1]) o ... o elementary(prefix[0]).
struct DiskExpr {
  DiskLabel base;
  MoveSequence prefix;

  friend bool operator==(const DiskExpr& a, const DiskExpr& b) {
    return a.base == b.base && a.prefix == b.prefix;
  }
};

/// Dual-disk pair certifying one step: `current` is a dual of the tracked
/// disk, `next` a dual of its image, each disjoint from the other pair.
struct WitnessPair {
  DiskExpr current;
  DiskExpr next;

  friend bool operator==(const WitnessPair& a, const WitnessPair& b) {
    return a.current == b.current && a.next == b.next;
  }
};

/// Which witness choices are backed by an explicit example and which follow
/// the permutation structure of the move.
enum class WitnessSource : std::uint8_t { None, Example, StandardDuals };

/// Static facts about the realized move: which labels stay fixed as
/// subsets, which move, where permutation moves send each label, and the
/// dual witnesses for the moved V-disks.
struct RealizationFact {
  ElementaryMove move;
  int rank;
  std::vector<DiskLabel> fixed;
  std::vector<DiskLabel> moved;
  std::map<DiskLabel, DiskExpr> image_map;    // permutation moves only
  std::map<int, WitnessPair> dual_witness;    // per moved V-index j
  WitnessSource witness_source = WitnessSource::None;

  bool is_fixed(const DiskLabel& l) const;
};

RealizationFact fact(ElementaryMove m, int rank);

// Word determined by a V-side expression: the prefix composite applied to
// x_j. W-side labels have no word under this scheme and throw.
Word word_of(const DiskExpr& expr);

nlohmann::json expr_json(const DiskExpr& e);
DiskExpr expr_from_json(const nlohmann::json& j, int rank);
nlohmann::json fact_json(const RealizationFact& f);
nlohmann::json ledger_json(int rank);

// Stable digest of the fact table at ranks 1..kLedgerHashRank, so emitted
// certificates are traceable to a table revision.
std::string ledger_table_hash();

// Structural invariants of the table; throws std::logic_error on violation.
void ledger_self_test(int max_rank);

} // namespace diskpath
