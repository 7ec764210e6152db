#include "diskpath/ledger.hpp"

#include <sstream>

namespace diskpath {

std::string format_label(const DiskLabel& l) {
  return (l.side == Side::V ? "V" : "W") + std::to_string(l.index);
}

DiskLabel parse_label(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'V' && text[0] != 'W'))
    throw ParseError("bad disk label '" + text + "'");
  int idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("bad disk label '" + text + "'");
    idx = idx * 10 + (text[i] - '0');
  }
  if (idx < 1 || idx > kMaxRank)
    throw ParseError("disk label index out of range in '" + text + "'");
  return {text[0] == 'V' ? Side::V : Side::W, idx};
}

bool RealizationFact::is_fixed(const DiskLabel& l) const {
  for (const DiskLabel& f : fixed)
    if (f == l) return true;
  return false;
}

namespace {

DiskExpr plain(Side side, int index, int rank) {
  return {{side, index}, MoveSequence{rank, {}}};
}

DiskExpr moved_by(Side side, int index, ElementaryMove m, int rank) {
  return {{side, index}, MoveSequence{rank, {m}}};
}

} // namespace

RealizationFact fact(ElementaryMove m, int rank) {
  Word::check_rank(rank);
  if ((m == ElementaryMove::A || m == ElementaryMove::C) && rank < 2)
    throw RankError("move requires rank >= 2");

  RealizationFact f;
  f.move = m;
  f.rank = rank;

  auto fix_all_except = [&](std::vector<DiskLabel> except) {
    for (int s = 0; s < 2; ++s) {
      for (int j = 1; j <= rank; ++j) {
        DiskLabel l{s == 0 ? Side::V : Side::W, j};
        bool is_moved = false;
        for (const DiskLabel& e : except)
          if (e == l) is_moved = true;
        (is_moved ? f.moved : f.fixed).push_back(l);
      }
    }
  };

  switch (m) {
    case ElementaryMove::A:
      // The isotopy drags the tracked disk along the second handle; only
      // D_1 and its counterpart D'_2 change as subsets.
      fix_all_except({{Side::V, 1}, {Side::W, 2}});
      f.dual_witness[1] = {moved_by(Side::W, 2, ElementaryMove::A, rank),
                           plain(Side::W, 2, rank)};
      f.witness_source = WitnessSource::Example;
      break;

    case ElementaryMove::B:
      // A half-turn of the first handle; every disk stays put as a subset.
      fix_all_except({});
      break;

    case ElementaryMove::C:
      fix_all_except({{Side::V, 1}, {Side::V, 2}, {Side::W, 1}, {Side::W, 2}});
      f.image_map[{Side::V, 1}] = plain(Side::V, 2, rank);
      f.image_map[{Side::V, 2}] = plain(Side::V, 1, rank);
      f.image_map[{Side::W, 1}] = plain(Side::W, 2, rank);
      f.image_map[{Side::W, 2}] = plain(Side::W, 1, rank);
      f.dual_witness[1] = {plain(Side::W, 1, rank), plain(Side::W, 2, rank)};
      f.dual_witness[2] = {plain(Side::W, 2, rank), plain(Side::W, 1, rank)};
      f.witness_source = WitnessSource::StandardDuals;
      break;

    case ElementaryMove::D: {
      if (rank == 1) {
        // The cyclic shift is the identity at rank 1.
        fix_all_except({});
        break;
      }
      std::vector<DiskLabel> all;
      for (int s = 0; s < 2; ++s)
        for (int j = 1; j <= rank; ++j)
          all.push_back({s == 0 ? Side::V : Side::W, j});
      fix_all_except(all);
      for (int j = 1; j <= rank; ++j) {
        int next = j % rank + 1;
        f.image_map[{Side::V, j}] = plain(Side::V, next, rank);
        f.image_map[{Side::W, j}] = plain(Side::W, next, rank);
        f.dual_witness[j] = {plain(Side::W, j, rank), plain(Side::W, next, rank)};
      }
      f.witness_source = WitnessSource::StandardDuals;
      break;
    }
  }
  return f;
}

Word word_of(const DiskExpr& expr) {
  if (expr.base.side != Side::V)
    throw std::invalid_argument(
        "word_of: W-side labels are symbolic witnesses and have no word");
  if (expr.base.index > expr.prefix.rank)
    throw RankError("word_of: label index exceeds rank");
  return apply(compose_moves(expr.prefix),
               generator_word(expr.base.index, expr.prefix.rank));
}

nlohmann::json expr_json(const DiskExpr& e) {
  return {{"base", format_label(e.base)}, {"prefix", format_moves(e.prefix)}};
}

DiskExpr expr_from_json(const nlohmann::json& j, int rank) {
  DiskExpr e;
  e.base = parse_label(j.at("base").get<std::string>());
  e.prefix = parse_moves(j.at("prefix").get<std::string>(), rank);
  return e;
}

nlohmann::json fact_json(const RealizationFact& f) {
  nlohmann::json j;
  j["move"] = std::string(1, move_char(f.move));
  j["rank"] = f.rank;
  auto labels = [](const std::vector<DiskLabel>& ls) {
    nlohmann::json arr = nlohmann::json::array();
    for (const DiskLabel& l : ls) arr.push_back(format_label(l));
    return arr;
  };
  j["fixed"] = labels(f.fixed);
  j["moved"] = labels(f.moved);
  nlohmann::json wit = nlohmann::json::object();
  for (const auto& [idx, pair] : f.dual_witness)
    wit[std::to_string(idx)] = {expr_json(pair.current), expr_json(pair.next)};
  j["witnesses"] = wit;
  if (!f.image_map.empty()) {
    nlohmann::json im = nlohmann::json::object();
    for (const auto& [label, expr] : f.image_map)
      im[format_label(label)] = expr_json(expr);
    j["image_map"] = im;
  }
  switch (f.witness_source) {
    case WitnessSource::None:
      j["witness_selection"] = nullptr;
      break;
    case WitnessSource::Example:
      j["witness_selection"] = "example";
      break;
    case WitnessSource::StandardDuals:
      // These follow the permutation structure of the move; the particular
      // pairing is an implementation selection.
      j["witness_selection"] = "standard-duals";
      j["implementation_selected"] = true;
      break;
  }
  return j;
}

nlohmann::json ledger_json(int rank) {
  nlohmann::json arr = nlohmann::json::array();
  for (ElementaryMove m : {ElementaryMove::A, ElementaryMove::B,
                           ElementaryMove::C, ElementaryMove::D}) {
    if ((m == ElementaryMove::A || m == ElementaryMove::C) && rank < 2)
      continue;
    arr.push_back(fact_json(fact(m, rank)));
  }
  return arr;
}

namespace {
constexpr int kLedgerHashRank = 6;
}

std::string ledger_table_hash() {
  std::uint64_t h = 1469598103934665603ull;
  for (int g = 1; g <= kLedgerHashRank; ++g) {
    std::string dump = ledger_json(g).dump();
    for (unsigned char c : dump) {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

void ledger_self_test(int max_rank) {
  for (int g = 1; g <= max_rank; ++g) {
    for (ElementaryMove m : {ElementaryMove::A, ElementaryMove::B,
                             ElementaryMove::C, ElementaryMove::D}) {
      if ((m == ElementaryMove::A || m == ElementaryMove::C) && g < 2)
        continue;
      RealizationFact f = fact(m, g);
      if (f.fixed.size() + f.moved.size() != static_cast<std::size_t>(2 * g))
        throw std::logic_error("ledger: labels not covered");
      Automorphism em = elementary(m, g);
      for (int j = 1; j <= g; ++j) {
        DiskLabel vj{Side::V, j};
        if (f.is_fixed(vj)) {
          // A fixed disk keeps its boundary circle; the word may come back
          // with the opposite orientation (the half-turn does), so the
          // check is up to unoriented conjugacy.
          if (!conjugate_eq(apply(em, generator_word(j, g)),
                            generator_word(j, g), true))
            throw std::logic_error("ledger: fixed V-label with moved word");
        } else if (f.dual_witness.find(j) == f.dual_witness.end()) {
          throw std::logic_error("ledger: moved V-label without witness");
        }
      }
      for (const auto& [idx, pair] : f.dual_witness) {
        (void)idx;
        if (pair.current.base.side != Side::W || pair.next.base.side != Side::W)
          throw std::logic_error("ledger: witness not on the W side");
      }
    }
  }
}

} // namespace diskpath
