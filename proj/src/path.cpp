#include "diskpath/path.hpp"

#include <sstream>

namespace diskpath {

namespace {

Automorphism inner_automorphism(const Word& w) {
  std::vector<Word> img;
  img.reserve(static_cast<std::size_t>(w.rank()));
  for (int j = 1; j <= w.rank(); ++j)
    img.push_back(concat(concat(w, generator_word(j, w.rank())), invert(w)));
  return Automorphism::from_images(std::move(img), false);
}

// Initial system choice: a verified automorphism with image(x1) == u
// exactly, realizing "the tracked disk starts at the input word".
Automorphism base_system(const Word& u) {
  Automorphism b = extend_to_basis(u);
  std::optional<Word> w = conjugator(b.image(1), u);
  if (!w)
    throw std::logic_error("synthesize: extend_to_basis image not conjugate");
  if (w->empty()) return b;
  Automorphism p = compose(inner_automorphism(*w), b);
  if (!p.verified() && is_basis(p.images())) p.mark_verified();
  return p;
}

// Witness expressions carry the step prefix with the most recent move
// first (prefix[0] acts first at the base label).
MoveSequence with_tail(const MoveSequence& own,
                       const std::vector<ElementaryMove>& reversed_tail,
                       int rank) {
  MoveSequence out{rank, own.moves};
  out.moves.insert(out.moves.end(), reversed_tail.begin(), reversed_tail.end());
  return out;
}

} // namespace

HPath synthesize(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw RankError("synthesize: rank mismatch");
  if (u.empty() || v.empty())
    throw NotPrimitive("the empty word is not primitive");
  if (!is_primitive(u)) throw NotPrimitive("source word is not primitive");
  if (!is_primitive(v)) throw NotPrimitive("target word is not primitive");
  int rank = u.rank();

  Automorphism base = base_system(u);
  if (apply(base, generator_word(1, rank)) != u)
    throw std::logic_error("synthesize: base system does not hit the source");

  // Route the pulled-back target from x1; the decomposition is replayed
  // against the base, newest move innermost, so each step's words are the
  // prefix images of (x1, move(x1)) and fixed-disk steps repeat exactly.
  Word pulled = apply(inverse(base), v);
  MoveSequence seq = decompose(extend_to_basis(pulled));
  std::vector<ElementaryMove> moves(seq.moves.rbegin(), seq.moves.rend());

  HPath path;
  path.rank = rank;
  path.source = u;
  path.target = v;

  Automorphism prefix = base;
  Word current = u;
  std::vector<ElementaryMove> reversed_tail;  // most recent first
  for (ElementaryMove m : moves) {
    RealizationFact f = fact(m, rank);
    PathStep step;
    step.word = current;
    step.move = m;
    DiskLabel tracked{Side::V, 1};
    if (f.is_fixed(tracked)) {
      step.certificate.type = CertificateType::Equal;
    } else {
      auto it = f.dual_witness.find(1);
      if (it == f.dual_witness.end())
        throw CertificateGap("fact table lacks a witness for the tracked disk");
      step.certificate.type = CertificateType::Disjoint;
      step.certificate.ledger_ref = m;
      WitnessPair pushed;
      pushed.current.base = it->second.current.base;
      pushed.current.prefix =
          with_tail(it->second.current.prefix, reversed_tail, rank);
      pushed.next.base = it->second.next.base;
      pushed.next.prefix = with_tail(it->second.next.prefix, reversed_tail, rank);
      step.certificate.witnesses = pushed;
    }
    path.steps.push_back(std::move(step));

    prefix = compose(prefix, elementary(m, rank));
    current = apply(prefix, generator_word(1, rank));
    reversed_tail.insert(reversed_tail.begin(), m);
  }

  PathStep last;
  last.word = current;
  last.certificate.type = CertificateType::Terminal;
  path.steps.push_back(std::move(last));

  if (!conjugate_eq(current, v, true))
    throw std::logic_error("synthesize: endpoint is not equivalent to target");
  return path;
}

HPath compress(const HPath& p) {
  HPath out;
  out.rank = p.rank;
  out.source = p.source;
  out.target = p.target;
  out.compressed = true;
  // An Equal run keeps its earliest word (the run's words all lie in one
  // class; the first one is the source on a leading run).
  std::optional<Word> pending;
  for (const PathStep& s : p.steps) {
    if (s.certificate.type == CertificateType::Equal) {
      if (!pending) pending = s.word;
      continue;
    }
    PathStep kept = s;
    if (pending) {
      kept.word = *pending;
      pending.reset();
    }
    out.steps.push_back(std::move(kept));
  }
  return out;
}

namespace {

bool prefix_has_tail(const MoveSequence& stored, const MoveSequence& own,
                     std::vector<ElementaryMove>* tail) {
  if (stored.moves.size() < own.moves.size()) return false;
  if (!std::equal(own.moves.begin(), own.moves.end(), stored.moves.begin()))
    return false;
  tail->assign(stored.moves.begin() +
                   static_cast<std::ptrdiff_t>(own.moves.size()),
               stored.moves.end());
  return true;
}

// Compressed paths drop Equal steps, which are exactly the B moves at rank
// >= 2, so their witness tails are compared with B letters removed.
bool tails_match(const std::vector<ElementaryMove>& stored,
                 const std::vector<ElementaryMove>& expected, bool compressed) {
  if (!compressed) return stored == expected;
  std::vector<ElementaryMove> stripped;
  for (ElementaryMove m : stored)
    if (m != ElementaryMove::B) stripped.push_back(m);
  return stripped == expected;
}

} // namespace

VerificationReport verify(const HPath& p, PrimitivityCache& cache) {
  VerificationReport r;
  auto fail = [&r](const std::string& msg) { r.failures.push_back(msg); };

  // Well-formedness.
  r.wellformed = true;
  if (p.steps.empty()) {
    fail("path has no steps");
    r.wellformed = false;
    return r;
  }
  if (p.steps.front().word != p.source) {
    fail("first step word differs from the source");
    r.wellformed = false;
  }
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const PathStep& s = p.steps[i];
    bool is_last = i + 1 == p.steps.size();
    if (s.word.rank() != p.rank) {
      fail("step " + std::to_string(i + 1) + ": rank mismatch");
      r.wellformed = false;
    }
    if (is_last != (s.certificate.type == CertificateType::Terminal) ||
        is_last != !s.move.has_value()) {
      fail("step " + std::to_string(i + 1) + ": terminal shape violated");
      r.wellformed = false;
    }
  }
  if (!r.wellformed) return r;

  // (a) every step word is primitive, by the oracle.
  r.primitive_words = true;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i].word.empty() || !cache.query(p.steps[i].word)) {
      fail("clause a: step " + std::to_string(i + 1) + " word is not primitive");
      r.primitive_words = false;
    }
  }

  // (b) Equal-certified neighbours coincide as cyclic words.
  r.equal_steps = true;
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
    if (p.steps[i].certificate.type != CertificateType::Equal) continue;
    if (!conjugate_eq(p.steps[i].word, p.steps[i + 1].word, true)) {
      fail("clause b: equal step " + std::to_string(i + 1) +
           " joins distinct classes");
      r.equal_steps = false;
    }
  }

  // (c) Disjoint-certified neighbours differ and carry witnesses that are
  // the fact-table pair pushed through the step prefix. The disjointness
  // behind the table is trusted, not re-verified.
  r.disjoint_steps = true;
  std::vector<ElementaryMove> expected_tail;  // most recent first
  for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
    const PathStep& s = p.steps[i];
    const std::string at = "clause c: step " + std::to_string(i + 1);
    if (s.certificate.type == CertificateType::Terminal) {
      fail(at + ": terminal certificate before the last step");
      r.disjoint_steps = false;
      continue;
    }
    RealizationFact f = fact(*s.move, p.rank);
    bool fixed = f.is_fixed({Side::V, 1});
    if (s.certificate.type == CertificateType::Equal) {
      if (!fixed) {
        fail(at + ": equal certificate but the move displaces the disk");
        r.disjoint_steps = false;
      }
    } else {
      if (fixed) {
        fail(at + ": disjoint certificate but the move fixes the disk");
        r.disjoint_steps = false;
      }
      if (conjugate_eq(s.word, p.steps[i + 1].word, true)) {
        fail(at + ": disjoint step joins equal classes");
        r.disjoint_steps = false;
      }
      if (!s.certificate.witnesses || !s.certificate.ledger_ref ||
          *s.certificate.ledger_ref != *s.move) {
        fail(at + ": missing or mislabeled witnesses");
        r.disjoint_steps = false;
      } else {
        auto it = f.dual_witness.find(1);
        if (it == f.dual_witness.end()) {
          fail(at + ": fact table has no witness for the tracked disk");
          r.disjoint_steps = false;
        } else {
          const WitnessPair& got = *s.certificate.witnesses;
          std::vector<ElementaryMove> tail_cur, tail_next;
          bool ok = got.current.base == it->second.current.base &&
                    got.next.base == it->second.next.base &&
                    got.current.base.side == Side::W &&
                    got.next.base.side == Side::W &&
                    prefix_has_tail(got.current.prefix,
                                    it->second.current.prefix, &tail_cur) &&
                    prefix_has_tail(got.next.prefix, it->second.next.prefix,
                                    &tail_next) &&
                    tail_cur == tail_next &&
                    tails_match(tail_cur, expected_tail, p.compressed);
          if (!ok) {
            fail(at + ": witnesses are not the table pair pushed through "
                      "the step prefix");
            r.disjoint_steps = false;
          }
        }
      }
    }
    expected_tail.insert(expected_tail.begin(), *s.move);
  }

  // (d) the endpoint lands in the target class.
  r.endpoints = conjugate_eq(p.steps.back().word, p.target, true);
  if (!r.endpoints) fail("clause d: endpoint not equivalent to the target");

  return r;
}

VerificationReport verify(const HPath& p) {
  PrimitivityCache cache;
  return verify(p, cache);
}

nlohmann::json path_to_json(const HPath& p) {
  nlohmann::json j;
  j["rank"] = p.rank;
  j["source"] = format_word(p.source);
  j["target"] = format_word(p.target);
  j["compressed"] = p.compressed;
  nlohmann::json steps = nlohmann::json::array();
  for (const PathStep& s : p.steps) {
    nlohmann::json js;
    js["word"] = format_word(s.word);
    if (s.move) js["move"] = std::string(1, move_char(*s.move));
    nlohmann::json cert;
    switch (s.certificate.type) {
      case CertificateType::Equal:
        cert["type"] = "equal";
        break;
      case CertificateType::Disjoint:
        cert["type"] = "disjoint";
        cert["witness_i"] = expr_json(s.certificate.witnesses->current);
        cert["witness_next"] = expr_json(s.certificate.witnesses->next);
        cert["ledger_ref"] = std::string(1, move_char(*s.certificate.ledger_ref));
        break;
      case CertificateType::Terminal:
        cert["type"] = "terminal";
        break;
    }
    js["certificate"] = cert;
    steps.push_back(js);
  }
  j["steps"] = steps;
  return j;
}

HPath path_from_json(const nlohmann::json& j) {
  HPath p;
  p.rank = j.at("rank").get<int>();
  Word::check_rank(p.rank);
  p.source = parse_word(j.at("source").get<std::string>(), p.rank);
  p.target = parse_word(j.at("target").get<std::string>(), p.rank);
  p.compressed = j.value("compressed", false);
  for (const nlohmann::json& js : j.at("steps")) {
    PathStep s;
    s.word = parse_word(js.at("word").get<std::string>(), p.rank);
    if (js.contains("move")) {
      std::string m = js.at("move").get<std::string>();
      if (m.size() != 1) throw ParseError("bad move '" + m + "'");
      s.move = move_from_char(m[0]);
    }
    const nlohmann::json& cert = js.at("certificate");
    std::string type = cert.at("type").get<std::string>();
    if (type == "equal") {
      s.certificate.type = CertificateType::Equal;
    } else if (type == "terminal") {
      s.certificate.type = CertificateType::Terminal;
    } else if (type == "disjoint") {
      s.certificate.type = CertificateType::Disjoint;
      WitnessPair w;
      w.current = expr_from_json(cert.at("witness_i"), p.rank);
      w.next = expr_from_json(cert.at("witness_next"), p.rank);
      s.certificate.witnesses = w;
      std::string ref = cert.at("ledger_ref").get<std::string>();
      if (ref.size() != 1) throw ParseError("bad ledger_ref '" + ref + "'");
      s.certificate.ledger_ref = move_from_char(ref[0]);
    } else {
      throw ParseError("unknown certificate type '" + type + "'");
    }
    p.steps.push_back(std::move(s));
  }
  return p;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["pass"] = r.pass();
  j["wellformed"] = r.wellformed;
  j["clauses"] = {{"a_primitive_words", r.primitive_words},
                  {"b_equal_steps", r.equal_steps},
                  {"c_disjoint_steps", r.disjoint_steps},
                  {"d_endpoints", r.endpoints}};
  j["verification"] = {{"algebraic", {"a_primitive_words", "b_equal_steps",
                                      "d_endpoints"}},
                       {"ledger_trusted", {"c_disjoint_steps"}}};
  j["failures"] = r.failures;
  return j;
}

} // namespace diskpath
