// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "diskpath/explore.hpp"
#include "diskpath/ledger.hpp"
#include "diskpath/nielsen.hpp"
#include "diskpath/path.hpp"
#include "diskpath/whitehead.hpp"

#include "brute_orbit.hpp"
#include "helpers.hpp"

using namespace diskpath;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  std::cout << "[" << index << "] " << (pass ? "PASS" : "FAIL") << "  " << name
            << "  (" << std::fixed << std::setprecision(2) << seconds << " s)";
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void criterion_1_genus_one() {
  auto t0 = std::chrono::steady_clock::now();
  ClassTable t = enumerate_classes(1, 8);
  bool pass = t.classes.size() == 1 &&
              t.classes.front().canonical() == parse_word("x1", 1);
  std::ostringstream d;
  d << "classes=" << t.classes.size();
  report(1, "genus-1 vertex count", pass, seconds_since(t0), d.str());
}

void criterion_2_decomposition_round_trip() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0xD15C0001);
  int ok = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    int rank = 2 + static_cast<int>(rng() % 4);  // ranks 2..5
    Automorphism a = testutil::random_automorphism(rng, rank, 20);
    try {
      if (compose_moves(decompose(a)) == a) ++ok;
    } catch (const std::exception&) {
    }
  }
  std::ostringstream d;
  d << ok << "/" << total;
  report(2, "decomposition round-trip", ok == total, seconds_since(t0), d.str());
}

void criterion_3_oracle_consistency() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0xD15C0002);
  bool pass = true;
  std::ostringstream d;

  int prim_ok = 0;
  const int prim_total = 500;
  for (int i = 0; i < prim_total; ++i) {
    int rank = 2 + static_cast<int>(rng() % 3);  // ranks 2..4
    Automorphism a = testutil::random_automorphism(rng, rank, 20);
    if (is_primitive(apply(a, generator_word(1, rank)))) ++prim_ok;
  }
  pass = pass && prim_ok == prim_total;
  d << "orbit " << prim_ok << "/" << prim_total;

  // Named rejects plus twenty words with non-unit abelian gcd.
  pass = pass && !is_primitive(parse_word("x1 x1", 2));
  pass = pass && !is_primitive(parse_word("x1 x2 X1 X2", 2));
  int rejects = 0;
  while (rejects < 20) {
    int rank = 2 + static_cast<int>(rng() % 3);
    Word w = testutil::random_reduced_word(rng, rank,
                                           1 + static_cast<int>(rng() % 10));
    if (w.empty() || abelian_gcd(w) == 1) continue;
    if (!is_primitive(w)) ++rejects;
    else pass = false;
    if (!pass) break;
  }
  d << ", gcd rejects " << rejects << "/20";

  // Exhaustive agreement with the brute orbit oracle at rank 2.
  testutil::BruteOrbit oracle(2, 8);
  std::size_t checked = 0, agreed = 0;
  std::vector<Word> frontier{Word(2)};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int k = 0; k < 4; ++k) {
        Letter l = letter_from_key(k);
        if (!w.empty() && w.letter(w.size() - 1) == -l) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.push_back(word_from_reduced(std::move(ls), 2));
      }
    }
    for (const Word& w : next) {
      ++checked;
      if (is_primitive(w) == oracle.contains(w)) ++agreed;
    }
    frontier = std::move(next);
  }
  pass = pass && checked == agreed;
  d << ", exhaustive " << agreed << "/" << checked;

  report(3, "primitivity oracle consistency", pass, seconds_since(t0), d.str());
}

void criterion_4_pipeline_all_pairs() {
  auto t0 = std::chrono::steady_clock::now();
  ClassTable table = enumerate_classes(2, 5);
  PrimitivityCache cache;
  std::size_t pairs = 0, passed = 0;
  std::vector<Word> reps;
  for (const CyclicWord& c : table.classes) reps.push_back(c.canonical());

  std::vector<int> results(reps.size() * reps.size(), 0);
  std::int64_t n = static_cast<std::int64_t>(reps.size());
#ifdef _OPENMP
  #pragma omp parallel for collapse(2) schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      bool ok = false;
      try {
        HPath p = synthesize(reps[static_cast<std::size_t>(i)],
                             reps[static_cast<std::size_t>(j)]);
        VerificationReport r = verify(p, cache);
        ok = r.pass();
      } catch (const std::exception&) {
        ok = false;
      }
      results[static_cast<std::size_t>(i * n + j)] = ok ? 1 : 0;
    }
  }
  pairs = results.size();
  passed = static_cast<std::size_t>(
      std::accumulate(results.begin(), results.end(), 0));
  std::ostringstream d;
  d << passed << "/" << pairs << " ordered pairs over " << reps.size()
    << " classes";
  report(4, "path pipeline over all class pairs", passed == pairs,
         seconds_since(t0), d.str());
}

void criterion_5_corollary_witness() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream d;
  for (auto [g, L] : {std::pair{2, 6}, std::pair{3, 3}}) {
    ClassTable table = enumerate_classes(g, L);
    ReachResult r = reach_all(table);
    pass = pass && r.failures == 0 && r.reached == table.classes.size();
    d << "g=" << g << ",L=" << L << ": " << r.reached << "/"
      << table.classes.size() << " reached (max steps " << r.max_path_steps
      << ")  ";
  }
  report(5, "connectivity witness", pass, seconds_since(t0), d.str());
}

void criterion_6_ledger_fidelity() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;

  RealizationFact fb = fact(ElementaryMove::B, 3);
  pass = pass && fb.fixed.size() == 6 && fb.moved.empty();

  RealizationFact fa = fact(ElementaryMove::A, 2);
  pass = pass && fa.moved.size() == 2 && !fa.is_fixed({Side::V, 1}) &&
         !fa.is_fixed({Side::W, 2});
  WitnessPair expect{{{Side::W, 2}, MoveSequence{2, {ElementaryMove::A}}},
                     {{Side::W, 2}, MoveSequence{2, {}}}};
  pass = pass && fa.dual_witness.count(1) == 1 &&
         fa.dual_witness.at(1) == expect;

  // Fixed V-labels keep their word; the half-turn on the first handle
  // returns it with reversed orientation, the same unoriented class.
  for (int g : {1, 2, 3, 4, 5}) {
    for (ElementaryMove m : {ElementaryMove::A, ElementaryMove::B,
                             ElementaryMove::C, ElementaryMove::D}) {
      if ((m == ElementaryMove::A || m == ElementaryMove::C) && g < 2) continue;
      RealizationFact f = fact(m, g);
      Automorphism em = elementary(m, g);
      for (int j = 1; j <= g; ++j) {
        if (!f.is_fixed({Side::V, j})) continue;
        Word image = apply(em, generator_word(j, g));
        if (m == ElementaryMove::B && j == 1)
          pass = pass && conjugate_eq(image, generator_word(j, g), true);
        else
          pass = pass && image == generator_word(j, g);
      }
    }
  }
  try {
    ledger_self_test(8);
  } catch (const std::exception&) {
    pass = false;
  }
  report(6, "ledger fidelity self-test", pass, seconds_since(t0));
}

void criterion_7_word_algebra() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0xD15C0007);
  int ok = 0;
  const int total = 10000;
  for (int i = 0; i < total; ++i) {
    int rank = 1 + static_cast<int>(rng() % 4);
    Word u = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 14));
    Word v = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 14));
    Word w = testutil::random_reduced_word(rng, rank, static_cast<int>(rng() % 8));

    bool good = reduce(u.letters(), rank) == u;
    good = good && invert(invert(u)) == u;
    good = good && concat(u, invert(u)).empty();
    good = good && concat(concat(u, v), w) == concat(u, concat(v, w));
    auto eu = abelianize(u), ev = abelianize(v), euv = abelianize(concat(u, v));
    for (std::size_t k = 0; k < eu.size(); ++k)
      good = good && euv[k] == eu[k] + ev[k];
    Word conj = concat(concat(w, u), invert(w));
    good = good && conjugate_eq(u, conj, false);
    good = good && conjugate_eq(u, conj, true);
    good = good && (conjugate_eq(u, v, false)
                        ? abelianize(cyclic_reduce(u)) == abelianize(cyclic_reduce(v))
                        : true);
    if (good) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << total;
  report(7, "word-core algebra suite", ok == total, seconds_since(t0), d.str());
}

} // namespace

int main() {
  criterion_1_genus_one();
  criterion_2_decomposition_round_trip();
  criterion_3_oracle_consistency();
  criterion_4_pipeline_all_pairs();
  criterion_5_corollary_witness();
  criterion_6_ledger_fidelity();
  criterion_7_word_algebra();
  if (g_failures == 0) {
    std::cout << "ALL CRITERIA PASS" << std::endl;
    return 0;
  }
  std::cout << g_failures << " CRITERIA FAILED" << std::endl;
  return 1;
}
