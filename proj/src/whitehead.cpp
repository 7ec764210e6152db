#include "diskpath/whitehead.hpp"

#include <algorithm>

#include "diskpath/nielsen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diskpath {

namespace {

bool in_cut(std::uint32_t cut, Letter l) {
  return (cut >> letter_key(l)) & 1u;
}

void check_oracle_rank(int rank) {
  if (rank > kMaxOracleRank)
    throw RankError("whitehead oracle supports rank <= " +
                    std::to_string(kMaxOracleRank));
}

} // namespace

Automorphism whitehead_automorphism(const WhiteheadMove& m, int rank) {
  check_oracle_rank(rank);
  Letter a = m.multiplier;
  if (a == 0 || generator_of(a) > rank)
    throw RankError("whitehead multiplier out of range");
  if (!in_cut(m.cut, a) || in_cut(m.cut, -a))
    throw std::invalid_argument("whitehead cut must contain the multiplier "
                                "and not its inverse");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) {
    if (k == generator_of(a)) {
      images.push_back(generator_word(k, rank));
      continue;
    }
    std::vector<Letter> raw;
    if (in_cut(m.cut, -k)) raw.push_back(a);
    raw.push_back(k);
    if (in_cut(m.cut, k)) raw.push_back(-a);
    images.push_back(reduce(raw, rank));
  }
  return Automorphism::from_images(std::move(images), true);
}

WhiteheadMove whitehead_inverse(const WhiteheadMove& m) {
  WhiteheadMove inv;
  inv.multiplier = -m.multiplier;
  inv.cut = m.cut;
  inv.cut &= ~(1u << letter_key(m.multiplier));
  inv.cut |= 1u << letter_key(-m.multiplier);
  return inv;
}

namespace {

// Cyclic length of the image of the cyclically reduced word w.
std::size_t image_cyclic_length(const Automorphism& a, const Word& w) {
  return cyclic_reduce(apply(a, w)).size();
}

std::uint64_t candidate_count(int rank) {
  return static_cast<std::uint64_t>(2 * rank) << (2 * rank - 2);
}

// Decodes a flat candidate index; index order equals the
// (multiplier key, cut mask) tie-break order.
WhiteheadMove decode_candidate(std::uint64_t index, int rank) {
  std::uint32_t sub_bits = static_cast<std::uint32_t>(2 * rank - 2);
  int mk = static_cast<int>(index >> sub_bits);
  std::uint32_t sub =
      static_cast<std::uint32_t>(index & ((1ull << sub_bits) - 1));
  WhiteheadMove m;
  m.multiplier = letter_from_key(mk);
  m.cut = 1u << mk;
  std::size_t b = 0;
  for (int k = 0; k < 2 * rank; ++k) {
    if (k / 2 == mk / 2) continue;
    if ((sub >> b) & 1u) m.cut |= 1u << k;
    ++b;
  }
  return m;
}

long move_decrease(const WhiteheadMove& m, const Word& cyc) {
  Automorphism a = whitehead_automorphism(m, cyc.rank());
  return static_cast<long>(cyc.size()) -
         static_cast<long>(image_cyclic_length(a, cyc));
}

} // namespace

MoveSearchResult best_reducing_move_serial(const Word& cyc) {
  check_oracle_rank(cyc.rank());
  MoveSearchResult best;
  std::uint64_t n = candidate_count(cyc.rank());
  for (std::uint64_t i = 0; i < n; ++i) {
    WhiteheadMove m = decode_candidate(i, cyc.rank());
    long dec = move_decrease(m, cyc);
    if (dec > best.decrease) {
      best.found = true;
      best.decrease = dec;
      best.move = m;
    }
  }
  return best;
}

MoveSearchResult best_reducing_move_parallel(const Word& cyc) {
  check_oracle_rank(cyc.rank());
  std::uint64_t n = candidate_count(cyc.rank());
#ifndef _OPENMP
  return best_reducing_move_serial(cyc);
#else
  // Per-thread best, merged by (decrease desc, candidate index asc); the
  // result is identical to the serial scan.
  struct Local {
    long dec = 0;
    std::uint64_t index = 0;
    bool found = false;
  };
  int nthreads = omp_get_max_threads();
  std::vector<Local> locals(static_cast<std::size_t>(nthreads));
  #pragma omp parallel
  {
    Local mine;
    // Static schedule hands each thread increasing indices, so keeping the
    // first strict improvement yields the smallest index per decrease.
    #pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      WhiteheadMove m = decode_candidate(static_cast<std::uint64_t>(i), cyc.rank());
      long dec = move_decrease(m, cyc);
      if (dec > 0 && dec > mine.dec) {
        mine.dec = dec;
        mine.index = static_cast<std::uint64_t>(i);
        mine.found = true;
      }
    }
    locals[static_cast<std::size_t>(omp_get_thread_num())] = mine;
  }
  Local best;
  for (const Local& l : locals) {
    if (!l.found) continue;
    if (!best.found || l.dec > best.dec ||
        (l.dec == best.dec && l.index < best.index))
      best = l;
  }
  MoveSearchResult out;
  if (best.found) {
    out.found = true;
    out.decrease = best.dec;
    out.move = decode_candidate(best.index, cyc.rank());
  }
  return out;
#endif
}

MinimizationLog whitehead_minimize(const Word& u) {
  if (u.empty()) throw std::invalid_argument("whitehead_minimize: empty word");
  check_oracle_rank(u.rank());
  MinimizationLog log;
  log.start = u;
  Word rep = cyclic_reduce(u);
#ifdef _OPENMP
  // Inside an enclosing parallel region the scan stays serial; nesting
  // would only add overhead.
  const bool use_parallel = !omp_in_parallel();
#else
  const bool use_parallel = false;
#endif
  for (;;) {
    if (rep.size() <= 1) break;
    MoveSearchResult step = use_parallel ? best_reducing_move_parallel(rep)
                                         : best_reducing_move_serial(rep);
    if (!step.found) break;
    log.moves.push_back(step.move);
    rep = cyclic_reduce(apply(whitehead_automorphism(step.move, u.rank()), rep));
  }
  log.end = cyclic_canonical(rep, /*unoriented=*/false);
  return log;
}

bool is_primitive(const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_primitive: empty word");
  return whitehead_minimize(u).end.size() == 1;
}

bool primitive_abelian_filter(const Word& u) { return abelian_gcd(u) == 1; }

Automorphism extend_to_basis(const Word& v) {
  MinimizationLog log = whitehead_minimize(v);
  if (log.end.size() != 1) throw NotPrimitive("word is not primitive");

  // The replayed log gives Phi = phi_r o ... o phi_1 with Phi(v) conjugate
  // to the end letter; invert it and route x1 to that letter.
  Automorphism phi_inv(v.rank());
  for (const WhiteheadMove& m : log.moves)
    phi_inv = compose(phi_inv, whitehead_automorphism(whitehead_inverse(m), v.rank()));

  Letter end = log.end.canonical().letter(0);
  Automorphism route(v.rank());
  if (end != 1) {
    std::vector<Word> img = route.images();
    img[0] = word_from_reduced({end}, v.rank());
    if (generator_of(end) != 1)
      img[static_cast<std::size_t>(generator_of(end) - 1)] =
          generator_word(1, v.rank());
    route = Automorphism::from_images(std::move(img), false);
  }

  Automorphism a = compose(phi_inv, route);
  if (!a.verified() && is_basis(a.images())) a.mark_verified();
  return a;
}

bool PrimitivityCache::query(const Word& u) {
  std::string key = format_word(cyclic_canonical(u, true).canonical());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  bool value = is_primitive(u);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

std::size_t PrimitivityCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

} // namespace diskpath
