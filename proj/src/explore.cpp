#include "diskpath/explore.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diskpath {

namespace {

void check_bounds(int rank, int bound) {
  if (rank < 1 || rank > kMaxExploreRank)
    throw RankError("explore supports rank 1.." +
                    std::to_string(kMaxExploreRank));
  if (bound < 1 || bound > kMaxExploreBound)
    throw std::invalid_argument("explore supports bound 1.." +
                                std::to_string(kMaxExploreBound));
}

std::uint64_t words_of_length(int rank, int n) {
  std::uint64_t count = static_cast<std::uint64_t>(2 * rank);
  for (int i = 1; i < n; ++i)
    count *= static_cast<std::uint64_t>(2 * rank - 1);
  return count;
}

// Decodes the index'th freely reduced word of length n, in lexicographic
// order of letter keys.
Word decode_word(std::uint64_t index, int n, int rank) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  std::uint64_t base = words_of_length(rank, n) / static_cast<std::uint64_t>(2 * rank);
  Letter prev = 0;
  for (int p = 0; p < n; ++p) {
    std::uint64_t digit = index / base;
    index %= base;
    if (base > 1) base /= static_cast<std::uint64_t>(2 * rank - 1);
    // digit'th letter in key order, skipping the inverse of the previous.
    int skip_key = prev == 0 ? -1 : letter_key(-prev);
    int k = 0, seen = 0;
    for (;; ++k) {
      if (k == skip_key) continue;
      if (seen == static_cast<int>(digit)) break;
      ++seen;
    }
    prev = letter_from_key(k);
    letters.push_back(prev);
  }
  return word_from_reduced(std::move(letters), rank);
}

// A canonical class representative must start with a minimal-key letter.
bool cheap_reject(const Word& w) {
  if (w.size() >= 2 && w.letter(0) == -w.letter(w.size() - 1)) return true;
  int first = letter_key(w.letter(0));
  for (Letter l : w.letters())
    if (letter_key(l) < first) return true;
  return false;
}

bool is_class_representative(const Word& w) {
  if (cheap_reject(w)) return false;
  return cyclic_canonical(w, true).canonical() == w;
}

template <typename Each>
void scan_representatives(int rank, int bound, Each&& fn) {
  for (int n = 1; n <= bound; ++n) {
    std::uint64_t count = words_of_length(rank, n);
    for (std::uint64_t i = 0; i < count; ++i) {
      Word w = decode_word(i, n, rank);
      if (!is_class_representative(w)) continue;
      fn(w);
    }
  }
}

} // namespace

ClassTable enumerate_classes_serial(int rank, int bound) {
  check_bounds(rank, bound);
  ClassTable table{rank, bound, {}};
  scan_representatives(rank, bound, [&](const Word& w) {
    if (!primitive_abelian_filter(w)) return;
    if (!is_primitive(w)) return;
    table.classes.push_back(cyclic_canonical(w, true));
  });
  return table;
}

ClassTable enumerate_classes(int rank, int bound) {
  check_bounds(rank, bound);
#ifndef _OPENMP
  return enumerate_classes_serial(rank, bound);
#else
  ClassTable table{rank, bound, {}};
  for (int n = 1; n <= bound; ++n) {
    std::int64_t count = static_cast<std::int64_t>(words_of_length(rank, n));
    std::vector<std::vector<CyclicWord>> found(
        static_cast<std::size_t>(omp_get_max_threads()));
    #pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < count; ++i) {
      Word w = decode_word(static_cast<std::uint64_t>(i), n, rank);
      if (!is_class_representative(w)) continue;
      if (!primitive_abelian_filter(w)) continue;
      if (!is_primitive(w)) continue;
      found[static_cast<std::size_t>(omp_get_thread_num())].push_back(
          cyclic_canonical(w, true));
    }
    std::vector<CyclicWord> merged;
    for (auto& part : found)
      merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end(),
              [](const CyclicWord& a, const CyclicWord& b) {
                return word_less_shortlex(a.canonical(), b.canonical());
              });
    table.classes.insert(table.classes.end(), merged.begin(), merged.end());
  }
  return table;
#endif
}

ReachResult reach_all(const ClassTable& table, bool parallel) {
  ReachResult result;
  result.rank = table.rank;
  result.bound = table.bound;
  result.per_class.resize(table.classes.size());

  std::set<std::string> in_table;
  for (const CyclicWord& c : table.classes)
    in_table.insert(format_word(c.canonical()));

  Word root = generator_word(1, table.rank);
  PrimitivityCache cache;
  std::vector<std::vector<ReachEdge>> edges(table.classes.size());

  auto run_one = [&](std::size_t k) {
    ClassReach& out = result.per_class[k];
    const Word& rep = table.classes[k].canonical();
    out.canonical = format_word(rep);
    out.length = rep.size();
    try {
      HPath path = synthesize(root, rep);
      VerificationReport report = verify(path, cache);
      out.reached = report.pass();
      if (!out.reached) {
        std::ostringstream msg;
        msg << "verification failed:";
        for (const std::string& f : report.failures) msg << ' ' << f << ';';
        out.failure = msg.str();
      }
      HPath motion = compress(path);
      out.path_steps = motion.steps.size() - 1;
      for (std::size_t i = 0; i + 1 < motion.steps.size(); ++i) {
        std::string from =
            format_word(cyclic_canonical(motion.steps[i].word, true).canonical());
        std::string to = format_word(
            cyclic_canonical(motion.steps[i + 1].word, true).canonical());
        edges[k].push_back({from, to, *motion.steps[i].move,
                            in_table.count(to) > 0});
      }
    } catch (const std::exception& e) {
      out.reached = false;
      out.failure = e.what();
    }
  };

  std::int64_t n = static_cast<std::int64_t>(table.classes.size());
#ifdef _OPENMP
  if (parallel) {
    #pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k) run_one(static_cast<std::size_t>(k));
  } else {
    for (std::int64_t k = 0; k < n; ++k) run_one(static_cast<std::size_t>(k));
  }
#else
  (void)parallel;
  for (std::int64_t k = 0; k < n; ++k) run_one(static_cast<std::size_t>(k));
#endif

  std::set<std::tuple<std::string, std::string, char>> seen;
  for (const auto& part : edges) {
    for (const ReachEdge& e : part) {
      if (seen.insert({e.from, e.to, move_char(e.via)}).second)
        result.edges.push_back(e);
    }
  }
  for (const ClassReach& c : result.per_class) {
    if (c.reached) {
      ++result.reached;
      result.max_path_steps = std::max(result.max_path_steps, c.path_steps);
    } else {
      ++result.failures;
    }
  }
  return result;
}

std::string reach_dot(const ReachResult& r) {
  std::ostringstream out;
  out << "graph reachability_witness {\n";
  out << "  // one certified path per class; not the full complex\n";
  std::set<std::string> table_nodes, aux_nodes;
  for (const ClassReach& c : r.per_class) table_nodes.insert(c.canonical);
  for (const ReachEdge& e : r.edges) {
    if (!table_nodes.count(e.from)) aux_nodes.insert(e.from);
    if (!table_nodes.count(e.to)) aux_nodes.insert(e.to);
  }
  for (const std::string& n : table_nodes)
    out << "  \"" << n << "\";\n";
  for (const std::string& n : aux_nodes)
    out << "  \"" << n << "\" [style=dashed];\n";
  for (const ReachEdge& e : r.edges)
    out << "  \"" << e.from << "\" -- \"" << e.to << "\" [label=\""
        << move_char(e.via) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string reach_csv(const ReachResult& r) {
  std::ostringstream out;
  out << "canonical,length,path_len_from_x1\n";
  for (const ClassReach& c : r.per_class)
    out << '"' << c.canonical << "\"," << c.length << ',' << c.path_steps
        << '\n';
  return out.str();
}

} // namespace diskpath
