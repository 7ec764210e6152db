#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskpath/path.hpp"

namespace diskpath {

inline constexpr int kMaxExploreRank = 4;
inline constexpr int kMaxExploreBound = 10;

/// All primitive classes (unoriented conjugacy) of cyclic length <= bound,
/// sorted length-then-lexicographically by canonical word.
struct ClassTable {
  int rank = 1;
  int bound = 0;
  std::vector<CyclicWord> classes;
};

// Exhaustive over canonical class representatives up to the bound, filtered
// through the abelian gcd test and the primitivity oracle. The parallel
// version splits the representative scan across OpenMP threads and produces
// the identical table.
ClassTable enumerate_classes_serial(int rank, int bound);
ClassTable enumerate_classes(int rank, int bound);

struct ReachEdge {
  std::string from;  // canonical text
  std::string to;
  ElementaryMove via;
  bool endpoint_in_table;
};

struct ClassReach {
  std::string canonical;
  std::size_t length = 0;
  bool reached = false;
  std::size_t path_steps = 0;  // motion steps (compressed length)
  std::string failure;
};

/// Connectivity witness: one certified path from the class of x1 to every
/// table class, with full verification per path.
struct ReachResult {
  int rank = 1;
  int bound = 0;
  std::vector<ClassReach> per_class;
  std::vector<ReachEdge> edges;
  std::size_t reached = 0;
  std::size_t failures = 0;
  std::size_t max_path_steps = 0;
};

ReachResult reach_all(const ClassTable& table, bool parallel = true);

std::string reach_dot(const ReachResult& r);
std::string reach_csv(const ReachResult& r);

} // namespace diskpath
