// Timing comparison of the serial reference kernels against the OpenMP
// ones, on the two hot loops: the Whitehead move scan and class
// enumeration. Both variants must agree exactly; mismatches abort.

#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "diskpath/explore.hpp"
#include "diskpath/whitehead.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

diskpath::Word random_reduced_word(std::mt19937_64& rng, int rank, int length) {
  std::vector<diskpath::Letter> letters;
  diskpath::Letter prev = 0;
  for (int i = 0; i < length; ++i) {
    for (;;) {
      int k = static_cast<int>(rng() % static_cast<unsigned>(2 * rank));
      diskpath::Letter l = diskpath::letter_from_key(k);
      if (l == -prev) continue;
      letters.push_back(l);
      prev = l;
      break;
    }
  }
  return diskpath::word_from_reduced(std::move(letters), rank);
}

void bench_move_scan() {
  std::cout << "whitehead move scan (best reducing move per word)\n";
  std::mt19937_64 rng(20240817);
  for (int rank : {5, 6, 7, 8}) {
    std::vector<diskpath::Word> words;
    for (int i = 0; i < 12; ++i)
      words.push_back(random_reduced_word(rng, rank, 24));

    double t0 = now();
    std::vector<diskpath::MoveSearchResult> serial;
    for (const auto& w : words)
      serial.push_back(diskpath::best_reducing_move_serial(w));
    double t_serial = now() - t0;

    t0 = now();
    std::vector<diskpath::MoveSearchResult> parallel;
    for (const auto& w : words)
      parallel.push_back(diskpath::best_reducing_move_parallel(w));
    double t_parallel = now() - t0;

    for (std::size_t i = 0; i < words.size(); ++i) {
      if (serial[i].found != parallel[i].found ||
          (serial[i].found && !(serial[i].move == parallel[i].move))) {
        std::cerr << "kernel mismatch at rank " << rank << "\n";
        std::exit(1);
      }
    }
    std::cout << "  rank " << rank << ": serial " << std::fixed
              << std::setprecision(3) << t_serial << " s, parallel "
              << t_parallel << " s, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
  }
}

void bench_enumeration() {
  std::cout << "class enumeration\n";
  struct Case {
    int rank, bound;
  };
  for (Case c : {Case{2, 6}, Case{2, 8}, Case{3, 5}}) {
    double t0 = now();
    diskpath::ClassTable serial = diskpath::enumerate_classes_serial(c.rank, c.bound);
    double t_serial = now() - t0;

    t0 = now();
    diskpath::ClassTable parallel = diskpath::enumerate_classes(c.rank, c.bound);
    double t_parallel = now() - t0;

    if (serial.classes.size() != parallel.classes.size()) {
      std::cerr << "enumeration mismatch at (" << c.rank << ", " << c.bound
                << ")\n";
      std::exit(1);
    }
    for (std::size_t i = 0; i < serial.classes.size(); ++i) {
      if (!(serial.classes[i] == parallel.classes[i])) {
        std::cerr << "enumeration mismatch at (" << c.rank << ", " << c.bound
                  << ")\n";
        std::exit(1);
      }
    }
    std::cout << "  g=" << c.rank << " L=" << c.bound << " ("
              << serial.classes.size() << " classes): serial " << std::fixed
              << std::setprecision(3) << t_serial << " s, parallel "
              << t_parallel << " s, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
  }
}

} // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  bench_move_scan();
  bench_enumeration();
  return 0;
}
