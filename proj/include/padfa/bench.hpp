#ifndef PADFA_BENCH_HPP
#define PADFA_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "padfa/dictionary.hpp"

namespace padfa {

// One benchmark variant: build cost, index size, and the median wall time
// of querying every dictionary string. mismatches counts disagreements
// with the hash-set oracle and must be zero.
struct BenchRow {
  std::string variant;
  std::uint64_t bits = 0;
  double build_s = 0.0;
  double query_s = 0.0;
  double qps = 0.0;
  std::uint64_t mismatches = 0;
};

struct BenchOptions {
  int repeats = 3;
  int threads = 1;  // query-batch shards; indexes are read-only
};

// Variants: trie-plain, min-plain (per-edge walks) and path-packed,
// min-packed (packed indexes of the same two automata).
std::vector<BenchRow> run_bench(const Dictionary& dict, const BenchOptions& opts);

void print_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);
void print_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// PADFA_THREADS environment cap, 1 if unset or unparsable.
int bench_threads_from_env();

}  // namespace padfa

#endif  // PADFA_BENCH_HPP
