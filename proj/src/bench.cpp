#include "padfa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "padfa/adfa_io.hpp"
#include "padfa/padfa.hpp"

namespace padfa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `query` over every string, sharded into contiguous blocks when
// threads > 1 (indexes are read-only), and returns the wall time of the
// whole batch. The hit count defeats dead-code elimination.
template <typename Query>
double time_batch(const std::vector<std::string>& queries, int threads, Query query) {
  std::atomic<std::uint64_t> hits{0};
  const auto start = Clock::now();
  if (threads <= 1) {
    std::uint64_t local = 0;
    for (const auto& q : queries) local += query(q) ? 1 : 0;
    hits += local;
  } else {
    std::vector<std::thread> pool;
    const std::size_t per = (queries.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(queries.size(), t * per);
      const std::size_t hi = std::min(queries.size(), lo + per);
      pool.emplace_back([&, lo, hi] {
        std::uint64_t local = 0;
        for (std::size_t i = lo; i < hi; ++i) local += query(queries[i]) ? 1 : 0;
        hits += local;
      });
    }
    for (auto& t : pool) t.join();
  }
  const double elapsed = seconds_since(start);
  (void)hits.load();
  return elapsed;
}

template <typename Query>
BenchRow measure(const std::string& name, std::uint64_t bits, double build_s,
                 const std::vector<std::string>& queries,
                 const std::unordered_set<std::string>& oracle,
                 const BenchOptions& opts, Query query) {
  BenchRow row;
  row.variant = name;
  row.bits = bits;
  row.build_s = build_s;
  for (const auto& q : queries)
    if (query(q) != (oracle.count(q) != 0)) ++row.mismatches;

  std::vector<double> times;
  times.reserve(opts.repeats);
  for (int rep = 0; rep < std::max(1, opts.repeats); ++rep)
    times.push_back(time_batch(queries, opts.threads, query));
  std::sort(times.begin(), times.end());
  row.query_s = times[times.size() / 2];
  row.qps = row.query_s > 0 ? static_cast<double>(queries.size()) / row.query_s : 0.0;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const Dictionary& dict, const BenchOptions& opts) {
  const auto& queries = dict.strings();
  std::unordered_set<std::string> oracle(queries.begin(), queries.end());
  std::vector<BenchRow> rows;

  auto start = Clock::now();
  Adfa trie = build_trie(dict);
  const double trie_s = seconds_since(start);
  rows.push_back(measure(
      "trie-plain", plain_bits(trie), trie_s, queries, oracle, opts,
      [&](const std::string& q) { return accepts_baseline(trie, q); }));

  start = Clock::now();
  Adfa min = minimize(trie);
  const double min_s = trie_s + seconds_since(start);
  rows.push_back(measure(
      "min-plain", plain_bits(min), min_s, queries, oracle, opts,
      [&](const std::string& q) { return accepts_baseline(min, q); }));

  start = Clock::now();
  Padfa path_packed = build(trie);
  const double path_packed_s = trie_s + seconds_since(start);
  rows.push_back(measure(
      "path-packed", space_report(path_packed).total_bits, path_packed_s, queries,
      oracle, opts, [&](const std::string& q) { return contains(path_packed, q); }));

  start = Clock::now();
  Padfa min_packed = build(min);
  const double min_packed_s = min_s + seconds_since(start);
  rows.push_back(measure(
      "min-packed", space_report(min_packed).total_bits, min_packed_s, queries,
      oracle, opts, [&](const std::string& q) { return contains(min_packed, q); }));

  return rows;
}

void print_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << std::left << std::setw(14) << "variant" << std::right << std::setw(14)
      << "bits" << std::setw(12) << "build_s" << std::setw(12) << "query_s"
      << std::setw(14) << "qps" << std::setw(12) << "mismatches" << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(14) << r.variant << std::right << std::setw(14)
        << r.bits << std::setw(12) << std::fixed << std::setprecision(4)
        << r.build_s << std::setw(12) << std::setprecision(4) << r.query_s
        << std::setw(14) << std::setprecision(0) << r.qps << std::setw(12)
        << r.mismatches << '\n';
  }
}

void print_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "variant,bits,build_s,query_s,qps,mismatches\n";
  for (const auto& r : rows)
    out << r.variant << ',' << r.bits << ',' << std::fixed << std::setprecision(6)
        << r.build_s << ',' << r.query_s << ',' << std::setprecision(1) << r.qps
        << ',' << r.mismatches << '\n';
}

int bench_threads_from_env() {
  const char* env = std::getenv("PADFA_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace padfa
