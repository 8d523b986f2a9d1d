// Command-line front end: build packed or plain indexes from dictionary or
// text files, query them, verify against oracles, report space, benchmark
// the variant matrix, and generate synthetic corpora.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "padfa/adfa_io.hpp"
#include "padfa/bench.hpp"
#include "padfa/corpus.hpp"
#include "padfa/decompose.hpp"
#include "padfa/padfa.hpp"
#include "padfa/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code_for(const padfa::Error& e) {
  switch (e.code()) {
    case padfa::ErrorCode::mode_mismatch:
      return kExitUsage;
    default:
      return kExitIo;
  }
}

std::string read_whole_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) padfa::raise(padfa::ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

struct BuildArgs {
  std::string input, out;
  std::string variant = "min";
  bool pack = false;
  std::string backend = "edgelist";
  std::string char_mode = "bitpacked";
};

int cmd_build(const BuildArgs& args) {
  using namespace padfa;
  BuildOptions opts;
  opts.backend = args.backend == "biased" ? Backend::biased : Backend::edgelist;
  opts.char_mode = args.char_mode == "byte" ? CharMode::byte : CharMode::bitpacked;

  Adfa automaton;
  std::uint64_t k = 0;
  if (args.variant == "dawg") {
    const std::string text = read_whole_file(args.input);
    automaton = build_suffix_dawg(text);
    opts.mode = Mode::reach;
    k = text.size() + 1;
  } else {
    Dictionary dict = Dictionary::read_file(args.input);
    if (dict.size() == 0)
      std::cerr << "warning: empty dictionary, index accepts nothing\n";
    k = dict.size();
    automaton = build_trie(dict);
    if (args.variant == "min") automaton = minimize(automaton);
  }

  if (args.pack) {
    const Padfa index = build(automaton, opts);
    save_index(index, args.out);
    const PathCounts pc = count_paths(automaton);
    const EdgeClassification ec = classify_edges(automaton, pc);
    std::cout << "n=" << index.n() << " k=" << index.k
              << " sigma=" << index.cm.sigma() << " H=" << ec.heavy_count
              << " L=" << ec.light_count << '\n';
  } else {
    PlainIndex index{std::move(automaton), opts.mode, k};
    save_plain(index, args.out);
    std::cout << "n=" << index.adfa.size() << " k=" << index.k
              << " sigma=" << index.adfa.code_map().sigma()
              << " edges=" << index.adfa.edge_count() << '\n';
  }
  return kExitOk;
}

struct QueryArgs {
  std::string index;
  std::string pattern;
  bool pattern_set = false;
  std::string patterns_file;
  std::string mode;  // "", "membership", or "substring"
};

int cmd_query(const QueryArgs& args) {
  using namespace padfa;
  std::vector<std::string> patterns;
  if (args.pattern_set) patterns.push_back(args.pattern);
  if (!args.patterns_file.empty()) {
    std::ifstream in(args.patterns_file, std::ios::binary);
    if (!in) raise(ErrorCode::io, "cannot open " + args.patterns_file);
    std::string line;
    while (std::getline(in, line)) patterns.push_back(line);
  }

  const bool packed = is_packed_index_file(args.index);
  Mode mode;
  Padfa packed_index;
  PlainIndex plain_index;
  if (packed) {
    packed_index = load_index(args.index);
    mode = packed_index.mode;
  } else {
    plain_index = load_plain(args.index);
    mode = plain_index.mode;
  }
  if (!args.mode.empty()) {
    const Mode wanted = args.mode == "substring" ? Mode::reach : Mode::membership;
    if (wanted != mode)
      raise(ErrorCode::mode_mismatch,
            "index mode is " + std::string(mode == Mode::reach ? "substring" : "membership") +
                " but --mode requested " + args.mode);
  }

  for (const auto& q : patterns) {
    bool hit;
    if (packed)
      hit = mode == Mode::reach ? reach(packed_index, q) : contains(packed_index, q);
    else
      hit = mode == Mode::reach ? consumes_baseline(plain_index.adfa, q)
                                : accepts_baseline(plain_index.adfa, q);
    std::cout << (hit ? '1' : '0') << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::size_t probes = 1000;
  std::uint64_t seed = 1;
  bool text = false;
};

int cmd_verify(const VerifyArgs& args) {
  using namespace padfa;
  VerifyResult res;
  if (args.text) {
    const std::string text = read_whole_file(args.input);
    res = verify_text(text, args.probes, args.seed);
  } else {
    Dictionary dict = Dictionary::read_file(args.input);
    res = verify_dictionary(dict, args.probes, args.seed);
  }
  if (res.ok) {
    std::cout << "PASS (" << res.checks << " checks)\n";
    return kExitOk;
  }
  std::cout << "FAIL after " << res.checks << " checks: " << res.witness << '\n';
  return kExitVerifyFail;
}

struct BenchArgs {
  std::string input;
  int repeats = 3;
  std::string csv_out;
};

int cmd_bench(const BenchArgs& args) {
  using namespace padfa;
  Dictionary dict = Dictionary::read_file(args.input);
  BenchOptions opts;
  opts.repeats = args.repeats;
  opts.threads = bench_threads_from_env();
  const auto rows = run_bench(dict, opts);
  print_bench_table(std::cout, rows);
  std::cout << '\n';
  print_bench_csv(std::cout, rows);
  if (!args.csv_out.empty()) {
    std::ofstream out(args.csv_out);
    if (!out) raise(ErrorCode::io, "cannot open " + args.csv_out + " for writing");
    print_bench_csv(out, rows);
  }
  for (const auto& r : rows)
    if (r.mismatches) return kExitVerifyFail;
  return kExitOk;
}

int cmd_stats(const std::string& index_path) {
  using namespace padfa;
  if (!is_packed_index_file(index_path))
    raise(ErrorCode::bad_magic, "stats requires a packed index file");
  const Padfa index = load_index(index_path);
  const SpaceReport rep = space_report(index);
  std::cout << "n=" << rep.n << " k=" << rep.k << " sigma=" << rep.sigma
            << " width_bits=" << rep.width_bits << " alpha=" << rep.alpha << '\n'
            << "text_bits=" << rep.text_bits << '\n'
            << "fid_bits=" << rep.fid_payload_bits + rep.fid_directory_bits
            << " (payload=" << rep.fid_payload_bits
            << " directory=" << rep.fid_directory_bits << ")\n"
            << "branch_bits=" << rep.branch_bits << '\n'
            << "dest_bits=" << rep.dest_bits << '\n'
            << "codemap_bits=" << rep.codemap_bits << '\n';
  if (index.mode == Mode::reach)
    std::cout << "accepting_bits=" << rep.accepting_bits << '\n';
  std::cout << "total_bits=" << rep.total_bits << '\n'
            << "reference_bits=" << rep.theorem_reference_bits
            << "  # n(1+ceil lg sigma) + k(ceil lg n + ceil lg sigma)\n";
  return kExitOk;
}

struct GenArgs {
  std::string shape = "prot";
  std::string out;
  std::size_t k = 0;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& args) {
  using namespace padfa;
  GenShape shape;
  if (args.shape == "prot")
    shape = prot_shape(args.k ? args.k : 10000);
  else if (args.shape == "url")
    shape = url_shape(args.k ? args.k : 20000);
  else if (args.shape == "city")
    shape = city_shape(args.k ? args.k : 20000);
  else
    raise(ErrorCode::io, "unknown shape " + args.shape);

  const Dictionary dict = gen_dictionary(shape, args.seed);
  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::io, "cannot open " + args.out + " for writing");
  for (const auto& s : dict.strings()) out << s << '\n';
  std::cout << "k=" << dict.size() << " total_len=" << dict.total_length()
            << " max_len=" << dict.max_length() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packed acyclic DFA dictionary index"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build an index from a dictionary or text file");
  build->add_option("--input", build_args.input, "input file")->required();
  build->add_option("--out", build_args.out, "output index file")->required();
  build->add_option("--variant", build_args.variant, "trie|min|dawg")
      ->check(CLI::IsMember({"trie", "min", "dawg"}));
  build->add_flag("--pack", build_args.pack, "emit the packed index format");
  build->add_option("--backend", build_args.backend, "biased|edgelist")
      ->check(CLI::IsMember({"biased", "edgelist"}));
  build->add_option("--char-mode", build_args.char_mode, "bitpacked|byte")
      ->check(CLI::IsMember({"bitpacked", "byte"}));

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "Answer membership or substring queries");
  query->add_option("--index", query_args.index, "index file")->required();
  auto* popt = query->add_option("--pattern", query_args.pattern, "single pattern");
  query->add_option("--patterns", query_args.patterns_file, "newline-delimited pattern file");
  query->add_option("--mode", query_args.mode, "assert the index mode: membership|substring")
      ->check(CLI::IsMember({"membership", "substring"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check all variants against oracles");
  verify->add_option("--input", verify_args.input, "dictionary (or text, with --text)")->required();
  verify->add_option("--probes", verify_args.probes, "random probe count");
  verify->add_option("--seed", verify_args.seed, "probe RNG seed");
  verify->add_flag("--text", verify_args.text, "treat input as text, check substring queries");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Benchmark the variant matrix on a dictionary");
  bench->add_option("--input", bench_args.input, "dictionary file")->required();
  bench->add_option("--repeat", bench_args.repeats, "batch repetitions (median reported)");
  bench->add_option("--csv", bench_args.csv_out, "also write the CSV report here");

  std::string stats_index;
  auto* stats = app.add_subcommand("stats", "Print the space report of a packed index");
  stats->add_option("--index", stats_index, "packed index file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic dictionary file");
  gen->add_option("--shape", gen_args.shape, "prot|url|city")
      ->check(CLI::IsMember({"prot", "url", "city"}));
  gen->add_option("--out", gen_args.out, "output dictionary file")->required();
  gen->add_option("--k", gen_args.k, "string count (0 = shape default)");
  gen->add_option("--seed", gen_args.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(build_args);
    if (query->parsed()) {
      query_args.pattern_set = popt->count() > 0;
      if (!query_args.pattern_set && query_args.patterns_file.empty()) {
        std::cerr << "query: need --pattern or --patterns\n";
        return kExitUsage;
      }
      return cmd_query(query_args);
    }
    if (verify->parsed()) return cmd_verify(verify_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (stats->parsed()) return cmd_stats(stats_index);
    if (gen->parsed()) return cmd_gen(gen_args);
  } catch (const padfa::Error& e) {
    std::cerr << "error (" << padfa::error_code_name(e.code()) << "): " << e.what()
              << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
