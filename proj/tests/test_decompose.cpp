#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "padfa/decompose.hpp"
#include "padfa/error.hpp"
#include "support.hpp"

using namespace padfa;

namespace {

const std::vector<std::string> kFigStrings = {"ab", "abab", "ababa",
                                              "bb", "bbab", "bbaba"};

Adfa fig_min() {
  return minimize(build_trie(Dictionary::from_strings(kFigStrings)));
}

std::vector<std::vector<std::uint32_t>> target_lists(const Adfa& a) {
  std::vector<std::vector<std::uint32_t>> out(a.size());
  for (std::uint32_t v = 0; v < a.size(); ++v)
    for (const Edge& e : a.edges(v)) out[v].push_back(e.to);
  return out;
}

std::uint8_t floor_log2_u64(std::uint64_t x) {
  std::uint8_t l = 0;
  while (x >>= 1) ++l;
  return l;
}

}  // namespace

TEST_CASE("path counts on the seven-vertex automaton") {
  const Adfa min = fig_min();
  const PathCounts pc = count_paths(min);
  CHECK(pc.total_paths == 6);  // one per dictionary string

  // cross-check every count with the relaxation oracle
  const auto oracle = testsup::path_counts_oracle(min.size(), min.root(), target_lists(min));
  CHECK(pc.pi_root == oracle.from_root);
  CHECK(pc.pi_sink == oracle.to_sink);

  for (std::uint32_t v = 0; v < min.size(); ++v)
    if (min.out_degree(v) == 0) CHECK(pc.pi_sink[v] == 1);
}

TEST_CASE("classification of the seven-vertex automaton") {
  const Adfa min = fig_min();
  const PathCounts pc = count_paths(min);
  const EdgeClassification ec = classify_edges(min, pc);
  CHECK(ec.heavy_count == 3);
  CHECK(ec.light_count == 6);
  CHECK(ec.light_sources == 4);
}

TEST_CASE("renumbered seven-vertex automaton hits the published layout") {
  const Adfa min = fig_min();
  const PathCounts pc = count_paths(min);
  const EdgeClassification ec = classify_edges(min, pc);
  const Renumbered r = heavy_renumber(min, ec, pc);

  REQUIRE(r.adfa.size() == 7);
  CHECK(r.adfa.root() == 0);
  CHECK(r.pc.pi_root == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 6});
  CHECK(r.pc.pi_sink == std::vector<std::uint64_t>{6, 3, 3, 2, 2, 1, 1});
  // vertex 4 (1-based 5) carries two paths either way
  CHECK(r.pc.pi_root[4] == 2);
  CHECK(r.pc.pi_sink[4] == 2);

  // heavy chain 1 -> 2 -> 3 -> 4 spelled b, a, b
  std::string heavy_text;
  for (std::uint32_t v = 0; v < 7; ++v) {
    if (r.ec.heavy_out[v] >= 0) {
      const Edge e = r.adfa.edges(v)[static_cast<std::size_t>(r.ec.heavy_out[v])];
      CHECK(e.to == v + 1);
      heavy_text.push_back(display_char(r.adfa.code_map(), e.label));
    } else {
      heavy_text.push_back('#');
    }
  }
  CHECK(heavy_text == "#bab###");

  std::string b_bits;
  for (std::uint32_t v = 0; v < 7; ++v) b_bits.push_back(r.ec.light_source(v) ? '1' : '0');
  CHECK(b_bits == "1010110");

  // light group of vertex 4: labels (a, $), destinations (5, 6)
  const auto edges = r.adfa.edges(4);
  REQUIRE(edges.size() == 2);
  CHECK(r.ec.heavy_out[4] == -1);
  CHECK(display_char(r.adfa.code_map(), edges[0].label) == 'a');
  CHECK(display_char(r.adfa.code_map(), edges[1].label) == '$');
  CHECK(edges[0].to == 5);
  CHECK(edges[1].to == 6);
}

TEST_CASE("single-string dictionary: all edges heavy, no light sources") {
  const Adfa min = minimize(build_trie(Dictionary::from_strings({"abc"})));
  const PathCounts pc = count_paths(min);
  for (std::uint32_t v = 0; v < min.size(); ++v) {
    CHECK(pc.pi_root[v] == 1);
    CHECK(pc.pi_sink[v] == 1);
  }
  const EdgeClassification ec = classify_edges(min, pc);
  CHECK(ec.light_count == 0);
  CHECK(ec.heavy_count == min.edge_count());
  CHECK(ec.light_sources == 0);

  const Renumbered r = heavy_renumber(min, ec, pc);
  for (std::uint32_t v = 0; v + 1 < r.adfa.size(); ++v) {
    REQUIRE(r.adfa.out_degree(v) == 1);
    CHECK(r.adfa.edges(v)[0].to == v + 1);
  }
}

TEST_CASE("automaton with no heavy edges renumbers topologically") {
  // every edge of this minimized automaton crosses a lambda boundary:
  // path counts per vertex are (1,4) (1,3) (3,1) (4,1) in some order
  const Adfa min =
      minimize(build_trie(Dictionary::from_strings({"a", "b", "aa", "ab"})));
  const PathCounts pc = count_paths(min);
  const EdgeClassification ec = classify_edges(min, pc);
  CHECK(ec.heavy_count == 0);
  const Renumbered r = heavy_renumber(min, ec, pc);
  CHECK(r.adfa.root() == 0);
  // re-running classification on the output reproduces the classification
  const EdgeClassification ec2 = classify_edges(r.adfa, r.pc);
  CHECK(ec2.heavy_count == ec.heavy_count);
  CHECK(ec2.light_count == ec.light_count);
  CHECK(ec2.light_sources == ec.light_sources);
}

TEST_CASE("decomposition invariants on random dictionaries") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    Dictionary dict = testsup::random_dictionary(rng, 60, 16, it % 2 ? 2 : 4);
    if (dict.size() == 0) continue;
    const Adfa trie = build_trie(dict);
    for (const Adfa* a : {&trie}) {
      const Adfa min = minimize(*a);
      for (const Adfa* m : {a, &min}) {
        const PathCounts pc = count_paths(*m);
        const std::uint64_t k = pc.total_paths;
        REQUIRE(k == dict.size());
        const EdgeClassification ec = classify_edges(*m, pc);

        // disjoint paths: at most one heavy in- and out-edge per vertex
        std::vector<int> heavy_in(m->size(), 0);
        for (std::uint32_t v = 0; v < m->size(); ++v)
          if (ec.heavy_out[v] >= 0)
            ++heavy_in[m->edges(v)[static_cast<std::size_t>(ec.heavy_out[v])].to];
        for (std::uint32_t v = 0; v < m->size(); ++v) {
          REQUIRE(heavy_in[v] <= 1);
          REQUIRE(heavy_in[v] == ec.heavy_in[v]);
        }

        // every root-to-sink path carries at most 2*floor(log2 k) lights
        const std::size_t bound = 2u * floor_log2_u64(k);
        REQUIRE(testsup::max_light_on_paths_exhaustive(*m, ec.heavy_out, 20000) <= bound);

        // renumbering preserves the language
        const Renumbered r = heavy_renumber(*m, ec, pc);
        for (const auto& s : dict.strings()) REQUIRE(accepts_baseline(r.adfa, s));
        for (int p = 0; p < 20; ++p) {
          const std::string probe = testsup::random_string(rng, 18, 4);
          REQUIRE(accepts_baseline(r.adfa, probe) == accepts_baseline(*m, probe));
        }
        for (std::uint32_t v = 0; v < r.adfa.size(); ++v)
          if (r.ec.heavy_out[v] >= 0)
            REQUIRE(r.adfa.edges(v)[static_cast<std::size_t>(r.ec.heavy_out[v])].to == v + 1);
      }
    }
  }
}

TEST_CASE("degree and light-edge bounds on minimized automata") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 150; ++it) {
    Dictionary dict = testsup::random_dictionary(rng, 80, 14, it % 3 ? 2 : 5);
    if (dict.size() == 0) continue;
    const std::uint64_t k = dict.size();
    const Adfa min = minimize(build_trie(dict));

    std::vector<std::size_t> indeg(min.size(), 0);
    std::size_t out_sum = 0;
    for (std::uint32_t v = 0; v < min.size(); ++v) {
      for (const Edge& e : min.edges(v)) ++indeg[e.to];
      if (min.out_degree(v) >= 2) out_sum += min.out_degree(v);
    }
    std::size_t in_sum = 0;
    for (std::uint32_t v = 0; v < min.size(); ++v)
      if (indeg[v] >= 2) in_sum += indeg[v];
    REQUIRE(out_sum < 2 * k);
    REQUIRE(in_sum < 2 * k);

    const PathCounts pc = count_paths(min);
    const EdgeClassification ec = classify_edges(min, pc);
    REQUIRE(ec.light_count <= 4 * k);
  }
}

TEST_CASE("count_paths rejects cyclic input") {
  std::array<bool, 256> used{};
  used['a'] = true;
  const CodeMap cm = CodeMap::from_used(used);
  const Adfa cyclic = Adfa::from_lists(
      0, {{{1, 1}}, {{1, 0}, {2, 2}}, {}}, {0, 0, 1}, cm);
  CHECK_THROWS_AS((void)count_paths(cyclic), Error);
}

TEST_CASE("count_paths reports overflow with the vertex") {
  // 70 stacked diamonds double the count each level: 2^70 paths
  std::array<bool, 256> used{};
  used['a'] = used['b'] = used['c'] = true;
  const CodeMap cm = CodeMap::from_used(used);
  const Code a = 1, b = 2, c = 3, term = cm.terminator();

  const int diamonds = 70;
  std::vector<std::vector<Edge>> lists;
  std::vector<std::uint8_t> accepting;
  for (int i = 0; i < diamonds; ++i) {
    const auto x = static_cast<std::uint32_t>(3 * i + 1);
    const auto y = static_cast<std::uint32_t>(3 * i + 2);
    const auto nxt = static_cast<std::uint32_t>(3 * i + 3);
    lists.push_back({{a, x}, {b, y}});
    lists.push_back({{c, nxt}});
    lists.push_back({{c, nxt}});
    accepting.insert(accepting.end(), {0, 0, 0});
  }
  const auto sink = static_cast<std::uint32_t>(3 * diamonds + 1);
  lists.push_back({{term, sink}});
  lists.push_back({});
  accepting.insert(accepting.end(), {0, 1});

  const Adfa wide = Adfa::from_lists(0, lists, accepting, cm);
  try {
    (void)count_paths(wide);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::count_overflow);
    CHECK(std::string(e.what()).find("vertex") != std::string::npos);
  }
}

TEST_CASE("renumber rejects a classification breaking the disjoint-path rule") {
  std::array<bool, 256> used{};
  used['a'] = used['b'] = true;
  const CodeMap cm = CodeMap::from_used(used);
  const Code a = 1, b = 2, term = cm.terminator();
  const Adfa diamond = Adfa::from_lists(
      0, {{{a, 1}, {b, 2}}, {{term, 3}}, {{term, 3}}, {}}, {0, 0, 0, 1}, cm);
  const PathCounts pc = count_paths(diamond);
  EdgeClassification ec = classify_edges(diamond, pc);
  // pretend both terminator edges are heavy: two heavy ins at the sink
  ec.heavy_out[1] = 0;
  ec.heavy_out[2] = 0;
  ec.heavy_in[3] = 1;
  CHECK_THROWS_AS((void)heavy_renumber(diamond, ec, pc), Error);
}
