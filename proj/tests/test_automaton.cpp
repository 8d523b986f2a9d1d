#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "padfa/adfa.hpp"
#include "padfa/error.hpp"
#include "support.hpp"

using namespace padfa;

namespace {

const std::vector<std::string> kFigStrings = {"ab", "abab", "ababa",
                                              "bb", "bbab", "bbaba"};

Dictionary fig_dict() { return Dictionary::from_strings(kFigStrings); }

std::set<std::string> terminated(const std::vector<std::string>& strings) {
  std::set<std::string> out;
  for (const auto& s : strings) out.insert(s + '$');
  return out;
}

CodeMap ab_codes() {
  std::array<bool, 256> used{};
  used['a'] = used['b'] = true;
  return CodeMap::from_used(used);
}

// Signature re-hash over the finished automaton: in a minimal automaton no
// two vertices may share (accepting flag, edge list).
bool signatures_unique(const Adfa& a) {
  std::set<std::pair<bool, std::vector<Edge>>> seen;
  for (std::uint32_t v = 0; v < a.size(); ++v) {
    std::vector<Edge> edges(a.edges(v).begin(), a.edges(v).end());
    if (!seen.insert({a.accepting(v), std::move(edges)}).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trie of the six-string dictionary has 17 vertices and 16 edges") {
  const auto prefixes = testsup::terminated_prefixes(kFigStrings);
  CHECK(prefixes.size() == 17);  // oracle: distinct prefixes incl. empty

  const Adfa trie = build_trie(fig_dict());
  CHECK(trie.size() == prefixes.size());
  CHECK(trie.edge_count() == prefixes.size() - 1);
  CHECK(trie.accepting_count() == 6);
  CHECK(validate(trie).empty());
  CHECK(testsup::language_of(trie) == terminated(kFigStrings));
}

TEST_CASE("empty dictionary gives the bare root accepting nothing") {
  const Adfa trie = build_trie(Dictionary::from_strings({}));
  CHECK(trie.size() == 1);
  CHECK(trie.edge_count() == 0);
  CHECK(trie.accepting_count() == 0);
  CHECK(validate(trie).empty());
  CHECK_FALSE(accepts_baseline(trie, ""));
  CHECK_FALSE(accepts_baseline(trie, "a"));
}

TEST_CASE("dictionary of the empty string indexes the bare terminator") {
  const Adfa trie = build_trie(Dictionary::from_strings({""}));
  CHECK(trie.size() == 2);
  CHECK(trie.edge_count() == 1);
  CHECK(trie.accepting_count() == 1);
  CHECK(accepts_baseline(trie, ""));
  CHECK_FALSE(accepts_baseline(trie, "a"));
}

TEST_CASE("dictionary rejects duplicates naming both indices") {
  try {
    (void)Dictionary::from_strings({"x", "y", "x"});
    FAIL("expected duplicate error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::duplicate_string);
    CHECK(std::string(e.what()).find('0') != std::string::npos);
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("dictionary rejects the filler byte") {
  try {
    (void)Dictionary::from_strings({"ok", "bad#bad"});
    FAIL("expected filler error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::filler_byte);
    CHECK(std::string(e.what()).find('1') != std::string::npos);
  }
}

TEST_CASE("minimized six-string automaton matches the residual-language oracle") {
  const auto oracle = testsup::residual_dfa(terminated(kFigStrings));
  CHECK(oracle.states == 7);  // also pinned by the published example
  CHECK(oracle.edges == 9);
  CHECK(oracle.accepting == 1);

  const Adfa min = minimize(build_trie(fig_dict()));
  CHECK(min.size() == oracle.states);
  CHECK(min.edge_count() == oracle.edges);
  CHECK(min.accepting_count() == 1);
  CHECK(min.out_degree(min.root()) == 2);
  CHECK(validate(min).empty());
  CHECK(testsup::language_of(min) == terminated(kFigStrings));
  CHECK(signatures_unique(min));
}

TEST_CASE("minimize is idempotent") {
  const Adfa min = minimize(build_trie(fig_dict()));
  const Adfa again = minimize(min);
  CHECK(again.size() == min.size());
  CHECK(again.edge_count() == min.edge_count());
}

TEST_CASE("one-letter dictionaries share the mid state") {
  const Adfa min = minimize(build_trie(Dictionary::from_strings({"a", "b"})));
  CHECK(min.size() == 3);  // root, shared mid state, sink
  CHECK(min.edge_count() == 3);
}

TEST_CASE("language preservation: trie vs minimized on random dictionaries") {
  std::mt19937_64 rng(17);
  std::size_t probes_done = 0;
  for (int it = 0; it < 1000; ++it) {
    const Dictionary dict = testsup::random_dictionary(rng, 40, 14, 3);
    const Adfa trie = build_trie(dict);
    const Adfa min = minimize(trie);
    REQUIRE(min.size() <= trie.size());
    REQUIRE(signatures_unique(min));
    for (const auto& s : dict.strings()) {
      REQUIRE(accepts_baseline(trie, s));
      REQUIRE(accepts_baseline(min, s));
    }
    for (int p = 0; p < 10; ++p, ++probes_done) {
      const std::string probe = testsup::random_string(rng, 16, 3);
      REQUIRE(accepts_baseline(trie, probe) == accepts_baseline(min, probe));
    }
    // exact minimality against the independent Nerode construction
    if (dict.total_length() <= 200) {
      const auto oracle = testsup::residual_dfa(terminated(dict.strings()));
      REQUIRE(min.size() == oracle.states);
      REQUIRE(min.edge_count() == oracle.edges);
    }
  }
  CHECK(probes_done == 10000);
}

TEST_CASE("terminated dictionaries minimize to a single accepting sink") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 100; ++it) {
    const Dictionary dict = testsup::random_dictionary(rng, 30, 10, 4);
    if (dict.size() == 0) continue;
    const Adfa min = minimize(build_trie(dict));
    REQUIRE(min.accepting_count() == 1);
    std::uint32_t sinks = 0, accepting_sinks = 0;
    for (std::uint32_t v = 0; v < min.size(); ++v) {
      if (min.out_degree(v) == 0) {
        ++sinks;
        if (min.accepting(v)) ++accepting_sinks;
      }
    }
    REQUIRE(sinks == 1);
    REQUIRE(accepting_sinks == 1);
  }
}

TEST_CASE("suffix automaton languages on tiny texts") {
  CHECK(testsup::language_of(build_suffix_dawg("a")) ==
        std::set<std::string>{"a$", "$"});
  CHECK(testsup::language_of(build_suffix_dawg("abab")) ==
        std::set<std::string>{"abab$", "bab$", "ab$", "b$", "$"});
  CHECK(testsup::language_of(build_suffix_dawg("")) == std::set<std::string>{"$"});
}

TEST_CASE("suffix automaton rejects filler bytes in the text") {
  CHECK_THROWS_AS((void)build_suffix_dawg("a#b"), Error);
}

TEST_CASE("suffix automaton is the minimal suffix DFA on small texts") {
  // exhaustive binary texts up to length 10, then random ternary up to 14
  for (int len = 0; len <= 10; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string text(len, 'a');
      for (int i = 0; i < len; ++i)
        if (mask & (1 << i)) text[i] = 'b';
      std::set<std::string> suffixes;
      for (std::size_t i = 0; i <= text.size(); ++i)
        suffixes.insert(text.substr(i) + '$');
      const auto oracle = testsup::residual_dfa(suffixes);
      const Adfa dawg = build_suffix_dawg(text);
      REQUIRE(dawg.size() == oracle.states);
      REQUIRE(dawg.edge_count() == oracle.edges);
      REQUIRE(validate(dawg).empty());
    }
  }
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    const std::string text = testsup::random_string(rng, 14, 3);
    std::set<std::string> suffixes;
    for (std::size_t i = 0; i <= text.size(); ++i)
      suffixes.insert(text.substr(i) + '$');
    const auto oracle = testsup::residual_dfa(suffixes);
    const Adfa dawg = build_suffix_dawg(text);
    REQUIRE(dawg.size() == oracle.states);
    REQUIRE(dawg.edge_count() == oracle.edges);
  }
}

TEST_CASE("suffix automaton size bounds") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 200; ++it) {
    const std::string text = testsup::random_string(rng, 400, it % 2 ? 2 : 4);
    if (text.size() < 2) continue;
    const Adfa dawg = build_suffix_dawg(text);
    REQUIRE(dawg.size() <= 2 * (text.size() + 1));
    REQUIRE(dawg.edge_count() <= 3 * (text.size() + 1));
  }
}

TEST_CASE("reach set nonempty iff the pattern is a substring") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 20; ++it) {
    const std::string text = testsup::random_string(rng, 5000, 2);
    const Adfa dawg = build_suffix_dawg(text);
    for (int p = 0; p < 200; ++p) {
      std::string pattern;
      if (p % 2 == 0 && !text.empty()) {
        const std::size_t lo = rng() % text.size();
        pattern = text.substr(lo, 1 + rng() % 40);
      } else {
        pattern = testsup::random_string(rng, 20, 2);
      }
      REQUIRE(consumes_baseline(dawg, pattern) ==
              (text.find(pattern) != std::string::npos));
    }
  }
}

TEST_CASE("baseline walk on the published members and non-members") {
  const Adfa min = minimize(build_trie(fig_dict()));
  CHECK(accepts_baseline(min, "abab"));
  CHECK(accepts_baseline(min, "ab"));
  CHECK_FALSE(accepts_baseline(min, "aba"));
  CHECK_FALSE(accepts_baseline(min, ""));
  CHECK_FALSE(accepts_baseline(min, "abc"));  // byte outside the alphabet
  CHECK_FALSE(accepts_baseline(min, "ababab"));
}

TEST_CASE("validate flags planted defects") {
  const CodeMap cm = ab_codes();
  const Code a = 1;
  const Code term = cm.terminator();

  SUBCASE("duplicate label on one vertex") {
    const Adfa bad = Adfa::from_lists(
        0, {{{a, 1}, {a, 2}}, {{term, 3}}, {{term, 3}}, {}}, {0, 0, 0, 1}, cm);
    bool found = false;
    for (const auto& v : validate(bad))
      found |= v.rule == Violation::Rule::determinism && v.vertex == 0;
    CHECK(found);
  }

  SUBCASE("unreachable vertex") {
    const Adfa bad =
        Adfa::from_lists(0, {{{term, 1}}, {}, {{term, 1}}}, {0, 1, 0}, cm);
    bool found = false;
    for (const auto& v : validate(bad))
      found |= v.rule == Violation::Rule::redundant_state && v.vertex == 2;
    CHECK(found);
  }

  SUBCASE("cycle") {
    const Adfa bad = Adfa::from_lists(0, {{{a, 1}}, {{a, 0}, {term, 2}}, {}},
                                      {0, 0, 1}, cm);
    bool found = false;
    for (const auto& v : validate(bad))
      found |= v.rule == Violation::Rule::acyclicity;
    CHECK(found);
  }

  SUBCASE("terminator into a non-sink") {
    const Adfa bad =
        Adfa::from_lists(0, {{{term, 1}}, {{a, 2}}, {}}, {0, 1, 0}, cm);
    bool found = false;
    for (const auto& v : validate(bad))
      found |= v.rule == Violation::Rule::terminator_discipline;
    CHECK(found);
  }

  SUBCASE("well-formed automata produce no violations") {
    CHECK(validate(minimize(build_trie(fig_dict()))).empty());
    CHECK(validate(build_suffix_dawg("banana")).empty());
  }
}
