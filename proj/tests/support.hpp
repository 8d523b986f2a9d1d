// Test-side oracles, independent of the library implementations they check:
// linear-scan rank/select, character-loop LCP, residual-set minimal DFA,
// plain DP path counting over explicit edge lists, and language
// enumeration of small automata.
#ifndef PADFA_TESTS_SUPPORT_HPP
#define PADFA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "padfa/adfa.hpp"
#include "padfa/dictionary.hpp"

namespace testsup {

// --- rank/select on a plain bool vector ---------------------------------

inline std::size_t rank1_oracle(const std::vector<bool>& bits, std::size_t i) {
  std::size_t c = 0;
  for (std::size_t p = 0; p < i; ++p) c += bits[p] ? 1 : 0;
  return c;
}

inline std::size_t select1_oracle(const std::vector<bool>& bits, std::size_t j) {
  std::size_t seen = 0;
  for (std::size_t p = 0; p < bits.size(); ++p)
    if (bits[p] && ++seen == j) return p;
  return bits.size();  // out of range
}

// --- character-loop LCP --------------------------------------------------

template <typename Seq>
std::size_t lcp_oracle(const Seq& a, std::size_t i, const Seq& b, std::size_t j) {
  std::size_t l = 0;
  while (i + l < a.size() && j + l < b.size() && a[i + l] == b[j + l]) ++l;
  return l;
}

// --- minimal partial DFA via residual languages --------------------------
// States are distinct residual string sets reachable from the whole
// language; this is the Nerode construction, so state and edge counts are
// those of the minimal automaton with no redundant states.

struct ResidualDfa {
  std::size_t states = 0;
  std::size_t edges = 0;
  std::size_t accepting = 0;
};

inline ResidualDfa residual_dfa(const std::set<std::string>& language) {
  ResidualDfa out;
  if (language.empty()) {
    out.states = 1;  // bare initial state accepting nothing
    return out;
  }
  std::map<std::set<std::string>, int> ids;
  std::vector<std::set<std::string>> queue_sets;
  ids.emplace(language, 0);
  queue_sets.push_back(language);
  for (std::size_t at = 0; at < queue_sets.size(); ++at) {
    const auto current = queue_sets[at];
    if (current.count("")) ++out.accepting;
    std::map<char, std::set<std::string>> residuals;
    for (const auto& s : current)
      if (!s.empty()) residuals[s[0]].insert(s.substr(1));
    for (auto& [c, rest] : residuals) {
      ++out.edges;
      if (ids.emplace(rest, static_cast<int>(queue_sets.size())).second)
        queue_sets.push_back(rest);
    }
  }
  out.states = queue_sets.size();
  return out;
}

// --- DP path counts over explicit edge lists ------------------------------

struct PathCountOracle {
  std::vector<std::uint64_t> from_root;
  std::vector<std::uint64_t> to_sink;
};

inline PathCountOracle path_counts_oracle(
    std::size_t n, std::uint32_t root,
    const std::vector<std::vector<std::uint32_t>>& targets) {
  PathCountOracle out;
  out.from_root.assign(n, 0);
  out.to_sink.assign(n, 0);
  // Repeated relaxation in id order until fixpoint; slow but obviously
  // correct and independent of any topological machinery.
  out.from_root[root] = 1;
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n, 0);
    next[root] = 1;
    for (std::size_t v = 0; v < n; ++v)
      for (std::uint32_t t : targets[v]) next[t] += out.from_root[v];
    if (next == out.from_root) break;
    out.from_root = std::move(next);
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (targets[v].empty()) {
        next[v] = 1;
        continue;
      }
      for (std::uint32_t t : targets[v]) next[v] += out.to_sink[t];
    }
    if (next == out.to_sink) break;
    out.to_sink = std::move(next);
  }
  return out;
}

// --- language enumeration of a small automaton ---------------------------
// Decodes codes back to bytes, rendering the terminator as '$'. Only for
// automata whose language comfortably fits in memory.

inline void enumerate_language(const padfa::Adfa& a, std::uint32_t v,
                               std::string& prefix, std::set<std::string>& out) {
  if (a.accepting(v)) out.insert(prefix);
  for (const padfa::Edge& e : a.edges(v)) {
    prefix.push_back(padfa::display_char(a.code_map(), e.label));
    enumerate_language(a, e.to, prefix, out);
    prefix.pop_back();
  }
}

inline std::set<std::string> language_of(const padfa::Adfa& a) {
  std::set<std::string> out;
  std::string prefix;
  if (a.size() > 0) enumerate_language(a, a.root(), prefix, out);
  return out;
}

// --- random dictionaries for property tests ------------------------------

inline padfa::Dictionary random_dictionary(std::mt19937_64& rng, std::size_t max_k,
                                           std::size_t max_len, int sigma) {
  std::set<std::string> strings;
  const std::size_t k = rng() % (max_k + 1);
  while (strings.size() < k) {
    std::string s(rng() % (max_len + 1), '\0');
    for (char& c : s) c = static_cast<char>('a' + rng() % sigma);
    strings.insert(std::move(s));
    if (strings.size() >= max_k) break;
  }
  return padfa::Dictionary::from_strings({strings.begin(), strings.end()});
}

inline std::string random_string(std::mt19937_64& rng, std::size_t max_len, int sigma) {
  std::string s(rng() % (max_len + 1), '\0');
  for (char& c : s) c = static_cast<char>('a' + rng() % sigma);
  return s;
}

// Distinct prefixes of the terminated dictionary, the trie vertex oracle.
inline std::set<std::string> terminated_prefixes(const std::vector<std::string>& strings) {
  std::set<std::string> prefixes;
  for (const auto& s : strings) {
    const std::string t = s + '$';
    for (std::size_t l = 0; l <= t.size(); ++l) prefixes.insert(t.substr(0, l));
  }
  return prefixes;
}

// --- light edges per root-to-sink path ------------------------------------

// Exhaustive enumeration with an explicit stack; stops after path_cap paths.
inline std::size_t max_light_on_paths_exhaustive(
    const padfa::Adfa& a, const std::vector<std::int32_t>& heavy_out,
    std::size_t path_cap) {
  struct Frame {
    std::uint32_t v;
    std::size_t edge;
    std::size_t lights;
  };
  std::size_t best = 0, paths = 0;
  std::vector<Frame> stack{{a.root(), 0, 0}};
  while (!stack.empty() && paths < path_cap) {
    Frame& f = stack.back();
    const auto edges = a.edges(f.v);
    if (edges.empty() && f.edge == 0) {
      best = std::max(best, f.lights);
      ++paths;
      stack.pop_back();
      continue;
    }
    if (f.edge >= edges.size()) {
      stack.pop_back();
      continue;
    }
    const bool heavy = heavy_out[f.v] == static_cast<std::int32_t>(f.edge);
    const std::uint32_t to = edges[f.edge].to;
    const std::size_t lights = f.lights + (heavy ? 0 : 1);
    ++f.edge;
    stack.push_back({to, 0, lights});
  }
  return best;
}

// Uniform random root-to-sink walks.
inline std::size_t max_light_on_paths_sampled(
    const padfa::Adfa& a, const std::vector<std::int32_t>& heavy_out,
    std::size_t walks, std::mt19937_64& rng) {
  std::size_t best = 0;
  for (std::size_t w = 0; w < walks; ++w) {
    std::uint32_t v = a.root();
    std::size_t lights = 0;
    while (a.out_degree(v) > 0) {
      const auto edges = a.edges(v);
      const std::size_t pick = rng() % edges.size();
      lights += heavy_out[v] == static_cast<std::int32_t>(pick) ? 0 : 1;
      v = edges[pick].to;
    }
    best = std::max(best, lights);
  }
  return best;
}

}  // namespace testsup

#endif  // PADFA_TESTS_SUPPORT_HPP
