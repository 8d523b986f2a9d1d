#ifndef PADFA_ADFA_HPP
#define PADFA_ADFA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padfa/code_map.hpp"
#include "padfa/dictionary.hpp"

namespace padfa {

struct Edge {
  Code label;
  std::uint32_t to;

  auto operator<=>(const Edge&) const = default;
};

// Partial acyclic deterministic automaton over dense codes, immutable after
// construction. Edge lists are CSR-packed and sorted by label. Vertices are
// 0-based; the root is the unique source.
class Adfa {
public:
  Adfa() = default;

  static Adfa from_lists(std::uint32_t root,
                         const std::vector<std::vector<Edge>>& lists,
                         const std::vector<std::uint8_t>& accepting,
                         CodeMap cm);

  std::uint32_t root() const { return root_; }
  std::size_t size() const { return off_.empty() ? 0 : off_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges(std::uint32_t v) const {
    return {edges_.data() + off_[v], edges_.data() + off_[v + 1]};
  }
  std::size_t out_degree(std::uint32_t v) const { return off_[v + 1] - off_[v]; }

  bool accepting(std::uint32_t v) const {
    return (accept_[v >> 6] >> (v & 63)) & 1;
  }
  std::size_t accepting_count() const { return accepting_count_; }

  const CodeMap& code_map() const { return cm_; }

  // Index of the edge labeled c within edges(v), or -1.
  std::int32_t find_edge(std::uint32_t v, Code c) const;

private:
  std::vector<std::uint32_t> off_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> accept_;
  std::size_t accepting_count_ = 0;
  std::uint32_t root_ = 0;
  CodeMap cm_;
};

// Trie of the dictionary with the terminator appended to every string.
// Accepting states are exactly the leaves.
Adfa build_trie(const Dictionary& dict);

// Merges language-equivalent vertices bottom-up over a reverse topological
// order; works for any valid input, tree-shaped or not. The result accepts
// the same language and no two vertices share a signature.
Adfa minimize(const Adfa& a);

// Minimal automaton accepting every suffix of text followed by the
// terminator (the suffix automaton of text with the terminator appended).
// Throws Error{filler_byte} if the text contains the reserved filler.
Adfa build_suffix_dawg(std::string_view text);

// Reference per-edge walk: true iff the automaton accepts pattern followed
// by the terminator. Bytes outside the code map reject immediately.
bool accepts_baseline(const Adfa& a, std::string_view pattern);

// True iff the whole pattern is consumable from the root (no terminator).
bool consumes_baseline(const Adfa& a, std::string_view pattern);

struct Violation {
  enum class Rule {
    determinism,
    label_range,
    acyclicity,
    unique_source,
    redundant_state,
    terminator_discipline,
    bad_target,
  };
  Rule rule;
  std::uint32_t vertex;
  std::string detail;
};

const char* rule_name(Violation::Rule r);

// Structural checks; violations are returned as data, not thrown. An empty
// result means every invariant holds. The root-only automaton with no
// accepting state is the valid empty-dictionary case.
std::vector<Violation> validate(const Adfa& a);

// Kahn topological order (deterministic, FIFO). Throws Error{cyclic_input}
// if the graph has a cycle.
std::vector<std::uint32_t> topo_order(const Adfa& a);

}  // namespace padfa

#endif  // PADFA_ADFA_HPP
