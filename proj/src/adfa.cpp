#include "padfa/adfa.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <unordered_map>

#include "padfa/error.hpp"

namespace padfa {

namespace {

std::vector<std::uint64_t> pack_flags(const std::vector<std::uint8_t>& flags) {
  std::vector<std::uint64_t> words((flags.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) words[i >> 6] |= std::uint64_t{1} << (i & 63);
  return words;
}

CodeMap code_map_of_strings(const std::vector<std::string>& strings) {
  std::array<bool, 256> used{};
  for (const auto& s : strings)
    for (unsigned char b : s) used[b] = true;
  return CodeMap::from_used(used);
}

}  // namespace

Adfa Adfa::from_lists(std::uint32_t root,
                      const std::vector<std::vector<Edge>>& lists,
                      const std::vector<std::uint8_t>& accepting, CodeMap cm) {
  Adfa a;
  a.root_ = root;
  a.cm_ = std::move(cm);
  a.off_.resize(lists.size() + 1, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    total += lists[v].size();
    a.off_[v + 1] = static_cast<std::uint32_t>(total);
  }
  a.edges_.reserve(total);
  for (const auto& list : lists) a.edges_.insert(a.edges_.end(), list.begin(), list.end());
  a.accept_ = pack_flags(accepting);
  for (std::uint8_t f : accepting) a.accepting_count_ += (f != 0);
  return a;
}

std::int32_t Adfa::find_edge(std::uint32_t v, Code c) const {
  const Edge* first = edges_.data() + off_[v];
  const Edge* last = edges_.data() + off_[v + 1];
  const Edge* it = std::lower_bound(
      first, last, c, [](const Edge& e, Code x) { return e.label < x; });
  if (it == last || it->label != c) return -1;
  return static_cast<std::int32_t>(it - first);
}

Adfa build_trie(const Dictionary& dict) {
  CodeMap cm = code_map_of_strings(dict.strings());
  const Code term = cm.terminator();

  std::vector<std::vector<Edge>> lists(1);
  std::vector<std::uint8_t> accepting(1, 0);

  auto step = [&](std::uint32_t v, Code c) {
    auto& list = lists[v];
    auto it = std::lower_bound(list.begin(), list.end(), c,
                               [](const Edge& e, Code x) { return e.label < x; });
    if (it != list.end() && it->label == c) return it->to;
    const auto child = static_cast<std::uint32_t>(lists.size());
    list.insert(it, Edge{c, child});
    lists.emplace_back();
    accepting.push_back(0);
    return child;
  };

  for (const auto& s : dict.strings()) {
    std::uint32_t v = 0;
    for (unsigned char b : s) v = step(v, cm.code_of(b));
    v = step(v, term);
    accepting[v] = 1;
  }
  return Adfa::from_lists(0, lists, accepting, std::move(cm));
}

std::vector<std::uint32_t> topo_order(const Adfa& a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> indeg(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (const Edge& e : a.edges(v)) ++indeg[e.to];

  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (const Edge& e : a.edges(v))
      if (--indeg[e.to] == 0) queue.push_back(e.to);
  }
  if (order.size() != n)
    raise(ErrorCode::cyclic_input, "automaton contains a cycle");
  return order;
}

namespace {

struct SigHash {
  std::size_t operator()(const std::vector<std::uint64_t>& sig) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t x : sig) {
      h ^= x;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Adfa minimize(const Adfa& a) {
  {
    auto violations = validate(a);
    if (!violations.empty())
      raise(ErrorCode::invalid_automaton,
            std::string("minimize: ") + rule_name(violations.front().rule) +
                " violation at vertex " + std::to_string(violations.front().vertex));
  }
  const std::size_t n = a.size();
  const auto order = topo_order(a);

  // Reverse topological processing: targets have classes before sources.
  // Signature: accepting flag, then (label, target class) pairs.
  std::vector<std::uint32_t> cls(n, 0);
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, SigHash> ids;
  std::vector<std::vector<Edge>> class_edges;
  std::vector<std::uint8_t> class_accept;
  ids.reserve(n);

  std::vector<std::uint64_t> sig;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t v = *it;
    const auto edges = a.edges(v);
    sig.clear();
    sig.push_back(a.accepting(v) ? 1 : 0);
    for (const Edge& e : edges)
      sig.push_back((static_cast<std::uint64_t>(e.label) << 32) | cls[e.to]);
    auto [pos, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(class_edges.size()));
    cls[v] = pos->second;
    if (inserted) {
      std::vector<Edge> remapped(edges.begin(), edges.end());
      for (Edge& e : remapped) e.to = cls[e.to];
      class_edges.push_back(std::move(remapped));
      class_accept.push_back(a.accepting(v) ? 1 : 0);
    }
  }

  // Classes were created sinks-first; flipping the ids makes them
  // topological with the root (created last, always its own class) at 0.
  const auto m = static_cast<std::uint32_t>(class_edges.size());
  std::vector<std::vector<Edge>> lists(m);
  std::vector<std::uint8_t> accepting(m);
  for (std::uint32_t c = 0; c < m; ++c) {
    const std::uint32_t nc = m - 1 - c;
    lists[nc] = std::move(class_edges[c]);
    for (Edge& e : lists[nc]) e.to = m - 1 - e.to;
    accepting[nc] = class_accept[c];
  }
  assert(m - 1 - cls[a.root()] == 0);
  return Adfa::from_lists(0, lists, accepting, a.code_map());
}

namespace {

// Online suffix-automaton state during construction.
struct SaNode {
  std::vector<Edge> edges;  // sorted by label
  std::int32_t slink = -1;
  std::uint32_t len = 0;
};

std::int32_t sa_find(const SaNode& node, Code c) {
  auto it = std::lower_bound(node.edges.begin(), node.edges.end(), c,
                             [](const Edge& e, Code x) { return e.label < x; });
  if (it == node.edges.end() || it->label != c) return -1;
  return static_cast<std::int32_t>(it - node.edges.begin());
}

void sa_set(SaNode& node, Code c, std::uint32_t to) {
  auto it = std::lower_bound(node.edges.begin(), node.edges.end(), c,
                             [](const Edge& e, Code x) { return e.label < x; });
  if (it != node.edges.end() && it->label == c)
    it->to = to;
  else
    node.edges.insert(it, Edge{c, to});
}

}  // namespace

Adfa build_suffix_dawg(std::string_view text) {
  if (text.find(static_cast<char>(kFillerByte)) != std::string_view::npos)
    raise(ErrorCode::filler_byte, "text contains the reserved filler byte '#'");

  std::array<bool, 256> used{};
  for (unsigned char b : text) used[b] = true;
  CodeMap cm = CodeMap::from_used(used);

  std::vector<SaNode> nodes(1);
  std::uint32_t last = 0;

  auto extend = [&](Code c) {
    const auto cur = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({});
    nodes[cur].len = nodes[last].len + 1;
    std::int64_t p = last;
    while (p >= 0 && sa_find(nodes[p], c) < 0) {
      sa_set(nodes[p], c, cur);
      p = nodes[p].slink;
    }
    if (p < 0) {
      nodes[cur].slink = 0;
    } else {
      const auto q = nodes[p].edges[sa_find(nodes[p], c)].to;
      if (nodes[p].len + 1 == nodes[q].len) {
        nodes[cur].slink = static_cast<std::int32_t>(q);
      } else {
        const auto clone = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back(nodes[q]);
        nodes[clone].len = nodes[p].len + 1;
        while (p >= 0) {
          const auto idx = sa_find(nodes[p], c);
          if (idx < 0 || nodes[p].edges[idx].to != q) break;
          nodes[p].edges[idx].to = clone;
          p = nodes[p].slink;
        }
        nodes[q].slink = nodes[cur].slink = static_cast<std::int32_t>(clone);
      }
    }
    last = cur;
  };

  for (unsigned char b : text) extend(cm.code_of(b));
  // The terminator occurs nowhere else, so this final step never clones and
  // the new state becomes the single accepting sink.
  extend(cm.terminator());

  std::vector<std::vector<Edge>> lists(nodes.size());
  std::vector<std::uint8_t> accepting(nodes.size(), 0);
  for (std::size_t v = 0; v < nodes.size(); ++v) lists[v] = std::move(nodes[v].edges);
  accepting[last] = 1;
  return Adfa::from_lists(0, lists, accepting, std::move(cm));
}

bool accepts_baseline(const Adfa& a, std::string_view pattern) {
  if (a.size() == 0) return false;
  const CodeMap& cm = a.code_map();
  std::uint32_t v = a.root();
  for (unsigned char b : pattern) {
    const Code c = cm.code_of(b);
    if (c == kInvalidCode) return false;
    const std::int32_t idx = a.find_edge(v, c);
    if (idx < 0) return false;
    v = a.edges(v)[static_cast<std::size_t>(idx)].to;
  }
  const std::int32_t idx = a.find_edge(v, cm.terminator());
  if (idx < 0) return false;
  v = a.edges(v)[static_cast<std::size_t>(idx)].to;
  return a.accepting(v);
}

bool consumes_baseline(const Adfa& a, std::string_view pattern) {
  if (a.size() == 0) return false;
  const CodeMap& cm = a.code_map();
  std::uint32_t v = a.root();
  for (unsigned char b : pattern) {
    const Code c = cm.code_of(b);
    if (c == kInvalidCode) return false;
    const std::int32_t idx = a.find_edge(v, c);
    if (idx < 0) return false;
    v = a.edges(v)[static_cast<std::size_t>(idx)].to;
  }
  return true;
}

const char* rule_name(Violation::Rule r) {
  switch (r) {
    case Violation::Rule::determinism: return "determinism";
    case Violation::Rule::label_range: return "label-range";
    case Violation::Rule::acyclicity: return "acyclicity";
    case Violation::Rule::unique_source: return "unique-source";
    case Violation::Rule::redundant_state: return "redundant-state";
    case Violation::Rule::terminator_discipline: return "terminator-discipline";
    case Violation::Rule::bad_target: return "bad-target";
  }
  return "unknown";
}

std::vector<Violation> validate(const Adfa& a) {
  std::vector<Violation> out;
  const std::size_t n = a.size();
  if (n == 0) {
    out.push_back({Violation::Rule::unique_source, 0, "automaton has no vertices"});
    return out;
  }
  const CodeMap& cm = a.code_map();
  const Code term = cm.terminator();

  for (std::uint32_t v = 0; v < n; ++v) {
    Code prev = 0;
    bool first = true;
    for (const Edge& e : a.edges(v)) {
      if (e.to >= n) {
        out.push_back({Violation::Rule::bad_target, v,
                       "edge target " + std::to_string(e.to) + " out of range"});
        return out;  // indexing past n is unsafe for the remaining checks
      }
      if (e.label == kFillerCode || e.label > term)
        out.push_back({Violation::Rule::label_range, v,
                       "edge label " + std::to_string(e.label) + " outside 1.." +
                           std::to_string(term)});
      if (!first && e.label <= prev)
        out.push_back({Violation::Rule::determinism, v,
                       "labels not strictly increasing at code " +
                           std::to_string(e.label)});
      prev = e.label;
      first = false;
    }
  }

  std::vector<std::uint32_t> indeg(n, 0);
  std::vector<std::uint8_t> in_term_only(n, 1);
  for (std::uint32_t v = 0; v < n; ++v)
    for (const Edge& e : a.edges(v)) {
      ++indeg[e.to];
      if (e.label != term) in_term_only[e.to] = 0;
    }
  for (std::uint32_t v = 0; v < n; ++v) {
    const bool source = indeg[v] == 0;
    if (source != (v == a.root()))
      out.push_back({Violation::Rule::unique_source, v,
                     source ? "extra source vertex" : "root has in-edges"});
  }

  try {
    topo_order(a);
  } catch (const Error&) {
    out.push_back({Violation::Rule::acyclicity, a.root(), "graph has a cycle"});
    return out;  // reachability below assumes a DAG terminates
  }

  // Reachability from the root and co-reachability to an accepting state.
  std::vector<std::uint8_t> reach(n, 0);
  std::vector<std::uint32_t> stack{a.root()};
  reach[a.root()] = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(v))
      if (!reach[e.to]) {
        reach[e.to] = 1;
        stack.push_back(e.to);
      }
  }

  const bool empty_language = a.accepting_count() == 0;
  if (empty_language) {
    // The root-only automaton accepting nothing is the one sanctioned
    // empty case; anything larger has redundant states.
    if (n > 1 || a.edge_count() > 0)
      out.push_back({Violation::Rule::redundant_state, a.root(),
                     "no accepting state but more than the bare root"});
  } else {
    std::vector<std::uint8_t> colive(n, 0);
    std::vector<std::vector<std::uint32_t>> rev(n);
    for (std::uint32_t v = 0; v < n; ++v)
      for (const Edge& e : a.edges(v)) rev[e.to].push_back(v);
    for (std::uint32_t v = 0; v < n; ++v)
      if (a.accepting(v)) {
        colive[v] = 1;
        stack.push_back(v);
      }
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t u : rev[v])
        if (!colive[u]) {
          colive[u] = 1;
          stack.push_back(u);
        }
    }
    for (std::uint32_t v = 0; v < n; ++v)
      if (!reach[v] || !colive[v])
        out.push_back({Violation::Rule::redundant_state, v,
                       !reach[v] ? "unreachable from root" : "no path to an accepting state"});
  }

  // Terminator discipline: terminator edges end strings, accepting states
  // are sinks entered only by terminator edges.
  for (std::uint32_t v = 0; v < n; ++v)
    for (const Edge& e : a.edges(v))
      if (e.label == term && (!a.accepting(e.to) || a.out_degree(e.to) != 0))
        out.push_back({Violation::Rule::terminator_discipline, v,
                       "terminator edge into a non-accepting or non-sink vertex"});
  for (std::uint32_t v = 0; v < n; ++v)
    if (a.accepting(v) && (a.out_degree(v) != 0 || !in_term_only[v]))
      out.push_back({Violation::Rule::terminator_discipline, v,
                     "accepting vertex must be a sink entered by terminator edges only"});

  return out;
}

}  // namespace padfa
