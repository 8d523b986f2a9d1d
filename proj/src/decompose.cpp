#include "padfa/decompose.hpp"

#include <bit>
#include <cassert>

#include "padfa/error.hpp"

namespace padfa {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, std::uint32_t vertex) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    raise(ErrorCode::count_overflow,
          "path count overflows 64 bits at vertex " + std::to_string(vertex));
  return out;
}

std::uint8_t floor_log2(std::uint64_t x) {
  return static_cast<std::uint8_t>(std::bit_width(x) - 1);
}

}  // namespace

PathCounts count_paths(const Adfa& a) {
  const std::size_t n = a.size();
  const auto order = topo_order(a);  // throws on a cycle

  PathCounts pc;
  pc.pi_root.assign(n, 0);
  pc.pi_sink.assign(n, 0);
  pc.pi_root[a.root()] = 1;
  for (const std::uint32_t v : order)
    for (const Edge& e : a.edges(v))
      pc.pi_root[e.to] = checked_add(pc.pi_root[e.to], pc.pi_root[v], e.to);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t v = *it;
    const auto edges = a.edges(v);
    if (edges.empty()) {
      pc.pi_sink[v] = 1;
      continue;
    }
    std::uint64_t sum = 0;
    for (const Edge& e : edges) sum = checked_add(sum, pc.pi_sink[e.to], v);
    pc.pi_sink[v] = sum;
  }

  pc.lambda_root.resize(n);
  pc.lambda_sink.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (pc.pi_root[v] == 0 || pc.pi_sink[v] == 0)
      raise(ErrorCode::invalid_automaton,
            "vertex " + std::to_string(v) + " carries no root-to-sink path");
    pc.lambda_root[v] = floor_log2(pc.pi_root[v]);
    pc.lambda_sink[v] = floor_log2(pc.pi_sink[v]);
  }
  pc.total_paths = pc.pi_sink[a.root()];
  return pc;
}

EdgeClassification classify_edges(const Adfa& a, const PathCounts& pc) {
  const std::size_t n = a.size();
  EdgeClassification ec;
  ec.heavy_out.assign(n, -1);
  ec.heavy_in.assign(n, 0);
  ec.light_bits.assign((n + 63) / 64, 0);

  for (std::uint32_t v = 0; v < n; ++v) {
    const auto edges = a.edges(v);
    bool any_light = false;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (pc.lambda_equal(v, edges[j].to)) {
        if (ec.heavy_out[v] >= 0)
          raise(ErrorCode::invalid_automaton,
                "vertex " + std::to_string(v) + " has two heavy out-edges");
        if (ec.heavy_in[edges[j].to] != 0)
          raise(ErrorCode::invalid_automaton,
                "vertex " + std::to_string(edges[j].to) + " has two heavy in-edges");
        ec.heavy_out[v] = static_cast<std::int32_t>(j);
        ec.heavy_in[edges[j].to] = 1;
        ++ec.heavy_count;
      } else {
        any_light = true;
        ++ec.light_count;
      }
    }
    if (any_light) {
      ec.light_bits[v >> 6] |= std::uint64_t{1} << (v & 63);
      ++ec.light_sources;
    }
  }
  return ec;
}

Renumbered heavy_renumber(const Adfa& a, const EdgeClassification& ec,
                          const PathCounts& pc) {
  const std::size_t n = a.size();
  const auto order = topo_order(a);

  std::vector<std::uint32_t> old_to_new(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (const std::uint32_t head : order) {
    if (ec.heavy_in[head] != 0) continue;  // not a path head
    std::uint32_t v = head;
    while (true) {
      if (old_to_new[v] != UINT32_MAX)
        raise(ErrorCode::invalid_automaton,
              "heavy edges do not form disjoint paths at vertex " + std::to_string(v));
      old_to_new[v] = next++;
      if (ec.heavy_out[v] < 0) break;
      v = a.edges(v)[static_cast<std::size_t>(ec.heavy_out[v])].to;
    }
  }
  if (next != n)
    raise(ErrorCode::invalid_automaton,
          "heavy edges do not form disjoint paths (uncovered vertices)");

  std::vector<std::vector<Edge>> lists(n);
  std::vector<std::uint8_t> accepting(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t nv = old_to_new[v];
    const auto edges = a.edges(v);
    lists[nv].reserve(edges.size());
    for (const Edge& e : edges) lists[nv].push_back({e.label, old_to_new[e.to]});
    accepting[nv] = a.accepting(v) ? 1 : 0;
  }

  Renumbered out;
  out.adfa = Adfa::from_lists(old_to_new[a.root()], lists, accepting, a.code_map());
  assert(out.adfa.root() == 0);

  // Edge-list order is label order, untouched by the renumbering, so the
  // per-vertex structures permute directly.
  out.ec.heavy_out.assign(n, -1);
  out.ec.heavy_in.assign(n, 0);
  out.ec.light_bits.assign((n + 63) / 64, 0);
  out.ec.heavy_count = ec.heavy_count;
  out.ec.light_count = ec.light_count;
  out.ec.light_sources = ec.light_sources;
  out.pc.pi_root.resize(n);
  out.pc.pi_sink.resize(n);
  out.pc.lambda_root.resize(n);
  out.pc.lambda_sink.resize(n);
  out.pc.total_paths = pc.total_paths;
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t nv = old_to_new[v];
    out.ec.heavy_out[nv] = ec.heavy_out[v];
    out.ec.heavy_in[nv] = ec.heavy_in[v];
    if (ec.light_source(v)) out.ec.light_bits[nv >> 6] |= std::uint64_t{1} << (nv & 63);
    out.pc.pi_root[nv] = pc.pi_root[v];
    out.pc.pi_sink[nv] = pc.pi_sink[v];
    out.pc.lambda_root[nv] = pc.lambda_root[v];
    out.pc.lambda_sink[nv] = pc.lambda_sink[v];
  }
  out.old_to_new = std::move(old_to_new);
  return out;
}

}  // namespace padfa
