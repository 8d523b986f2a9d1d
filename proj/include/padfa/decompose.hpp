#ifndef PADFA_DECOMPOSE_HPP
#define PADFA_DECOMPOSE_HPP

#include <cstdint>
#include <vector>

#include "padfa/adfa.hpp"

namespace padfa {

// Path counts per vertex: pi_root[v] paths from the root to v, pi_sink[v]
// paths from v to any sink, and their floored base-2 logarithms.
struct PathCounts {
  std::vector<std::uint64_t> pi_root;
  std::vector<std::uint64_t> pi_sink;
  std::vector<std::uint8_t> lambda_root;  // floor(log2 pi_root)
  std::vector<std::uint8_t> lambda_sink;  // floor(log2 pi_sink)
  std::uint64_t total_paths = 0;          // root-to-sink path count

  bool lambda_equal(std::uint32_t u, std::uint32_t v) const {
    return lambda_root[u] == lambda_root[v] && lambda_sink[u] == lambda_sink[v];
  }
};

// Forward/backward DP over a topological order with checked 64-bit adds.
// Throws Error{cyclic_input} on a cycle and Error{count_overflow} naming
// the vertex where a count would exceed 64 bits.
PathCounts count_paths(const Adfa& a);

// Heavy/light split: an edge is heavy iff its endpoints share the lambda
// pair. Heavy edges form vertex-disjoint paths (at most one heavy in- and
// out-edge per vertex); the remaining edges group by source vertex.
struct EdgeClassification {
  std::vector<std::int32_t> heavy_out;   // edge index within edges(v), -1 none
  std::vector<std::uint8_t> heavy_in;    // heavy in-edge count (0 or 1)
  std::vector<std::uint64_t> light_bits; // B: one bit per vertex
  std::size_t heavy_count = 0;
  std::size_t light_count = 0;
  std::size_t light_sources = 0;         // number of ones in B

  bool light_source(std::uint32_t v) const {
    return (light_bits[v >> 6] >> (v & 63)) & 1;
  }
};

EdgeClassification classify_edges(const Adfa& a, const PathCounts& pc);

// Isomorphic copy renumbered so that the root is vertex 0 and every heavy
// edge connects consecutive ids; heavy paths are laid out in topological
// order of their head vertices, the root's path first. Classification and
// path counts are permuted along. Throws Error{invalid_automaton} if the
// classification violates the disjoint-path property.
struct Renumbered {
  Adfa adfa;
  EdgeClassification ec;
  PathCounts pc;
  std::vector<std::uint32_t> old_to_new;
};

Renumbered heavy_renumber(const Adfa& a, const EdgeClassification& ec,
                          const PathCounts& pc);

}  // namespace padfa

#endif  // PADFA_DECOMPOSE_HPP
