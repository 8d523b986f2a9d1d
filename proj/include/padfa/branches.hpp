#ifndef PADFA_BRANCHES_HPP
#define PADFA_BRANCHES_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "padfa/code_map.hpp"

namespace padfa {

enum class Backend : std::uint8_t { biased = 0, edgelist = 1 };

// Weighted search tree over one vertex's light-edge labels, encoded as
// index arrays (no pointers). The root is the leftmost label whose prefix
// weight reaches half of the total, recursively, which keeps every label c
// at depth at most 2 + log2(total_weight / weight(c)).
struct BiasedTree {
  std::vector<Code> labels;           // strictly increasing
  std::vector<std::uint64_t> weights;
  std::vector<std::int32_t> left;     // child label index or -1
  std::vector<std::int32_t> right;
  std::int32_t root = -1;

  // 1-based rank of c in label order, 0 if absent.
  std::uint32_t access(Code c) const;
  // Number of tree nodes visited when searching c (c must be present).
  std::uint32_t depth(Code c) const;
};

// Labels must be strictly increasing, weights positive and equally many.
// Throws Error{zero_weight} on a zero weight.
BiasedTree bst_build(std::vector<Code> labels, std::vector<std::uint64_t> weights);

// Sorted (label, weight) array searched by plain binary search.
struct EdgeListBranch {
  std::vector<Code> labels;
  std::vector<std::uint64_t> weights;

  std::uint32_t access(Code c) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), c);
    if (it == labels.end() || *it != c) return 0;
    return static_cast<std::uint32_t>(it - labels.begin()) + 1;
  }
};

// Fills left/right (size = labels.size()) for a biased tree over
// weights[lo..hi); returns the root index. Shared by BiasedTree and the
// pooled per-vertex branches of an index.
std::int32_t build_biased_tree(std::span<const std::uint64_t> weights,
                               std::int32_t* left, std::int32_t* right);

// All branch structures of one index pooled into flat arrays; branch b owns
// label slots [off[b], off[b+1]). Tree child indices are local to a branch.
struct BranchPool {
  Backend backend = Backend::edgelist;
  std::vector<std::uint32_t> off;
  std::vector<Code> labels;
  std::vector<std::uint64_t> weights;
  std::vector<std::int32_t> left;   // biased backend only
  std::vector<std::int32_t> right;  // biased backend only
  std::vector<std::int32_t> roots;  // biased backend only

  std::size_t count() const { return off.empty() ? 0 : off.size() - 1; }

  // 1-based rank of c within branch b, 0 if absent.
  std::uint32_t access(std::size_t b, Code c) const {
    const std::uint32_t lo = off[b], hi = off[b + 1];
    if (backend == Backend::edgelist) {
      const Code* first = labels.data() + lo;
      const Code* last = labels.data() + hi;
      const Code* it = std::lower_bound(first, last, c);
      if (it == last || *it != c) return 0;
      return static_cast<std::uint32_t>(it - first) + 1;
    }
    std::int32_t node = roots[b];
    while (node >= 0) {
      const Code at = labels[lo + static_cast<std::uint32_t>(node)];
      if (c == at) return static_cast<std::uint32_t>(node) + 1;
      node = (c < at) ? left[lo + node] : right[lo + node];
    }
    return 0;
  }
};

}  // namespace padfa

#endif  // PADFA_BRANCHES_HPP
