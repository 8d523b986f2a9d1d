#include "padfa/branches.hpp"

#include "padfa/error.hpp"

namespace padfa {

namespace {

// Weighted-median split over weights[lo, hi): the root is the leftmost item
// whose inclusive prefix weight reaches half of the range total, so each
// child subtree carries at most half the weight.
std::int32_t split(std::span<const std::uint64_t> weights, std::size_t lo,
                   std::size_t hi, std::int32_t* left, std::int32_t* right) {
  if (lo >= hi) return -1;
  std::uint64_t total = 0;
  for (std::size_t i = lo; i < hi; ++i) total += weights[i];
  std::uint64_t prefix = 0;
  std::size_t mid = lo;
  for (; mid < hi; ++mid) {
    prefix += weights[mid];
    if (prefix >= total - prefix) break;  // 2*prefix >= total, overflow-safe
  }
  left[mid] = split(weights, lo, mid, left, right);
  right[mid] = split(weights, mid + 1, hi, left, right);
  return static_cast<std::int32_t>(mid);
}

}  // namespace

std::int32_t build_biased_tree(std::span<const std::uint64_t> weights,
                               std::int32_t* left, std::int32_t* right) {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == 0)
      raise(ErrorCode::zero_weight, "weight " + std::to_string(i) + " is zero");
  return split(weights, 0, weights.size(), left, right);
}

BiasedTree bst_build(std::vector<Code> labels, std::vector<std::uint64_t> weights) {
  if (labels.size() != weights.size())
    raise(ErrorCode::zero_weight, "label and weight counts differ");
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i - 1] >= labels[i])
      raise(ErrorCode::invalid_automaton, "labels must be strictly increasing");

  BiasedTree t;
  t.labels = std::move(labels);
  t.weights = std::move(weights);
  t.left.assign(t.labels.size(), -1);
  t.right.assign(t.labels.size(), -1);
  t.root = build_biased_tree(t.weights, t.left.data(), t.right.data());
  return t;
}

std::uint32_t BiasedTree::access(Code c) const {
  std::int32_t node = root;
  while (node >= 0) {
    const Code at = labels[static_cast<std::size_t>(node)];
    if (c == at) return static_cast<std::uint32_t>(node) + 1;
    node = (c < at) ? left[node] : right[node];
  }
  return 0;
}

std::uint32_t BiasedTree::depth(Code c) const {
  std::uint32_t d = 0;
  std::int32_t node = root;
  while (node >= 0) {
    ++d;
    const Code at = labels[static_cast<std::size_t>(node)];
    if (c == at) return d;
    node = (c < at) ? left[node] : right[node];
  }
  return d;
}

}  // namespace padfa
