#include <cassert>
#include <string>

#include "padfa/decompose.hpp"
#include "padfa/error.hpp"
#include "padfa/padfa.hpp"

namespace padfa {

namespace {

unsigned ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(x - 1));
}

}  // namespace

Padfa build(const Adfa& a, const BuildOptions& opts) {
  {
    auto violations = validate(a);
    if (!violations.empty())
      raise(ErrorCode::invalid_automaton,
            std::string(rule_name(violations.front().rule)) +
                " violation at vertex " + std::to_string(violations.front().vertex) +
                ": " + violations.front().detail);
  }
  const CodeMap& cm = a.code_map();
  if (opts.char_mode == CharMode::byte && cm.sigma() > 254)
    raise(ErrorCode::width_overflow,
          "byte mode requires at most 254 distinct characters, got " +
              std::to_string(cm.sigma()));

  const PathCounts pc0 = count_paths(a);
  const EdgeClassification ec0 = classify_edges(a, pc0);
  Renumbered r = heavy_renumber(a, ec0, pc0);

  const std::size_t n = r.adfa.size();
  Padfa p;
  p.mode = opts.mode;
  p.backend = opts.backend;
  p.char_mode = opts.char_mode;
  p.cm = cm;
  p.k = (a.accepting_count() == 0) ? 0 : r.pc.total_paths;

  std::vector<Code> codes(n, kFillerCode);
  for (std::uint32_t v = 0; v < n; ++v)
    if (r.ec.heavy_out[v] >= 0)
      codes[v] = r.adfa.edges(v)[static_cast<std::size_t>(r.ec.heavy_out[v])].label;
  const unsigned width = (opts.char_mode == CharMode::byte) ? 8 : cm.packed_width();
  p.text = PackedText::pack(codes, width);

  p.light = Fid(r.ec.light_bits, n);

  // One branch per light-source vertex, in vertex order; weights are the
  // destination-to-sink path counts.
  p.branches.backend = opts.backend;
  p.branches.off.push_back(0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!r.ec.light_source(v)) continue;
    const auto edges = r.adfa.edges(v);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (static_cast<std::int32_t>(j) == r.ec.heavy_out[v]) continue;
      p.branches.labels.push_back(edges[j].label);
      p.branches.weights.push_back(r.pc.pi_sink[edges[j].to]);
      p.dest.push_back(edges[j].to);
    }
    p.branches.off.push_back(static_cast<std::uint32_t>(p.branches.labels.size()));
  }
  assert(p.branches.count() == r.ec.light_sources);
  assert(p.dest.size() == r.ec.light_count);

  if (opts.backend == Backend::biased) {
    p.branches.left.assign(p.branches.labels.size(), -1);
    p.branches.right.assign(p.branches.labels.size(), -1);
    p.branches.roots.resize(p.branches.count());
    for (std::size_t b = 0; b < p.branches.count(); ++b) {
      const std::uint32_t lo = p.branches.off[b], hi = p.branches.off[b + 1];
      p.branches.roots[b] = build_biased_tree(
          std::span<const std::uint64_t>(p.branches.weights.data() + lo, hi - lo),
          p.branches.left.data() + lo, p.branches.right.data() + lo);
    }
  }

  if (opts.mode == Mode::reach) {
    std::vector<std::uint64_t> acc((n + 63) / 64, 0);
    for (std::uint32_t v = 0; v < n; ++v)
      if (r.adfa.accepting(v)) acc[v >> 6] |= std::uint64_t{1} << (v & 63);
    p.accept_bits = Fid(std::move(acc), n);
  }
  return p;
}

SpaceReport space_report(const Padfa& p) {
  SpaceReport rep;
  rep.n = p.n();
  rep.k = p.k;
  rep.sigma = p.cm.sigma();
  rep.width_bits = p.text.width();
  rep.alpha = p.text.alpha();

  rep.text_bits = static_cast<std::uint64_t>(p.n()) * p.text.width();
  rep.fid_payload_bits = p.light.size();
  rep.fid_directory_bits = p.light.directory_bits();
  rep.codemap_bits = 256 * 16;

  const std::uint64_t labels = p.branches.labels.size();
  rep.branch_bits = p.branches.count() * 16  // per-branch label count
                    + labels * 16            // labels
                    + labels * 64;           // weights
  if (p.backend == Backend::biased)
    rep.branch_bits += labels * 64 + p.branches.count() * 32;  // child + root indexes

  rep.dest_bits = static_cast<std::uint64_t>(p.dest.size()) * (p.dest_wide ? 64 : 32);
  if (p.mode == Mode::reach)
    rep.accepting_bits = p.accept_bits.size() + p.accept_bits.directory_bits();

  rep.total_bits = rep.text_bits + rep.fid_payload_bits + rep.fid_directory_bits +
                   rep.branch_bits + rep.dest_bits + rep.codemap_bits +
                   rep.accepting_bits;
  rep.theorem_reference_bits =
      rep.n * (1 + ceil_log2(rep.sigma)) +
      rep.k * (ceil_log2(rep.n) + ceil_log2(rep.sigma));
  return rep;
}

}  // namespace padfa
