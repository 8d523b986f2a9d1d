#ifndef PADFA_PADFA_HPP
#define PADFA_PADFA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padfa/adfa.hpp"
#include "padfa/branches.hpp"
#include "padfa/fid.hpp"
#include "padfa/packed_text.hpp"

namespace padfa {

enum class Mode : std::uint8_t { membership = 0, reach = 1 };
enum class CharMode : std::uint8_t { bitpacked = 0, byte = 1 };

struct BuildOptions {
  Mode mode = Mode::membership;
  Backend backend = Backend::edgelist;
  CharMode char_mode = CharMode::bitpacked;
};

// The packed index: heavy-path text T, light-source bits B with rank
// support, one branch structure per 1-bit of B in vertex order, and the
// concatenated destination lists D. T[v] is the label of v's heavy
// out-edge, or the filler if there is none.
class Padfa {
public:
  Mode mode = Mode::membership;
  Backend backend = Backend::edgelist;
  CharMode char_mode = CharMode::bitpacked;
  CodeMap cm;
  PackedText text;                 // T
  Fid light;                       // B
  BranchPool branches;
  std::vector<std::uint32_t> dest; // D
  bool dest_wide = false;          // ids serialized as u64 instead of u32
  Fid accept_bits;                 // reach mode only
  std::uint64_t k = 0;             // accepted-string count

  std::size_t n() const { return text.size(); }
};

// Runs the full pipeline (validate, count paths, classify, renumber) and
// assembles the index. Validation failures propagate as
// Error{invalid_automaton}.
Padfa build(const Adfa& a, const BuildOptions& opts = {});

// Membership query: true iff pattern is one of the indexed strings. The
// terminator is appended internally; bytes outside the code map reject
// immediately. Requires a membership-mode index.
bool contains(const Padfa& p, std::string_view pattern);

// Reach query: true iff the whole pattern is consumable from the root.
// Over a packed suffix automaton this is substring matching. Requires a
// reach-mode index.
bool reach(const Padfa& p, std::string_view pattern);

// Per-iteration record of the search loop, for the cost-bound checks.
struct SearchTrace {
  struct Step {
    std::uint64_t heavy_len;     // characters advanced along the heavy path
    std::uint32_t vertex;        // v after the heavy advance
    bool light_taken;
    Code light_label;            // code looked up in the branch, if any
    std::uint32_t light_dest;    // destination of the light step, if taken
  };
  enum class Outcome : std::uint8_t {
    accepted,
    rejected_unknown_byte,
    rejected_no_light_source,
    rejected_branch_miss,
  };

  std::vector<Step> steps;
  Outcome outcome = Outcome::accepted;
  std::uint64_t coded_len = 0;  // characters the loop searched for

  std::size_t iterations() const { return steps.size(); }
  std::size_t light_steps() const;
  std::uint64_t consumed() const;  // sum of heavy runs + light steps
};

// Same answer as contains/reach (per the index mode), plus the trace.
std::pair<bool, SearchTrace> search_traced(const Padfa& p, std::string_view pattern);

// Exact bit accounting per component, matching the serialized layout
// (payload bits; section headers excluded).
struct SpaceReport {
  std::uint64_t text_bits = 0;
  std::uint64_t fid_payload_bits = 0;
  std::uint64_t fid_directory_bits = 0;
  std::uint64_t branch_bits = 0;
  std::uint64_t dest_bits = 0;
  std::uint64_t codemap_bits = 0;
  std::uint64_t accepting_bits = 0;
  std::uint64_t total_bits = 0;
  std::uint64_t n = 0, k = 0, sigma = 0;
  unsigned width_bits = 0, alpha = 0;
  // n(1 + ceil log2 sigma) + k(ceil log2 n + ceil log2 sigma), the
  // closed-form reference the measured total is compared against.
  std::uint64_t theorem_reference_bits = 0;
};

SpaceReport space_report(const Padfa& p);

// Versioned little-endian index image with a trailing CRC-32.
std::vector<std::uint8_t> serialize(const Padfa& p);
Padfa deserialize(std::span<const std::uint8_t> bytes);

void save_index(const Padfa& p, const std::string& path);
Padfa load_index(const std::string& path);

}  // namespace padfa

#endif  // PADFA_PADFA_HPP
