#ifndef PADFA_VERIFY_HPP
#define PADFA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "padfa/dictionary.hpp"

namespace padfa {

struct VerifyResult {
  bool ok = true;
  std::uint64_t checks = 0;
  std::string witness;  // first mismatch, when !ok
};

// Builds every variant (per-edge trie and minimized walks, packed indexes
// of both) and checks pairwise agreement plus hash-set oracle agreement on
// all members and `probes` random probes.
VerifyResult verify_dictionary(const Dictionary& dict, std::size_t probes,
                               std::uint64_t seed);

// Packed suffix automaton of the text against naive substring search, on
// planted substrings and random patterns.
VerifyResult verify_text(std::string_view text, std::size_t patterns,
                         std::uint64_t seed);

}  // namespace padfa

#endif  // PADFA_VERIFY_HPP
