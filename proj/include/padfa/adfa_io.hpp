#ifndef PADFA_ADFA_IO_HPP
#define PADFA_ADFA_IO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padfa/adfa.hpp"
#include "padfa/padfa.hpp"

namespace padfa {

// Unpacked baseline index: the automaton itself plus query mode and k.
struct PlainIndex {
  Adfa adfa;
  Mode mode = Mode::membership;
  std::uint64_t k = 0;
};

// In-memory footprint of the CSR automaton in bits (offsets, edges,
// accepting flags, code map), used for the benchmark comparisons.
std::uint64_t plain_bits(const Adfa& a);

std::vector<std::uint8_t> serialize_plain(const PlainIndex& p);
PlainIndex deserialize_plain(std::span<const std::uint8_t> bytes);

void save_plain(const PlainIndex& p, const std::string& path);
PlainIndex load_plain(const std::string& path);

// Peeks at a file's magic: true if it is a packed index, false if plain.
// Throws Error{bad_magic} for anything else.
bool is_packed_index_file(const std::string& path);

}  // namespace padfa

#endif  // PADFA_ADFA_IO_HPP
