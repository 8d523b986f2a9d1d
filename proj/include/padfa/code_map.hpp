#ifndef PADFA_CODE_MAP_HPP
#define PADFA_CODE_MAP_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

#include "padfa/error.hpp"

namespace padfa {

using Code = std::uint16_t;

inline constexpr Code kFillerCode = 0;
inline constexpr Code kInvalidCode = 0xFFFF;

// Byte reserved as the path filler. It may not occur in indexed strings.
inline constexpr unsigned char kFillerByte = '#';

// Dense recoding of the bytes that actually occur in the input. Used bytes
// get codes 1..sigma in byte order, code 0 is the filler and sigma+1 the
// end-of-string terminator, so the terminator sorts after every real
// character and the filler below them.
class CodeMap {
public:
  CodeMap() { table_.fill(kInvalidCode); }

  static CodeMap from_used(const std::array<bool, 256>& used) {
    CodeMap cm;
    for (int b = 0; b < 256; ++b) {
      if (used[b]) {
        cm.inverse_.push_back(static_cast<unsigned char>(b));
        cm.table_[b] = static_cast<Code>(cm.inverse_.size());
      }
    }
    cm.sigma_ = static_cast<std::uint16_t>(cm.inverse_.size());
    return cm;
  }

  // Code of an input byte, kInvalidCode if the byte never occurred.
  Code code_of(unsigned char b) const { return table_[b]; }

  // Inverse of code_of; valid for codes 1..sigma only.
  unsigned char byte_of(Code c) const { return inverse_[c - 1]; }

  std::uint16_t sigma() const { return sigma_; }
  Code terminator() const { return static_cast<Code>(sigma_ + 1); }

  // Bits per packed character: enough for codes 0..sigma+1.
  unsigned packed_width() const {
    return static_cast<unsigned>(std::bit_width(static_cast<unsigned>(sigma_ + 1)));
  }

  bool operator==(const CodeMap& other) const {
    return table_ == other.table_ && sigma_ == other.sigma_;
  }

private:
  std::array<Code, 256> table_;
  std::vector<unsigned char> inverse_;
  std::uint16_t sigma_ = 0;
};

// Printable form of a code for diagnostics: '#' for the filler, '$' for the
// terminator, otherwise the mapped byte.
inline char display_char(const CodeMap& cm, Code c) {
  if (c == kFillerCode) return '#';
  if (c == cm.terminator()) return '$';
  return static_cast<char>(cm.byte_of(c));
}

}  // namespace padfa

#endif  // PADFA_CODE_MAP_HPP
