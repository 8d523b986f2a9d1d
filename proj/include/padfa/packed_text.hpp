#ifndef PADFA_PACKED_TEXT_HPP
#define PADFA_PACKED_TEXT_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "padfa/code_map.hpp"
#include "padfa/error.hpp"

namespace padfa {

// Fixed-width code sequence stored in 64-bit words. Character i of a word
// occupies bits [i*w, (i+1)*w), lowest bits first; characters never straddle
// a word boundary, so the top 64 mod w bits of each word are zero padding.
// Storage is exactly ceil(length/alpha) words and all bits past the last
// character are zero.
class PackedText {
public:
  PackedText() { set_width(8); }
  explicit PackedText(unsigned width_bits) { set_width(width_bits); }

  static PackedText pack(std::span<const Code> codes, unsigned width_bits) {
    PackedText t(width_bits);
    t.assign(codes);
    return t;
  }

  // Adopts an already packed word image (deserialization); the word count
  // must be exactly ceil(length/alpha).
  static PackedText from_words(std::vector<std::uint64_t> words,
                               std::size_t length, unsigned width_bits) {
    PackedText t(width_bits);
    if (words.size() != (length + t.alpha_ - 1) / t.alpha_)
      raise(ErrorCode::malformed, "packed text word count mismatch");
    t.words_ = std::move(words);
    t.len_ = length;
    return t;
  }

  // Re-fills in place, reusing word storage. Codes must fit the width.
  void assign(std::span<const Code> codes) {
    len_ = codes.size();
    words_.assign((len_ + alpha_ - 1) / alpha_, 0);
    const Code limit = static_cast<Code>((width_ == 16) ? 0xFFFF : ((1u << width_) - 1));
    std::size_t word = 0;
    unsigned slot = 0;
    for (Code c : codes) {
      if (c > limit)
        raise(ErrorCode::width_overflow,
              "code " + std::to_string(c) + " does not fit " +
                  std::to_string(width_) + " bits");
      words_[word] |= static_cast<std::uint64_t>(c) << (slot * width_);
      if (++slot == alpha_) {
        slot = 0;
        ++word;
      }
    }
  }

  void set_width(unsigned width_bits) {
    assert(width_bits >= 1 && width_bits <= 16);
    width_ = width_bits;
    alpha_ = 64 / width_;
    const unsigned span = alpha_ * width_;
    chunk_mask_ = (span == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << span) - 1);
    words_.clear();
    len_ = 0;
  }

  std::size_t size() const { return len_; }
  unsigned width() const { return width_; }
  unsigned alpha() const { return alpha_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  Code get(std::size_t i) const {
    assert(i < len_);
    const std::uint64_t w = words_[i / alpha_] >> ((i % alpha_) * width_);
    return static_cast<Code>(w & ((width_ == 16) ? 0xFFFF : ((1u << width_) - 1)));
  }

  // Longest common prefix of a[i..] and b[j..], counted in characters.
  // XOR of aligned chunks plus count-trailing-zeros finds the first
  // mismatching slot, so the cost is ceil(lcp/alpha) + O(1) word operations.
  // Both texts must share the same width. i == |a| or j == |b| yields 0.
  friend std::size_t lcp_at(const PackedText& a, std::size_t i,
                            const PackedText& b, std::size_t j) {
    assert(a.width_ == b.width_ && i <= a.len_ && j <= b.len_);
    const std::size_t limit = std::min(a.len_ - i, b.len_ - j);
    const unsigned alpha = a.alpha_;
    std::size_t matched = 0;
    while (matched < limit) {
      const std::uint64_t diff =
          (a.chunk_from(i + matched) ^ b.chunk_from(j + matched)) & a.chunk_mask_;
      const std::size_t avail = std::min<std::size_t>(alpha, limit - matched);
      if (diff) {
        const std::size_t first = std::countr_zero(diff) / a.width_;
        return matched + std::min(first, avail);
      }
      if (avail < alpha) return limit;
      matched += alpha;
    }
    return limit;
  }

private:
  // alpha characters starting at character p, low bits first. Characters
  // past the end read as zero; bits above alpha*width may hold garbage from
  // the following word and must be masked by the caller.
  std::uint64_t chunk_from(std::size_t p) const {
    const std::size_t q = p / alpha_;
    const unsigned s = static_cast<unsigned>(p % alpha_);
    std::uint64_t chunk = words_[q] >> (s * width_);
    if (s != 0 && q + 1 < words_.size())
      chunk |= words_[q + 1] << ((alpha_ - s) * width_);
    return chunk;
  }

  std::vector<std::uint64_t> words_;
  std::size_t len_ = 0;
  unsigned width_ = 8;
  unsigned alpha_ = 8;
  std::uint64_t chunk_mask_ = ~std::uint64_t{0};
};

}  // namespace padfa

#endif  // PADFA_PACKED_TEXT_HPP
