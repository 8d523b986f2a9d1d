#ifndef PADFA_FID_HPP
#define PADFA_FID_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace padfa {

// Bit string with constant-time rank and select. Directory levels:
// 64-bit absolute counts per 65536-bit superblock, 16-bit counts relative
// to the superblock per 512-bit block, and a sparse sample of superblock
// indices taken every 4096 ones to bound the select binary search.
class Fid {
public:
  static constexpr std::size_t kBlockBits = 512;
  static constexpr std::size_t kSuperBits = 65536;
  static constexpr std::size_t kSampleEvery = 4096;

  Fid() = default;
  Fid(std::vector<std::uint64_t> words, std::size_t n_bits);

  // Reassembles a previously serialized directory without rebuilding it.
  static Fid from_parts(std::vector<std::uint64_t> words, std::size_t n_bits,
                        std::vector<std::uint64_t> supers,
                        std::vector<std::uint16_t> blocks,
                        std::vector<std::uint32_t> samples);

  bool get(std::size_t i) const {
    assert(i < n_bits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  // Number of ones in the prefix of length i (positions [0, i)).
  std::size_t rank1(std::size_t i) const {
    assert(i <= n_bits_);
    std::size_t count = supers_[i / kSuperBits] + blocks_[i / kBlockBits];
    const std::size_t word_end = i >> 6;
    for (std::size_t w = (i / kBlockBits) * (kBlockBits / 64); w < word_end; ++w)
      count += static_cast<std::size_t>(std::popcount(words_[w]));
    const unsigned rem = static_cast<unsigned>(i & 63);
    if (rem)
      count += static_cast<std::size_t>(
          std::popcount(words_[word_end] & ((std::uint64_t{1} << rem) - 1)));
    return count;
  }

  // Position (0-based) of the j-th one, 1 <= j <= ones().
  // Throws Error{select_out_of_range} otherwise.
  std::size_t select1(std::size_t j) const;

  std::size_t size() const { return n_bits_; }
  std::size_t ones() const { return ones_; }

  // Bits spent on the rank/select directory, excluding the payload.
  std::size_t directory_bits() const {
    return supers_.size() * 64 + blocks_.size() * 16 + samples_.size() * 32;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  const std::vector<std::uint64_t>& supers() const { return supers_; }
  const std::vector<std::uint16_t>& blocks() const { return blocks_; }
  const std::vector<std::uint32_t>& samples() const { return samples_; }

private:
  void build_directory();

  std::vector<std::uint64_t> words_;
  std::size_t n_bits_ = 0;
  std::size_t ones_ = 0;
  std::vector<std::uint64_t> supers_;   // absolute count at superblock start
  std::vector<std::uint16_t> blocks_;   // count at block start, relative
  std::vector<std::uint32_t> samples_;  // superblock of every 4096th one
};

}  // namespace padfa

#endif  // PADFA_FID_HPP
