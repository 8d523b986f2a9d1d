#include "padfa/fid.hpp"

#include <algorithm>

#include "padfa/error.hpp"

namespace padfa {

Fid::Fid(std::vector<std::uint64_t> words, std::size_t n_bits)
    : words_(std::move(words)), n_bits_(n_bits) {
  words_.resize((n_bits_ + 63) / 64, 0);
  if (n_bits_ & 63) words_.back() &= (std::uint64_t{1} << (n_bits_ & 63)) - 1;
  build_directory();
}

Fid Fid::from_parts(std::vector<std::uint64_t> words, std::size_t n_bits,
                    std::vector<std::uint64_t> supers,
                    std::vector<std::uint16_t> blocks,
                    std::vector<std::uint32_t> samples) {
  Fid f;
  f.words_ = std::move(words);
  f.n_bits_ = n_bits;
  f.supers_ = std::move(supers);
  f.blocks_ = std::move(blocks);
  f.samples_ = std::move(samples);
  for (std::uint64_t w : f.words_) f.ones_ += static_cast<std::size_t>(std::popcount(w));
  return f;
}

void Fid::build_directory() {
  const std::size_t n_blocks = n_bits_ / kBlockBits + 1;
  const std::size_t n_supers = n_bits_ / kSuperBits + 1;
  blocks_.assign(n_blocks, 0);
  supers_.assign(n_supers, 0);
  samples_.clear();

  constexpr std::size_t words_per_block = kBlockBits / 64;
  constexpr std::size_t blocks_per_super = kSuperBits / kBlockBits;

  std::size_t total = 0;
  std::size_t since_super = 0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    if (b % blocks_per_super == 0) {
      supers_[b / blocks_per_super] = total;
      since_super = 0;
    }
    blocks_[b] = static_cast<std::uint16_t>(since_super);
    for (std::size_t w = b * words_per_block;
         w < std::min((b + 1) * words_per_block, words_.size()); ++w) {
      const auto ones = static_cast<std::size_t>(std::popcount(words_[w]));
      // Record the superblock of every kSampleEvery-th one. A 64-bit word
      // holds at most 64 ones, so one word crosses at most one boundary.
      if (total / kSampleEvery != (total + ones) / kSampleEvery)
        samples_.push_back(static_cast<std::uint32_t>(b / blocks_per_super));
      total += ones;
      since_super += ones;
    }
  }
  ones_ = total;
}

std::size_t Fid::select1(std::size_t j) const {
  if (j == 0 || j > ones_)
    raise(ErrorCode::select_out_of_range,
          "select1(" + std::to_string(j) + ") with " + std::to_string(ones_) + " ones");

  // Superblock range from the samples, then binary search for the last
  // superblock whose prefix count is below j.
  std::size_t lo = 0, hi = supers_.size();
  const std::size_t s = (j - 1) / kSampleEvery;
  if (s < samples_.size()) hi = std::min<std::size_t>(hi, samples_[s] + 1);
  if (s > 0 && s - 1 < samples_.size()) lo = samples_[s - 1];
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (supers_[mid] < j)
      lo = mid;
    else
      hi = mid;
  }
  std::size_t remaining = j - supers_[lo];

  constexpr std::size_t blocks_per_super = kSuperBits / kBlockBits;
  constexpr std::size_t words_per_block = kBlockBits / 64;
  std::size_t blo = lo * blocks_per_super;
  std::size_t bhi = std::min(blo + blocks_per_super, blocks_.size());
  while (bhi - blo > 1) {
    const std::size_t mid = blo + (bhi - blo) / 2;
    if (blocks_[mid] < remaining)
      blo = mid;
    else
      bhi = mid;
  }
  remaining -= blocks_[blo];

  for (std::size_t w = blo * words_per_block; w < words_.size(); ++w) {
    const auto ones = static_cast<std::size_t>(std::popcount(words_[w]));
    if (remaining > ones) {
      remaining -= ones;
      continue;
    }
    std::uint64_t word = words_[w];
    while (--remaining > 0) word &= word - 1;  // clear lowest set bits
    return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
  }
  raise(ErrorCode::select_out_of_range, "select directory inconsistent");
}

}  // namespace padfa
