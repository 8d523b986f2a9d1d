#include "padfa/corpus.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "padfa/code_map.hpp"
#include "padfa/error.hpp"

namespace padfa {

namespace {

// sigma distinct bytes, skipping the filler byte and LF so generated
// dictionaries survive the newline-delimited file format.
std::vector<unsigned char> alphabet_bytes(std::uint16_t sigma) {
  std::vector<unsigned char> bytes;
  bytes.reserve(sigma);
  for (int b = 33; b < 256 && bytes.size() < sigma; ++b) {
    if (b == kFillerByte) continue;
    bytes.push_back(static_cast<unsigned char>(b));
  }
  for (int b = 1; b < 33 && bytes.size() < sigma; ++b) {
    if (b == '\n') continue;
    bytes.push_back(static_cast<unsigned char>(b));
  }
  if (bytes.size() < sigma)
    raise(ErrorCode::io, "alphabet size " + std::to_string(sigma) + " not attainable");
  return bytes;
}

std::size_t draw_length(const GenShape& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(shape.avg_len, shape.len_sd);
  const double raw = dist(rng);
  const auto len = static_cast<std::size_t>(std::max(0.0, raw));
  return std::clamp(len, shape.min_len, shape.max_len);
}

}  // namespace

Dictionary gen_dictionary(const GenShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto bytes = alphabet_bytes(shape.sigma);
  std::uniform_int_distribution<std::size_t> pick(0, bytes.size() - 1);

  std::vector<std::string> motifs;
  if (shape.style == GenShape::Style::motif) {
    std::uniform_int_distribution<std::size_t> mlen(4, 24);
    motifs.reserve(shape.motif_pool);
    for (std::size_t i = 0; i < shape.motif_pool; ++i) {
      std::string m(mlen(rng), '\0');
      for (char& c : m) c = static_cast<char>(bytes[pick(rng)]);
      motifs.push_back(std::move(m));
    }
  }
  std::vector<std::string> prefixes;
  if (shape.style == GenShape::Style::prefix_shared) {
    std::uniform_int_distribution<std::size_t> plen(4, 20);
    prefixes.reserve(shape.prefix_pool);
    for (std::size_t i = 0; i < shape.prefix_pool; ++i) {
      std::string s(plen(rng), '\0');
      for (char& c : s) c = static_cast<char>(bytes[pick(rng)]);
      prefixes.push_back(std::move(s));
    }
  }
  std::vector<std::string> suffixes;
  if (shape.style == GenShape::Style::shared_suffix) {
    suffixes.reserve(shape.suffix_pool);
    for (std::size_t i = 0; i < shape.suffix_pool; ++i) {
      std::string s(shape.suffix_len, '\0');
      for (char& c : s) c = static_cast<char>(bytes[pick(rng)]);
      suffixes.push_back(std::move(s));
    }
  }

  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  out.reserve(shape.k);
  std::size_t attempts = 0;
  while (out.size() < shape.k) {
    if (++attempts > shape.k * 20 + 1000)
      raise(ErrorCode::io, "dictionary shape cannot produce enough distinct strings");
    const std::size_t len = draw_length(shape, rng);
    std::string s;
    s.reserve(len);
    switch (shape.style) {
      case GenShape::Style::uniform:
        while (s.size() < len) s.push_back(static_cast<char>(bytes[pick(rng)]));
        break;
      case GenShape::Style::prefix_shared: {
        const auto& stem = prefixes[rng() % prefixes.size()];
        s.append(stem, 0, std::min(stem.size(), len));
        while (s.size() < len) s.push_back(static_cast<char>(bytes[pick(rng)]));
        break;
      }
      case GenShape::Style::motif:
        while (s.size() < len) {
          const auto& m = motifs[rng() % motifs.size()];
          s.append(m, 0, std::min(m.size(), len - s.size()));
        }
        break;
      case GenShape::Style::shared_suffix: {
        const auto& tail = suffixes[rng() % suffixes.size()];
        const std::size_t head = len > tail.size() ? len - tail.size() : 0;
        while (s.size() < head) s.push_back(static_cast<char>(bytes[pick(rng)]));
        s.append(tail, 0, std::min(tail.size(), len - s.size()));
        break;
      }
    }
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return Dictionary::from_strings(std::move(out));
}

GenShape url_shape(std::size_t k) {
  GenShape s;
  s.sigma = 64;
  s.k = k;
  s.avg_len = 84.0;
  s.len_sd = 25.0;
  s.min_len = 12;
  s.max_len = 300;
  s.style = GenShape::Style::prefix_shared;
  s.prefix_pool = std::max<std::size_t>(32, k / 40);
  return s;
}

GenShape city_shape(std::size_t k) {
  GenShape s;
  s.sigma = 60;
  s.k = k;
  s.avg_len = 11.0;
  s.len_sd = 4.0;
  s.min_len = 2;
  s.max_len = 64;
  s.style = GenShape::Style::uniform;
  return s;
}

GenShape prot_shape(std::size_t k) {
  GenShape s;
  s.sigma = 25;
  s.k = k;
  s.avg_len = 295.0;
  s.len_sd = 60.0;
  s.min_len = 40;
  s.max_len = 600;
  s.style = GenShape::Style::shared_suffix;
  s.suffix_pool = 150;
  s.suffix_len = 150;
  return s;
}

std::string gen_text(std::uint16_t sigma, std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto bytes = alphabet_bytes(sigma);
  std::uniform_int_distribution<std::size_t> pick(0, bytes.size() - 1);
  std::string s(len, '\0');
  for (char& c : s) c = static_cast<char>(bytes[pick(rng)]);
  return s;
}

}  // namespace padfa
