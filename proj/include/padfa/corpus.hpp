#ifndef PADFA_CORPUS_HPP
#define PADFA_CORPUS_HPP

#include <cstdint>
#include <string>

#include "padfa/dictionary.hpp"

namespace padfa {

// Synthetic dictionary shapes for tests and benchmarks. Styles:
//   uniform        independent random characters
//   prefix_shared  strings extend a pool of common stems (url-like)
//   motif          strings concatenate fragments from a shared pool
//   shared_suffix  random head plus a tail drawn from a pool of long
//                  conserved endings, the domain structure of protein data
struct GenShape {
  enum class Style { uniform, prefix_shared, motif, shared_suffix };

  std::uint16_t sigma = 26;
  std::size_t k = 1000;
  double avg_len = 20.0;
  double len_sd = 5.0;
  std::size_t min_len = 1;
  std::size_t max_len = 1000;
  Style style = Style::uniform;
  std::size_t motif_pool = 256;   // motif style: number of shared fragments
  std::size_t prefix_pool = 64;   // prefix style: number of shared stems
  std::size_t suffix_pool = 150;  // shared_suffix style: number of tails
  std::size_t suffix_len = 150;   // shared_suffix style: tail length
};

// Distinct strings over sigma printable-ish bytes (never the filler byte,
// never LF). Retries collisions, so k must be attainable for the shape.
Dictionary gen_dictionary(const GenShape& shape, std::uint64_t seed);

// Desk-scale shapes mirroring the url/city/prot corpora characteristics
// (alphabet size, string count, average length).
GenShape url_shape(std::size_t k = 20000);
GenShape city_shape(std::size_t k = 20000);
GenShape prot_shape(std::size_t k = 10000);

// Random text over sigma distinct bytes (no filler, no LF).
std::string gen_text(std::uint16_t sigma, std::size_t len, std::uint64_t seed);

}  // namespace padfa

#endif  // PADFA_CORPUS_HPP
