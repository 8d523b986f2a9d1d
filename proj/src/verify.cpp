#include "padfa/verify.hpp"

#include <random>
#include <sstream>
#include <unordered_set>

#include "padfa/padfa.hpp"

namespace padfa {

namespace {

std::string hex_escape(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    if (c >= 32 && c < 127) {
      out.push_back(static_cast<char>(c));
    } else {
      out += "\\x";
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
  }
  return out;
}

// Probes biased toward near-misses: mutations of members plus pure noise.
std::string make_probe(const std::vector<std::string>& members,
                       std::mt19937_64& rng) {
  std::string s;
  if (!members.empty() && rng() % 4 != 0) {
    s = members[rng() % members.size()];
    switch (rng() % 5) {
      case 0:  // substitute
        if (!s.empty()) s[rng() % s.size()] = static_cast<char>('a' + rng() % 26);
        break;
      case 1:  // truncate
        if (!s.empty()) s.resize(rng() % s.size());
        break;
      case 2:  // extend
        s.push_back(static_cast<char>('a' + rng() % 26));
        break;
      case 3:  // delete
        if (!s.empty()) s.erase(rng() % s.size(), 1);
        break;
      case 4:  // splice two members
        if (members.size() > 1) {
          const auto& other = members[rng() % members.size()];
          s = s.substr(0, s.size() / 2) + other.substr(other.size() / 2);
        }
        break;
    }
  } else {
    const std::size_t len = rng() % 24;
    s.resize(len);
    for (char& c : s) c = static_cast<char>('a' + rng() % 26);
  }
  return s;
}

}  // namespace

VerifyResult verify_dictionary(const Dictionary& dict, std::size_t probes,
                               std::uint64_t seed) {
  VerifyResult res;
  const Adfa trie = build_trie(dict);
  const Adfa min = minimize(trie);
  const Padfa path_packed = build(trie);
  const Padfa min_packed = build(min);
  const std::unordered_set<std::string> oracle(dict.strings().begin(),
                                               dict.strings().end());

  auto check = [&](std::string_view q) {
    const bool want = oracle.count(std::string(q)) != 0;
    const bool r1 = accepts_baseline(trie, q);
    const bool r2 = accepts_baseline(min, q);
    const bool r3 = contains(path_packed, q);
    const bool r4 = contains(min_packed, q);
    ++res.checks;
    if (r1 != want || r2 != want || r3 != want || r4 != want) {
      std::ostringstream msg;
      msg << "pattern \"" << hex_escape(q) << "\": oracle=" << want
          << " trie-plain=" << r1 << " min-plain=" << r2 << " path-packed=" << r3
          << " min-packed=" << r4;
      res.ok = false;
      res.witness = msg.str();
      return false;
    }
    return true;
  };

  for (const auto& s : dict.strings())
    if (!check(s)) return res;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < probes; ++i)
    if (!check(make_probe(dict.strings(), rng))) return res;
  return res;
}

VerifyResult verify_text(std::string_view text, std::size_t patterns,
                         std::uint64_t seed) {
  VerifyResult res;
  const Adfa dawg = build_suffix_dawg(text);
  BuildOptions opts;
  opts.mode = Mode::reach;
  const Padfa packed = build(dawg, opts);
  std::mt19937_64 rng(seed);

  for (std::size_t i = 0; i < patterns; ++i) {
    std::string pattern;
    if (i % 2 == 0 && !text.empty()) {
      const std::size_t lo = rng() % text.size();
      const std::size_t len = 1 + rng() % std::min<std::size_t>(text.size() - lo, 64);
      pattern.assign(text.substr(lo, len));
      if (rng() % 4 == 0 && !pattern.empty())
        pattern[rng() % pattern.size()] = static_cast<char>('a' + rng() % 26);
    } else {
      pattern.resize(rng() % 16);
      for (char& c : pattern) c = static_cast<char>('a' + rng() % 26);
    }
    const bool want = text.find(pattern) != std::string_view::npos;
    const bool got = reach(packed, pattern);
    ++res.checks;
    if (want != got) {
      res.ok = false;
      res.witness = "pattern \"" + hex_escape(pattern) + "\": naive=" +
                    std::to_string(want) + " packed-dawg=" + std::to_string(got);
      return res;
    }
  }
  return res;
}

}  // namespace padfa
