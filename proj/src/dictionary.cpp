#include "padfa/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>

#include "padfa/code_map.hpp"
#include "padfa/error.hpp"

namespace padfa {

Dictionary Dictionary::from_strings(std::vector<std::string> strings) {
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].find(static_cast<char>(kFillerByte)) != std::string::npos)
      raise(ErrorCode::filler_byte,
            "string " + std::to_string(i) + " contains the reserved filler byte '#'");
  }

  std::vector<std::uint32_t> order(strings.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return strings[a] < strings[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (strings[order[i - 1]] == strings[order[i]]) {
      const auto a = std::min(order[i - 1], order[i]);
      const auto b = std::max(order[i - 1], order[i]);
      raise(ErrorCode::duplicate_string,
            "duplicate string at indices " + std::to_string(a) + " and " +
                std::to_string(b));
    }
  }

  Dictionary d;
  for (const auto& s : strings) {
    d.max_length_ = std::max(d.max_length_, s.size());
    d.total_length_ += s.size();
  }
  d.strings_ = std::move(strings);
  return d;
}

Dictionary Dictionary::read_stream(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return from_strings(std::move(lines));
}

Dictionary Dictionary::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io, "cannot open " + path);
  return read_stream(in);
}

}  // namespace padfa
