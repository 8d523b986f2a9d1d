#ifndef PADFA_DICTIONARY_HPP
#define PADFA_DICTIONARY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace padfa {

// A set of distinct byte strings. Strings may hold arbitrary bytes except
// the reserved filler byte; the empty string is allowed.
class Dictionary {
public:
  Dictionary() = default;

  // Validates distinctness (sort + adjacent compare) and the filler ban.
  // Throws Error{duplicate_string} naming both offending indices, or
  // Error{filler_byte} naming the string index.
  static Dictionary from_strings(std::vector<std::string> strings);

  // Newline-delimited raw bytes, one string per line. A trailing LF is
  // optional; the final line counts either way.
  static Dictionary read_stream(std::istream& in);
  static Dictionary read_file(const std::string& path);

  const std::vector<std::string>& strings() const { return strings_; }
  std::size_t size() const { return strings_.size(); }
  std::size_t max_length() const { return max_length_; }
  std::size_t total_length() const { return total_length_; }

private:
  std::vector<std::string> strings_;
  std::size_t max_length_ = 0;
  std::size_t total_length_ = 0;
};

}  // namespace padfa

#endif  // PADFA_DICTIONARY_HPP
