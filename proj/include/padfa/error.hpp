#ifndef PADFA_ERROR_HPP
#define PADFA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace padfa {

enum class ErrorCode {
  duplicate_string,
  filler_byte,
  invalid_automaton,
  cyclic_input,
  count_overflow,
  zero_weight,
  width_overflow,
  select_out_of_range,
  mode_mismatch,
  bad_magic,
  bad_version,
  truncated,
  checksum_mismatch,
  malformed,
  io,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::duplicate_string: return "duplicate-string";
    case ErrorCode::filler_byte: return "filler-byte";
    case ErrorCode::invalid_automaton: return "invalid-automaton";
    case ErrorCode::cyclic_input: return "cyclic-input";
    case ErrorCode::count_overflow: return "count-overflow";
    case ErrorCode::zero_weight: return "zero-weight";
    case ErrorCode::width_overflow: return "width-overflow";
    case ErrorCode::select_out_of_range: return "select-out-of-range";
    case ErrorCode::mode_mismatch: return "mode-mismatch";
    case ErrorCode::bad_magic: return "bad-magic";
    case ErrorCode::bad_version: return "bad-version";
    case ErrorCode::truncated: return "truncated";
    case ErrorCode::checksum_mismatch: return "checksum-mismatch";
    case ErrorCode::malformed: return "malformed";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace padfa

#endif  // PADFA_ERROR_HPP
