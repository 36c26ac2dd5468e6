#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kbraid {

enum class ErrorCode {
  not_pure,
  invalid_map,
  split_map,
  bad_parity,
  unclassifiable,
  unsupported_type,
  unsupported_form,
  syntax_error,
  exponent_overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        _code(code) {}

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

// Raised by the braid-word and map-file parsers; `position` is a 0-based
// byte offset into the offending text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string const& what)
      : Error(ErrorCode::syntax_error,
              what + " at position " + std::to_string(position)),
        _position(position) {}

  std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;
};

}  // namespace kbraid
