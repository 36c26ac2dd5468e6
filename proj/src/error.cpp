#include "kbraid/error.hpp"

namespace kbraid {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_pure: return "NotPure";
    case ErrorCode::invalid_map: return "InvalidMap";
    case ErrorCode::split_map: return "SplitMap";
    case ErrorCode::bad_parity: return "BadParity";
    case ErrorCode::unclassifiable: return "Unclassifiable";
    case ErrorCode::unsupported_type: return "UnsupportedType";
    case ErrorCode::unsupported_form: return "UnsupportedForm";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::exponent_overflow: return "ExponentOverflow";
  }
  return "Unknown";
}

}  // namespace kbraid
