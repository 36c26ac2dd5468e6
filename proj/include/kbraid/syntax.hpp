#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kbraid/braid.hpp"
#include "kbraid/maps.hpp"

namespace kbraid {

// ASCII braid words:
//
//   word := "1" | term+
//   term := gen ("^" int)?
//   gen  := a1 | b1 | a2 | b2 | s | A1 | B1 | A2 | B2 | S
//
// Uppercase is the inverse generator and `s` stands for sigma.  Whitespace
// between terms is optional.  Exponents larger than kMaxExponent in absolute
// value raise Error(exponent_overflow); malformed input raises SyntaxError.
inline constexpr std::int64_t kMaxExponent = 1'000'000;

BraidElem parse_braid(std::string_view text);

// Canonical rendering "w a1^r b1^s s" of a normal form.  Runs of a letter in
// w are collapsed to one power, inverse letters are written uppercase, unit
// exponents are dropped and the identity prints as "1".
std::string print_braid(BraidElem const& x);

std::string print_word(FreeWord const& w);

// Map files hold two assignments, one per line:
//
//   # comment
//   alpha = <word>
//   beta  = <word>
//
// Blank lines and lines whose first non-blank character is '#' are ignored.
MapDescriptor parse_map_text(std::string_view text);
MapDescriptor read_map_file(std::string const& path);

std::string format_map_file(MapDescriptor const& d, std::string_view comment = {});

}  // namespace kbraid
