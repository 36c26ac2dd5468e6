#pragma once

#include <cstdint>

#include "kbraid/words.hpp"

namespace kbraid {

// Element a^m b^n of the Klein-bottle group <a, b : aba = b>.
//
// Every copy of the group that shows up (<a1,b1>, <a2,b2>, <alpha,beta>,
// the covering space's <a,b>) uses this type; which copy is meant is up to
// the caller.  The pair (m, n) is a normal form, so equality is
// componentwise.
struct KleinElem {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(KleinElem, KleinElem) = default;
};

// (-1)^e for any integer e.
constexpr std::int64_t sign_pow(std::int64_t e) noexcept {
  return (e % 2 == 0) ? 1 : -1;
}

constexpr bool is_odd(std::int64_t e) noexcept { return e % 2 != 0; }

// b a = a^-1 b, hence (m1, n1)(m2, n2) = (m1 + (-1)^n1 m2, n1 + n2).
constexpr KleinElem k_mul(KleinElem x, KleinElem y) noexcept {
  return {x.m + sign_pow(x.n) * y.m, x.n + y.n};
}

constexpr KleinElem k_inv(KleinElem x) noexcept {
  return {-sign_pow(x.n) * x.m, -x.n};
}

KleinElem k_pow(KleinElem x, std::int64_t e) noexcept;

// Image of `u` under F2(a2, b2) -> F2 / <<b2^-1 a2 b2 a2>>, a2 -> a, b2 -> b.
KleinElem eval_word(FreeWord const& u) noexcept;

constexpr KleinElem operator*(KleinElem x, KleinElem y) noexcept {
  return k_mul(x, y);
}

inline constexpr KleinElem kKleinA{1, 0};
inline constexpr KleinElem kKleinB{0, 1};

}  // namespace kbraid
