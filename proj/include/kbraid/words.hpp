#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kbraid {

enum class Symbol : std::uint8_t { a2, b2 };

struct Letter {
  Symbol symbol;
  int sign;  // +1 or -1

  Letter inverse() const noexcept { return {symbol, -sign}; }
  friend bool operator==(Letter, Letter) = default;
};

inline constexpr Letter kA2{Symbol::a2, +1};
inline constexpr Letter kA2Inv{Symbol::a2, -1};
inline constexpr Letter kB2{Symbol::b2, +1};
inline constexpr Letter kB2Inv{Symbol::b2, -1};

// Element of the free group F2(a2, b2), always stored freely reduced.
// One entry per letter, no run-length encoding.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<Letter> letters);

  // Freely reduces an arbitrary letter sequence.
  static FreeWord reduce(std::span<Letter const> raw);

  static FreeWord generator(Symbol s, std::int64_t exponent = 1);

  std::span<Letter const> letters() const noexcept { return _letters; }
  std::size_t size() const noexcept { return _letters.size(); }
  bool empty() const noexcept { return _letters.empty(); }

  friend bool operator==(FreeWord const&, FreeWord const&) = default;

 private:
  std::vector<Letter> _letters;
};

FreeWord concat(FreeWord const& u, FreeWord const& v);
FreeWord invert(FreeWord const& u);
FreeWord power(FreeWord const& u, std::int64_t e);

// Signed number of occurrences of `s` in `u`.
std::int64_t exp_sum(FreeWord const& u, Symbol s);

// Image of `u` under the endomorphism a2 -> image_a2, b2 -> image_b2.
FreeWord substitute(FreeWord const& u,
                    FreeWord const& image_a2,
                    FreeWord const& image_b2);

inline FreeWord operator*(FreeWord const& u, FreeWord const& v) {
  return concat(u, v);
}

}  // namespace kbraid
