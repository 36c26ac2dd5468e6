#include "kbraid/words.hpp"

#include <cstdlib>

namespace kbraid {

namespace {

// Appends `x` to an already reduced stack, cancelling against the top.
void push_reduced(std::vector<Letter>& stack, Letter x) {
  if (!stack.empty() && stack.back() == x.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(x);
  }
}

}  // namespace

FreeWord::FreeWord(std::initializer_list<Letter> letters) {
  for (Letter x : letters) {
    push_reduced(_letters, x);
  }
}

FreeWord FreeWord::reduce(std::span<Letter const> raw) {
  FreeWord result;
  result._letters.reserve(raw.size());
  for (Letter x : raw) {
    push_reduced(result._letters, x);
  }
  return result;
}

FreeWord FreeWord::generator(Symbol s, std::int64_t exponent) {
  FreeWord result;
  int const sign = exponent < 0 ? -1 : 1;
  auto const n = static_cast<std::size_t>(std::llabs(exponent));
  result._letters.assign(n, Letter{s, sign});
  return result;
}

FreeWord concat(FreeWord const& u, FreeWord const& v) {
  auto const lu = u.letters();
  auto const lv = v.letters();
  // Length of the cancelling overlap between the tail of u and the head of v.
  std::size_t cancel = 0;
  while (cancel < lu.size() && cancel < lv.size()
         && lu[lu.size() - 1 - cancel] == lv[cancel].inverse()) {
    ++cancel;
  }
  std::vector<Letter> raw;
  raw.reserve(lu.size() + lv.size() - 2 * cancel);
  raw.insert(raw.end(), lu.begin(), lu.end() - cancel);
  raw.insert(raw.end(), lv.begin() + cancel, lv.end());
  return FreeWord::reduce(raw);
}

FreeWord invert(FreeWord const& u) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return FreeWord::reduce(raw);
}

FreeWord power(FreeWord const& u, std::int64_t e) {
  FreeWord const base = e < 0 ? invert(u) : u;
  FreeWord result;
  for (std::int64_t i = 0; i < std::llabs(e); ++i) {
    result = concat(result, base);
  }
  return result;
}

std::int64_t exp_sum(FreeWord const& u, Symbol s) {
  std::int64_t total = 0;
  for (Letter x : u.letters()) {
    if (x.symbol == s) {
      total += x.sign;
    }
  }
  return total;
}

FreeWord substitute(FreeWord const& u,
                    FreeWord const& image_a2,
                    FreeWord const& image_b2) {
  FreeWord const inv_a2 = invert(image_a2);
  FreeWord const inv_b2 = invert(image_b2);
  std::vector<Letter> raw;
  for (Letter x : u.letters()) {
    FreeWord const& img = x.symbol == Symbol::a2
                              ? (x.sign > 0 ? image_a2 : inv_a2)
                              : (x.sign > 0 ? image_b2 : inv_b2);
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return FreeWord::reduce(raw);
}

}  // namespace kbraid
