#include "kbraid/klein.hpp"

#include <cstdlib>

namespace kbraid {

KleinElem k_pow(KleinElem x, std::int64_t e) noexcept {
  KleinElem const base = e < 0 ? k_inv(x) : x;
  KleinElem result;
  for (std::int64_t i = 0; i < std::llabs(e); ++i) {
    result = k_mul(result, base);
  }
  return result;
}

KleinElem eval_word(FreeWord const& u) noexcept {
  KleinElem result;
  for (Letter x : u.letters()) {
    KleinElem const g = x.symbol == Symbol::a2 ? kKleinA : kKleinB;
    result = k_mul(result, x.sign > 0 ? g : k_inv(g));
  }
  return result;
}

}  // namespace kbraid
