#pragma once

#include <cstdint>

#include "kbraid/klein.hpp"
#include "kbraid/words.hpp"

namespace kbraid {

// Normal form w(a2, b2) a1^r b1^s sigma^k of an element of the 2-strand
// braid group B2(K) of the Klein bottle.
//
// w is a freely reduced word, g = (r, s) lives in the <a1, b1> copy of the
// Klein-bottle group and k is 0 or 1.  Pure braids (the subgroup
// F2(a2, b2) x| pi1(K)) are exactly the elements with k = 0.  Two elements
// are equal iff their normal forms agree componentwise.
struct BraidElem {
  FreeWord w;
  KleinElem g;
  int k = 0;

  friend bool operator==(BraidElem const&, BraidElem const&) = default;
};

namespace braid {

BraidElem identity();
BraidElem a1();
BraidElem b1();
BraidElem a2();
BraidElem b2();
BraidElem sigma();

// The word b2^-1 a2 b2 a2 that sigma^2 equals.
FreeWord const& sigma_square_word();

}  // namespace braid

// Action of pi1(K) on F2(a2, b2): g w g^-1 = theta(g, w) for pure g, w.
//   s even:  a2 -> a2,     b2 -> a2^(2r) b2
//   s odd:   a2 -> a2^-1,  b2 -> a2^(2r+1) b2 a2
FreeWord theta(KleinElem g, FreeWord const& u);

BraidElem b_mul(BraidElem const& x, BraidElem const& y);
BraidElem b_inv(BraidElem const& x);
BraidElem b_pow(BraidElem const& x, std::int64_t e);

inline bool is_pure(BraidElem const& x) noexcept { return x.k == 0; }

// Projections of the pure braid group onto the first and second strand.
// Both throw Error(not_pure) on non-pure input.
KleinElem pr1(BraidElem const& x);
KleinElem pr2(BraidElem const& x);

// Conjugation p -> sigma p sigma^-1 restricted to pure braids.  This is how
// sigma is pushed to the right: sigma p = push_sigma(p) sigma.
BraidElem push_sigma(BraidElem const& pure);

inline BraidElem operator*(BraidElem const& x, BraidElem const& y) {
  return b_mul(x, y);
}

}  // namespace kbraid
