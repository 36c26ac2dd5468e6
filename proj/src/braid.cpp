#include "kbraid/braid.hpp"

#include <cstdlib>

#include "kbraid/error.hpp"

namespace kbraid {

namespace {

BraidElem pure(FreeWord w, KleinElem g) { return {std::move(w), g, 0}; }

BraidElem pure_part(BraidElem const& x) { return {x.w, x.g, 0}; }

// Semidirect product law (w1, g1)(w2, g2) = (w1 theta_g1(w2), g1 g2).
BraidElem pure_mul(BraidElem const& x, BraidElem const& y) {
  return pure(concat(x.w, theta(x.g, y.w)), k_mul(x.g, y.g));
}

BraidElem pure_inv(BraidElem const& x) {
  KleinElem const g_inv = k_inv(x.g);
  return pure(theta(g_inv, invert(x.w)), g_inv);
}

BraidElem pure_pow(BraidElem const& x, std::int64_t e) {
  BraidElem const base = e < 0 ? pure_inv(x) : x;
  BraidElem result = braid::identity();
  for (std::int64_t i = 0; i < std::llabs(e); ++i) {
    result = pure_mul(result, base);
  }
  return result;
}

// sigma x sigma^-1 for the pure generators, written as c phi(x) c^-1 where
// c = sigma^2 and phi(x) = sigma^-1 x sigma is read off the defining
// relations
//   sigma^-1 a1 sigma = a1
//   sigma^-1 b1 sigma = sigma^-2 b1
//   sigma^-1 a2 sigma = a2^-1 sigma^2 a1
//   sigma^-1 b2 sigma = sigma^-2 b2^-1 b1
// and then brought to normal form.  Checked against the relations in the
// unit tests.
struct PushTable {
  BraidElem a1, a1_inv, b1, b1_inv, a2, a2_inv, b2, b2_inv;
};

PushTable const& push_table() {
  static PushTable const table = [] {
    FreeWord const& c = braid::sigma_square_word();
    PushTable t;
    t.a1 = pure({}, {1, 0});
    t.b1 = pure(c, {0, 1});
    t.a2 = pure(concat(c, FreeWord{kA2Inv}), {1, 0});
    t.b2 = pure(concat(FreeWord{kB2Inv}, c), {0, 1});
    t.a1_inv = pure_inv(t.a1);
    t.b1_inv = pure_inv(t.b1);
    t.a2_inv = pure_inv(t.a2);
    t.b2_inv = pure_inv(t.b2);
    return t;
  }();
  return table;
}

}  // namespace

namespace braid {

BraidElem identity() { return {}; }
BraidElem a1() { return pure({}, {1, 0}); }
BraidElem b1() { return pure({}, {0, 1}); }
BraidElem a2() { return pure({kA2}, {}); }
BraidElem b2() { return pure({kB2}, {}); }
BraidElem sigma() { return {{}, {}, 1}; }

FreeWord const& sigma_square_word() {
  static FreeWord const c{kB2Inv, kA2, kB2, kA2};
  return c;
}

}  // namespace braid

FreeWord theta(KleinElem g, FreeWord const& u) {
  FreeWord const a2{kA2};
  FreeWord const b2{kB2};
  if (!is_odd(g.n)) {
    return substitute(u, a2, concat(FreeWord::generator(Symbol::a2, 2 * g.m), b2));
  }
  FreeWord const image_b2 = concat(
      concat(FreeWord::generator(Symbol::a2, 2 * g.m + 1), b2), a2);
  return substitute(u, FreeWord{kA2Inv}, image_b2);
}

BraidElem push_sigma(BraidElem const& p) {
  PushTable const& t = push_table();
  BraidElem result = braid::identity();
  for (Letter x : p.w.letters()) {
    BraidElem const& img = x.symbol == Symbol::a2
                               ? (x.sign > 0 ? t.a2 : t.a2_inv)
                               : (x.sign > 0 ? t.b2 : t.b2_inv);
    result = pure_mul(result, img);
  }
  result = pure_mul(result, pure_pow(t.a1, p.g.m));
  return pure_mul(result, pure_pow(t.b1, p.g.n));
}

BraidElem b_mul(BraidElem const& x, BraidElem const& y) {
  if (x.k == 0) {
    BraidElem result = pure_mul(x, pure_part(y));
    result.k = y.k;
    return result;
  }
  // x = p sigma, so x y = p (sigma q sigma^-1) sigma^(1 + k).
  BraidElem result = pure_mul(pure_part(x), push_sigma(pure_part(y)));
  if (y.k == 0) {
    result.k = 1;
    return result;
  }
  return pure_mul(result, pure(braid::sigma_square_word(), {}));
}

BraidElem b_inv(BraidElem const& x) {
  if (x.k == 0) {
    return pure_inv(x);
  }
  // (p sigma)^-1 = sigma^-1 p^-1 = c^-1 (sigma p^-1 sigma^-1) sigma.
  BraidElem const c_inv = pure(invert(braid::sigma_square_word()), {});
  BraidElem result = pure_mul(c_inv, push_sigma(pure_inv(pure_part(x))));
  result.k = 1;
  return result;
}

BraidElem b_pow(BraidElem const& x, std::int64_t e) {
  BraidElem const base = e < 0 ? b_inv(x) : x;
  BraidElem result = braid::identity();
  for (std::int64_t i = 0; i < std::llabs(e); ++i) {
    result = b_mul(result, base);
  }
  return result;
}

KleinElem pr1(BraidElem const& x) {
  if (!is_pure(x)) {
    throw Error(ErrorCode::not_pure, "pr1 is only defined on pure braids");
  }
  return x.g;
}

KleinElem pr2(BraidElem const& x) {
  if (!is_pure(x)) {
    throw Error(ErrorCode::not_pure, "pr2 is only defined on pure braids");
  }
  // a1 -> a2 a1 and b1 -> b2 b1 under the identification with P2(K), so the
  // second strand sees pr(w) a2^r b2^s.
  return k_mul(eval_word(x.w), x.g);
}

}  // namespace kbraid
