#include "doctest.h"

#include "kbraid/braid.hpp"
#include "kbraid/error.hpp"
#include "support/generators.hpp"

using namespace kbraid;
using kbraid::testing::product;
using kbraid::testing::random_braid;
using kbraid::testing::random_klein;
using kbraid::testing::random_word;
using kbraid::testing::Rng;

namespace {

BraidElem const A1 = braid::a1();
BraidElem const B1 = braid::b1();
BraidElem const A2 = braid::a2();
BraidElem const B2 = braid::b2();
BraidElem const S = braid::sigma();
BraidElem const E = braid::identity();

BraidElem inv(BraidElem const& x) { return b_inv(x); }

BraidElem const C{braid::sigma_square_word(), {}, 0};

}  // namespace

TEST_CASE("theta") {
  CHECK(theta({1, 0}, FreeWord{kB2}) == FreeWord{kA2, kA2, kB2});
  CHECK(theta({0, 1}, FreeWord{kA2}) == FreeWord{kA2Inv});
  CHECK(theta({0, 1}, FreeWord{kB2}) == FreeWord{kA2, kB2, kA2});

  FreeWord const c = braid::sigma_square_word();
  CHECK(theta({0, 1}, theta({0, 1}, c)) == theta({0, 2}, c));
  CHECK(theta({0, 2}, c) == c);
}

TEST_CASE("theta is a left action compatible with the Klein relation") {
  Rng rng(0x5eed0003);
  for (int i = 0; i < 500; ++i) {
    KleinElem const g = random_klein(rng, 4);
    KleinElem const h = random_klein(rng, 4);
    FreeWord const u = random_word(rng, 8);
    CHECK(theta(k_mul(g, h), u) == theta(g, theta(h, u)));
    CHECK(theta({}, u) == u);
  }
  FreeWord const probe{kA2, kB2, kA2Inv, kB2Inv, kB2Inv};
  KleinElem const aba = k_mul(k_mul(kKleinA, kKleinB), kKleinA);
  CHECK(theta(aba, probe) == theta(kKleinB, probe));
}

TEST_CASE("defining relations") {
  SUBCASE("pure relations") {
    CHECK(product({A1, A2}) == product({A2, A1}));
    CHECK(product({A1, B2, inv(A1)}) == product({A2, A2, B2}));
    CHECK(product({B1, A2, inv(B1)}) == inv(A2));
    CHECK(product({B1, B2, inv(B1)}) == product({A2, B2, A2}));
    CHECK(product({A1, B1, A1, inv(B1)}) == E);
  }
  SUBCASE("sigma relations") {
    CHECK(product({S, S}) == product({inv(B2), A2, B2, A2}));
    CHECK(product({inv(S), A1, S}) == A1);
    CHECK(product({inv(S), B1, S}) == product({inv(S), inv(S), B1}));
    CHECK(product({inv(S), A2, S}) == product({inv(A2), S, S, A1}));
    CHECK(product({inv(S), B2, S}) == product({inv(S), inv(S), inv(B2), B1}));
  }
}

TEST_CASE("sigma push table agrees with the relations") {
  // sigma x sigma^-1 = c (sigma^-1 x sigma) c^-1, evaluated with pure
  // multiplication only.
  BraidElem const c_inv = inv(C);
  CHECK(push_sigma(A1) == product({C, A1, c_inv}));
  CHECK(push_sigma(B1) == product({C, c_inv, B1, c_inv}));
  CHECK(push_sigma(A2) == product({C, inv(A2), C, A1, c_inv}));
  CHECK(push_sigma(B2) == product({C, c_inv, inv(B2), B1, c_inv}));
  CHECK(push_sigma(C) == C);
}

TEST_CASE("push_sigma squared is conjugation by sigma^2") {
  Rng rng(0x5eed0004);
  for (int i = 0; i < 200; ++i) {
    BraidElem const p = random_braid(rng, 6, 4, false);
    CHECK(push_sigma(push_sigma(p)) == product({C, p, inv(C)}));
  }
}

TEST_CASE("b_mul") {
  CHECK(b_mul(S, S) == BraidElem{braid::sigma_square_word(), {}, 0});
  Rng rng(0x5eed0005);
  for (int i = 0; i < 50; ++i) {
    BraidElem const x = random_braid(rng, 6, 4);
    CHECK(b_mul(E, x) == x);
    CHECK(b_mul(x, E) == x);
  }
  BraidElem const conj = product({inv(S), B1, S});
  CHECK(b_mul(conj, conj) == BraidElem{{}, {0, 2}, 0});
}

TEST_CASE("sigma conjugate of b1 powers") {
  BraidElem const conj = product({inv(S), B1, S});
  for (std::int64_t s = -6; s <= 6; ++s) {
    std::int64_t const sigma_exp = -1 + sign_pow(s);
    CHECK(b_pow(conj, s) == b_mul(b_pow(S, sigma_exp), b_pow(B1, s)));
  }
}

TEST_CASE("b_inv") {
  CHECK(b_inv(E) == E);
  BraidElem const s_inv = b_inv(S);
  CHECK(s_inv == BraidElem{FreeWord{kA2Inv, kB2Inv, kA2Inv, kB2}, {}, 1});
  CHECK(b_mul(S, s_inv) == E);

  BraidElem const p{FreeWord{kA2, kB2Inv}, {2, 1}, 0};
  KleinElem const g_inv = k_inv(p.g);
  CHECK(b_inv(p) == BraidElem{theta(g_inv, invert(p.w)), g_inv, 0});

  Rng rng(0x5eed0006);
  for (int i = 0; i < 300; ++i) {
    BraidElem const x = random_braid(rng, 6, 4);
    CHECK(b_mul(x, b_inv(x)) == E);
    CHECK(b_mul(b_inv(x), x) == E);
  }
}

TEST_CASE("b_pow") {
  BraidElem const x{FreeWord{kB2}, {1, 1}, 1};
  CHECK(b_pow(x, 0) == E);
  CHECK(b_pow(S, 2) == C);
  CHECK(b_pow(S, -1) == b_inv(S));
  CHECK(b_pow(x, 3) == product({x, x, x}));
  CHECK(b_pow(x, -2) == product({b_inv(x), b_inv(x)}));
}

TEST_CASE("is_pure") {
  CHECK_FALSE(is_pure(S));
  CHECK(is_pure(E));
  CHECK(is_pure(b_pow(S, 2)));
}

TEST_CASE("projections") {
  CHECK(pr1(C) == KleinElem{0, 0});
  CHECK(pr1(BraidElem{{}, {3, -2}, 0}) == KleinElem{3, -2});
  CHECK_THROWS_AS(pr1(S), Error);
  try {
    pr1(S);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_pure);
  }

  CHECK(pr2(BraidElem{{}, {3, -2}, 0}) == KleinElem{3, -2});
  CHECK(pr2(BraidElem{FreeWord{kA2Inv}, {}, 0}) == KleinElem{-1, 0});
  CHECK(pr2(BraidElem{braid::sigma_square_word(), {1, 1}, 0})
        == KleinElem{1, 1});
  CHECK_THROWS_AS(pr2(S), Error);
}

TEST_CASE("group law properties") {
  Rng rng(0x5eed0007);
  for (int i = 0; i < 1000; ++i) {
    BraidElem const x = random_braid(rng, 6, 4);
    BraidElem const y = random_braid(rng, 6, 4);
    BraidElem const z = random_braid(rng, 6, 4);
    CHECK(b_mul(b_mul(x, y), z) == b_mul(x, b_mul(y, z)));
    CHECK(is_pure(b_mul(x, y)) == (x.k == y.k));
  }
  for (int i = 0; i < 500; ++i) {
    BraidElem const x = random_braid(rng, 6, 4, false);
    BraidElem const y = random_braid(rng, 6, 4, false);
    BraidElem const xy = b_mul(x, y);
    CHECK(xy == BraidElem{concat(x.w, theta(x.g, y.w)), k_mul(x.g, y.g), 0});
    CHECK(pr1(xy) == k_mul(pr1(x), pr1(y)));
    CHECK(pr2(xy) == k_mul(pr2(x), pr2(y)));
  }
}
