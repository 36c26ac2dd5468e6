#include "doctest.h"

#include "kbraid/error.hpp"
#include "kbraid/lift.hpp"
#include "support/corpus.hpp"

using namespace kbraid;
using namespace kbraid::testing;

namespace {

BraidElem const E = braid::identity();
BraidElem const S = braid::sigma();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::syntax_error;
}

// The type-4 condition as three simultaneous requirements, before it is
// rewritten as a disjunction.
bool type4_fails_bu_conjunctive(TorusHomType const& t) {
  return t.r2 * t.s1 == 0
         && (t.r2 != 0 || t.s2 != 0 || t.s1 == 0)
         && (t.s1 != 0 || t.s2 != 0 || t.r1 == 0 || is_odd(t.r2));
}

std::vector<MapDescriptor> valid_corpus() {
  Rng rng(0x5eed0101);
  std::vector<MapDescriptor> corpus = fixture_grid(2, 3);
  auto const small = small_valid_descriptors(1);
  corpus.insert(corpus.end(), small.begin(), small.end());
  auto const conj = conjugated(small, rng, 2);
  corpus.insert(corpus.end(), conj.begin(), conj.end());
  return corpus;
}

}  // namespace

TEST_CASE("covering_hom") {
  CHECK(covering_hom(MapClass::type_a) == SurfaceHom{Domain::torus, {1, 0}, {0, 2}});
  CHECK(covering_hom(MapClass::type_b0) == SurfaceHom{Domain::klein, {2, 0}, {0, 1}});
  CHECK(covering_hom(MapClass::type_b1) == SurfaceHom{Domain::klein, {2, 0}, {1, 1}});
  CHECK(code_of([] { covering_hom(MapClass::split); }) == ErrorCode::split_map);
  for (MapClass c : {MapClass::type_a, MapClass::type_b0, MapClass::type_b1}) {
    CHECK(covering_hom(c).respects_relation());
  }
}

TEST_CASE("lift_images") {
  LiftImages const trivial = lift_images({E, S});
  CHECK(trivial.a == E);
  CHECK(trivial.b == BraidElem{braid::sigma_square_word(), {}, 0});

  MapDescriptor const d = fixture_b0_even(1, 2, 3, 0);
  LiftImages const images = lift_images(d);
  CHECK(images.a == b_pow(d.alpha_hat, 2));
  CHECK(is_pure(images.a));
  CHECK(images.b == d.beta_hat);

  CHECK(code_of([] { lift_images({braid::a1(), braid::b1()}); })
        == ErrorCode::split_map);
  CHECK(code_of([] { lift_images({braid::a1(), braid::sigma()}); })
        == ErrorCode::invalid_map);
}

TEST_CASE("lift_factors") {
  LiftFactors const trivial = lift_factors({E, S});
  CHECK(trivial.f1 == SurfaceHom{Domain::torus, {0, 0}, {0, 0}});

  for (std::int64_t x = -2; x <= 2; ++x) {
    for (std::int64_t y = -2; y <= 2; ++y) {
      for (std::int64_t z = -3; z <= 3; z += 2) {
        CHECK(lift_factors(fixture_b0_even(x, y, z, 1)).f1
              == SurfaceHom{Domain::klein, {2 * x, 0}, {y, z}});
        CHECK(lift_factors(fixture_b0_odd(x, y, z)).f1
              == SurfaceHom{Domain::klein, {2 * x + 1, 0}, {y, z}});
      }
    }
  }
}

TEST_CASE("closed_form_f1") {
  MapParams a_params;
  a_params.k2 = 1;
  CHECK(closed_form_f1(a_params, MapClass::type_a)
        == SurfaceHom{Domain::torus, {0, 0}, {0, 0}});

  MapParams b0;
  b0.k1 = 1;
  b0.r1 = 3;
  b0.r2 = -1;
  b0.s2 = 5;
  CHECK(closed_form_f1(b0, MapClass::type_b0)
        == SurfaceHom{Domain::klein, {6, 0}, {-1, 5}});

  MapParams b1;
  b1.k1 = 1;
  b1.k2 = 1;
  b1.s2 = 1;
  CHECK(closed_form_f1(b1, MapClass::type_b1)
        == SurfaceHom{Domain::klein, {0, 0}, {0, 1}});

  CHECK(code_of([] { closed_form_f1({}, MapClass::split); })
        == ErrorCode::split_map);
}

TEST_CASE("check_constraints") {
  ConstraintReport const b0 =
      check_constraints(extract_params(fixture_b0_even(1, 2, 3, 0)),
                        MapClass::type_b0);
  CHECK(b0.ok());
  CHECK(b0.satisfied.size() == 4);

  ConstraintReport const a =
      check_constraints(extract_params({E, S}), MapClass::type_a);
  CHECK(a.ok());

  MapParams bad = extract_params(fixture_b0_even(1, 2, 3, 0));
  bad.s2 = 2;
  ConstraintReport const r = check_constraints(bad, MapClass::type_b0);
  REQUIRE(r.violated.size() == 1);
  CHECK(r.violated.front() == "s2 odd");

  MapParams b1;
  b1.k1 = b1.k2 = 1;
  b1.s2 = 2;
  CHECK(check_constraints(b1, MapClass::type_b1).violated
        == std::vector<std::string>{"s2 - s1 odd"});

  MapParams a_bad;
  a_bad.k2 = 1;
  a_bad.s1 = 1;
  CHECK_FALSE(check_constraints(a_bad, MapClass::type_a).ok());
}

TEST_CASE("classify_torus_hom") {
  CHECK(classify_torus_hom({Domain::torus, {0, 0}, {0, 0}})
        == TorusHomType{TorusType::t4, 0, 0, 0, 0});
  CHECK(classify_torus_hom({Domain::torus, {1, 1}, {0, 2}})
        == TorusHomType{TorusType::t1, 1, 0, 0, 1});
  CHECK(classify_torus_hom({Domain::torus, {0, 2}, {1, 1}})
        == TorusHomType{TorusType::t3, 0, 1, 1, 0});
  CHECK(classify_torus_hom({Domain::torus, {3, -1}, {3, 5}})
        == TorusHomType{TorusType::t2, 3, -1, 0, 2});
  CHECK(classify_torus_hom({Domain::torus, {2, -4}, {-1, 6}})
        == TorusHomType{TorusType::t4, 2, -2, -1, 3});
  // Images that do not commute fit none of the forms.
  CHECK(code_of([] { classify_torus_hom({Domain::torus, {1, 2}, {0, 1}}); })
        == ErrorCode::unclassifiable);
}

TEST_CASE("torus homomorphisms always classify") {
  for (std::int64_t am = -3; am <= 3; ++am) {
    for (std::int64_t an = -3; an <= 3; ++an) {
      for (std::int64_t bm = -3; bm <= 3; ++bm) {
        for (std::int64_t bn = -3; bn <= 3; ++bn) {
          SurfaceHom const h{Domain::torus, {am, an}, {bm, bn}};
          if (h.respects_relation()) {
            CHECK_NOTHROW(classify_torus_hom(h));
          }
        }
      }
    }
  }
}

TEST_CASE("bu_fails_torus") {
  CHECK(bu_fails_torus({TorusType::t4, 0, 0, 0, 0}));
  CHECK(bu_fails_torus({TorusType::t1, 3, -2, 0, 1}));
  CHECK_FALSE(bu_fails_torus({TorusType::t1, 3, -2, 0, 2}));
  CHECK_FALSE(bu_fails_torus({TorusType::t2, 0, 0, 0, 0}));
  CHECK(bu_fails_torus({TorusType::t3, 0, 0, 5, 1}));
  CHECK_FALSE(bu_fails_torus({TorusType::t3, 0, 1, 5, 1}));

  // The disjunctive type-4 condition agrees with the conjunctive one.
  for (std::int64_t r1 = -3; r1 <= 3; ++r1) {
    for (std::int64_t s1 = -3; s1 <= 3; ++s1) {
      for (std::int64_t r2 = -3; r2 <= 3; ++r2) {
        for (std::int64_t s2 = -3; s2 <= 3; ++s2) {
          TorusHomType const t{TorusType::t4, r1, s1, r2, s2};
          CHECK(bu_fails_torus(t) == type4_fails_bu_conjunctive(t));
        }
      }
    }
  }
}

TEST_CASE("bu_fails_klein") {
  CHECK(bu_fails_klein({Domain::klein, {0, 0}, {0, 1}}));
  CHECK(bu_fails_klein({Domain::klein, {2, 0}, {5, 3}}));
  CHECK_FALSE(bu_fails_klein({Domain::klein, {1, 1}, {0, 1}}));
  CHECK_FALSE(bu_fails_klein({Domain::klein, {1, 0}, {0, 2}}));
}

TEST_CASE("lift factor invariants over the valid corpus") {
  for (MapDescriptor const& d : valid_corpus()) {
    MapClass const c = classify(d);
    MapParams const p = extract_params(d);
    LiftImages const images = lift_images(d);
    LiftFactors const f = lift_factors(d);

    CHECK(is_pure(images.a));
    CHECK(is_pure(images.b));
    CHECK(f.f1.respects_relation());
    CHECK(f.f2.respects_relation());
    CHECK(f.f1 == closed_form_f1(p, c));
    CHECK(bu_fails(f.f1));
    CHECK(check_constraints(p, c).ok());

    if (c == MapClass::type_a) {
      CHECK(f.f2.img_a.n == -f.f1.img_a.n);
      CHECK(f.f2.img_b.n == f.f1.img_b.n);
    } else {
      CHECK(f.f1.img_a.n == 0);
      CHECK(f.f2.img_a.n == 0);
      CHECK(f.f2.img_b.n == f.f1.img_b.n);
    }
  }
}
