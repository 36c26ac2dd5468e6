#include "doctest.h"

#include "kbraid/error.hpp"
#include "kbraid/maps.hpp"
#include "support/corpus.hpp"

using namespace kbraid;
using kbraid::testing::fixture_grid;
using kbraid::testing::small_valid_descriptors;

namespace {

BraidElem const E = braid::identity();
BraidElem const S = braid::sigma();
FreeWord const C = braid::sigma_square_word();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::syntax_error;
}

}  // namespace

TEST_CASE("is_homomorphism") {
  CHECK(is_homomorphism({E, S}));
  CHECK(is_homomorphism({BraidElem{C, {1, 0}, 1}, BraidElem{{}, {2, 3}, 0}}));
  CHECK_FALSE(is_homomorphism({braid::a1(), S}));

  ValidationReport const report = validate({braid::a1(), S});
  CHECK_FALSE(report.valid());
  CHECK(report.relation_lhs == BraidElem{{}, {2, 0}, 1});
}

TEST_CASE("classify") {
  CHECK(classify({E, S}) == MapClass::type_a);
  CHECK(classify(fixture_b0_even(1, 2, 3, 0)) == MapClass::type_b0);
  CHECK(classify({braid::a1(), braid::b1()}) == MapClass::split);
  // Both images pure, but a2 (a2 b2) a2 != a2 b2, so this is no map.
  MapDescriptor const not_a_map{braid::a2(), BraidElem{FreeWord{kA2, kB2}, {}, 0}};
  CHECK(validate(not_a_map).map_class == MapClass::split);
  CHECK(code_of([&] { classify(not_a_map); }) == ErrorCode::invalid_map);
  CHECK(code_of([] { classify({braid::a1(), braid::sigma()}); })
        == ErrorCode::invalid_map);

  CHECK(class_of(0, 0) == MapClass::split);
  CHECK(class_of(0, 1) == MapClass::type_a);
  CHECK(class_of(1, 0) == MapClass::type_b0);
  CHECK(class_of(1, 1) == MapClass::type_b1);
}

TEST_CASE("extract_params") {
  MapParams const trivial = extract_params({E, S});
  MapParams expected;
  expected.k2 = 1;
  CHECK(trivial == expected);

  MapParams const odd = extract_params(fixture_b0_odd(4, 2, 3));
  CHECK(odd.w2 == FreeWord{kA2Inv});
  CHECK(odd.m2 == -1);
  CHECK(odd.n2 == 0);
  CHECK(odd.r2 == 2);
  CHECK(odd.s2 == 3);
  CHECK(odd.k2 == 0);

  MapParams const even = extract_params(fixture_b0_even(5, 0, 1, 0));
  CHECK(even.m1 == 0);
  CHECK(even.n1 == 0);
  CHECK(even.r1 == 5);
  CHECK(even.s1 == 0);
  CHECK(even.k1 == 1);
}

TEST_CASE("fixtures") {
  CHECK(is_homomorphism(fixture_b0_even(1, 2, 3, 0)));
  CHECK(is_homomorphism(fixture_b0_even(0, 0, 1, 2)));
  CHECK(code_of([] { fixture_b0_even(1, 2, 4, 0); }) == ErrorCode::bad_parity);

  MapDescriptor const d = fixture_b0_odd(0, 0, 1);
  CHECK(d.alpha_hat == BraidElem{FreeWord{kA2Inv}, {1, 0}, 1});
  CHECK(d.beta_hat == BraidElem{FreeWord{kA2Inv}, {0, 1}, 0});
  CHECK(is_homomorphism(d));
  CHECK(is_homomorphism(fixture_b0_odd(1, 2, 3)));
  for (std::int64_t z : {-4, 0, 2}) {
    CHECK(code_of([z] { fixture_b0_odd(0, 0, z); }) == ErrorCode::bad_parity);
  }
}

TEST_CASE("fixture families are valid B0 maps with the stated parameters") {
  for (std::int64_t x = -3; x <= 3; ++x) {
    for (std::int64_t y = -3; y <= 3; ++y) {
      for (std::int64_t z = -5; z <= 5; z += 2) {
        MapDescriptor const odd = fixture_b0_odd(x, y, z);
        REQUIRE(classify(odd) == MapClass::type_b0);
        MapParams const po = extract_params(odd);
        CHECK(po.r1 == x + 1);
        CHECK(po.s1 == 0);
        CHECK(po.m1 == -1);
        CHECK(po.n1 == 0);
        CHECK(po.r2 == y);
        CHECK(po.s2 == z);
        CHECK(po.m2 == -1);
        CHECK(po.n2 == 0);
        for (std::int64_t l = -3; l <= 3; ++l) {
          MapDescriptor const even = fixture_b0_even(x, y, z, l);
          REQUIRE(classify(even) == MapClass::type_b0);
          MapParams const pe = extract_params(even);
          CHECK(pe.r1 == x);
          CHECK(pe.s1 == 0);
          CHECK(pe.r2 == y);
          CHECK(pe.s2 == z);
          CHECK(pe.m1 == 0);
          CHECK(pe.n1 == 0);
          CHECK(pe.m2 == 0);
          CHECK(pe.n2 == 0);
        }
      }
    }
  }
}

TEST_CASE("split iff both images pure") {
  for (MapDescriptor const& d : small_valid_descriptors(1)) {
    CHECK(classify(d) != MapClass::split);
  }
  MapDescriptor const split{braid::a1(), braid::b1()};
  CHECK(validate(split).split());
}
