#pragma once

#include <cstdint>
#include <string_view>

#include "kbraid/braid.hpp"

namespace kbraid {

// Images of the Klein-bottle generators alpha, beta under the induced
// homomorphism pi1(K) -> B2(K) of a 2-valued map.  Any pair of braids can
// be stored; whether it defines a homomorphism is checked separately.
struct MapDescriptor {
  BraidElem alpha_hat;
  BraidElem beta_hat;

  friend bool operator==(MapDescriptor const&, MapDescriptor const&) = default;
};

// Read-off of the two normal forms
//   alpha_hat = w1 a1^r1 b1^s1 sigma^k1,  beta_hat = w2 a1^r2 b1^s2 sigma^k2
// together with pr(wi) = a2^mi b2^ni.
struct MapParams {
  FreeWord w1, w2;
  std::int64_t r1 = 0, s1 = 0, r2 = 0, s2 = 0;
  int k1 = 0, k2 = 0;
  std::int64_t m1 = 0, n1 = 0, m2 = 0, n2 = 0;

  friend bool operator==(MapParams const&, MapParams const&) = default;
};

enum class MapClass { split, type_a, type_b0, type_b1 };

std::string_view to_string(MapClass c) noexcept;

// alpha_hat beta_hat alpha_hat == beta_hat.
bool is_homomorphism(MapDescriptor const& d);

// Class from the sigma flags alone: (0,0) split, (0,1) A, (1,0) B0,
// (1,1) B1.  Does not validate.
MapClass class_of(int k1, int k2) noexcept;

// Validates, then classifies.  Throws Error(invalid_map).
MapClass classify(MapDescriptor const& d);

MapParams extract_params(MapDescriptor const& d);

// Outcome of validation kept around so callers can explain a rejection.
struct ValidationReport {
  bool homomorphism = false;
  BraidElem relation_lhs;  // alpha_hat beta_hat alpha_hat
  MapClass map_class = MapClass::split;

  bool valid() const noexcept { return homomorphism; }
  bool split() const noexcept { return map_class == MapClass::split; }
};

ValidationReport validate(MapDescriptor const& d);

// alpha -> c a1^x sigma,  beta -> c^l a1^y b1^z with c = b2^-1 a2 b2 a2.
// z must be odd (Error(bad_parity) otherwise).
MapDescriptor fixture_b0_even(std::int64_t x,
                              std::int64_t y,
                              std::int64_t z,
                              std::int64_t l);

// alpha -> a2^-1 a1^(x+1) sigma,  beta -> a2^-1 a1^y b1^z, z odd.
MapDescriptor fixture_b0_odd(std::int64_t x, std::int64_t y, std::int64_t z);

}  // namespace kbraid
