#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kbraid/braid.hpp"
#include "kbraid/maps.hpp"

namespace kbraid {

enum class Domain { torus, klein };

std::string_view to_string(Domain d) noexcept;

// A homomorphism pi1(domain) -> pi1(K) given by the images of the two
// generators a, b of the domain group.
struct SurfaceHom {
  Domain domain = Domain::torus;
  KleinElem img_a;
  KleinElem img_b;

  // Torus: images commute.  Klein: img_a img_b img_a == img_b.
  bool respects_relation() const noexcept;

  friend bool operator==(SurfaceHom const&, SurfaceHom const&) = default;
};

// Double cover q of K attached to a non-split map, as the homomorphism q#.
//   A:  torus, a -> alpha,    b -> beta^2
//   B0: Klein, a -> alpha^2,  b -> beta
//   B1: Klein, a -> alpha^2,  b -> alpha beta
SurfaceHom covering_hom(MapClass c);

// Images of the covering group's generators under the lift of Phi o q.
struct LiftImages {
  BraidElem a;
  BraidElem b;
};

struct LiftFactors {
  SurfaceHom f1;
  SurfaceHom f2;
};

// Both throw Error(invalid_map) or Error(split_map).
LiftImages lift_images(MapDescriptor const& d);
LiftFactors lift_factors(MapDescriptor const& d);

// The lift factor f1 written directly in terms of the descriptor parameters.
// Throws Error(split_map) for the split class.
SurfaceHom closed_form_f1(MapParams const& p, MapClass c);

// Necessary conditions on the parameters of a valid map.  Equations with the
// basepoint integers k, l are checked as "there exist l in {0,1}, k in Z".
struct ConstraintReport {
  std::vector<std::string> satisfied;
  std::vector<std::string> violated;

  bool ok() const noexcept { return violated.empty(); }
  friend bool operator==(ConstraintReport const&, ConstraintReport const&) = default;
};

ConstraintReport check_constraints(MapParams const& p, MapClass c);

// Based homotopy types of maps T -> K:
//   T1: a -> alpha^r1 beta^(2 s1 + 1), b -> beta^(2 s2)
//   T2: a -> alpha^r1 beta^(2 s1 + 1), b -> alpha^r1 beta^(2 s2 + 1)
//   T3: a -> beta^(2 s1),              b -> alpha^r2 beta^(2 s2 + 1)
//   T4: a -> alpha^r1 beta^(2 s1),     b -> alpha^r2 beta^(2 s2)
// Parameters that a type does not use are left at 0.
enum class TorusType { t1, t2, t3, t4 };

std::string_view to_string(TorusType t) noexcept;

struct TorusHomType {
  TorusType tag = TorusType::t4;
  std::int64_t r1 = 0, s1 = 0, r2 = 0, s2 = 0;

  friend bool operator==(TorusHomType, TorusHomType) = default;
};

// Throws Error(unclassifiable) when no form matches, which only happens for
// data violating the torus relation.
TorusHomType classify_torus_hom(SurfaceHom const& h);

// True when the class does NOT have the Borsuk-Ulam property with respect
// to the free involution of the double cover.
bool bu_fails_torus(TorusHomType const& type);
bool bu_fails_klein(SurfaceHom const& h);

// Dispatches on the domain of `h`.
bool bu_fails(SurfaceHom const& h);

}  // namespace kbraid
