#pragma once

#include <cstdint>
#include <string_view>

#include "kbraid/lift.hpp"
#include "kbraid/maps.hpp"

namespace kbraid {

// Which case of the closed formula produced a Nielsen number.
enum class NielsenBranch {
  b0,        // k1 = 1, k2 = 0
  b1,        // k1 = 1, k2 = 1
  a_scaled,  // k1 = 0, s1 and n2 even, r1 != 0
  a_plain,   // k1 = 0 otherwise
};

std::string_view to_string(NielsenBranch b) noexcept;

struct NielsenFormula {
  std::int64_t value = 0;
  NielsenBranch branch = NielsenBranch::a_plain;
};

// Closed formula on raw parameters; no validity check on the braids.
// Throws Error(split_map) when k1 = k2 = 0.
NielsenFormula nielsen_formula(MapParams const& p);

inline std::int64_t nielsen_number(MapParams const& p) {
  return nielsen_formula(p).value;
}

// Coincidence number N(f, g) of f: T -> K against a type-4 map g with
// g(a) = alpha^t1 beta^(2 v1), g(b) = alpha^t2 beta^(2 v2).
struct TorusType4Params {
  std::int64_t t1 = 0, v1 = 0, t2 = 0, v2 = 0;
};

// Throws Error(unsupported_type) for f of type T2.
std::int64_t coincidence_torus_klein(TorusHomType const& f,
                                     TorusType4Params const& g);

// N(f1, f2) for self-maps of K with fi(a) = alpha^ri, fi(b) = alpha^si
// beta^ti.  Throws Error(unsupported_form) if an a-image has a beta part.
std::int64_t coincidence_klein_klein(SurfaceHom const& f1,
                                     SurfaceHom const& f2);

// N(q, f1) for the double cover q and the first lift factor of a valid
// non-split descriptor.
std::int64_t nielsen_via_coincidence(MapDescriptor const& d);

// The vanishing locus of the closed formula:
//   k1 = 1, k2 = 0, s2 = 1;  k1 = 1, k2 = 1, s2 - s1 = 1;
//   k1 = 0, k2 = 1, n2 = 2 (1 - s2).
bool is_nielsen_zero(MapParams const& p);

struct NielsenReport {
  std::int64_t n_formula = 0;
  std::int64_t n_coincidence = 0;
  bool agree = false;
  NielsenBranch branch = NielsenBranch::a_plain;
  MapClass map_class = MapClass::split;
  bool zero = false;
};

// Full evaluation of a descriptor by both routes.
NielsenReport nielsen_report(MapDescriptor const& d);

}  // namespace kbraid
