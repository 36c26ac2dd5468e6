#include "kbraid/nielsen.hpp"

#include <algorithm>
#include <cstdlib>

#include "kbraid/error.hpp"

namespace kbraid {

std::string_view to_string(NielsenBranch b) noexcept {
  switch (b) {
    case NielsenBranch::b0: return "B0";
    case NielsenBranch::b1: return "B1";
    case NielsenBranch::a_scaled: return "A-scaled";
    case NielsenBranch::a_plain: return "A";
  }
  return "?";
}

NielsenFormula nielsen_formula(MapParams const& p) {
  if (p.k1 == 0 && p.k2 == 0) {
    throw Error(ErrorCode::split_map, "Nielsen formula needs a non-split map");
  }
  if (p.k1 == 1) {
    std::int64_t const scale =
        std::max<std::int64_t>(std::llabs((1 + sign_pow(p.s1)) * p.r1 + p.m1), 2);
    if (p.k2 == 0) {
      return {std::llabs(1 - p.s2) * scale, NielsenBranch::b0};
    }
    return {std::llabs(1 - p.s2 + p.s1) * scale, NielsenBranch::b1};
  }
  std::int64_t const base = std::llabs(2 * p.s2 + p.n2 - 2);
  if (!is_odd(p.s1) && !is_odd(p.n2) && p.r1 != 0) {
    return {std::llabs(p.r1) * base, NielsenBranch::a_scaled};
  }
  return {base, NielsenBranch::a_plain};
}

std::int64_t coincidence_torus_klein(TorusHomType const& f,
                                     TorusType4Params const& g) {
  switch (f.tag) {
    case TorusType::t1:
      return std::llabs(g.t1 * (2 * g.v2 - 2 * f.s2)
                        - g.t2 * (2 * g.v1 - 2 * f.s1 - 1));
    case TorusType::t3:
      return std::llabs(g.t1 * (2 * g.v2 - 2 * f.s2 - 1)
                        - g.t2 * (2 * g.v1 - 2 * f.s1));
    case TorusType::t4:
      return std::llabs((f.r1 - g.t1) * (f.s2 - g.v2)
                        - (f.r2 - g.t2) * (f.s1 - g.v1))
             + std::llabs((f.r1 + g.t1) * (f.s2 - g.v2)
                          - (f.r2 + g.t2) * (f.s1 - g.v1));
    case TorusType::t2: break;
  }
  throw Error(ErrorCode::unsupported_type,
              "no coincidence formula for type T2 against type T4");
}

std::int64_t coincidence_klein_klein(SurfaceHom const& f1,
                                     SurfaceHom const& f2) {
  if (f1.img_a.n != 0 || f2.img_a.n != 0) {
    throw Error(ErrorCode::unsupported_form,
                "both maps must send a to a power of alpha");
  }
  return std::llabs(f1.img_b.n - f2.img_b.n)
         * std::max(std::llabs(f1.img_a.m), std::llabs(f2.img_a.m));
}

std::int64_t nielsen_via_coincidence(MapDescriptor const& d) {
  LiftFactors const factors = lift_factors(d);
  MapClass const c = class_of(d.alpha_hat.k, d.beta_hat.k);
  SurfaceHom const q = covering_hom(c);
  if (c == MapClass::type_a) {
    // q_A is of type 4: a -> alpha^1 beta^0, b -> alpha^0 beta^2.
    TorusType4Params const g{q.img_a.m, q.img_a.n / 2, q.img_b.m,
                             q.img_b.n / 2};
    return coincidence_torus_klein(classify_torus_hom(factors.f1), g);
  }
  return coincidence_klein_klein(factors.f1, q);
}

bool is_nielsen_zero(MapParams const& p) {
  if (p.k1 == 0 && p.k2 == 0) {
    throw Error(ErrorCode::split_map, "Nielsen zero test needs a non-split map");
  }
  return (p.k1 == 1 && p.k2 == 0 && p.s2 == 1)
         || (p.k1 == 1 && p.k2 == 1 && p.s2 - p.s1 == 1)
         || (p.k1 == 0 && p.k2 == 1 && p.n2 == 2 * (1 - p.s2));
}

NielsenReport nielsen_report(MapDescriptor const& d) {
  NielsenReport report;
  report.map_class = classify(d);
  MapParams const p = extract_params(d);
  NielsenFormula const formula = nielsen_formula(p);
  report.n_formula = formula.value;
  report.branch = formula.branch;
  report.n_coincidence = nielsen_via_coincidence(d);
  report.agree = report.n_formula == report.n_coincidence;
  report.zero = is_nielsen_zero(p);
  return report;
}

}  // namespace kbraid
