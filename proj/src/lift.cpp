#include "kbraid/lift.hpp"

#include <optional>

#include "kbraid/error.hpp"

namespace kbraid {

std::string_view to_string(Domain d) noexcept {
  return d == Domain::torus ? "torus" : "klein";
}

std::string_view to_string(TorusType t) noexcept {
  switch (t) {
    case TorusType::t1: return "T1";
    case TorusType::t2: return "T2";
    case TorusType::t3: return "T3";
    case TorusType::t4: return "T4";
  }
  return "?";
}

bool SurfaceHom::respects_relation() const noexcept {
  if (domain == Domain::torus) {
    return k_mul(img_a, img_b) == k_mul(img_b, img_a);
  }
  return k_mul(k_mul(img_a, img_b), img_a) == img_b;
}

SurfaceHom covering_hom(MapClass c) {
  switch (c) {
    case MapClass::type_a: return {Domain::torus, {1, 0}, {0, 2}};
    case MapClass::type_b0: return {Domain::klein, {2, 0}, {0, 1}};
    case MapClass::type_b1: return {Domain::klein, {2, 0}, {1, 1}};
    case MapClass::split: break;
  }
  throw Error(ErrorCode::split_map, "split maps have no double cover");
}

namespace {

MapClass require_nonsplit(MapDescriptor const& d) {
  ValidationReport const report = validate(d);
  if (!report.valid()) {
    throw Error(ErrorCode::invalid_map,
                "alpha_hat beta_hat alpha_hat != beta_hat");
  }
  if (report.split()) {
    throw Error(ErrorCode::split_map, "both generators map to pure braids");
  }
  return report.map_class;
}

}  // namespace

LiftImages lift_images(MapDescriptor const& d) {
  switch (require_nonsplit(d)) {
    case MapClass::type_a:
      return {d.alpha_hat, b_pow(d.beta_hat, 2)};
    case MapClass::type_b0:
      return {b_pow(d.alpha_hat, 2), d.beta_hat};
    case MapClass::type_b1:
      return {b_pow(d.alpha_hat, 2), b_mul(d.alpha_hat, d.beta_hat)};
    case MapClass::split: break;
  }
  throw Error(ErrorCode::split_map, "unreachable");
}

LiftFactors lift_factors(MapDescriptor const& d) {
  LiftImages const images = lift_images(d);
  Domain const domain =
      d.alpha_hat.k == 0 ? Domain::torus : Domain::klein;
  return {{domain, pr1(images.a), pr1(images.b)},
          {domain, pr2(images.a), pr2(images.b)}};
}

SurfaceHom closed_form_f1(MapParams const& p, MapClass c) {
  switch (c) {
    case MapClass::type_a:
      return {Domain::torus,
              {p.r1, p.s1},
              {sign_pow(p.s2) * p.m2 + (1 + sign_pow(p.n2 + p.s2)) * p.r2,
               2 * p.s2 + p.n2}};
    case MapClass::type_b0:
      return {Domain::klein,
              {sign_pow(p.s1) * p.m1 + (1 + sign_pow(p.s1)) * p.r1, 0},
              {p.r2, p.s2}};
    case MapClass::type_b1:
      return {Domain::klein,
              {(1 + sign_pow(p.s1)) * p.r1 + sign_pow(p.s1) * p.m1, 0},
              {p.r1 + sign_pow(p.s1) * p.m2 + sign_pow(p.s1) * p.r2,
               p.s2 - p.s1}};
    case MapClass::split: break;
  }
  throw Error(ErrorCode::split_map, "no lift factor for split maps");
}

namespace {

// coeff * k == rhs, for an unknown integer k.
struct LinearInK {
  std::int64_t coeff;
  std::int64_t rhs;
};

// Whether a single integer k satisfies every equation.
bool solvable(std::vector<LinearInK> const& eqs) {
  std::optional<std::int64_t> k;
  for (auto const& [coeff, rhs] : eqs) {
    if (coeff == 0) {
      if (rhs != 0) {
        return false;
      }
      continue;
    }
    if (rhs % coeff != 0) {
      return false;
    }
    std::int64_t const candidate = rhs / coeff;
    if (k && *k != candidate) {
      return false;
    }
    k = candidate;
  }
  return true;
}

template <typename Equations>
bool exists_k_l(Equations const& equations_for_l) {
  for (std::int64_t l = 0; l <= 1; ++l) {
    if (solvable(equations_for_l(l))) {
      return true;
    }
  }
  return false;
}

void record(ConstraintReport& report, bool holds, std::string name) {
  (holds ? report.satisfied : report.violated).push_back(std::move(name));
}

}  // namespace

ConstraintReport check_constraints(MapParams const& p, MapClass c) {
  ConstraintReport report;
  auto const sg = sign_pow;
  switch (c) {
    case MapClass::type_a: {
      record(report, p.n1 == -2 * p.s1, "n1 = -2*s1");
      bool const feasible = exists_k_l([&](std::int64_t l) {
        // m1 = -(1 + (-1)^(l+s1)) r1 + (1 - (-1)^s1) k, from
        // f2(a) = X f1(a)^-1 X^-1 with X = a2^k b2^l.
        LinearInK const m1{1 - sg(p.s1), p.m1 + (1 + sg(l + p.s1)) * p.r1};
        // (1 - (-1)^(l+s2)) m2
        //   = ((-1)^l (1 + (-1)^(s2+n2)) - (-1)^n2 (1 + (-1)^s2)) r2
        //     + (1 - (-1)^n2) k
        std::int64_t const r2_coeff = sg(l) * (1 + sg(p.s2 + p.n2))
                                      - sg(p.n2) * (1 + sg(p.s2));
        LinearInK const m2{1 - sg(p.n2),
                           (1 - sg(l + p.s2)) * p.m2 - r2_coeff * p.r2};
        return std::vector<LinearInK>{m1, m2};
      });
      record(report, feasible, "exists k,l: m1/m2 basepoint equations (A)");
      break;
    }
    case MapClass::type_b0: {
      record(report, is_odd(p.s2), "s2 odd");
      record(report, p.n1 == -2 * p.s1, "n1 = -2*s1");
      record(report, p.n2 == 0, "n2 = 0");
      bool const feasible = exists_k_l([&](std::int64_t l) {
        // (1 - (-1)^(s1+l)) m1 = ((-1)^l - 1)(1 + (-1)^s1) r1
        LinearInK const m1{0, (1 - sg(p.s1 + l)) * p.m1
                                  - (sg(l) - 1) * (1 + sg(p.s1)) * p.r1};
        // m2 = -(-1)^(s1+l) m1 - (-1)^l (1 + (-1)^s1) r1 + 2k
        LinearInK const m2{2, p.m2 + sg(p.s1 + l) * p.m1
                                  + sg(l) * (1 + sg(p.s1)) * p.r1};
        return std::vector<LinearInK>{m1, m2};
      });
      record(report, feasible, "exists k,l: m1/m2 basepoint equations (B0)");
      break;
    }
    case MapClass::type_b1: {
      record(report, is_odd(p.s2 - p.s1), "s2 - s1 odd");
      record(report, p.n1 == -2 * p.s1, "n1 = -2*s1");
      record(report, p.n2 == -2 * p.s1, "n2 = -2*s1");
      bool const feasible = exists_k_l([&](std::int64_t l) {
        LinearInK const m1{0, (1 - sg(p.s1 + l)) * p.m1
                                  - (sg(l) - 1) * (1 + sg(p.s1)) * p.r1};
        // m2 = ((-1)^(s1+l) + 1) m1 + ((-1)^(s1+l) + 1) r1
        //      + ((-1)^l - 1) r2 - 2 (-1)^l k
        LinearInK const m2{-2 * sg(l),
                           p.m2 - (sg(p.s1 + l) + 1) * p.m1
                               - (sg(p.s1 + l) + 1) * p.r1
                               - (sg(l) - 1) * p.r2};
        return std::vector<LinearInK>{m1, m2};
      });
      record(report, feasible, "exists k,l: m1/m2 basepoint equations (B1)");
      break;
    }
    case MapClass::split:
      record(report, false, "non-split (k1, k2) != (0, 0)");
      break;
  }
  return report;
}

TorusHomType classify_torus_hom(SurfaceHom const& h) {
  KleinElem const a = h.img_a;
  KleinElem const b = h.img_b;
  if (is_odd(a.n)) {
    if (!is_odd(b.n) && b.m == 0) {
      return {TorusType::t1, a.m, (a.n - 1) / 2, 0, b.n / 2};
    }
    if (is_odd(b.n) && a.m == b.m) {
      return {TorusType::t2, a.m, (a.n - 1) / 2, 0, (b.n - 1) / 2};
    }
  } else {
    if (is_odd(b.n) && a.m == 0) {
      return {TorusType::t3, 0, a.n / 2, b.m, (b.n - 1) / 2};
    }
    if (!is_odd(b.n)) {
      return {TorusType::t4, a.m, a.n / 2, b.m, b.n / 2};
    }
  }
  throw Error(ErrorCode::unclassifiable,
              "generator images match none of the four torus forms");
}

bool bu_fails_torus(TorusHomType const& t) {
  switch (t.tag) {
    case TorusType::t1: return is_odd(t.s2);
    case TorusType::t2: return false;
    case TorusType::t3: return t.s1 == 0;
    case TorusType::t4:
      return (t.s1 == 0 && (t.s2 != 0 || t.r1 == 0 || is_odd(t.r2)))
             || (t.r2 == 0 && t.s2 != 0)
             || (t.r1 == 0 && t.r2 == 0 && t.s1 == 0 && t.s2 == 0);
  }
  return false;
}

bool bu_fails_klein(SurfaceHom const& h) {
  return h.img_a.n == 0 && is_odd(h.img_b.n);
}

bool bu_fails(SurfaceHom const& h) {
  if (h.domain == Domain::klein) {
    return bu_fails_klein(h);
  }
  return bu_fails_torus(classify_torus_hom(h));
}

}  // namespace kbraid
