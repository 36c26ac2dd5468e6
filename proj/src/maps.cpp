#include "kbraid/maps.hpp"

#include "kbraid/error.hpp"

namespace kbraid {

std::string_view to_string(MapClass c) noexcept {
  switch (c) {
    case MapClass::split: return "split";
    case MapClass::type_a: return "A";
    case MapClass::type_b0: return "B0";
    case MapClass::type_b1: return "B1";
  }
  return "?";
}

bool is_homomorphism(MapDescriptor const& d) {
  return validate(d).homomorphism;
}

MapClass class_of(int k1, int k2) noexcept {
  if (k1 == 0) {
    return k2 == 0 ? MapClass::split : MapClass::type_a;
  }
  return k2 == 0 ? MapClass::type_b0 : MapClass::type_b1;
}

ValidationReport validate(MapDescriptor const& d) {
  ValidationReport report;
  report.relation_lhs = b_mul(b_mul(d.alpha_hat, d.beta_hat), d.alpha_hat);
  report.homomorphism = report.relation_lhs == d.beta_hat;
  report.map_class = class_of(d.alpha_hat.k, d.beta_hat.k);
  return report;
}

MapClass classify(MapDescriptor const& d) {
  ValidationReport const report = validate(d);
  if (!report.valid()) {
    throw Error(ErrorCode::invalid_map,
                "alpha_hat beta_hat alpha_hat != beta_hat");
  }
  return report.map_class;
}

MapParams extract_params(MapDescriptor const& d) {
  MapParams p;
  p.w1 = d.alpha_hat.w;
  p.w2 = d.beta_hat.w;
  p.r1 = d.alpha_hat.g.m;
  p.s1 = d.alpha_hat.g.n;
  p.r2 = d.beta_hat.g.m;
  p.s2 = d.beta_hat.g.n;
  p.k1 = d.alpha_hat.k;
  p.k2 = d.beta_hat.k;
  KleinElem const pr_w1 = eval_word(p.w1);
  KleinElem const pr_w2 = eval_word(p.w2);
  p.m1 = pr_w1.m;
  p.n1 = pr_w1.n;
  p.m2 = pr_w2.m;
  p.n2 = pr_w2.n;
  return p;
}

namespace {

void require_odd(std::int64_t z) {
  if (!is_odd(z)) {
    throw Error(ErrorCode::bad_parity,
                "z = " + std::to_string(z) + " must be odd");
  }
}

}  // namespace

MapDescriptor fixture_b0_even(std::int64_t x,
                              std::int64_t y,
                              std::int64_t z,
                              std::int64_t l) {
  require_odd(z);
  FreeWord const& c = braid::sigma_square_word();
  return {BraidElem{c, {x, 0}, 1}, BraidElem{power(c, l), {y, z}, 0}};
}

MapDescriptor fixture_b0_odd(std::int64_t x, std::int64_t y, std::int64_t z) {
  require_odd(z);
  FreeWord const a2_inv{kA2Inv};
  return {BraidElem{a2_inv, {x + 1, 0}, 1}, BraidElem{a2_inv, {y, z}, 0}};
}

}  // namespace kbraid
