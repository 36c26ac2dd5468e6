#include "kbraid/report.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "kbraid/error.hpp"
#include "kbraid/syntax.hpp"
#include "table.hpp"

namespace kbraid {

namespace detail {

namespace {

void flatten(Json const& node, std::string const& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (auto const& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    }
    return;
  }
  std::string text;
  if (node.is_string()) {
    text = node.get<std::string>();
  } else if (node.is_array()) {
    bool const scalars = std::none_of(node.begin(), node.end(), [](Json const& e) {
      return e.is_structured();
    });
    if (!scalars) {
      text = node.dump();
    } else if (node.empty()) {
      text = "-";
    } else {
      for (Json const& e : node) {
        if (!text.empty()) {
          text += ", ";
        }
        text += e.is_string() ? e.get<std::string>() : e.dump();
      }
    }
  } else {
    text = node.dump();
  }
  rows.emplace_back(prefix, std::move(text));
}

}  // namespace

std::string render_key_value_table(Json const& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (auto const& row : rows) {
    width = std::max(width, row.first.size());
  }
  std::string out;
  for (auto const& [key, value] : rows) {
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Json;

std::string word_text(FreeWord const& w) {
  return w.empty() ? "1" : print_word(w);
}

FreeWord word_from(std::string const& text) {
  BraidElem const x = parse_braid(text);
  if (x.g != KleinElem{} || x.k != 0) {
    throw SyntaxError(0, "expected a word in a2, b2 but got \"" + text + "\"");
  }
  return x.w;
}

Domain domain_from(std::string const& s) {
  if (s == to_string(Domain::torus)) {
    return Domain::torus;
  }
  if (s == to_string(Domain::klein)) {
    return Domain::klein;
  }
  throw SyntaxError(0, "unknown domain \"" + s + "\"");
}

NielsenBranch branch_from(std::string const& s) {
  for (NielsenBranch b : {NielsenBranch::b0, NielsenBranch::b1,
                          NielsenBranch::a_scaled, NielsenBranch::a_plain}) {
    if (s == to_string(b)) {
      return b;
    }
  }
  throw SyntaxError(0, "unknown branch \"" + s + "\"");
}

Json to_json(HomSection const& h) {
  Json j;
  j["domain"] = std::string(to_string(h.domain));
  j["img_a"] = Json::array({h.img_a.m, h.img_a.n});
  j["img_b"] = Json::array({h.img_b.m, h.img_b.n});
  j["bu_fails"] = h.bu_fails;
  return j;
}

HomSection hom_from(Json const& j) {
  HomSection h;
  h.domain = domain_from(j.at("domain").get<std::string>());
  h.img_a = {j.at("img_a").at(0).get<std::int64_t>(),
             j.at("img_a").at(1).get<std::int64_t>()};
  h.img_b = {j.at("img_b").at(0).get<std::int64_t>(),
             j.at("img_b").at(1).get<std::int64_t>()};
  h.bu_fails = j.at("bu_fails").get<bool>();
  return h;
}

HomSection hom_section(SurfaceHom const& h) {
  return {h.domain, h.img_a, h.img_b, bu_fails(h)};
}

Json to_json(ReportDocument const& doc) {
  Json j;
  j["alpha"] = doc.alpha;
  j["beta"] = doc.beta;
  j["relation_lhs"] = doc.relation_lhs;
  j["valid"] = doc.valid;
  j["split"] = doc.split;
  j["type"] = doc.type;

  MapParams const& p = doc.params;
  Json& params = j["params"];
  params["w1"] = word_text(p.w1);
  params["w2"] = word_text(p.w2);
  params["r1"] = p.r1;
  params["s1"] = p.s1;
  params["r2"] = p.r2;
  params["s2"] = p.s2;
  params["k1"] = p.k1;
  params["k2"] = p.k2;
  params["m1"] = p.m1;
  params["n1"] = p.n1;
  params["m2"] = p.m2;
  params["n2"] = p.n2;

  if (doc.constraints) {
    j["constraints"]["satisfied"] = doc.constraints->satisfied;
    j["constraints"]["violated"] = doc.constraints->violated;
  }
  if (doc.f1) {
    j["f1"] = to_json(*doc.f1);
  }
  if (doc.f2) {
    j["f2"] = to_json(*doc.f2);
  }
  if (doc.nielsen) {
    NielsenSection const& n = *doc.nielsen;
    Json& section = j["nielsen"];
    section["formula"] = n.formula;
    section["coincidence"] = n.coincidence;
    section["agree"] = n.agree;
    section["branch"] = std::string(to_string(n.branch));
    section["zero"] = n.zero;
  }
  return j;
}

ReportDocument from_json(Json const& j) {
  ReportDocument doc;
  doc.alpha = j.at("alpha").get<std::string>();
  doc.beta = j.at("beta").get<std::string>();
  doc.relation_lhs = j.at("relation_lhs").get<std::string>();
  doc.valid = j.at("valid").get<bool>();
  doc.split = j.at("split").get<bool>();
  doc.type = j.at("type").get<std::string>();
  if (doc.type != "invalid" && doc.type != to_string(MapClass::split)
      && doc.type != to_string(MapClass::type_a) && doc.type != to_string(MapClass::type_b0)
      && doc.type != to_string(MapClass::type_b1)) {
    throw SyntaxError(0, "unknown map type \"" + doc.type + "\"");
  }

  Json const& params = j.at("params");
  MapParams& p = doc.params;
  p.w1 = word_from(params.at("w1").get<std::string>());
  p.w2 = word_from(params.at("w2").get<std::string>());
  p.r1 = params.at("r1").get<std::int64_t>();
  p.s1 = params.at("s1").get<std::int64_t>();
  p.r2 = params.at("r2").get<std::int64_t>();
  p.s2 = params.at("s2").get<std::int64_t>();
  p.k1 = params.at("k1").get<int>();
  p.k2 = params.at("k2").get<int>();
  p.m1 = params.at("m1").get<std::int64_t>();
  p.n1 = params.at("n1").get<std::int64_t>();
  p.m2 = params.at("m2").get<std::int64_t>();
  p.n2 = params.at("n2").get<std::int64_t>();

  if (j.contains("constraints")) {
    ConstraintReport c;
    c.satisfied = j["constraints"].at("satisfied").get<std::vector<std::string>>();
    c.violated = j["constraints"].at("violated").get<std::vector<std::string>>();
    doc.constraints = std::move(c);
  }
  if (j.contains("f1")) {
    doc.f1 = hom_from(j["f1"]);
  }
  if (j.contains("f2")) {
    doc.f2 = hom_from(j["f2"]);
  }
  if (j.contains("nielsen")) {
    Json const& s = j["nielsen"];
    doc.nielsen = NielsenSection{s.at("formula").get<std::int64_t>(),
                                 s.at("coincidence").get<std::int64_t>(),
                                 s.at("agree").get<bool>(),
                                 branch_from(s.at("branch").get<std::string>()),
                                 s.at("zero").get<bool>()};
  }
  return doc;
}

}  // namespace

ReportDocument build_report(MapDescriptor const& d, ReportDepth depth) {
  ReportDocument doc;
  doc.alpha = print_braid(d.alpha_hat);
  doc.beta = print_braid(d.beta_hat);
  ValidationReport const v = validate(d);
  doc.relation_lhs = print_braid(v.relation_lhs);
  doc.valid = v.valid();
  doc.split = v.valid() && v.split();
  doc.type = v.valid() ? std::string(to_string(v.map_class)) : "invalid";
  doc.params = extract_params(d);
  if (!doc.valid || doc.split) {
    return doc;
  }

  doc.constraints = check_constraints(doc.params, v.map_class);
  if (depth == ReportDepth::check) {
    return doc;
  }

  LiftFactors const f = lift_factors(d);
  doc.f1 = hom_section(f.f1);
  doc.f2 = hom_section(f.f2);
  if (depth == ReportDepth::lift) {
    return doc;
  }

  NielsenReport const r = nielsen_report(d);
  doc.nielsen = NielsenSection{r.n_formula, r.n_coincidence, r.agree, r.branch, r.zero};
  return doc;
}

std::string render_json(ReportDocument const& doc) {
  return to_json(doc).dump(2) + '\n';
}

ReportDocument parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (Json::parse_error const& e) {
    throw SyntaxError(e.byte > 0 ? e.byte - 1 : 0, "malformed report document");
  }
  try {
    return from_json(j);
  } catch (Json::exception const& e) {
    throw SyntaxError(0, std::string("incomplete report document: ") + e.what());
  }
}

std::string render_table(ReportDocument const& doc) {
  return detail::render_key_value_table(to_json(doc));
}

}  // namespace kbraid
