#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kbraid/lift.hpp"
#include "kbraid/maps.hpp"
#include "kbraid/nielsen.hpp"

namespace kbraid {

struct HomSection {
  Domain domain = Domain::torus;
  KleinElem img_a;
  KleinElem img_b;
  bool bu_fails = false;
  friend bool operator==(HomSection const&, HomSection const&) = default;
};

struct NielsenSection {
  std::int64_t formula = 0;
  std::int64_t coincidence = 0;
  bool agree = false;
  NielsenBranch branch = NielsenBranch::a_plain;
  bool zero = false;
  friend bool operator==(NielsenSection const&, NielsenSection const&) = default;
};

// Everything the map commands report about one descriptor.  Sections past
// the point where evaluation stopped are left empty: an invalid map has no
// constraints, a split map has no lift factors.
struct ReportDocument {
  std::string alpha;
  std::string beta;
  std::string relation_lhs;  // alpha beta alpha, to compare against beta
  bool valid = false;
  bool split = false;
  std::string type;  // "A", "B0", "B1", "split" or "invalid"
  MapParams params;
  std::optional<ConstraintReport> constraints;
  std::optional<HomSection> f1;
  std::optional<HomSection> f2;
  std::optional<NielsenSection> nielsen;
  friend bool operator==(ReportDocument const&, ReportDocument const&) = default;
};

enum class ReportDepth { check, lift, nielsen };

// Evaluates `d` up to `depth`.  Invalid and split maps never throw here;
// the caller decides what they mean.
ReportDocument build_report(MapDescriptor const& d, ReportDepth depth);

// Pretty-printed JSON with a fixed key order, so equal documents render to
// identical bytes.
std::string render_json(ReportDocument const& doc);

// Inverse of render_json.  Throws SyntaxError on malformed input.
ReportDocument parse_report(std::string_view text);

// Two-column "key  value" rendering with dotted keys.
std::string render_table(ReportDocument const& doc);

}  // namespace kbraid
