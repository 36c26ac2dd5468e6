#include "kbraid/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "kbraid/error.hpp"
#include "kbraid/report.hpp"
#include "kbraid/syntax.hpp"
#include "table.hpp"

namespace kbraid {

namespace {

using detail::Json;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

std::int64_t parse_int(std::string_view s, std::string const& what) {
  std::int64_t value = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw SyntaxError(0, "bad integer \"" + std::string(s) + "\" in " + what);
  }
  return value;
}

Range parse_range(std::string const& text, std::string const& name) {
  std::size_t const colon = text.find(':', 1);
  if (colon == std::string::npos) {
    std::int64_t const v = parse_int(text, "--" + name);
    return {v, v};
  }
  Range r{parse_int(std::string_view(text).substr(0, colon), "--" + name),
          parse_int(std::string_view(text).substr(colon + 1), "--" + name)};
  if (r.lo > r.hi) {
    throw SyntaxError(0, "empty range --" + name + " " + text);
  }
  return r;
}

struct Grid {
  std::string x = "-3:3";
  std::string y = "-3:3";
  std::string z = "-5:5";
  std::string l = "-3:3";
};

void add_grid_options(CLI::App* cmd, Grid& g) {
  cmd->add_option("--x", g.x, "x range, lo:hi")->capture_default_str();
  cmd->add_option("--y", g.y, "y range, lo:hi")->capture_default_str();
  cmd->add_option("--z", g.z, "z range, lo:hi (odd values only)")->capture_default_str();
  cmd->add_option("--l", g.l, "l range, lo:hi (b0-even only)")->capture_default_str();
}

struct Cell {
  std::string family;
  std::int64_t x, y, z;
  std::optional<std::int64_t> l;
  MapDescriptor descriptor;
};

// Grid cells in index order: family, then x, y, z, l.
std::vector<Cell> grid_cells(std::string const& family, Grid const& g) {
  Range const rx = parse_range(g.x, "x");
  Range const ry = parse_range(g.y, "y");
  Range const rz = parse_range(g.z, "z");
  Range const rl = parse_range(g.l, "l");
  std::vector<Cell> cells;
  for (std::string const f : {"b0-even", "b0-odd"}) {
    if (family != "all" && family != f) {
      continue;
    }
    for (std::int64_t x = rx.lo; x <= rx.hi; ++x) {
      for (std::int64_t y = ry.lo; y <= ry.hi; ++y) {
        for (std::int64_t z = rz.lo; z <= rz.hi; ++z) {
          if (!is_odd(z)) {
            continue;
          }
          if (f == "b0-odd") {
            cells.push_back({f, x, y, z, std::nullopt, fixture_b0_odd(x, y, z)});
            continue;
          }
          for (std::int64_t l = rl.lo; l <= rl.hi; ++l) {
            cells.push_back({f, x, y, z, l, fixture_b0_even(x, y, z, l)});
          }
        }
      }
    }
  }
  return cells;
}

std::string cell_name(Cell const& c) {
  std::string name = c.family + "_x" + std::to_string(c.x) + "_y" + std::to_string(c.y)
                     + "_z" + std::to_string(c.z);
  if (c.l) {
    name += "_l" + std::to_string(*c.l);
  }
  return name;
}

Json element_json(BraidElem const& x) {
  Json j;
  j["normal_form"] = print_braid(x);
  j["w"] = x.w.empty() ? "1" : print_word(x.w);
  j["r"] = x.g.m;
  j["s"] = x.g.n;
  j["k"] = x.k;
  j["pure"] = is_pure(x);
  return j;
}

std::string render(Json const& j, bool table) {
  return table ? detail::render_key_value_table(j) : j.dump(2) + '\n';
}

std::string render(ReportDocument const& doc, bool table) {
  return table ? render_table(doc) : render_json(doc);
}

std::string sweep_table(Json const& rows) {
  std::vector<std::string> const columns{"family", "x", "y", "z", "l", "type",
                                         "formula", "coincidence", "agree", "zero"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(columns);
  for (Json const& row : rows) {
    std::vector<std::string> line;
    for (std::string const& c : columns) {
      Json const& v = row.at(c);
      line.push_back(v.is_null() ? "-" : v.is_string() ? v.get<std::string>() : v.dump());
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(columns.size(), 0);
  for (auto const& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::string out;
  for (auto const& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) {
        out += "  ";
      }
      out.append(width[i] - line[i].size(), ' ');
      out += line[i];
    }
    out += '\n';
  }
  return out;
}

int map_exit(ReportDocument const& doc) {
  if (!doc.valid) {
    return exit_invalid_map;
  }
  return doc.split ? exit_split_map : exit_ok;
}

}  // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Arithmetic in the 2-string braid group of the Klein bottle and "
               "Nielsen numbers of 2-valued maps.",
               "kbraid"};
  std::string format;
  app.add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.require_subcommand(1);
  app.fallthrough();

  std::string word_a;
  std::string word_b;
  std::string map_path;

  CLI::App* normalize = app.add_subcommand("normalize", "Print the normal form of a braid word");
  normalize->add_option("word", word_a)->required();

  CLI::App* mul = app.add_subcommand("mul", "Multiply two braid words");
  mul->add_option("left", word_a)->required();
  mul->add_option("right", word_b)->required();

  CLI::App* inv = app.add_subcommand("inv", "Invert a braid word");
  inv->add_option("word", word_a)->required();

  CLI::App* check = app.add_subcommand("check", "Homomorphism test and parameter constraints");
  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a map descriptor");
  CLI::App* lift = app.add_subcommand("lift", "Lift factors and Borsuk-Ulam flags");
  CLI::App* nielsen = app.add_subcommand("nielsen", "Nielsen number by both routes");
  for (CLI::App* cmd : {check, classify_cmd, lift, nielsen}) {
    cmd->add_option("mapfile", map_path)->required();
  }

  std::string family;
  std::string out_dir = ".";
  Grid fixture_grid;
  CLI::App* fixtures = app.add_subcommand("fixtures", "Write descriptor files for a fixture family");
  fixtures->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"b0-even", "b0-odd"}));
  fixtures->add_option("--out", out_dir, "output directory")->capture_default_str();
  add_grid_options(fixtures, fixture_grid);

  std::string sweep_family = "all";
  Grid sweep_grid;
  CLI::App* sweep = app.add_subcommand("sweep", "Nielsen numbers over fixture grids");
  sweep->add_option("--family", sweep_family)
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "b0-even", "b0-odd"}));
  add_grid_options(sweep, sweep_grid);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_syntax;
  }

  bool const table = format.empty() ? app.got_subcommand(sweep) : format == "table";

  try {
    if (app.got_subcommand(normalize) || app.got_subcommand(inv)) {
      BraidElem const x = parse_braid(word_a);
      Json j;
      j["input"] = word_a;
      j["result"] = element_json(app.got_subcommand(inv) ? b_inv(x) : x);
      out << render(j, table);
      return exit_ok;
    }
    if (app.got_subcommand(mul)) {
      BraidElem const x = parse_braid(word_a);
      BraidElem const y = parse_braid(word_b);
      Json j;
      j["left"] = print_braid(x);
      j["right"] = print_braid(y);
      j["result"] = element_json(b_mul(x, y));
      out << render(j, table);
      return exit_ok;
    }

    if (app.got_subcommand(check)) {
      ReportDocument const doc = build_report(read_map_file(map_path), ReportDepth::check);
      out << render(doc, table);
      if (!doc.valid) {
        return exit_invalid_map;
      }
      // A valid map always meets its constraints.
      return doc.constraints && !doc.constraints->ok() ? exit_cross_check : exit_ok;
    }
    if (app.got_subcommand(classify_cmd)) {
      MapDescriptor const d = read_map_file(map_path);
      ValidationReport const v = validate(d);
      Json j;
      j["alpha"] = print_braid(d.alpha_hat);
      j["beta"] = print_braid(d.beta_hat);
      j["valid"] = v.valid();
      j["split"] = v.valid() && v.split();
      j["type"] = v.valid() ? std::string(to_string(v.map_class)) : "invalid";
      out << render(j, table);
      return v.valid() ? exit_ok : exit_invalid_map;
    }
    if (app.got_subcommand(lift)) {
      MapDescriptor const d = read_map_file(map_path);
      ReportDocument const doc = build_report(d, ReportDepth::lift);
      out << render(doc, table);
      if (int const code = map_exit(doc); code != exit_ok) {
        return code;
      }
      // f1 from the braid arithmetic must match the closed form and fail BU.
      SurfaceHom const closed = closed_form_f1(doc.params, classify(d));
      bool const consistent = doc.f1->domain == closed.domain
                              && doc.f1->img_a == closed.img_a
                              && doc.f1->img_b == closed.img_b && doc.f1->bu_fails;
      return consistent ? exit_ok : exit_cross_check;
    }
    if (app.got_subcommand(nielsen)) {
      ReportDocument const doc =
          build_report(read_map_file(map_path), ReportDepth::nielsen);
      out << render(doc, table);
      if (int const code = map_exit(doc); code != exit_ok) {
        return code;
      }
      return doc.nielsen->agree ? exit_ok : exit_cross_check;
    }

    if (app.got_subcommand(fixtures)) {
      std::filesystem::path const dir(out_dir);
      std::filesystem::create_directories(dir);
      Json files = Json::array();
      for (Cell const& c : grid_cells(family, fixture_grid)) {
        std::string const name = cell_name(c) + ".map";
        std::ofstream file(dir / name, std::ios::binary);
        file << format_map_file(c.descriptor, cell_name(c));
        if (!file) {
          err << "error: cannot write " << (dir / name).string() << '\n';
          return exit_syntax;
        }
        files.push_back(name);
      }
      Json j;
      j["family"] = family;
      j["directory"] = dir.string();
      j["count"] = files.size();
      j["files"] = std::move(files);
      out << render(j, table);
      return exit_ok;
    }

    if (app.got_subcommand(sweep)) {
      std::vector<Cell> const cells = grid_cells(sweep_family, sweep_grid);
      Json rows = Json::array();
      std::size_t disagreements = 0;
      for (Cell const& c : cells) {
        NielsenReport const r = nielsen_report(c.descriptor);
        disagreements += r.agree ? 0 : 1;
        Json row;
        row["family"] = c.family;
        row["x"] = c.x;
        row["y"] = c.y;
        row["z"] = c.z;
        row["l"] = c.l ? Json(*c.l) : Json(nullptr);
        row["type"] = std::string(to_string(r.map_class));
        row["formula"] = r.n_formula;
        row["coincidence"] = r.n_coincidence;
        row["agree"] = r.agree;
        row["zero"] = r.zero;
        rows.push_back(std::move(row));
      }
      if (table) {
        out << sweep_table(rows);
        out << cells.size() << " cells, " << disagreements << " disagreements\n";
      } else {
        Json j;
        j["family"] = sweep_family;
        j["cells"] = cells.size();
        j["disagreements"] = disagreements;
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
      }
      return disagreements == 0 ? exit_ok : exit_cross_check;
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::syntax_error:
      case ErrorCode::exponent_overflow:
        return exit_syntax;
      case ErrorCode::invalid_map:
        return exit_invalid_map;
      case ErrorCode::split_map:
        return exit_split_map;
      default:
        return exit_cross_check;
    }
  } catch (std::filesystem::filesystem_error const& e) {
    err << "error: " << e.what() << '\n';
    return exit_syntax;
  }
  return exit_syntax;
}

}  // namespace kbraid
