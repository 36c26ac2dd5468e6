#include "kbraid/syntax.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "kbraid/error.hpp"

namespace kbraid {

namespace {

enum class Gen { a1, b1, a2, b2, s };

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// sigma^e = c^q sigma^r with e = 2q + r, r in {0, 1}.
BraidElem sigma_power(std::int64_t e) {
  std::int64_t const r = ((e % 2) + 2) % 2;
  std::int64_t const q = (e - r) / 2;
  return {power(braid::sigma_square_word(), q), {}, static_cast<int>(r)};
}

BraidElem generator_power(Gen g, std::int64_t e) {
  switch (g) {
    case Gen::a1: return {{}, {e, 0}, 0};
    case Gen::b1: return {{}, {0, e}, 0};
    case Gen::a2: return {FreeWord::generator(Symbol::a2, e), {}, 0};
    case Gen::b2: return {FreeWord::generator(Symbol::b2, e), {}, 0};
    case Gen::s: return sigma_power(e);
  }
  return braid::identity();
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : _text(text) {}

  BraidElem parse() {
    skip_space();
    if (at_end()) {
      throw SyntaxError(_pos, "empty braid word");
    }
    if (_text[_pos] == '1') {
      ++_pos;
      skip_space();
      if (!at_end()) {
        throw SyntaxError(_pos, "\"1\" must stand alone");
      }
      return braid::identity();
    }
    BraidElem result = braid::identity();
    while (!at_end()) {
      result = b_mul(result, term());
      skip_space();
    }
    return result;
  }

 private:
  BraidElem term() {
    std::size_t const start = _pos;
    char const c = _text[_pos];
    bool const inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    char const lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Gen gen;
    if (lower == 's') {
      gen = Gen::s;
      ++_pos;
    } else if ((lower == 'a' || lower == 'b') && _pos + 1 < _text.size()
               && (_text[_pos + 1] == '1' || _text[_pos + 1] == '2')) {
      bool const first = _text[_pos + 1] == '1';
      gen = lower == 'a' ? (first ? Gen::a1 : Gen::a2) : (first ? Gen::b1 : Gen::b2);
      _pos += 2;
    } else {
      throw SyntaxError(start, "expected a generator (a1, b1, a2, b2, s)");
    }

    std::int64_t e = 1;
    std::size_t const after_gen = _pos;
    skip_space();
    if (!at_end() && _text[_pos] == '^') {
      ++_pos;
      skip_space();
      e = exponent();
    } else {
      _pos = after_gen;
    }
    return generator_power(gen, inverse ? -e : e);
  }

  std::int64_t exponent() {
    std::size_t const start = _pos;
    std::size_t end = _pos;
    if (end < _text.size() && (_text[end] == '-' || _text[end] == '+')) {
      ++end;
    }
    std::size_t const digits = end;
    while (end < _text.size() && std::isdigit(static_cast<unsigned char>(_text[end]))) {
      ++end;
    }
    if (end == digits) {
      throw SyntaxError(start, "expected an integer exponent");
    }
    // from_chars rejects a leading '+'.
    std::size_t const from = _text[start] == '+' ? start + 1 : start;
    std::int64_t value = 0;
    auto const [ptr, ec] = std::from_chars(_text.data() + from, _text.data() + end, value);
    if (ec == std::errc::result_out_of_range || value > kMaxExponent
        || value < -kMaxExponent) {
      throw Error(ErrorCode::exponent_overflow,
                  "exponent " + std::string(_text.substr(start, end - start))
                      + " at position " + std::to_string(start)
                      + " exceeds " + std::to_string(kMaxExponent));
    }
    if (ec != std::errc() || ptr != _text.data() + end) {
      throw SyntaxError(start, "malformed exponent");
    }
    _pos = end;
    return value;
  }

  void skip_space() {
    while (!at_end() && is_space(_text[_pos])) {
      ++_pos;
    }
  }

  bool at_end() const { return _pos >= _text.size(); }

  std::string_view _text;
  std::size_t _pos = 0;
};

void append_power(std::string& out, std::string_view gen, std::int64_t e) {
  if (e == 0) {
    return;
  }
  if (!out.empty()) {
    out += ' ';
  }
  out += gen;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

BraidElem parse_braid(std::string_view text) {
  return WordParser(text).parse();
}

std::string print_word(FreeWord const& w) {
  std::string out;
  auto const letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    bool const a = letters[i].symbol == Symbol::a2;
    std::string_view const gen =
        letters[i].sign > 0 ? (a ? "a2" : "b2") : (a ? "A2" : "B2");
    append_power(out, gen, static_cast<std::int64_t>(j - i));
    i = j;
  }
  return out;
}

std::string print_braid(BraidElem const& x) {
  std::string out = print_word(x.w);
  append_power(out, "a1", x.g.m);
  append_power(out, "b1", x.g.n);
  append_power(out, "s", x.k);
  return out.empty() ? "1" : out;
}

MapDescriptor parse_map_text(std::string_view text) {
  std::optional<BraidElem> alpha;
  std::optional<BraidElem> beta;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) {
      line_end = text.size();
    }
    std::string_view const line = text.substr(line_start, line_end - line_start);
    std::string_view const content = trim(line);
    if (!content.empty() && content.front() != '#') {
      std::size_t const offset =
          line_start + static_cast<std::size_t>(content.data() - line.data());
      std::size_t const eq = content.find('=');
      if (eq == std::string_view::npos) {
        throw SyntaxError(offset, "expected \"alpha = <word>\" or \"beta = <word>\"");
      }
      std::string_view const key = trim(content.substr(0, eq));
      std::string_view const rhs = content.substr(eq + 1);
      std::size_t const rhs_offset = offset + eq + 1;
      std::optional<BraidElem>* slot = nullptr;
      if (key == "alpha") {
        slot = &alpha;
      } else if (key == "beta") {
        slot = &beta;
      } else {
        throw SyntaxError(offset, "unknown key \"" + std::string(key) + "\"");
      }
      if (slot->has_value()) {
        throw SyntaxError(offset, "duplicate key \"" + std::string(key) + "\"");
      }
      try {
        *slot = parse_braid(rhs);
      } catch (SyntaxError const& e) {
        throw SyntaxError(rhs_offset + e.position(),
                          "in " + std::string(key) + ": bad braid word");
      }
    }
    line_start = line_end + 1;
  }
  if (!alpha) {
    throw SyntaxError(text.size(), "missing \"alpha = <word>\"");
  }
  if (!beta) {
    throw SyntaxError(text.size(), "missing \"beta = <word>\"");
  }
  return {*alpha, *beta};
}

MapDescriptor read_map_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SyntaxError(0, "cannot open map file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_map_text(buffer.str());
}

std::string format_map_file(MapDescriptor const& d, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += "alpha = " + print_braid(d.alpha_hat) + '\n';
  out += "beta = " + print_braid(d.beta_hat) + '\n';
  return out;
}

}  // namespace kbraid
