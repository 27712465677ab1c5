#include "addcomb/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::cli {

namespace {

struct Token {
  std::string_view text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) {
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '\n') {
        ++line;
        col = 1;
        ++i;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++col;
        ++i;
      } else {
        const std::size_t start = i;
        const int c0 = col;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n') {
          ++i;
          ++col;
        }
        tokens_.push_back({text.substr(start, i - start), line, c0});
        end_line_ = line;
        end_col_ = col;
      }
    }
  }

  bool done() const { return pos_ == tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  Token next(std::string_view what) {
    if (done()) throw FormatError("expected " + std::string(what) + ", got end of file", end_line_, end_col_);
    return tokens_[pos_++];
  }

  void expect_end() const {
    if (!done()) throw FormatError("unexpected trailing token '" + std::string(peek().text) + "'", peek().line,
                                   peek().column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int end_line_ = 1, end_col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw FormatError(msg, t.line, t.column); }

std::int64_t to_int(const Token& t, std::int64_t lo, std::string_view what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    fail(t, "expected integer " + std::string(what) + ", got '" + std::string(t.text) + "'");
  if (v < lo) fail(t, std::string(what) + " must be >= " + std::to_string(lo));
  return v;
}

core::Rational to_rational(const Token& t, std::string_view what) {
  try {
    return core::parse_rational(t.text);
  } catch (const std::exception&) {
    fail(t, "expected rational " + std::string(what) + ", got '" + std::string(t.text) + "'");
  }
}

bool looks_decimal(std::string_view s) { return s.find_first_of(".eEnN") != std::string_view::npos; }

std::string join_ints(auto&& values) {
  std::string out;
  bool first = true;
  for (auto v : values) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

colorings::Coloring parse_coloring(std::string_view text) {
  Lexer lx(text);
  const Token kw = lx.next("'ambient'");
  if (kw.text != "ambient") fail(kw, "expected 'ambient'");
  const Token amb = lx.next("cyclic|interval");
  colorings::Ambient ambient;
  if (amb.text == "cyclic") ambient = colorings::Ambient::cyclic;
  else if (amb.text == "interval") ambient = colorings::Ambient::interval;
  else fail(amb, "expected cyclic or interval, got '" + std::string(amb.text) + "'");
  const Token tn = lx.next("N");
  const std::int64_t N = to_int(tn, 1, "N");
  const Token tr = lx.next("r");
  const std::int64_t r = to_int(tr, 1, "r");

  std::vector<std::int32_t> colors;
  colors.reserve(static_cast<std::size_t>(N));
  Token first{};
  if (r <= 35) {
    while (static_cast<std::int64_t>(colors.size()) < N) {
      const Token t = lx.next("color digits");
      if (colors.empty()) first = t;
      for (std::size_t i = 0; i < t.text.size(); ++i) {
        const char ch = t.text[i];
        int v = -1;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'z') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'Z') v = ch - 'A' + 10;
        const Token at{t.text.substr(i, 1), t.line, t.column + static_cast<int>(i)};
        if (v < 1 || v > r) fail(at, "color digit '" + std::string(1, ch) + "' outside 1.." + std::to_string(r));
        if (static_cast<std::int64_t>(colors.size()) == N) fail(at, "more than N = " + std::to_string(N) + " colors");
        colors.push_back(v);
      }
    }
  } else {
    for (std::int64_t i = 0; i < N; ++i) {
      const Token t = lx.next("color id");
      if (i == 0) first = t;
      const auto v = to_int(t, 1, "color id");
      if (v > r) fail(t, "color id outside 1.." + std::to_string(r));
      colors.push_back(static_cast<std::int32_t>(v));
    }
  }
  lx.expect_end();
  try {
    colorings::Coloring c(ambient, std::move(colors));
    if (c.r() != r) fail(tr, "header says r = " + std::to_string(r) + " but " + std::to_string(c.r()) + " colors occur");
    return c;
  } catch (const InvalidArgument& e) {
    fail(first, e.what());
  }
}

std::string format_coloring(const colorings::Coloring& c) {
  std::string out = "ambient " + std::string(colorings::ambient_name(c.ambient())) + "\n";
  out += std::to_string(c.size()) + " " + std::to_string(c.r()) + "\n";
  out += c.r() <= 35 ? c.to_digits() : join_ints(c.colors());
  out += "\n";
  return out;
}

sets::ResidueSet parse_residue_set(std::string_view text) {
  Lexer lx(text);
  const Token tm = lx.next("m");
  const std::int64_t m = to_int(tm, 1, "m");
  const Token tr = lx.next("r");
  const std::int64_t r = to_int(tr, 0, "r");
  std::vector<std::int64_t> elems;
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t i = 0; i < r; ++i) {
    const Token t = lx.next("residue");
    const auto v = to_int(t, 0, "residue");
    if (v >= m) fail(t, "residue outside 0..m-1");
    if (!seen.insert(v).second) fail(t, "duplicate residue " + std::to_string(v));
    elems.push_back(v);
  }
  lx.expect_end();
  return sets::ResidueSet(m, std::move(elems));
}

std::string format_residue_set(const sets::ResidueSet& s) {
  return std::to_string(s.modulus()) + " " + std::to_string(s.size()) + "\n" + join_ints(s.elements()) + "\n";
}

torus::TorusColoring parse_torus_coloring(std::string_view text) {
  Lexer lx(text);
  const Token td = lx.next("D");
  const std::int64_t D = to_int(td, 1, "D");
  const Token tr = lx.next("r");
  const std::int64_t r = to_int(tr, 1, "r");
  std::vector<std::int32_t> cells;
  cells.reserve(static_cast<std::size_t>(D));
  std::int64_t hi = 0;
  for (std::int64_t j = 0; j < D; ++j) {
    const Token t = lx.next("cell color");
    const auto v = to_int(t, 1, "cell color");
    if (v > r) fail(t, "cell color outside 1.." + std::to_string(r));
    hi = std::max(hi, v);
    cells.push_back(static_cast<std::int32_t>(v));
  }
  lx.expect_end();
  if (hi != r) fail(tr, "header says r = " + std::to_string(r) + " but the largest color is " + std::to_string(hi));
  return torus::TorusColoring(std::move(cells));
}

std::string format_torus_coloring(const torus::TorusColoring& phi) {
  return std::to_string(phi.D()) + " " + std::to_string(phi.r()) + "\n" + join_ints(phi.cell_colors()) + "\n";
}

torus::TorusSet parse_torus_set(std::string_view text, const std::filesystem::path& base_dir) {
  Lexer lx(text);
  const Token kw = lx.next("'torus-coloring'");
  if (kw.text != "torus-coloring") fail(kw, "expected 'torus-coloring'");
  const Token tp = lx.next("torus coloring path");
  std::filesystem::path ref(tp.text);
  if (ref.is_relative()) ref = base_dir / ref;
  const Token tm = lx.next("m");
  const std::int64_t m = to_int(tm, 1, "m");
  const Token tw = lx.next("w");
  const core::Rational w = to_rational(tw, "w");
  if (w <= 0 || w > core::Rational(1, m)) fail(tw, "w must lie in (0, 1/m]");

  torus::TorusSet A{load_torus_coloring(ref), m, w, {}};
  for (int j = 0; j < A.base.r(); ++j) {
    const Token t = lx.next("s_j");
    const auto v = to_int(t, 0, "s_j");
    if (v >= m) fail(t, "s_j outside 0..m-1");
    A.s.push_back(v);
  }
  lx.expect_end();
  return A;
}

std::string format_torus_set(const torus::TorusSet& A, std::string_view coloring_ref) {
  return "torus-coloring " + std::string(coloring_ref) + "\n" + std::to_string(A.m) + " " + core::to_string(A.w) +
         "\n" + join_ints(A.s) + "\n";
}

uniformity::GridFunction parse_grid_function(std::string_view text) {
  Lexer lx(text);
  const Token tn = lx.next("N");
  const std::int64_t N = to_int(tn, 1, "N");
  std::vector<Token> toks;
  toks.reserve(static_cast<std::size_t>(N));
  bool decimal = false;
  for (std::int64_t i = 0; i < N; ++i) {
    toks.push_back(lx.next("value"));
    decimal = decimal || looks_decimal(toks.back().text);
  }
  lx.expect_end();
  if (decimal) {
    std::vector<double> v;
    v.reserve(toks.size());
    for (const auto& t : toks) {
      double x = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), x);
      if (ec != std::errc() || p != t.text.data() + t.text.size() || !std::isfinite(x))
        fail(t, "expected a finite number, got '" + std::string(t.text) + "'");
      v.push_back(x);
    }
    return uniformity::GridFunction(std::move(v));
  }
  std::vector<core::Rational> v;
  v.reserve(toks.size());
  for (const auto& t : toks) v.push_back(to_rational(t, "value"));
  return uniformity::GridFunction(std::move(v));
}

std::string format_grid_function(const uniformity::GridFunction& f) {
  std::string out = std::to_string(f.N()) + "\n";
  if (f.exact()) {
    for (const auto& v : f.exact_values()) out += core::to_string(v) + "\n";
  } else {
    char buf[32];
    for (double v : f.values()) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
      std::string_view s(buf, static_cast<std::size_t>(p - buf));
      out += s;
      // keep the value recognisable as a decimal on re-read
      if (!looks_decimal(s)) out += ".0";
      out += "\n";
    }
  }
  return out;
}

colorings::Coloring load_coloring(const std::filesystem::path& path) { return parse_coloring(read_text(path)); }
sets::ResidueSet load_residue_set(const std::filesystem::path& path) { return parse_residue_set(read_text(path)); }
torus::TorusColoring load_torus_coloring(const std::filesystem::path& path) {
  return parse_torus_coloring(read_text(path));
}
torus::TorusSet load_torus_set(const std::filesystem::path& path) {
  return parse_torus_set(read_text(path), path.parent_path());
}
uniformity::GridFunction load_grid_function(const std::filesystem::path& path) {
  return parse_grid_function(read_text(path));
}

}  // namespace addcomb::cli
