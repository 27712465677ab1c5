#include "addcomb/uniformity/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::uniformity {
namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  std::int64_t number() {
    skip();
    if (!at_digit()) fail("expected a number");
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (v > (INT64_MAX - 9) / 10) fail("number too large");
      v = v * 10 + (s[i++] - '0');
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("polynomial: " + what, 1, static_cast<int>(i) + 1);
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  Polynomial P;
  P.vars = 1;
  Cursor c{text};
  std::vector<std::pair<std::int64_t, std::vector<int>>> raw;
  bool first = true;
  while (true) {
    c.skip();
    if (c.i == text.size()) {
      if (first) c.fail("empty polynomial");
      break;
    }
    std::int64_t sign = 1;
    if (c.eat('-')) {
      sign = -1;
    } else if (!c.eat('+') && !first) {
      c.fail("expected + or -");
    }
    first = false;
    std::int64_t coeff = sign;
    std::vector<int> exps(2, 0);
    do {
      if (c.at_digit()) {
        coeff *= c.number();
      } else if (c.eat('n')) {
        int var = 0;
        if (c.i < text.size() && (text[c.i] == '1' || text[c.i] == '2')) var = text[c.i++] - '1';
        if (var == 1) P.vars = 2;
        int e = 1;
        if (c.eat('^')) e = static_cast<int>(c.number());
        exps[static_cast<std::size_t>(var)] += e;
      } else {
        c.fail("expected a number or a variable");
      }
    } while (c.eat('*'));
    raw.emplace_back(coeff, exps);
  }
  for (auto& [coeff, exps] : raw) {
    exps.resize(static_cast<std::size_t>(P.vars));
    P.terms.push_back({coeff, exps});
  }
  return P;
}

std::int64_t Polynomial::eval_mod(std::span<const std::int64_t> n, std::int64_t N) const {
  std::int64_t s = 0;
  for (const auto& t : terms) {
    std::int64_t v = core::mod(t.coeff, N);
    for (std::size_t j = 0; j < t.exponents.size(); ++j)
      v = core::mulmod(v, core::powmod(core::mod(n[j], N), static_cast<std::uint64_t>(t.exponents[j]), N), N);
    s = core::mod(s + v, N);
  }
  return s;
}

std::string Polynomial::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    out += out.empty() ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + ");
    const std::int64_t a = t.coeff < 0 ? -t.coeff : t.coeff;
    std::string body;
    for (std::size_t j = 0; j < t.exponents.size(); ++j) {
      if (t.exponents[j] == 0) continue;
      if (!body.empty()) body += "*";
      body += vars == 1 ? "n" : "n" + std::to_string(j + 1);
      if (t.exponents[j] > 1) body += "^" + std::to_string(t.exponents[j]);
    }
    if (body.empty()) out += std::to_string(a);
    else out += (a == 1 ? "" : std::to_string(a) + "*") + body;
  }
  return out.empty() ? "0" : out;
}

std::complex<double> weyl_sum(const Polynomial& P, std::int64_t N, std::uint64_t budget) {
  if (N < 1) throw InvalidArgument("N must be >= 1");
  if (P.vars < 1 || P.vars > 2) throw InvalidArgument("weyl_sum supports 1 or 2 variables");
  const unsigned __int128 work = P.vars == 1 ? static_cast<unsigned __int128>(N)
                                             : static_cast<unsigned __int128>(N) * N;
  if (work > budget) throw ResourceError("Weyl sum over N^s points exceeds the budget");
  // Phase counts per residue, then one pass over the unit circle.
  std::vector<std::uint64_t> hits(static_cast<std::size_t>(N), 0);
  std::int64_t n[2] = {0, 0};
  if (P.vars == 1) {
    for (n[0] = 0; n[0] < N; ++n[0]) ++hits[static_cast<std::size_t>(P.eval_mod(std::span(n, 1), N))];
  } else {
    for (n[0] = 0; n[0] < N; ++n[0])
      for (n[1] = 0; n[1] < N; ++n[1]) ++hits[static_cast<std::size_t>(P.eval_mod(std::span(n, 2), N))];
  }
  // Equidistributed residues sum to zero exactly.
  if (N > 1 && std::all_of(hits.begin(), hits.end(), [&](std::uint64_t h) { return h == hits[0]; })) return {0.0, 0.0};
  double re = 0, im = 0;
  for (std::int64_t j = 0; j < N; ++j) {
    if (!hits[static_cast<std::size_t>(j)]) continue;
    const double ang = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N);
    re += static_cast<double>(hits[static_cast<std::size_t>(j)]) * std::cos(ang);
    im += static_cast<double>(hits[static_cast<std::size_t>(j)]) * std::sin(ang);
  }
  const double total = static_cast<double>(work);
  return {re / total, im / total};
}

}  // namespace addcomb::uniformity
