#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "qball/poly.hpp"
#include "qball/tensor_poly.hpp"

namespace qball {

// Canonical text form: terms sorted leading-first by the monomial order, each
// as "(coefficient) letters", joined by " + ". Phase-free coefficients print
// the bare Laurent string; coefficients with a unimodular factor keep the
// per-part parentheses of Coeff::str inside one outer pair.
//   (1 - q^2) 1 + (q) z[2,1] z[1,2]
inline std::string coeff_str(const Coeff& c) {
  if (!c.has_phase()) return "(" + c.laurent().str() + ")";
  return "(" + c.str() + ")";
}

inline std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<const Word*> order;
  for (const auto& [w, c] : p.terms()) order.push_back(&w);
  std::sort(order.begin(), order.end(),
            [](const Word* a, const Word* b) { return word_order_less(*b, *a); });
  std::string out;
  for (const Word* w : order) {
    if (!out.empty()) out += " + ";
    out += coeff_str(p.terms().at(*w)) + " " + word_str(*w);
  }
  return out;
}

inline std::string tensor_str(const TensorPoly& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_str(c) + " ";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) out += " (x) ";
      out += word_str(k[i]);
    }
  }
  return out;
}

namespace detail {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool consume(const std::string& lit) {
    if (s.compare(i, lit.size(), lit) == 0) {
      i += lit.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& lit) {
    if (!consume(lit))
      throw std::invalid_argument("parse error at position " + std::to_string(i) + " in: " + s);
  }
  void skip_spaces() {
    while (!eof() && s[i] == ' ') ++i;
  }
};

inline int64_t parse_int(Cursor& c) {
  size_t start = c.i;
  if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) ++c.i;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
  if (c.i == start) throw std::invalid_argument("parse error: expected integer in: " + c.s);
  return std::strtoll(c.s.substr(start, c.i - start).c_str(), nullptr, 10);
}

inline Rational parse_rational(Cursor& c) {
  int64_t num = parse_int(c);
  if (!c.eof() && c.peek() == '/') {
    ++c.i;
    int64_t den = parse_int(c);
    return Rational(num, den);
  }
  return Rational(num);
}

// "q" -> 2 half-steps, "q^-3" -> -6, "q^(5/2)" -> 5.
inline int64_t parse_qpart(Cursor& c) {
  c.expect("q");
  if (c.eof() || c.peek() != '^') return 2;
  ++c.i;
  if (!c.eof() && c.peek() == '(') {
    ++c.i;
    int64_t half = parse_int(c);
    c.expect("/2)");
    return half;
  }
  return 2 * parse_int(c);
}

// Laurent sum "1 - q^2 + 3/2 q^(1/2)"; stops at ')' or end.
inline Laurent parse_laurent(Cursor& c) {
  Laurent out;
  bool neg = false;
  c.skip_spaces();
  if (c.consume("-")) neg = true;
  while (true) {
    c.skip_spaces();
    Rational mag(1);
    bool saw_rat = false;
    if (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      mag = parse_rational(c);
      saw_rat = true;
    }
    int64_t half = 0;
    c.skip_spaces();
    if (!c.eof() && c.peek() == 'q') {
      half = parse_qpart(c);
    } else if (!saw_rat) {
      throw std::invalid_argument("parse error: empty monomial in: " + c.s);
    }
    out += Laurent::half_power(half, neg ? -mag : mag);
    c.skip_spaces();
    if (c.consume("+ ")) {
      neg = false;
    } else if (c.consume("- ")) {
      neg = true;
    } else {
      break;
    }
  }
  return out;
}

// Phase suffix "e^{i phi}", "e^{-i phi}", "e^{3i phi}"; returns the power.
inline int64_t parse_phase(Cursor& c) {
  c.expect("e^{");
  int64_t k;
  if (c.consume("i phi}")) return 1;
  if (c.consume("-i phi}")) return -1;
  k = parse_int(c);
  c.expect("i phi}");
  return k;
}

// Coefficient inside the outer parens: either a bare Laurent or a sum of
// "(laurent) [phase]" parts.
inline Coeff parse_coeff_inner(Cursor& c) {
  c.skip_spaces();
  if (c.eof() || c.peek() != '(') return Coeff(parse_laurent(c));
  Coeff out;
  while (true) {
    c.expect("(");
    Laurent l = parse_laurent(c);
    c.expect(")");
    c.skip_spaces();
    int64_t k = 0;
    if (!c.eof() && c.peek() == 'e') k = parse_phase(c);
    out += Coeff::phase_power(k, l);
    c.skip_spaces();
    if (!c.consume("+ ")) break;
    c.skip_spaces();
  }
  return out;
}

inline Gen parse_gen(Cursor& c) {
  bool is_t = false, star = false;
  if (c.consume("z")) {
    is_t = false;
  } else if (c.consume("t")) {
    is_t = true;
  } else {
    throw std::invalid_argument("parse error: expected generator in: " + c.s);
  }
  if (c.consume("*")) star = true;
  c.expect("[");
  int64_t a = parse_int(c);
  c.expect(",");
  int64_t b = parse_int(c);
  c.expect("]");
  if (is_t) return Gen::t(static_cast<int>(a), static_cast<int>(b), star);
  return Gen::z(static_cast<int>(a), static_cast<int>(b), star);
}

inline Word parse_word(Cursor& c) {
  Word w;
  c.skip_spaces();
  if (c.consume("1")) return w;
  while (!c.eof() && (c.peek() == 'z' || c.peek() == 't')) {
    w.push_back(parse_gen(c));
    c.skip_spaces();
  }
  if (w.empty()) throw std::invalid_argument("parse error: expected word in: " + c.s);
  return w;
}

}  // namespace detail

inline Poly parse_poly(const std::string& s, AlgTag tag, int n) {
  Poly out(tag, n);
  detail::Cursor c{s};
  c.skip_spaces();
  if (c.consume("0")) {
    c.skip_spaces();
    if (!c.eof()) throw std::invalid_argument("parse error: trailing input in: " + s);
    return out;
  }
  while (true) {
    c.skip_spaces();
    c.expect("(");
    // find the matching close paren, parse the inside as a coefficient
    size_t depth = 1, j = c.i;
    while (j < s.size() && depth > 0) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    }
    if (depth != 0) throw std::invalid_argument("parse error: unbalanced parens in: " + s);
    std::string inner = s.substr(c.i, j - 1 - c.i);
    detail::Cursor ic{inner};
    Coeff coeff = detail::parse_coeff_inner(ic);
    ic.skip_spaces();
    if (!ic.eof()) throw std::invalid_argument("parse error: trailing coefficient in: " + inner);
    c.i = j;
    Word w = detail::parse_word(c);
    out.add_term(std::move(w), coeff);
    c.skip_spaces();
    if (c.eof()) break;
    c.expect("+ ");
  }
  return out;
}

}  // namespace qball
