#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qball/laurent.hpp"
#include "qball/symbols.hpp"

namespace qball {

// Noncommutative polynomial over Coeff in the free algebra on the generators
// of one algebra. The pair (tag, n) fixes the generator alphabet; mixing
// alphabets is an error. No zero coefficients are stored.
class Poly {
 public:
  Poly() : tag_(AlgTag::mat), n_(0) {}
  Poly(AlgTag tag, int n) : tag_(tag), n_(n) {}

  static Poly zero(AlgTag tag, int n) { return Poly(tag, n); }
  static Poly one(AlgTag tag, int n) {
    Poly p(tag, n);
    p.add_term(Word{}, Coeff::one());
    return p;
  }
  static Poly monomial(AlgTag tag, int n, Word w, Coeff c = Coeff::one()) {
    Poly p(tag, n);
    p.add_term(std::move(w), std::move(c));
    return p;
  }
  static Poly generator(AlgTag tag, int n, Gen g) { return monomial(tag, n, Word{g}); }

  AlgTag tag() const { return tag_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Coeff, WordKeyLess>& terms() const { return terms_; }

  // Word length of the longest term (0 for scalars; -1 for the zero
  // polynomial). Counts starred and plain letters alike.
  int degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
  }

  void add_term(Word w, Coeff c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(tag_, n_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly scaled(const Coeff& c) const {
    Poly r(tag_, n_);
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
  }

  // Free product (word concatenation); no reduction.
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.tag_, a.n_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Coeff c = ca * cb;
        if (c.is_zero()) continue;
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(std::move(w), std::move(c));
      }
    return r;
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.tag_ == b.tag_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  void check_compatible(const Poly& b) const {
    if (tag_ != b.tag_ || n_ != b.n_)
      throw std::invalid_argument("Poly: mixed algebra tags or sizes");
  }

 private:
  AlgTag tag_;
  int n_;
  std::map<Word, Coeff, WordKeyLess> terms_;
};

// Antilinear antihomomorphism on the matrix-ball algebra: reverses each word,
// toggles stars, conjugates coefficients. An exact involution on mat
// polynomials. (The sl involution expands through quantum minors; see
// star_sl in homs.hpp.)
inline Poly star_mat(const Poly& p) {
  if (p.tag() != AlgTag::mat) throw std::invalid_argument("star_mat: mat polynomial expected");
  Poly r(p.tag(), p.n());
  for (const auto& [w, c] : p.terms()) {
    Word rw;
    rw.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) rw.push_back(it->with_star(!it->starred()));
    r.add_term(std::move(rw), c.conj());
  }
  return r;
}

}  // namespace qball
