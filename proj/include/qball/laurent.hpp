#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "qball/rational.hpp"

namespace qball {

// q^(k/2) for integer k, evaluated through one shared code path so that
// symbolically equal scalars produce bitwise identical doubles.
inline double q_half_pow(double q, int64_t half_exp) {
  if (half_exp == 0) return 1.0;
  if ((half_exp & 1) == 0) {
    int64_t e = half_exp / 2;
    bool inv = e < 0;
    if (inv) e = -e;
    double acc = 1.0;
    if (e <= 64) {
      for (int64_t i = 0; i < e; ++i) acc *= q;
    } else {
      acc = std::pow(q, static_cast<double>(e));
    }
    return inv ? 1.0 / acc : acc;
  }
  return std::pow(q, 0.5 * static_cast<double>(half_exp));
}

// Exact Laurent polynomial in q over the rationals.
// Exponents are stored in half-units: key k holds the coefficient of q^(k/2).
// Integer powers of q always sit on even keys. No zero coefficients stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c) {
    if (!c.is_zero()) c_[0] = c;
  }
  Laurent(int64_t c) : Laurent(Rational(c)) {}

  // q^k for integer k.
  static Laurent q_power(int64_t k, const Rational& c = Rational(1)) {
    return half_power(2 * k, c);
  }
  // q^(k/2) for integer k (used by the quantum-group action).
  static Laurent half_power(int64_t k, const Rational& c = Rational(1)) {
    Laurent l;
    if (!c.is_zero()) l.c_[k] = c;
    return l;
  }
  static Laurent one() { return Laurent(Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }

  // True when the scalar is c*q^(k/2) for a single k: these are the invertible
  // coefficients rewriting is allowed to divide by.
  bool is_monomial() const { return c_.size() == 1; }

  const std::map<int64_t, Rational>& coeffs() const { return c_; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.c_) {
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) {
        Rational p = ca * cb;
        if (p.is_zero()) continue;
        auto it = r.c_.find(ea + eb);
        if (it == r.c_.end()) {
          r.c_[ea + eb] = p;
        } else {
          it->second += p;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    return r;
  }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

  // Exact division by an invertible monomial c*q^(k/2).
  Laurent divided_by_monomial(const Laurent& m) const {
    if (!m.is_monomial()) throw std::domain_error("Laurent: divisor is not a monomial");
    int64_t e = m.c_.begin()->first;
    Rational c = m.c_.begin()->second;
    Laurent r;
    for (const auto& [ea, ca] : c_) r.c_[ea - e] = ca / c;
    return r;
  }

  // Shift by q^k (integer power).
  Laurent shifted_q(int64_t k) const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e + 2 * k] = c;
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  // Deterministic order for use as a map key; not the rewriting order.
  friend bool operator<(const Laurent& a, const Laurent& b) {
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ib != b.c_.end();
  }

  double eval(double q) const {
    double s = 0.0;
    for (const auto& [e, c] : c_) s += c.to_double() * q_half_pow(q, e);
    return s;
  }

  // Canonical text, ascending exponents: "1 - q^2", "q^-1 - q", "3/2 q^(1/2)".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : c_) {
      Rational mag = c;
      bool neg = c.num() < 0;
      if (neg) mag = -c;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string qpart;
      if (e != 0) {
        if (e == 2) {
          qpart = "q";
        } else if ((e & 1) == 0) {
          qpart = "q^" + std::to_string(e / 2);
        } else {
          qpart = "q^(" + std::to_string(e) + "/2)";
        }
      }
      if (qpart.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += qpart;
      } else {
        out += mag.str() + " " + qpart;
      }
    }
    return out;
  }

 private:
  std::map<int64_t, Rational> c_;
};

// Coefficient ring for polynomials: a finite sum of Laurent scalars times
// integer powers of one formal unimodular symbol u = e^{i phi}. Exact until
// eval(); conjugation flips the phase power. Plain Laurent scalars live at
// phase power 0.
class Coeff {
 public:
  Coeff() = default;
  Coeff(const Laurent& l) {
    if (!l.is_zero()) p_[0] = l;
  }
  Coeff(const Rational& c) : Coeff(Laurent(c)) {}
  Coeff(int64_t c) : Coeff(Laurent(c)) {}

  static Coeff phase_power(int64_t k, const Laurent& l = Laurent::one()) {
    Coeff r;
    if (!l.is_zero()) r.p_[k] = l;
    return r;
  }
  static Coeff one() { return Coeff(Laurent::one()); }

  bool is_zero() const { return p_.empty(); }
  bool has_phase() const { return p_.size() > 1 || (p_.size() == 1 && p_.begin()->first != 0); }
  const std::map<int64_t, Laurent>& parts() const { return p_; }

  // The phase-free value; errors if a unimodular factor is present.
  Laurent laurent() const {
    if (p_.empty()) return Laurent();
    if (has_phase()) throw std::domain_error("Coeff: unexpected unimodular phase");
    return p_.begin()->second;
  }

  Coeff operator-() const {
    Coeff r;
    for (const auto& [k, l] : p_) r.p_[k] = -l;
    return r;
  }
  Coeff conj() const {
    Coeff r;
    for (const auto& [k, l] : p_) r.p_[-k] = l;
    return r;
  }

  friend Coeff operator+(const Coeff& a, const Coeff& b) {
    Coeff r = a;
    for (const auto& [k, l] : b.p_) {
      auto it = r.p_.find(k);
      if (it == r.p_.end()) {
        r.p_[k] = l;
      } else {
        it->second += l;
        if (it->second.is_zero()) r.p_.erase(it);
      }
    }
    return r;
  }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff r;
    for (const auto& [ka, la] : a.p_)
      for (const auto& [kb, lb] : b.p_) {
        Laurent p = la * lb;
        if (p.is_zero()) continue;
        auto it = r.p_.find(ka + kb);
        if (it == r.p_.end()) {
          r.p_[ka + kb] = p;
        } else {
          it->second += p;
          if (it->second.is_zero()) r.p_.erase(it);
        }
      }
    return r;
  }
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::complex<double> eval(double q, double phi = 0.0) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& [k, l] : p_) {
      double mag = l.eval(q);
      if (k == 0) {
        s += mag;
      } else {
        s += mag * std::exp(std::complex<double>(0.0, k * phi));
      }
    }
    return s;
  }

  // "(1 - q^2)" or "(q^-1) e^{i phi}" or sums thereof.
  std::string str() const {
    if (p_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, l] : p_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + l.str() + ")";
      if (k == 1) {
        out += " e^{i phi}";
      } else if (k == -1) {
        out += " e^{-i phi}";
      } else if (k != 0) {
        out += " e^{" + std::to_string(k) + "i phi}";
      }
    }
    return out;
  }

 private:
  std::map<int64_t, Laurent> p_;
};

}  // namespace qball
