#pragma once

#include <stdexcept>

#include "qball/rewrite.hpp"

namespace qball {

// Generator of the quantum symmetry algebra acting on the matrix-ball
// polynomials: K_k^{+-1}, E_k, F_k with k = 1..2n-1, k != n. Indices k < n act
// on column indices, k > n on row indices; k = n lies outside the compact
// block and is not supported.
struct UqGen {
  enum class Kind : uint8_t { K, Kinv, E, F };
  Kind kind;
  int k;

  static UqGen K(int k) { return {Kind::K, k}; }
  static UqGen Kinv(int k) { return {Kind::Kinv, k}; }
  static UqGen E(int k) { return {Kind::E, k}; }
  static UqGen F(int k) { return {Kind::F, k}; }
};

namespace detail {

// K_k exponent of a single plain symbol: +1 on the k-th column (resp. row
// 2n-k), -1 on the next one. Starred symbols carry the opposite weight.
inline int k_weight(int k, int n, Gen g) {
  int c;
  if (k < n)
    c = g.col() == k ? 1 : (g.col() == k + 1 ? -1 : 0);
  else
    c = g.row() == 2 * n - k ? 1 : (g.row() == 2 * n - k + 1 ? -1 : 0);
  return g.starred() ? -c : c;
}

// E_k image of a single symbol: q^{-1/2} shift down on the k+1 column/row for
// plain symbols; E(g^*) = -q^{-2} (F(g))^* for starred ones. Returns the
// coefficient together with the shifted symbol, or zero.
inline std::pair<Coeff, Gen> e_letter(int k, int n, Gen g) {
  if (!g.starred()) {
    if (k < n && g.col() == k + 1)
      return {Coeff(Laurent::half_power(-1)), Gen::z(g.col() - 1, g.row())};
    if (k > n && g.row() == 2 * n - k + 1)
      return {Coeff(Laurent::half_power(-1)), Gen::z(g.col(), g.row() - 1)};
    return {Coeff(), g};
  }
  if (k < n && g.col() == k)
    return {Coeff(Laurent::half_power(-3, Rational(-1))), Gen::z(g.col() + 1, g.row(), true)};
  if (k > n && g.row() == 2 * n - k)
    return {Coeff(Laurent::half_power(-3, Rational(-1))), Gen::z(g.col(), g.row() + 1, true)};
  return {Coeff(), g};
}

// F_k image: q^{1/2} shift up on the k-th column/row for plain symbols;
// F(g^*) = -q^2 (E(g))^* for starred ones.
inline std::pair<Coeff, Gen> f_letter(int k, int n, Gen g) {
  if (!g.starred()) {
    if (k < n && g.col() == k)
      return {Coeff(Laurent::half_power(1)), Gen::z(g.col() + 1, g.row())};
    if (k > n && g.row() == 2 * n - k)
      return {Coeff(Laurent::half_power(1)), Gen::z(g.col(), g.row() + 1)};
    return {Coeff(), g};
  }
  if (k < n && g.col() == k + 1)
    return {Coeff(Laurent::half_power(3, Rational(-1))), Gen::z(g.col() - 1, g.row(), true)};
  if (k > n && g.row() == 2 * n - k + 1)
    return {Coeff(Laurent::half_power(3, Rational(-1))), Gen::z(g.col(), g.row() - 1, true)};
  return {Coeff(), g};
}

}  // namespace detail

// Action of one quantum-symmetry generator, extended over products by
//   K(fg) = K(f)K(g),  E(fg) = E(f)g + K(f)E(g),  F(fg) = F(f)K^{-1}(g) + fF(g),
// then reduced with the supplied full matrix-ball rewrite system.
inline Poly uq_action(UqGen xi, const Poly& p, const RewriteSystem& rs) {
  int n = p.n();
  if (p.tag() != AlgTag::mat) throw std::invalid_argument("uq_action: expected matrix algebra");
  if (rs.flavor() != Flavor::mat_full || rs.n() != n)
    throw std::invalid_argument("uq_action: rewrite system mismatch");
  if (xi.k < 1 || xi.k >= 2 * n || xi.k == n)
    throw std::invalid_argument("uq_action: unsupported generator index");

  Poly out(AlgTag::mat, n);
  for (const auto& [w, c] : p.terms()) {
    if (xi.kind == UqGen::Kind::K || xi.kind == UqGen::Kind::Kinv) {
      int total = 0;
      for (const Gen& g : w) total += detail::k_weight(xi.k, n, g);
      if (xi.kind == UqGen::Kind::Kinv) total = -total;
      out.add_term(w, c * Coeff(Laurent::q_power(total)));
      continue;
    }
    bool is_e = xi.kind == UqGen::Kind::E;
    for (size_t i = 0; i < w.size(); ++i) {
      auto [lc, lg] =
          is_e ? detail::e_letter(xi.k, n, w[i]) : detail::f_letter(xi.k, n, w[i]);
      if (lc.is_zero()) continue;
      // twist the untouched side: K on the prefix for E, K^{-1} on the suffix for F
      int twist = 0;
      if (is_e)
        for (size_t t = 0; t < i; ++t) twist += detail::k_weight(xi.k, n, w[t]);
      else
        for (size_t t = i + 1; t < w.size(); ++t) twist -= detail::k_weight(xi.k, n, w[t]);
      Word nw = w;
      nw[i] = lg;
      out.add_term(std::move(nw), c * lc * Coeff(Laurent::q_power(twist)));
    }
  }
  return normal_form(out, rs);
}

inline Poly uq_action(UqGen xi, const Poly& p) {
  return uq_action(xi, p, RewriteSystem::make(Flavor::mat_full, p.n()));
}

}  // namespace qball
