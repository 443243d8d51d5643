#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qball/poly.hpp"

namespace qball {

namespace detail {

inline int inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

// sum over permutations s of (-q)^{inv(s)} prod_i letter(rows[i], cols[s(i)]),
// with the product taken in ascending row order.
template <class MkGen>
Poly alternating_sum(AlgTag tag, int n, const std::vector<int>& rows, const std::vector<int>& cols,
                     MkGen mk) {
  if (rows.size() != cols.size()) throw std::invalid_argument("alternating_sum: shape mismatch");
  size_t k = rows.size();
  Poly out(tag, n);
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    int inv = inversions(idx);
    Word w;
    w.reserve(k);
    for (size_t i = 0; i < k; ++i) w.push_back(mk(rows[i], cols[idx[i]]));
    Laurent c = Laurent::q_power(inv, Rational(inv % 2 == 0 ? 1 : -1));
    out.add_term(std::move(w), Coeff(c));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace detail

// Quantum determinant: sum_s (-q)^{inv(s)} a_{1,s(1)} ... a_{n,s(n)} where
// a_{i,j} is z_j^i for the matrix algebra and t_{i,j} for the sl algebra.
inline Poly q_determinant(AlgTag tag, int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  if (tag == AlgTag::mat)
    return detail::alternating_sum(tag, n, all, all,
                                   [](int row, int col) { return Gen::z(col, row); });
  return detail::alternating_sum(tag, n, all, all,
                                 [](int row, int col) { return Gen::t(row, col); });
}

// Quantum minor of the t matrix: the q-determinant of the submatrix obtained
// by deleting the listed rows and columns (1-based, equal counts). Kept
// indices retain their original labels.
inline Poly quantum_minor(int n, const std::vector<int>& deleted_rows,
                          const std::vector<int>& deleted_cols) {
  if (deleted_rows.size() != deleted_cols.size())
    throw std::invalid_argument("quantum_minor: must delete equally many rows and columns");
  auto kept = [n](const std::vector<int>& del) {
    std::vector<int> keep;
    for (int i = 1; i <= n; ++i)
      if (std::find(del.begin(), del.end(), i) == del.end()) keep.push_back(i);
    return keep;
  };
  std::vector<int> rows = kept(deleted_rows), cols = kept(deleted_cols);
  if (rows.size() + deleted_rows.size() != static_cast<size_t>(n))
    throw std::invalid_argument("quantum_minor: deleted row out of range or repeated");
  if (cols.size() + deleted_cols.size() != static_cast<size_t>(n))
    throw std::invalid_argument("quantum_minor: deleted column out of range or repeated");
  return detail::alternating_sum(AlgTag::sl, n, rows, cols,
                                 [](int row, int col) { return Gen::t(row, col); });
}

// Involution of the quantum special unitary group:
// t_{i,j}^star = (-q)^{j-i} * (q-determinant of t with row i and column j
// discarded), extended as an antilinear antihomomorphism. Starred input
// symbols map back to plain ones. The result is not reduced; star is an
// involution after normal_form.
inline Poly star_sl(const Poly& p) {
  if (p.tag() != AlgTag::sl) throw std::invalid_argument("star_sl: expected sl polynomial");
  int n = p.n();
  Poly out(AlgTag::sl, n);
  for (const auto& [w, c] : p.terms()) {
    Poly prod = Poly::one(AlgTag::sl, n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->starred()) {
        prod = prod * Poly::generator(AlgTag::sl, n, it->with_star(false));
        continue;
      }
      int i = it->row(), j = it->col();
      Poly minor = quantum_minor(n, {i}, {j});
      int e = j - i;
      prod = prod * minor.scaled(Coeff(Laurent::q_power(e, Rational(e % 2 == 0 ? 1 : -1))));
    }
    out += prod.scaled(c.conj());
  }
  return out;
}

// Generators of the boundary ideal:
// sum_j q^{2n - alpha - beta} z_j^alpha (z_j^beta)^* - delta^{alpha beta},
// one polynomial per (alpha, beta). A representation annihilating all of them
// factors through the algebra of the distinguished boundary.
inline std::vector<Poly> boundary_ideal_generators(int n) {
  std::vector<Poly> gens;
  gens.reserve(static_cast<size_t>(n) * n);
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int beta = 1; beta <= n; ++beta) {
      Poly p(AlgTag::mat, n);
      for (int j = 1; j <= n; ++j)
        p.add_term(Word{Gen::z(j, alpha), Gen::z(j, beta, true)},
                   Coeff(Laurent::q_power(2 * n - alpha - beta)));
      if (alpha == beta) p.add_term(Word{}, Coeff(Rational(-1)));
      gens.push_back(std::move(p));
    }
  return gens;
}

}  // namespace qball
