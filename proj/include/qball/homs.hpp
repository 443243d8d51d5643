#pragma once

#include <stdexcept>

#include "qball/algebra.hpp"
#include "qball/rewrite.hpp"

namespace qball {

// Named *-homomorphisms between the algebras.
//   pi_phi   Pol(Mat_n) -> Pol(Mat_{n-1}), z_j^i -> q^{-1} z_j^i (i,j < n),
//            z_n^n -> e^{i phi} (kept as the formal phase symbol), else 0
//   embed_2n Pol(Mat_n) -> Pol(Mat_2n),    z_j^i -> z_{j+n}^{i+n}
//   phi_n    Pol(Mat_n) -> C[SU_n],        z_j^i -> q^{i-n} t_{i,j}
//   theta    C[SU_n] -> C[SU_n],           t_{i,j} -> q^{j-i} t_{j,i}
//   iota     Pol(Mat_n) -> C[SU_2n],       z_j^i -> q^{i-n} t_{n+i,n+j}
//   psi_j    C[SU_n] -> C[SU_2],           t_{a,b} -> t_{a-j+1,b-j+1} on the
//            j..j+1 block, delta_{ab} outside
struct HomSpec {
  enum class Name : uint8_t { pi_phi, embed_2n, phi_n, theta, iota, psi_j };

  Name name;
  int n;      // source dimension
  int j = 0;  // block index for psi_j

  static HomSpec pi_phi(int n) {
    if (n < 2) throw std::invalid_argument("pi_phi: requires n >= 2");
    return {Name::pi_phi, n};
  }
  static HomSpec embed_2n(int n) { return {Name::embed_2n, n}; }
  static HomSpec phi_n(int n) { return {Name::phi_n, n}; }
  static HomSpec theta(int n) { return {Name::theta, n}; }
  static HomSpec iota(int n) { return {Name::iota, n}; }
  static HomSpec psi_j(int n, int j) {
    if (j < 1 || j > n - 1) throw std::invalid_argument("psi_j: index out of range");
    return {Name::psi_j, n, j};
  }

  AlgTag source_tag() const {
    return (name == Name::theta || name == Name::psi_j) ? AlgTag::sl : AlgTag::mat;
  }
  AlgTag target_tag() const {
    switch (name) {
      case Name::pi_phi:
      case Name::embed_2n:
        return AlgTag::mat;
      default:
        return AlgTag::sl;
    }
  }
  int target_n() const {
    switch (name) {
      case Name::pi_phi:
        return n - 1;
      case Name::embed_2n:
      case Name::iota:
        return 2 * n;
      case Name::psi_j:
        return 2;
      default:
        return n;
    }
  }
  Flavor target_flavor() const {
    return target_tag() == AlgTag::mat ? Flavor::mat_full : Flavor::sl;
  }
};

namespace detail {

// Image of a single source symbol; starred matrix symbols map to the star of
// the plain image, starred t symbols are rejected (expand with star_sl first).
inline Poly hom_letter_image(const HomSpec& h, Gen g) {
  AlgTag ttag = h.target_tag();
  int tn = h.target_n();
  if (g.tag() != h.source_tag()) throw std::invalid_argument("apply_hom: wrong source algebra");
  if (g.tag() == AlgTag::sl && g.starred())
    throw std::invalid_argument("apply_hom: starred t symbol; expand stars before mapping");

  bool starred = g.starred();
  int i = g.row(), j = g.col();
  Poly img(ttag, tn);
  switch (h.name) {
    case HomSpec::Name::pi_phi:
      if (i < h.n && j < h.n)
        img.add_term(Word{Gen::z(j, i)}, Coeff(Laurent::q_power(-1)));
      else if (i == h.n && j == h.n)
        img.add_term(Word{}, Coeff::phase_power(1));
      break;
    case HomSpec::Name::embed_2n:
      img.add_term(Word{Gen::z(j + h.n, i + h.n)}, Coeff::one());
      break;
    case HomSpec::Name::phi_n:
      img.add_term(Word{Gen::t(i, j)}, Coeff(Laurent::q_power(i - h.n)));
      break;
    case HomSpec::Name::iota:
      img.add_term(Word{Gen::t(h.n + i, h.n + j)}, Coeff(Laurent::q_power(i - h.n)));
      break;
    case HomSpec::Name::theta:
      img.add_term(Word{Gen::t(j, i)}, Coeff(Laurent::q_power(j - i)));
      break;
    case HomSpec::Name::psi_j:
      if (h.j <= i && i <= h.j + 1 && h.j <= j && j <= h.j + 1)
        img.add_term(Word{Gen::t(i - h.j + 1, j - h.j + 1)}, Coeff::one());
      else if (i == j)
        img.add_term(Word{}, Coeff::one());
      break;
  }
  if (!starred) return img;
  // *-homomorphism: image of g^* is the star of the image of g
  if (ttag == AlgTag::mat) return star_mat(img);
  return star_sl(img);
}

}  // namespace detail

// Extend the generator images multiplicatively and linearly, then reduce in
// the target with the supplied rewrite system (which must match the target).
inline Poly apply_hom(const HomSpec& h, const Poly& p, const RewriteSystem& target_rs) {
  if (p.tag() != h.source_tag() || p.n() != h.n)
    throw std::invalid_argument("apply_hom: polynomial not in the source algebra");
  if (target_rs.tag() != h.target_tag() || target_rs.n() != h.target_n())
    throw std::invalid_argument("apply_hom: rewrite system not over the target algebra");
  Poly out(h.target_tag(), h.target_n());
  for (const auto& [w, c] : p.terms()) {
    Poly prod = Poly::one(h.target_tag(), h.target_n());
    for (const Gen& g : w) prod = prod * detail::hom_letter_image(h, g);
    out += prod.scaled(c);
  }
  return normal_form(out, target_rs);
}

inline Poly apply_hom(const HomSpec& h, const Poly& p) {
  return apply_hom(h, p, RewriteSystem::make(h.target_flavor(), h.target_n()));
}

}  // namespace qball
