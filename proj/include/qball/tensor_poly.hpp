#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qball/algebra.hpp"
#include "qball/rewrite.hpp"

namespace qball {

struct TensorKeyLess {
  bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
    WordKeyLess wl;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (wl(a[i], b[i])) return true;
      if (wl(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  }
};

// Element of a tensor product of the base algebras; one word per leg, scalar
// coefficients. Products act leg-wise; relations are applied per leg through
// normalize_legs, never across legs.
class TensorPoly {
 public:
  struct Leg {
    AlgTag tag;
    int n;
  };
  using Key = std::vector<Word>;
  using TermMap = std::map<Key, Coeff, TensorKeyLess>;

  explicit TensorPoly(std::vector<Leg> legs) : legs_(std::move(legs)) {
    if (legs_.empty()) throw std::invalid_argument("TensorPoly: needs at least one leg");
  }

  static TensorPoly one(std::vector<Leg> legs) {
    TensorPoly t(std::move(legs));
    t.add_term(Key(t.arity()), Coeff::one());
    return t;
  }

  size_t arity() const { return legs_.size(); }
  const std::vector<Leg>& legs() const { return legs_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Key k, Coeff c) {
    if (k.size() != legs_.size()) throw std::invalid_argument("TensorPoly: wrong arity");
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    check_shape(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TensorPoly operator-(const TensorPoly& o) const {
    check_shape(o);
    TensorPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
  }
  TensorPoly operator*(const TensorPoly& o) const {
    check_shape(o);
    TensorPoly out(legs_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        Key k(legs_.size());
        for (size_t i = 0; i < legs_.size(); ++i) {
          k[i] = ka[i];
          k[i].insert(k[i].end(), kb[i].begin(), kb[i].end());
        }
        out.add_term(std::move(k), ca * cb);
      }
    return out;
  }
  TensorPoly scaled(const Coeff& c) const {
    TensorPoly out(legs_);
    for (const auto& [k, v] : terms_) out.add_term(k, v * c);
    return out;
  }
  bool operator==(const TensorPoly& o) const {
    return legs_.size() == o.legs_.size() && terms_ == o.terms_;
  }

  // Reduce every leg word and redistribute the resulting sums.
  TensorPoly normalize_legs(const std::vector<const RewriteSystem*>& systems) const {
    if (systems.size() != legs_.size())
      throw std::invalid_argument("normalize_legs: one rewrite system per leg");
    for (size_t i = 0; i < legs_.size(); ++i)
      if (systems[i]->tag() != legs_[i].tag || systems[i]->n() != legs_[i].n)
        throw std::invalid_argument("normalize_legs: system does not match leg");
    TensorPoly out(legs_);
    for (const auto& [k, c] : terms_) {
      std::vector<Poly> nf;
      nf.reserve(legs_.size());
      for (size_t i = 0; i < legs_.size(); ++i)
        nf.push_back(normal_form(Poly::monomial(legs_[i].tag, legs_[i].n, k[i]), *systems[i]));
      // outer product of the per-leg expansions
      std::vector<std::pair<Key, Coeff>> acc{{Key{}, c}};
      for (const Poly& leg_poly : nf) {
        std::vector<std::pair<Key, Coeff>> next;
        for (const auto& [pk, pc] : acc)
          for (const auto& [lw, lc] : leg_poly.terms()) {
            Key ek = pk;
            ek.push_back(lw);
            next.emplace_back(std::move(ek), pc * lc);
          }
        acc = std::move(next);
      }
      for (auto& [ek, ec] : acc) out.add_term(std::move(ek), std::move(ec));
    }
    return out;
  }

  // Replace one leg word-by-word with a scalar, dropping the leg.
  TensorPoly collapse_leg(size_t leg, const std::function<Coeff(const Word&)>& fn) const {
    if (leg >= legs_.size() || legs_.size() < 2)
      throw std::invalid_argument("collapse_leg: bad leg index");
    std::vector<Leg> nl;
    for (size_t i = 0; i < legs_.size(); ++i)
      if (i != leg) nl.push_back(legs_[i]);
    TensorPoly out(nl);
    for (const auto& [k, c] : terms_) {
      Coeff s = fn(k[leg]);
      if (s.is_zero()) continue;
      Key nk;
      for (size_t i = 0; i < k.size(); ++i)
        if (i != leg) nk.push_back(k[i]);
      out.add_term(std::move(nk), c * s);
    }
    return out;
  }

  // Replace one leg word-by-word with a tensor factor (splicing its legs in).
  TensorPoly expand_leg(size_t leg, const std::function<TensorPoly(const Word&)>& fn) const {
    if (leg >= legs_.size()) throw std::invalid_argument("expand_leg: bad leg index");
    TensorPoly* out = nullptr;
    TensorPoly result({{AlgTag::mat, 1}});  // replaced on first term
    bool first = true;
    for (const auto& [k, c] : terms_) {
      TensorPoly sub = fn(k[leg]);
      if (first) {
        std::vector<Leg> nl;
        for (size_t i = 0; i < leg; ++i) nl.push_back(legs_[i]);
        for (const Leg& l : sub.legs()) nl.push_back(l);
        for (size_t i = leg + 1; i < legs_.size(); ++i) nl.push_back(legs_[i]);
        result = TensorPoly(nl);
        out = &result;
        first = false;
      }
      for (const auto& [sk, sc] : sub.terms()) {
        Key nk;
        for (size_t i = 0; i < leg; ++i) nk.push_back(k[i]);
        for (const Word& w : sk) nk.push_back(w);
        for (size_t i = leg + 1; i < legs_.size(); ++i) nk.push_back(k[i]);
        out->add_term(std::move(nk), c * sc);
      }
    }
    if (first) throw std::invalid_argument("expand_leg: empty tensor");
    return result;
  }

  // Multiply all legs together into one polynomial (legs must share tag/n).
  Poly fold_product() const {
    for (const Leg& l : legs_)
      if (l.tag != legs_[0].tag || l.n != legs_[0].n)
        throw std::invalid_argument("fold_product: mixed legs");
    Poly out(legs_[0].tag, legs_[0].n);
    for (const auto& [k, c] : terms_) {
      Word w;
      for (const Word& leg_w : k) w.insert(w.end(), leg_w.begin(), leg_w.end());
      out.add_term(std::move(w), c);
    }
    return out;
  }

  Poly to_poly() const {
    if (legs_.size() != 1) throw std::invalid_argument("to_poly: arity must be 1");
    Poly out(legs_[0].tag, legs_[0].n);
    for (const auto& [k, c] : terms_) out.add_term(k[0], c);
    return out;
  }

 private:
  void check_shape(const TensorPoly& o) const {
    if (legs_.size() != o.legs_.size())
      throw std::invalid_argument("TensorPoly: arity mismatch");
    for (size_t i = 0; i < legs_.size(); ++i)
      if (legs_[i].tag != o.legs_[i].tag || legs_[i].n != o.legs_[i].n)
        throw std::invalid_argument("TensorPoly: leg mismatch");
  }

  std::vector<Leg> legs_;
  TermMap terms_;
};

// Comultiplication Delta(t_{i,j}) = sum_k t_{i,k} x t_{k,j}, extended as an
// algebra homomorphism; both legs reduced.
inline TensorPoly comultiply(const Poly& p, const RewriteSystem& rs) {
  if (p.tag() != AlgTag::sl) throw std::invalid_argument("comultiply: expected sl polynomial");
  int n = p.n();
  std::vector<TensorPoly::Leg> legs{{AlgTag::sl, n}, {AlgTag::sl, n}};
  TensorPoly out(legs);
  for (const auto& [w, c] : p.terms()) {
    TensorPoly prod = TensorPoly::one(legs);
    for (const Gen& g : w) {
      if (g.starred())
        throw std::invalid_argument("comultiply: starred t symbol; expand stars first");
      TensorPoly letter(legs);
      for (int k = 1; k <= n; ++k)
        letter.add_term({Word{Gen::t(g.row(), k)}, Word{Gen::t(k, g.col())}}, Coeff::one());
      prod = prod * letter;
    }
    out += prod.scaled(c);
  }
  return out.normalize_legs({&rs, &rs});
}

inline TensorPoly comultiply(const Poly& p) {
  return comultiply(p, RewriteSystem::make(Flavor::sl, p.n()));
}

// Counit: multiplicative, epsilon(t_{i,j}) = delta_{ij}.
inline Coeff counit(const Poly& p) {
  if (p.tag() != AlgTag::sl) throw std::invalid_argument("counit: expected sl polynomial");
  Coeff out;
  for (const auto& [w, c] : p.terms()) {
    bool diag = true;
    for (const Gen& g : w) {
      if (g.starred()) throw std::invalid_argument("counit: starred t symbol; expand stars first");
      if (g.row() != g.col()) {
        diag = false;
        break;
      }
    }
    if (diag) out += c;
  }
  return out;
}

// Antipode: linear antihomomorphism with
// S(t_{i,j}) = (-q)^{i-j} * (q-determinant of t with row j, column i removed).
inline Poly antipode(const Poly& p, const RewriteSystem& rs) {
  if (p.tag() != AlgTag::sl) throw std::invalid_argument("antipode: expected sl polynomial");
  int n = p.n();
  Poly out(AlgTag::sl, n);
  for (const auto& [w, c] : p.terms()) {
    Poly prod = Poly::one(AlgTag::sl, n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->starred())
        throw std::invalid_argument("antipode: starred t symbol; expand stars first");
      int i = it->row(), j = it->col();
      Poly minor = quantum_minor(n, {j}, {i});
      int e = i - j;
      prod = prod * minor.scaled(Coeff(Laurent::q_power(e, Rational(e % 2 == 0 ? 1 : -1))));
    }
    out += prod.scaled(c);
  }
  return normal_form(out, rs);
}

inline Poly antipode(const Poly& p) {
  return antipode(p, RewriteSystem::make(Flavor::sl, p.n()));
}

// Two-sided coaction D_n(z_j^i) = sum_{a,b} z_b^a x t_{b,j} x t_{a,i},
// extended as a *-homomorphism into Pol x C[SU_n] x C[SU_n]; legs reduced.
inline TensorPoly coaction_Dn(const Poly& p, const RewriteSystem& mat_rs,
                              const RewriteSystem& sl_rs) {
  if (p.tag() != AlgTag::mat) throw std::invalid_argument("coaction_Dn: expected mat polynomial");
  int n = p.n();
  std::vector<TensorPoly::Leg> legs{{AlgTag::mat, n}, {AlgTag::sl, n}, {AlgTag::sl, n}};
  TensorPoly out(legs);
  for (const auto& [w, c] : p.terms()) {
    TensorPoly prod = TensorPoly::one(legs);
    for (const Gen& g : w) {
      TensorPoly letter(legs);
      int i = g.row(), j = g.col();
      if (!g.starred()) {
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b)
            letter.add_term({Word{Gen::z(b, a)}, Word{Gen::t(b, j)}, Word{Gen::t(a, i)}},
                            Coeff::one());
      } else {
        // star acts leg-wise on the tensor product
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            Poly s1 = star_sl(Poly::generator(AlgTag::sl, n, Gen::t(b, j)));
            Poly s2 = star_sl(Poly::generator(AlgTag::sl, n, Gen::t(a, i)));
            for (const auto& [w1, c1] : s1.terms())
              for (const auto& [w2, c2] : s2.terms())
                letter.add_term({Word{Gen::z(b, a, true)}, w1, w2}, c1 * c2);
          }
      }
      prod = prod * letter;
    }
    out += prod.scaled(c);
  }
  return out.normalize_legs({&mat_rs, &sl_rs, &sl_rs});
}

inline TensorPoly coaction_Dn(const Poly& p) {
  auto mat_rs = RewriteSystem::make(Flavor::mat_full, p.n());
  auto sl_rs = RewriteSystem::make(Flavor::sl, p.n());
  return coaction_Dn(p, mat_rs, sl_rs);
}

}  // namespace qball
