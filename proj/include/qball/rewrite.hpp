#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qball/algebra.hpp"
#include "qball/poly.hpp"

namespace qball {

// Raised when one normal_form call exceeds its rule-application budget.
struct RewriteBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which relation family a rewrite system carries.
enum class Flavor : uint8_t {
  mat_holo,  // holomorphic quantum matrix algebra: plain z only
  mat_full,  // full matrix-ball *-algebra: z, z*, mixed commutation
  sl         // quantum special unitary group: t with unit q-determinant
};

inline AlgTag flavor_tag(Flavor f) { return f == Flavor::sl ? AlgTag::sl : AlgTag::mat; }

// R-matrix entry R_{ij}^{kl}: q^{-1} when i != j, k = i, l = j; 1 when
// i = j = k = l; 1 - q^{-2} (i.e. -(q^{-2} - 1)) when i = j, k = l > j; else 0.
inline Laurent r_matrix(int i, int j, int k, int l) {
  if (i != j) {
    if (k == i && l == j) return Laurent::q_power(-1);
    return Laurent();
  }
  if (k != l) return Laurent();
  if (k == i) return Laurent::one();
  if (k > i) return Laurent::one() - Laurent::q_power(-2);
  return Laurent();
}

// Oriented rule set. Pair rules rewrite a reducible adjacent pair; the sl
// system additionally carries the unit-determinant rule whose leading word is
// the measure-largest term of the normalized q-determinant. For n = 2 the
// determinant rule extends to a parametric family (see det_family_redex) that
// makes the sl system confluent; for n >= 3 diagonal letters separated by
// unrelated letters stay unreduced, so sl normal forms are canonical only for
// n <= 2. Every rule strictly decreases word_order_cmp.
class RewriteSystem {
 public:
  struct Rule {
    Word lead;
    Poly repl;
  };

  static RewriteSystem make(Flavor flavor, int n);

  Flavor flavor() const { return flavor_; }
  int n() const { return n_; }
  AlgTag tag() const { return flavor_tag(flavor_); }

  const Poly* pair_rule(Gen x, Gen y) const {
    auto it = pair_rules_.find(pair_key(x, y));
    return it == pair_rules_.end() ? nullptr : &it->second;
  }
  bool has_det_rule() const { return has_det_; }
  const Word& det_lead() const { return det_lead_; }
  const Poly& det_repl() const { return det_repl_; }

  // All rules as (leading word, replacement); used by the order-certification
  // tests and the confluence checker.
  std::vector<Rule> all_rules() const {
    std::vector<Rule> out;
    out.reserve(pair_rules_.size() + 1);
    for (const auto& [k, repl] : pair_rules_) {
      Word lead{Gen{static_cast<uint16_t>(k >> 16)}, Gen{static_cast<uint16_t>(k & 0xffff)}};
      out.push_back({std::move(lead), repl});
    }
    if (has_det_) out.push_back({det_lead_, det_repl_});
    return out;
  }

  // Alphabet of the system, in generator order.
  std::vector<Gen> alphabet() const {
    std::vector<Gen> a;
    for (int row = 1; row <= n_; ++row)
      for (int col = 1; col <= n_; ++col)
        a.push_back(flavor_ == Flavor::sl ? Gen::t(row, col) : Gen::z(col, row));
    if (flavor_ == Flavor::mat_full) {
      size_t plain = a.size();
      for (size_t i = 0; i < plain; ++i) a.push_back(a[i].with_star(true));
    }
    return a;
  }

  void validate_word(const Word& w) const {
    for (const Gen& g : w) {
      if (g.tag() != tag()) throw std::invalid_argument("RewriteSystem: wrong algebra tag");
      if (g.row() < 1 || g.row() > n_ || g.col() < 1 || g.col() > n_)
        throw std::invalid_argument("RewriteSystem: generator index out of range");
      if (g.starred() && flavor_ != Flavor::mat_full)
        throw std::invalid_argument(
            flavor_ == Flavor::mat_holo
                ? "RewriteSystem: starred generator in holomorphic algebra"
                : "RewriteSystem: starred t symbol; expand stars before rewriting");
    }
  }

  // Leftmost reducible position, or nullopt when the word is normal.
  struct Redex {
    size_t pos;
    size_t len;
    Poly repl;
  };
  std::optional<Redex> find_redex(const Word& w) const {
    bool family = has_det_ && n_ == 2;
    size_t det_len = has_det_ ? det_lead_.size() : 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i + 1 < w.size()) {
        if (const Poly* r = pair_rule(w[i], w[i + 1])) return Redex{i, 2, *r};
      }
      if (family) {
        if (auto r = det_family_redex(w, i)) return r;
      } else if (det_len > 0 && i + det_len <= w.size()) {
        bool match = true;
        for (size_t j = 0; j < det_len; ++j)
          if (w[i + j] != det_lead_[j]) {
            match = false;
            break;
          }
        if (match) return Redex{i, det_len, det_repl_};
      }
    }
    return std::nullopt;
  }

  // Instantiated determinant-family rules with lead length <= max_lead_len,
  // beyond the adjacent instance already reported by all_rules(). Nonempty
  // only for the n = 2 sl system.
  std::vector<Rule> det_family_rules(int max_lead_len) const {
    std::vector<Rule> out;
    if (!has_det_ || n_ != 2) return out;
    for (int b = 0; 2 + b <= max_lead_len; ++b)
      for (int a = 0; 2 + b + a <= max_lead_len; ++a) {
        if (a == 0 && b == 0) continue;
        Word lead{Gen::t(2, 2)};
        for (int k = 0; k < b; ++k) lead.push_back(Gen::t(2, 1));
        for (int k = 0; k < a; ++k) lead.push_back(Gen::t(1, 2));
        lead.push_back(Gen::t(1, 1));
        out.push_back({std::move(lead), det_family_repl(b, a)});
      }
    return out;
  }

 private:
  // n = 2 unit-determinant family: the letters between the diagonal pair
  // commute past it by plain q powers, so
  //   t22 t21^b t12^a t11 -> q^{-(a+b)} (t21^b t12^a + q^{-1} t21^{b+1} t12^{a+1}).
  // This closes every critical pair the adjacent rule leaves open. For n >= 3
  // the in-between letters mix in non-diagonal terms and no finite completion
  // exists in this word order; separated diagonal patterns stay unreduced.
  std::optional<Redex> det_family_redex(const Word& w, size_t i) const {
    if (w[i] != Gen::t(2, 2)) return std::nullopt;
    size_t j = i + 1;
    int b = 0, a = 0;
    while (j < w.size() && (w[j] == Gen::t(2, 1) || w[j] == Gen::t(1, 2))) {
      if (w[j] == Gen::t(2, 1))
        ++b;
      else
        ++a;
      ++j;
    }
    if (j >= w.size() || w[j] != Gen::t(1, 1)) return std::nullopt;
    return Redex{i, j - i + 1, det_family_repl(b, a)};
  }

  Poly det_family_repl(int b, int a) const {
    Poly repl(AlgTag::sl, 2);
    Word mid;
    for (int k = 0; k < b; ++k) mid.push_back(Gen::t(2, 1));
    for (int k = 0; k < a; ++k) mid.push_back(Gen::t(1, 2));
    repl.add_term(std::move(mid), Coeff(Laurent::q_power(-(a + b))));
    Word ext;
    for (int k = 0; k <= b; ++k) ext.push_back(Gen::t(2, 1));
    for (int k = 0; k <= a; ++k) ext.push_back(Gen::t(1, 2));
    repl.add_term(std::move(ext), Coeff(Laurent::q_power(-(a + b) - 1)));
    return repl;
  }

  static uint32_t pair_key(Gen x, Gen y) { return (uint32_t(x.code) << 16) | y.code; }

  void add_pair_rule(Gen x, Gen y, Poly repl) { pair_rules_.emplace(pair_key(x, y), std::move(repl)); }

  Flavor flavor_ = Flavor::mat_holo;
  int n_ = 0;
  std::unordered_map<uint32_t, Poly> pair_rules_;
  bool has_det_ = false;
  Word det_lead_;
  Poly det_repl_;

  friend RewriteSystem make_base_system(Flavor, int);
};

Poly normal_form(const Poly& p, const RewriteSystem& rs, long step_budget = 1000000);

namespace detail {

// Commutation rules shared by the plain z block and the t block: for letters
// x < y in generator order, the ascending pair [x, y] rewrites to the
// descending pair (+ correction). `mk(row, col)` builds the concrete symbol.
template <class MkGen>
void add_ascending_pair_rules(std::vector<RewriteSystem::Rule>& out, int n, MkGen mk) {
  for (int r1 = 1; r1 <= n; ++r1)
    for (int c1 = 1; c1 <= n; ++c1)
      for (int r2 = 1; r2 <= n; ++r2)
        for (int c2 = 1; c2 <= n; ++c2) {
          Gen x = mk(r1, c1), y = mk(r2, c2);
          if (!(x < y)) continue;
          Word lead{x, y};
          Poly repl(x.tag(), n);
          if (r1 == r2 || c1 == c2) {
            repl.add_term(Word{y, x}, Coeff(Laurent::q_power(1)));
          } else if (r1 < r2 && c1 > c2) {
            repl.add_term(Word{y, x}, Coeff::one());
          } else {
            // rows and columns both ascending: swap plus (q - q^{-1}) cross term
            repl.add_term(Word{y, x}, Coeff::one());
            repl.add_term(Word{mk(r2, c1), mk(r1, c2)},
                          Coeff(Laurent::q_power(1) - Laurent::q_power(-1)));
          }
          out.push_back({std::move(lead), std::move(repl)});
        }
}

}  // namespace detail

inline RewriteSystem RewriteSystem::make(Flavor flavor, int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("RewriteSystem: n out of range");
  RewriteSystem rs;
  rs.flavor_ = flavor;
  rs.n_ = n;
  AlgTag tag = flavor_tag(flavor);

  std::vector<Rule> rules;
  if (tag == AlgTag::mat) {
    detail::add_ascending_pair_rules(rules, n, [](int row, int col) { return Gen::z(col, row); });
  } else {
    detail::add_ascending_pair_rules(rules, n, [](int row, int col) { return Gen::t(row, col); });
  }
  for (auto& r : rules) rs.add_pair_rule(r.lead[0], r.lead[1], std::move(r.repl));

  if (flavor == Flavor::mat_full) {
    // Starred block: descending starred pairs rewrite to ascending.
    for (int r1 = 1; r1 <= n; ++r1)
      for (int c1 = 1; c1 <= n; ++c1)
        for (int r2 = 1; r2 <= n; ++r2)
          for (int c2 = 1; c2 <= n; ++c2) {
            Gen x = Gen::z(c1, r1, true), y = Gen::z(c2, r2, true);
            if (!(x < y)) continue;
            Poly repl(AlgTag::mat, n);
            if (r1 == r2 || c1 == c2) {
              repl.add_term(Word{x, y}, Coeff(Laurent::q_power(1)));
            } else if (r1 < r2 && c1 > c2) {
              repl.add_term(Word{x, y}, Coeff::one());
            } else {
              repl.add_term(Word{x, y}, Coeff::one());
              repl.add_term(Word{Gen::z(c2, r1, true), Gen::z(c1, r2, true)},
                            Coeff(Laurent::q_power(1) - Laurent::q_power(-1)));
            }
            rs.add_pair_rule(y, x, std::move(repl));
          }

    // Mixed family: every starred-before-plain pair is reducible.
    // (z_b^beta)^* z_a^alpha -> q^2 sum R_{ba}^{b'a'} R_{beta alpha}^{beta' alpha'}
    //   z_{a'}^{alpha'} (z_{b'}^{beta'})^*  +  (1 - q^2) delta_{ab} delta^{alpha beta}.
    for (int beta = 1; beta <= n; ++beta)
      for (int b = 1; b <= n; ++b)
        for (int alpha = 1; alpha <= n; ++alpha)
          for (int a = 1; a <= n; ++a) {
            Poly repl(AlgTag::mat, n);
            Laurent q2 = Laurent::q_power(2);
            for (int bp = 1; bp <= n; ++bp)
              for (int ap = 1; ap <= n; ++ap) {
                Laurent r1 = r_matrix(b, a, bp, ap);
                if (r1.is_zero()) continue;
                for (int betap = 1; betap <= n; ++betap)
                  for (int alphap = 1; alphap <= n; ++alphap) {
                    Laurent r2 = r_matrix(beta, alpha, betap, alphap);
                    if (r2.is_zero()) continue;
                    repl.add_term(Word{Gen::z(ap, alphap), Gen::z(bp, betap, true)},
                                  Coeff(q2 * r1 * r2));
                  }
              }
            if (a == b && alpha == beta)
              repl.add_term(Word{}, Coeff(Laurent::one() - Laurent::q_power(2)));
            rs.add_pair_rule(Gen::z(b, beta, true), Gen::z(a, alpha), std::move(repl));
          }
  }

  if (flavor == Flavor::sl) {
    // Unit q-determinant as one designated rule: leading word = the largest
    // term of the normalized determinant (the descending diagonal), replaced
    // by 1 minus the remaining terms, divided by the leading coefficient.
    Poly nf = normal_form(q_determinant(AlgTag::sl, n), rs);
    const Word* lead = nullptr;
    for (const auto& [w, c] : nf.terms())
      if (!lead || word_order_less(*lead, w)) lead = &w;
    if (!lead) throw std::logic_error("RewriteSystem: empty q-determinant");
    Laurent lc = nf.terms().at(*lead).laurent();
    if (!lc.is_monomial())
      throw std::logic_error("RewriteSystem: determinant leading coefficient not invertible");
    Poly repl = Poly::one(AlgTag::sl, n);
    for (const auto& [w, c] : nf.terms()) {
      if (w == *lead) continue;
      repl.add_term(w, -c);
    }
    // divide by the (unit monomial) leading coefficient
    Poly scaled(AlgTag::sl, n);
    for (const auto& [w, c] : repl.terms())
      scaled.add_term(w, Coeff(c.laurent().divided_by_monomial(lc)));
    rs.det_lead_ = *lead;
    rs.det_repl_ = std::move(scaled);
    rs.has_det_ = true;
    // the leading word must dominate every replacement word
    for (const auto& [w, c] : rs.det_repl_.terms())
      if (!word_order_less(w, rs.det_lead_))
        throw std::logic_error("RewriteSystem: determinant rule is not decreasing");
  }

  return rs;
}

// Reduce to the unique normal form. Max-first worklist keyed by the certified
// word order: rewriting only produces strictly smaller words, so each distinct
// word is handled at most once and the step budget counts real work.
inline Poly normal_form(const Poly& p, const RewriteSystem& rs, long step_budget) {
  if (p.tag() != rs.tag()) throw std::invalid_argument("normal_form: wrong algebra tag");
  for (const auto& [w, c] : p.terms()) rs.validate_word(w);

  std::map<Word, Coeff, WordOrderGreater> work;
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  Poly out(p.tag(), p.n());
  long steps = 0;

  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    Coeff c = std::move(node.mapped());
    if (c.is_zero()) continue;
    auto redex = rs.find_redex(w);
    if (!redex) {
      out.add_term(w, std::move(c));
      continue;
    }
    if (++steps > step_budget)
      throw RewriteBudgetError("normal_form: step budget exceeded (" +
                               std::to_string(step_budget) + " rule applications)");
    for (const auto& [rw, rc] : redex->repl.terms()) {
      Word nw;
      nw.reserve(w.size() - redex->len + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + redex->pos);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + redex->pos + redex->len, w.end());
      Coeff nc = c * rc;
      if (nc.is_zero()) continue;
      auto it = work.find(nw);
      if (it == work.end()) {
        work.emplace(std::move(nw), std::move(nc));
      } else {
        it->second += nc;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return out;
}

// Resolve every overlap and inclusion ambiguity among rule leading words whose
// ambiguity word has length <= max_degree. Returns true when all resolve to 0;
// on failure writes a description of the first offending ambiguity.
inline bool check_confluence(const RewriteSystem& rs, int max_degree, std::string* diag = nullptr) {
  auto rules = rs.all_rules();
  for (auto& r : rs.det_family_rules(max_degree)) rules.push_back(std::move(r));
  auto word_poly = [&](Word w) { return Poly::monomial(rs.tag(), rs.n(), std::move(w)); };

  auto resolve = [&](const Poly& r1, const Poly& r2, const Word& ambiguity) {
    Poly d = normal_form(r1 - r2, rs);
    if (d.is_zero()) return true;
    if (diag) *diag = "unresolved ambiguity at word: " + word_str(ambiguity);
    return false;
  };

  for (const auto& A : rules)
    for (const auto& B : rules) {
      // proper overlaps: suffix of A.lead == prefix of B.lead
      size_t la = A.lead.size(), lb = B.lead.size();
      for (size_t o = 1; o < std::min(la, lb); ++o) {
        bool match = true;
        for (size_t i = 0; i < o; ++i)
          if (A.lead[la - o + i] != B.lead[i]) {
            match = false;
            break;
          }
        if (!match) continue;
        Word amb(A.lead.begin(), A.lead.end());
        amb.insert(amb.end(), B.lead.begin() + o, B.lead.end());
        if (static_cast<int>(amb.size()) > max_degree) continue;
        Word tail(B.lead.begin() + o, B.lead.end());
        Word head(A.lead.begin(), A.lead.end() - o);
        Poly route1 = A.repl * word_poly(tail);
        Poly route2 = word_poly(head) * B.repl;
        if (!resolve(route1, route2, amb)) return false;
      }
      // inclusions: B.lead properly inside A.lead
      if (lb < la && static_cast<int>(la) <= max_degree) {
        for (size_t p = 0; p + lb <= la; ++p) {
          bool match = true;
          for (size_t i = 0; i < lb; ++i)
            if (A.lead[p + i] != B.lead[i]) {
              match = false;
              break;
            }
          if (!match) continue;
          Word head(A.lead.begin(), A.lead.begin() + p);
          Word tail(A.lead.begin() + p + lb, A.lead.end());
          Poly route2 = word_poly(head) * B.repl * word_poly(tail);
          if (!resolve(A.repl, route2, A.lead)) return false;
        }
      }
    }
  return true;
}

// Number of irreducible words of length d: dynamic programming over the
// suffix automaton of the rule leading words. For the holomorphic matrix
// algebra this must equal C(n^2 + d - 1, d).
inline unsigned long long graded_dimension(Flavor flavor, int n, int d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: negative degree");
  if (d == 0) return 1;
  RewriteSystem rs = RewriteSystem::make(flavor, n);
  auto alphabet = rs.alphabet();
  auto rules = rs.all_rules();
  for (auto& r : rs.det_family_rules(d)) rules.push_back(std::move(r));
  size_t memory = 1;
  for (const auto& r : rules) memory = std::max(memory, r.lead.size() - 1);

  auto blocked = [&](const Word& suffix) {
    for (const auto& r : rules) {
      if (r.lead.size() > suffix.size()) continue;
      bool match = true;
      size_t off = suffix.size() - r.lead.size();
      for (size_t i = 0; i < r.lead.size(); ++i)
        if (suffix[off + i] != r.lead[i]) {
          match = false;
          break;
        }
      if (match) return true;
    }
    return false;
  };

  std::map<Word, unsigned long long> states;
  states[Word{}] = 1;
  for (int step = 0; step < d; ++step) {
    std::map<Word, unsigned long long> next;
    for (const auto& [state, count] : states)
      for (const Gen& g : alphabet) {
        Word s = state;
        s.push_back(g);
        if (blocked(s)) continue;
        if (s.size() > memory) s.erase(s.begin());
        next[s] += count;
      }
    states = std::move(next);
  }
  unsigned long long total = 0;
  for (const auto& [state, count] : states) total += count;
  return total;
}

}  // namespace qball
