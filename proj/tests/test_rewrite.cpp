#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "qball/rewrite.hpp"
#include "qball/sampling.hpp"

using namespace qball;

namespace {

unsigned long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("every rule replaces its lead by strictly smaller words") {
  for (Flavor fl : {Flavor::mat_holo, Flavor::mat_full, Flavor::sl}) {
    for (int n = 1; n <= 3; ++n) {
      auto rs = RewriteSystem::make(fl, n);
      auto rules = rs.all_rules();
      for (auto& r : rs.det_family_rules(6)) rules.push_back(std::move(r));
      for (const auto& rule : rules) {
        for (const auto& [w, c] : rule.repl.terms()) {
          INFO(word_str(rule.lead) << " -> " << word_str(w));
          REQUIRE(word_order_less(w, rule.lead));
        }
      }
    }
  }
}

TEST_CASE("normal form is idempotent on random polynomials") {
  std::mt19937_64 eng(7);
  for (int n = 1; n <= 2; ++n) {
    auto rs = RewriteSystem::make(Flavor::mat_full, n);
    SampleSpec spec{n, 3, 2, 4, false};
    for (int s = 0; s < 20; ++s) {
      Poly p = sample_polynomial(eng, spec);
      Poly nf = normal_form(p, rs);
      REQUIRE(normal_form(nf, rs) == nf);
    }
  }
}

TEST_CASE("matrix-ball systems are confluent through degree three") {
  std::string diag;
  for (int n = 1; n <= 3; ++n) {
    INFO("n=" << n << " " << diag);
    REQUIRE(check_confluence(RewriteSystem::make(Flavor::mat_holo, n), 3, &diag));
    REQUIRE(check_confluence(RewriteSystem::make(Flavor::mat_full, n), 3, &diag));
  }
}

TEST_CASE("unit-determinant system is confluent for two by two") {
  std::string diag;
  auto rs = RewriteSystem::make(Flavor::sl, 2);
  INFO(diag);
  REQUIRE(check_confluence(rs, 5, &diag));
  // separated diagonal letters reduce through the parametric family
  Poly stuck = Poly::monomial(AlgTag::sl, 2, Word{Gen::t(2, 2), Gen::t(1, 2), Gen::t(1, 1)});
  Poly want(AlgTag::sl, 2);
  want.add_term(Word{Gen::t(1, 2)}, Coeff(Laurent::q_power(-1)));
  want.add_term(Word{Gen::t(2, 1), Gen::t(1, 2), Gen::t(1, 2)}, Coeff(Laurent::q_power(-2)));
  REQUIRE(normal_form(stuck, rs) == want);
}

TEST_CASE("graded dimensions match the free symmetric count") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d)
      REQUIRE(graded_dimension(Flavor::mat_holo, n, d) == binom(n * n + d - 1, d));
}

TEST_CASE("determinant rule removes one word at its own degree") {
  // below degree n the unit-determinant rule cannot fire; at degree n it
  // reduces exactly its own leading word
  for (int n = 2; n <= 3; ++n) {
    for (int d = 0; d < n; ++d)
      REQUIRE(graded_dimension(Flavor::sl, n, d) == binom(n * n + d - 1, d));
    REQUIRE(graded_dimension(Flavor::sl, n, n) == binom(n * n + n - 1, n) - 1);
  }
}

TEST_CASE("full star algebra counts pairs of symmetric words") {
  // degree-d basis: sum over a+b=d of dim_a(holo) * dim_b(anti)
  for (int n = 1; n <= 2; ++n)
    for (int d = 0; d <= 4; ++d) {
      unsigned long long want = 0;
      for (int a = 0; a <= d; ++a)
        want += binom(n * n + a - 1, a) * binom(n * n + (d - a) - 1, d - a);
      REQUIRE(graded_dimension(Flavor::mat_full, n, d) == want);
    }
}

TEST_CASE("determinant rule normalizes the q-determinant to one") {
  for (int n = 2; n <= 3; ++n) {
    auto rs = RewriteSystem::make(Flavor::sl, n);
    REQUIRE(normal_form(q_determinant(AlgTag::sl, n), rs) == Poly::one(AlgTag::sl, n));
  }
}

TEST_CASE("tiny step budget raises a budget error") {
  auto rs = RewriteSystem::make(Flavor::mat_full, 2);
  Word w;
  for (int i = 0; i < 4; ++i) {
    w.push_back(Gen::z(1, 1, true));
    w.push_back(Gen::z(2, 2));
  }
  Poly p = Poly::monomial(AlgTag::mat, 2, w);
  REQUIRE_THROWS_AS(normal_form(p, rs, 3), RewriteBudgetError);
  REQUIRE_NOTHROW(normal_form(p, rs));
}

TEST_CASE("normal form rejects polynomials from another algebra") {
  auto rs = RewriteSystem::make(Flavor::sl, 2);
  Poly p = Poly::generator(AlgTag::mat, 2, Gen::z(1, 1));
  REQUIRE_THROWS_AS(normal_form(p, rs), std::invalid_argument);
}
