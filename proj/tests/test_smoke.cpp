#include <catch2/catch_amalgamated.hpp>

#include "qball/algebra.hpp"
#include "qball/rewrite.hpp"

using namespace qball;

TEST_CASE("same-row generators q-commute") {
  auto rs = RewriteSystem::make(Flavor::mat_holo, 2);
  // z_1^1 z_1^2: same column, ascending rows
  Poly p = Poly::monomial(AlgTag::mat, 2, Word{Gen::z(1, 1), Gen::z(1, 2)});
  Poly nf = normal_form(p, rs);
  Poly want = Poly::monomial(AlgTag::mat, 2, Word{Gen::z(1, 2), Gen::z(1, 1)},
                             Coeff(Laurent::q_power(1)));
  REQUIRE(nf == want);
}

TEST_CASE("single-variable star relation") {
  auto rs = RewriteSystem::make(Flavor::mat_full, 1);
  Poly p = Poly::monomial(AlgTag::mat, 1, Word{Gen::z(1, 1, true), Gen::z(1, 1)});
  Poly nf = normal_form(p, rs);
  Poly want(AlgTag::mat, 1);
  want.add_term(Word{Gen::z(1, 1), Gen::z(1, 1, true)}, Coeff(Laurent::q_power(2)));
  want.add_term(Word{}, Coeff(Laurent::one() - Laurent::q_power(2)));
  REQUIRE(nf == want);
}

TEST_CASE("holomorphic graded dimension matches free symmetric count") {
  REQUIRE(graded_dimension(Flavor::mat_holo, 2, 2) == 10);
  REQUIRE(graded_dimension(Flavor::mat_holo, 2, 3) == 20);
}

TEST_CASE("determinant rule normalizes") {
  auto rs = RewriteSystem::make(Flavor::sl, 2);
  Poly det = q_determinant(AlgTag::sl, 2);
  Poly nf = normal_form(det, rs);
  REQUIRE(nf == Poly::one(AlgTag::sl, 2));
}
