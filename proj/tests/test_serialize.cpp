#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qball/homs.hpp"
#include "qball/sampling.hpp"
#include "qball/serialize.hpp"

using namespace qball;

TEST_CASE("polynomials print in canonical leading-first form") {
  Poly p(AlgTag::mat, 1);
  p.add_term(Word{Gen::z(1, 1), Gen::z(1, 1, true)}, Coeff(Laurent::q_power(2)));
  p.add_term(Word{}, Coeff(Laurent::one() - Laurent::q_power(2)));
  REQUIRE(poly_str(p) == "(q^2) z[1,1] z*[1,1] + (1 - q^2) 1");
  REQUIRE(poly_str(Poly::zero(AlgTag::mat, 1)) == "0");
  Poly m(AlgTag::sl, 2);
  m.add_term(Word{Gen::t(1, 2)}, Coeff(Laurent::half_power(1, Rational(3, 2))));
  REQUIRE(poly_str(m) == "(3/2 q^(1/2)) t[1,2]");
}

TEST_CASE("phase coefficients print with their frequency") {
  Poly p(AlgTag::mat, 1);
  p.add_term(Word{}, Coeff::phase_power(1, Laurent::q_power(-1)));
  REQUIRE(poly_str(p) == "((q^-1) e^{i phi}) 1");
  Poly c(AlgTag::mat, 1);
  c.add_term(Word{}, Coeff::phase_power(-2) + Coeff(Laurent::one()));
  REQUIRE(poly_str(c) == "((1) e^{-2i phi} + (1)) 1");
}

TEST_CASE("printed polynomials parse back unchanged") {
  std::mt19937_64 eng(73);
  for (int n = 1; n <= 2; ++n) {
    SampleSpec spec{n, 3, 2, 5, false};
    for (int s = 0; s < 25; ++s) {
      Poly p = sample_polynomial(eng, spec);
      Poly back = parse_poly(poly_str(p), AlgTag::mat, n);
      INFO(poly_str(p));
      REQUIRE(back == p);
    }
  }
}

TEST_CASE("phase-bearing and unitary-group polynomials round trip") {
  Poly p(AlgTag::mat, 2);
  p.add_term(Word{Gen::z(2, 2)}, Coeff::phase_power(1, Laurent::q_power(-1)) +
                                     Coeff(Laurent::half_power(3, Rational(1, 3))));
  p.add_term(Word{Gen::z(1, 2, true), Gen::z(2, 1)}, Coeff(Rational(-2)));
  REQUIRE(parse_poly(poly_str(p), AlgTag::mat, 2) == p);

  Poly t(AlgTag::sl, 2);
  t.add_term(Word{Gen::t(1, 1), Gen::t(2, 2, true)}, Coeff(Laurent::q_power(-3)));
  t.add_term(Word{Gen::t(2, 1)}, Coeff(Rational(5, 4)));
  REQUIRE(parse_poly(poly_str(t), AlgTag::sl, 2) == t);
}

TEST_CASE("star expansion survives a round trip through text") {
  Poly t = Poly::generator(AlgTag::sl, 2, Gen::t(1, 2));
  Poly expanded = star_sl(t);
  REQUIRE(parse_poly(poly_str(expanded), AlgTag::sl, 2) == expanded);
}

TEST_CASE("tensor elements print with explicit leg separators") {
  std::vector<TensorPoly::Leg> legs{{AlgTag::sl, 2}, {AlgTag::sl, 2}};
  TensorPoly t(legs);
  t.add_term({Word{Gen::t(1, 1)}, Word{Gen::t(1, 2)}}, Coeff::one());
  REQUIRE(tensor_str(t) == "(1) t[1,1] (x) t[1,2]");
  REQUIRE(tensor_str(TensorPoly(legs)) == "0");
}

TEST_CASE("malformed input is rejected with a parse error") {
  REQUIRE_THROWS_AS(parse_poly("(1 z[1,1]", AlgTag::mat, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_poly("(1) w[1,1]", AlgTag::mat, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_poly("(1) z[1,1] trailing", AlgTag::mat, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_poly("0 junk", AlgTag::mat, 1), std::invalid_argument);
}
