#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qball/boundary.hpp"
#include "qball/characters.hpp"
#include "qball/norms.hpp"
#include "qball/sampling.hpp"

using namespace qball;

namespace {

std::vector<double> random_angles(std::mt19937_64& eng, int n) {
  std::vector<double> phis(static_cast<size_t>(n));
  for (double& p : phis) p = 2.0 * M_PI * static_cast<double>(eng() % 4096) / 4096.0;
  return phis;
}

}  // namespace

TEST_CASE("torus character agrees with the slotwise symbol route") {
  std::mt19937_64 eng(61);
  for (int n = 1; n <= 3; ++n) {
    FockContext ctx(n, TruncationConfig(0.5, 4));
    SampleSpec spec{n, 3, 2, 4, false};
    for (int s = 0; s < 12; ++s) {
      Poly p = sample_polynomial(eng, spec);
      auto phis = random_angles(eng, n);
      Cx direct = character_chi(n, 0.5, phis, p);
      Cx via = character_via_tau(ctx, phis, p);
      INFO("n=" << n << " sample " << s);
      REQUIRE(std::abs(direct - via) < 1e-12);
    }
  }
}

TEST_CASE("character kills off-diagonal letters and conjugates stars") {
  std::vector<double> phis{0.4, 1.1};
  REQUIRE(std::abs(character_chi(2, 0.5, phis,
                                 Poly::generator(AlgTag::mat, 2, Gen::z(1, 2)))) == 0.0);
  Cx plain = character_chi(2, 0.5, phis, Poly::generator(AlgTag::mat, 2, Gen::z(1, 1)));
  Cx starred = character_chi(2, 0.5, phis, Poly::generator(AlgTag::mat, 2, Gen::z(1, 1, true)));
  // diagonal letter in row 1 carries modulus q^{1-n}
  REQUIRE(std::abs(plain - std::polar(std::pow(0.5, -1), phis[0])) < 1e-15);
  REQUIRE(std::abs(starred - std::conj(plain)) < 1e-15);
}

TEST_CASE("character is multiplicative on words") {
  std::mt19937_64 eng(67);
  SampleSpec spec{2, 2, 1, 2, false};
  std::vector<double> phis{2.2, 0.7};
  for (int s = 0; s < 10; ++s) {
    Poly f = sample_polynomial(eng, spec);
    Poly g = sample_polynomial(eng, spec);
    Cx lhs = character_chi(2, 0.5, phis, f * g);
    Cx rhs = character_chi(2, 0.5, phis, f) * character_chi(2, 0.5, phis, g);
    REQUIRE(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("composed factors refuse symbol evaluation") {
  REQUIRE_THROWS_AS(factor_symbol(Factor::Kind::General, 0.3), std::invalid_argument);
  FockContext ctx(1, TruncationConfig(0.5, 6));
  Poly z = Poly::generator(AlgTag::mat, 1, Gen::z(1, 1));
  TensorOp sq = ctx.poly_op(z * z);  // composed factor, General kind
  REQUIRE_THROWS_AS(evaluate_symbol(sq, {0.3}), std::invalid_argument);
}

TEST_CASE("coherent corner generator holds the vacuum at a phase") {
  for (int n = 1; n <= 3; ++n) {
    double psi = 1.9;
    CoherentRep rep(n, psi, TruncationConfig(0.5, 4));
    TensorVec v = rep.apply(Poly::generator(AlgTag::mat, n, Gen::z(1, 1)), rep.vacuum());
    double sgn = (n % 2 == 0) ? -1.0 : 1.0;
    TensorVec want = rep.vacuum();
    want.scale(sgn * Cx(std::cos(psi), std::sin(psi)));
    want -= v;
    REQUIRE(want.norm() == 0.0);
  }
}

TEST_CASE("coherent starred generators annihilate the vacuum") {
  CoherentRep rep(2, 0.8, TruncationConfig(0.5, 4));
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) {
      TensorVec v = rep.apply(Poly::generator(AlgTag::mat, 2, Gen::z(k, j, true)), rep.vacuum());
      if (j == 1 && k == 1) {
        // the corner line is an exact eigenvector, conjugate phase
        TensorVec want = rep.vacuum();
        want.scale(-Cx(std::cos(0.8), -std::sin(0.8)));
        want -= v;
        REQUIRE(want.norm() == 0.0);
      } else {
        REQUIRE(v.norm() == 0.0);
      }
    }
}

TEST_CASE("corner split reassembles every generator") {
  FockContext ctx(2, TruncationConfig(0.5, 4));
  CornerSplit split = split_corner(ctx);
  const int N = 4;
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) {
      TensorOp rebuilt = TensorOp::zero(4, N);
      for (const TensorTerm& t : split.A_part(j, k).terms()) {
        TensorTerm full;
        full.scalar = t.scalar;
        full.factors = t.factors;
        full.factors.insert(full.factors.begin() + 1, Factor::identity(N));
        rebuilt.add_term(std::move(full));
      }
      if (j == 1 && k == 1)
        for (const TensorTerm& t : split.B.terms()) {
          TensorTerm full;
          full.scalar = t.scalar;
          full.factors = t.factors;
          full.factors.insert(full.factors.begin() + 1, Factor::cq_shift(0.5, N));
          rebuilt.add_term(std::move(full));
        }
      REQUIRE(tensor_op_equal_exact(rebuilt, ctx.generator(j, k)));
    }
}

TEST_CASE("boundary representations reject non-reduced words") {
  REQUIRE(word_is_reduced(3, {1, 2, 1}));
  REQUIRE_FALSE(word_is_reduced(3, {1, 1}));
  REQUIRE_FALSE(word_is_reduced(3, {2, 1, 2, 1, 2, 1}));
  TruncationConfig cfg(0.5, 6);
  REQUIRE_THROWS_AS(BoundaryRep(2, {1, 1}, {0.1, 0.2}, cfg), std::invalid_argument);
  REQUIRE_NOTHROW(BoundaryRep(2, {1}, {0.1, 0.2}, cfg));
}

TEST_CASE("empty boundary word reproduces the torus character") {
  TruncationConfig cfg(0.5, 6);
  std::vector<double> phis{0.9, 2.4};
  BoundaryRep rep(2, {}, phis, cfg);
  std::mt19937_64 eng(71);
  SampleSpec spec{2, 3, 2, 4, false};
  for (int s = 0; s < 10; ++s) {
    Poly p = sample_polynomial(eng, spec);
    TensorOp op = rep.poly_op(p);
    Cx val = op.as_scalar();
    Cx chi = character_chi(2, cfg.q, phis, p);
    REQUIRE(std::abs(val - chi) < 1e-12);
  }
}

TEST_CASE("chained block representation keeps the t matrix unitary") {
  // sum_k pi(t_{ak})pi(t_{bk})* = delta_{ab} away from the truncation edge
  TruncationConfig cfg(0.5, 12);
  BoundaryRep rep(2, {1}, {0.0, 0.0}, cfg);
  NormOptions opt;
  opt.cap_level = cfg.N - 3;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      TensorOp sum = TensorOp::zero(1, cfg.N);
      for (int k = 1; k <= 2; ++k)
        sum += rep.sl_matrix_element(a, k) * rep.sl_matrix_element(b, k).adjoint();
      if (a == b) sum = sum - TensorOp::identity(1, cfg.N);
      REQUIRE(operator_norm_estimate(sum, opt) < 1e-12);
    }
}

TEST_CASE("boundary ideal generators vanish in a boundary representation") {
  TruncationConfig cfg(0.5, 10);
  std::vector<double> phis{1.3, 0.2};
  BoundaryRep rep(2, {1}, phis, cfg);
  NormOptions opt;
  opt.cap_level = cfg.N - 3;
  for (const Poly& g : boundary_ideal_generators(2)) {
    TensorOp img = rep.poly_op(g);
    REQUIRE(operator_norm_estimate(img, opt) < 1e-10);
  }
}
