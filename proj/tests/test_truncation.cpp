#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qball/truncation.hpp"

using namespace qball;

namespace {

// max_m |a e_m - b e_m| with both actions read through weight()
double factor_distance(const Factor& a, const Factor& b) {
  REQUIRE(a.dim() == b.dim());
  REQUIRE(a.offset == b.offset);
  double d = 0.0;
  for (int m = 0; m < a.dim(); ++m) d = std::max(d, std::abs(a.weight(m) - b.weight(m)));
  return d;
}

}  // namespace

TEST_CASE("truncation config validates its parameters") {
  REQUIRE_THROWS_AS(TruncationConfig(0.0, 8), std::invalid_argument);
  REQUIRE_THROWS_AS(TruncationConfig(1.0, 8), std::invalid_argument);
  REQUIRE_THROWS_AS(TruncationConfig(0.5, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(TruncationConfig(0.5, 8, 8), std::invalid_argument);
  TruncationConfig cfg(0.5, 8);
  REQUIRE(cfg.safe_degree == 7);
}

TEST_CASE("structural factors carry the expected weights") {
  double q = 0.6;
  int N = 10;
  Factor cqs = Factor::cq_shift(q, N);
  Factor scq = Factor::shift_adjoint_cq(q, N);
  for (int m = 0; m + 1 < N; ++m)
    REQUIRE(cqs.weight(m) == Catch::Approx(std::sqrt(1.0 - std::pow(q, 2.0 * (m + 1)))).margin(1e-15));
  REQUIRE(cqs.weight(N - 1) == 0.0);
  REQUIRE(scq.weight(0) == 0.0);
  for (int m = 1; m < N; ++m)
    REQUIRE(scq.weight(m) == Catch::Approx(std::sqrt(1.0 - std::pow(q, 2.0 * m))).margin(1e-15));
  REQUIRE(Factor::shift(N).weight(N - 1) == 0.0);
  REQUIRE(Factor::dq(q, N).weight(3) == Catch::Approx(q * q * q).margin(1e-15));
}

TEST_CASE("adjoint is exact and involutive on all factor kinds") {
  double q = 0.41;
  int N = 7;
  std::vector<Factor> kinds{Factor::identity(N),        Factor::shift(N),
                            Factor::shift_adjoint(N),   Factor::cq(q, N),
                            Factor::dq(q, N),           Factor::cq_shift(q, N),
                            Factor::shift_adjoint_cq(q, N)};
  for (const Factor& f : kinds) {
    Factor a = f.adjoint();
    // adjoint pairing <f e_m, e_p> = <e_m, a e_p> entry by entry
    for (int m = 0; m < N; ++m)
      for (int p = 0; p < N; ++p) {
        double lhs = (m + f.offset == p) ? f.weight(m) : 0.0;
        double rhs = (p + a.offset == m) ? a.weight(p) : 0.0;
        REQUIRE(lhs == rhs);
      }
    REQUIRE(factor_distance(a.adjoint(), f) == 0.0);
  }
  REQUIRE(Factor::shift_adjoint_cq(q, N) == Factor::cq_shift(q, N).adjoint());
}

TEST_CASE("composition multiplies weights along the staircase") {
  double q = 0.5;
  int N = 6;
  Factor prod = Factor::cq(q, N).compose(Factor::shift(N));
  REQUIRE(factor_distance(prod, Factor::cq_shift(q, N)) < 1e-15);
  // S* S = I except at the truncation edge, where the top level is lost
  Factor ss = Factor::shift_adjoint(N).compose(Factor::shift(N));
  for (int m = 0; m + 1 < N; ++m) REQUIRE(ss.weight(m) == 1.0);
  REQUIRE(ss.weight(N - 1) == 0.0);
  // composition marks products of non-identities as general
  REQUIRE(prod.kind == Factor::Kind::General);
  REQUIRE(Factor::identity(N).compose(Factor::shift(N)).kind == Factor::Kind::S);
}

TEST_CASE("rank one representation satisfies the unitary group relations") {
  TruncationConfig cfg(0.55, 24);
  int safe = cfg.N - 3;  // degree-2 words stay leak-free below this level
  auto t = [&](int i, int j) { return su2_rep(i, j, cfg); };
  // t11 t12 = q t12 t11 and friends
  struct Pair {
    Factor a, b;
    double scale;
  };
  std::vector<Pair> qcomm{{t(1, 1), t(1, 2), cfg.q}, {t(1, 1), t(2, 1), cfg.q},
                          {t(1, 2), t(2, 2), cfg.q}, {t(2, 1), t(2, 2), cfg.q},
                          {t(1, 2), t(2, 1), 1.0}};
  for (const auto& pc : qcomm) {
    Factor lhs = pc.a.compose(pc.b);
    Factor rhs = pc.b.compose(pc.a);
    for (int m = 0; m < safe; ++m)
      REQUIRE(lhs.weight(m) == Catch::Approx(pc.scale * rhs.weight(m)).margin(1e-14));
  }
  // t11 t22 - q t12 t21 = 1 on leak-free levels
  Factor det_main = t(1, 1).compose(t(2, 2));
  Factor det_off = t(1, 2).compose(t(2, 1));
  for (int m = 0; m < safe; ++m)
    REQUIRE(det_main.weight(m) - cfg.q * det_off.weight(m) == Catch::Approx(1.0).margin(1e-14));
  // unitarity: t11* t11 + t21* t21 = 1 away from the edge
  Factor col = t(1, 1).adjoint().compose(t(1, 1));
  Factor col2 = t(2, 1).adjoint().compose(t(2, 1));
  for (int m = 0; m < safe; ++m)
    REQUIRE(col.weight(m) + col2.weight(m) == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("series reconstructions converge at the advertised rate") {
  TruncationConfig cfg(0.7, 20);
  for (int terms : {1, 3, 8, 20, 40}) {
    SeriesCheckResult r = series_identities_check(cfg, terms);
    INFO("terms=" << terms << " cq=" << r.cq_residual << "/" << r.cq_bound << " dq="
                  << r.dq_residual << "/" << r.dq_bound);
    REQUIRE(r.pass);
  }
  // once every level is summed the identities are exact
  SeriesCheckResult exact = series_identities_check(cfg, cfg.N);
  REQUIRE(exact.cq_residual < 1e-13);
  REQUIRE(exact.dq_residual < 1e-13);
}

TEST_CASE("partial series stay close in the small-cutoff regime") {
  // residual for T < N is dominated by the tail starting at q^T
  TruncationConfig cfg(0.5, 64);
  SeriesCheckResult r = series_identities_check(cfg, 10);
  REQUIRE(r.pass);
  REQUIRE(r.dq_residual == Catch::Approx(std::pow(cfg.q, 10)).epsilon(1e-10));
}
