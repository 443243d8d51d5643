#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qball/fock.hpp"
#include "qball/rewrite.hpp"

using namespace qball;

namespace {

unsigned long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("path expansion equals the brute-force chain expansion") {
  for (int n = 1; n <= 2; ++n)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        INFO("n=" << n << " j=" << j << " k=" << k);
        REQUIRE(path_generator_terms(n, j, k) == brute_force_generator_terms(n, j, k));
      }
  // one third-rank pair; the full sweep lives in the verification suite
  REQUIRE(path_generator_terms(3, 2, 3) == brute_force_generator_terms(3, 2, 3));
}

TEST_CASE("rendered generators agree between both expansions") {
  TruncationConfig cfg(0.5, 4);
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) {
      TensorOp a = canon_terms_to_op(path_generator_terms(2, j, k), 4, j - 2, cfg);
      TensorOp b = canon_terms_to_op(brute_force_generator_terms(2, j, k), 4, j - 2, cfg);
      REQUIRE(tensor_op_equal_exact(a, b));
    }
}

TEST_CASE("path counts follow the lattice binomial") {
  for (int n = 1; n <= 4; ++n)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        REQUIRE(enumerate_paths(n, j, k).size() == binom(2 * n - j - k, n - j));
}

TEST_CASE("the straight route is enumerated first") {
  auto paths = enumerate_paths(3, 1, 1);
  REQUIRE(paths.size() == 6);
  CanonTerm first = paths.front().canon();
  auto K = [](Factor::Kind k) { return static_cast<uint8_t>(k); };
  std::vector<uint8_t> want{K(Factor::Kind::Dq), K(Factor::Kind::Dq), K(Factor::Kind::CqS),
                            K(Factor::Kind::I),  K(Factor::Kind::I),  K(Factor::Kind::Dq),
                            K(Factor::Kind::I),  K(Factor::Kind::I),  K(Factor::Kind::Dq)};
  REQUIRE(first.kinds == want);
  REQUIRE(first.qpow == 2);
  REQUIRE(first.sign == 1);
}

TEST_CASE("every admissible path turns the corner exactly where it hooks") {
  for (int n = 1; n <= 3; ++n)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (const auto& d : enumerate_paths(n, j, k)) {
          CanonTerm t = d.canon();  // throws when the right hook is missing
          int hooks = 0;
          for (uint8_t kk : t.kinds)
            if (kk == static_cast<uint8_t>(Factor::Kind::CqS)) ++hooks;
          REQUIRE(hooks >= 1);
        }
}

TEST_CASE("starred generators annihilate the vacuum exactly") {
  for (int n = 1; n <= 2; ++n) {
    FockContext ctx(n, TruncationConfig(0.5, 5));
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Poly zs = Poly::generator(AlgTag::mat, n, Gen::z(k, j, true));
        TensorVec out = ctx.apply(zs, ctx.vacuum());
        REQUIRE(out.norm() == 0.0);
      }
  }
}

TEST_CASE("words that could reach the truncation edge are rejected") {
  FockContext ctx(1, TruncationConfig(0.5, 6));
  Poly z = Poly::generator(AlgTag::mat, 1, Gen::z(1, 1));
  Poly deg3 = z * z * z;
  TensorVec lvl3 = TensorVec::basis(1, 6, {3});
  REQUIRE_THROWS_AS(ctx.apply(deg3, lvl3), LeakError);
  REQUIRE_NOTHROW(ctx.apply(z * z, lvl3));
  REQUIRE_NOTHROW(ctx.apply(deg3, lvl3, false));
}

TEST_CASE("defining relations vanish on leak-free levels") {
  auto rs = RewriteSystem::make(Flavor::mat_full, 1);
  FockContext ctx(1, TruncationConfig(0.5, 10));
  for (const auto& rule : rs.all_rules()) {
    Poly diff = Poly::monomial(AlgTag::mat, 1, rule.lead) - rule.repl;
    for (int m = 0; m <= 10 - 3; ++m) {
      TensorVec v = ctx.apply(diff, TensorVec::basis(1, 10, {m}));
      INFO("level " << m << " lead " << word_str(rule.lead));
      REQUIRE(v.norm() < 1e-14);
    }
  }
}

TEST_CASE("monomial vectors are orthogonal across exponents") {
  FockContext ctx(2, TruncationConfig(0.5, 8));
  std::vector<std::vector<int>> exps;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          if (a + b + c + d <= 2) exps.push_back({a, b, c, d});
  std::vector<TensorVec> vecs;
  for (const auto& e : exps) vecs.push_back(fock_basis_vector(ctx, e));
  for (size_t i = 0; i < vecs.size(); ++i) {
    REQUIRE(vecs[i].norm() > 1e-8);
    for (size_t j = i + 1; j < vecs.size(); ++j)
      REQUIRE(std::abs(vecs[i].inner(vecs[j])) < 1e-12);
  }
}

TEST_CASE("generator adjoints satisfy the inner product pairing") {
  FockContext ctx(2, TruncationConfig(0.6, 4));
  std::mt19937_64 eng(53);
  auto rnd = [&] {
    return (static_cast<double>(eng() % 2048) / 1024.0) - 1.0;
  };
  TensorVec u = ctx.vacuum(), v = ctx.vacuum();
  for (auto& x : u.a) x = Cx(rnd(), rnd());
  for (auto& x : v.a) x = Cx(rnd(), rnd());
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) {
      Cx lhs = ctx.generator(j, k).apply(u).inner(v);
      Cx rhs = u.inner(ctx.generator_adjoint(j, k).apply(v));
      REQUIRE(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("sparse basis application matches the dense action") {
  FockContext ctx(1, TruncationConfig(0.5, 8));
  Poly z = Poly::generator(AlgTag::mat, 1, Gen::z(1, 1));
  Poly p = z * z + Poly::generator(AlgTag::mat, 1, Gen::z(1, 1, true)).scaled(Coeff(Rational(2)));
  for (int m = 1; m <= 5; ++m) {
    SparseVec sv(1, 8);
    ctx.apply_to_basis(p, {m}, sv);
    TensorVec dense = ctx.apply(p, TensorVec::basis(1, 8, {m}));
    // compare entrywise through the packed index
    double diff = 0.0;
    for (int lvl = 0; lvl < 8; ++lvl) {
      Cx s(0.0, 0.0);
      auto it = sv.a.find(sv.pack({lvl}));
      if (it != sv.a.end()) s = it->second;
      diff = std::max(diff, std::abs(s - dense.a[static_cast<size_t>(lvl)]));
    }
    REQUIRE(diff < 1e-14);
  }
}
