// Acceptance gate: nine numbered criteria, one line each, nonzero exit on any
// failure. Tolerances and parameters are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qball/homs.hpp"
#include "qball/suites.hpp"
#include "qball/tensor_poly.hpp"

using namespace qball;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  return buf;
}

// Collapses a suite run into "worst residual over all checks" plus text.
Outcome from_report(const RunReport& rep) {
  Outcome o;
  o.pass = rep.pass();
  std::ostringstream ss;
  for (size_t i = 0; i < rep.checks.size(); ++i) {
    const CheckReport& c = rep.checks[i];
    if (i) ss << ", ";
    ss << c.name << " " << fmt(c.residual) << (c.pass ? " <= " : " > ") << fmt(c.tol);
  }
  o.detail = ss.str();
  return o;
}

Outcome merge(std::initializer_list<Outcome> parts) {
  Outcome o;
  o.pass = true;
  for (const Outcome& p : parts) {
    o.pass = o.pass && p.pass;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += p.detail;
  }
  return o;
}

SuiteConfig pinned(const std::string& suite, int n, double q, int N, int degree, uint64_t seed,
                   int samples) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.n = n;
  cfg.q = q;
  cfg.N = N;
  cfg.degree = degree;
  cfg.seed = seed;
  cfg.samples = samples;
  return cfg;
}

// 1: graded dimensions match the symmetric count for n <= 3, d <= 4, and both
//    matrix-ball rule systems resolve all degree-3 overlaps.
Outcome criterion_dimensions_confluence() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d) {
      const double got = static_cast<double>(graded_dimension(Flavor::mat_holo, n, d));
      const double want = static_cast<double>(binomial(n * n + d - 1, d));
      worst = std::max(worst, std::abs(got - want));
    }
  bool conf = true;
  std::string diag;
  for (int n = 1; n <= 3; ++n) {
    conf = conf && check_confluence(RewriteSystem::make(Flavor::mat_holo, n), 3, &diag);
    conf = conf && check_confluence(RewriteSystem::make(Flavor::mat_full, n), 3, &diag);
  }
  Outcome o;
  o.pass = worst == 0.0 && conf;
  o.detail = "dimension mismatch " + fmt(worst) + " = 0, overlaps " +
             (conf ? std::string("resolve") : "fail: " + diag);
  return o;
}

// 2: the path expansion of every generator equals the brute-force chain
//    expansion, exactly, for n = 2 (N = 6) and n = 3 (N = 3); the (3,1,1)
//    generator has 6 paths and its first diagram is pinned slot by slot.
Outcome criterion_fock_oracle() {
  Outcome a = from_report(run_suite(pinned("fock-oracle", 2, 0.5, 6, 3, 1, 1)));
  Outcome b = from_report(run_suite(pinned("fock-oracle", 3, 0.5, 3, 2, 1, 1)));

  Outcome pin;
  const auto paths = enumerate_paths(3, 1, 1);
  bool ok = paths.size() == 6;
  if (ok) {
    const CanonTerm first = paths.front().canon();
    auto K = [](Factor::Kind k) { return static_cast<uint8_t>(k); };
    const std::vector<uint8_t> want{K(Factor::Kind::Dq), K(Factor::Kind::Dq),
                                    K(Factor::Kind::CqS), K(Factor::Kind::I),
                                    K(Factor::Kind::I),   K(Factor::Kind::Dq),
                                    K(Factor::Kind::I),   K(Factor::Kind::I),
                                    K(Factor::Kind::Dq)};
    ok = first.kinds == want && first.qpow == 2 && first.sign == 1;
  }
  pin.pass = ok;
  pin.detail = std::string("corner path census ") + (ok ? "pinned" : "mismatch");
  return merge({a, b, pin});
}

// 3: all defining relations vanish on every leak-free basis vector within
//    1e-10, for n = 2 (N = 12) and n = 3 (N = 4).
Outcome criterion_relations() {
  Outcome a = from_report(run_suite(pinned("relations", 2, 0.5, 12, 3, 1, 1)));
  Outcome b = from_report(run_suite(pinned("relations", 3, 0.5, 4, 2, 1, 1)));
  return merge({a, b});
}

// 4: starred generators annihilate the vacuum exactly, and the monomial Gram
//    matrix for |m| <= 3 at n = 2 is diagonal within 1e-12.
Outcome criterion_vacuum_gram() {
  Outcome a = from_report(run_suite(pinned("vacuum", 2, 0.5, 8, 3, 1, 1)));
  Outcome b = from_report(run_suite(pinned("basis", 2, 0.5, 12, 3, 1, 1)));
  return merge({a, b});
}

// 5: the two character implementations agree within 1e-12 and the character
//    is dominated by the Fock norm plus the truncation allowance, on 100
//    seeded samples; the coherent corner eigenrelation and the corner split
//    are exact.
Outcome criterion_characters() {
  Outcome a = from_report(run_suite(pinned("character", 2, 0.5, 8, 3, 7, 100)));
  SuiteConfig co = pinned("coherent", 2, 0.5, 8, 3, 11, 1);
  co.tol["coherent"] = 0.0;
  Outcome b = from_report(run_suite(co));
  return merge({a, b});
}

// 6: every boundary-ideal generator is annihilated within 1e-10 by the
//    boundary representations over an 8x8 angle grid and all 3 stock words.
Outcome criterion_boundary_ideal() {
  return from_report(run_suite(pinned("boundary-ideal", 2, 0.5, 10, 3, 1, 1)));
}

// 7: at n = 1, q = 0.5, N = 256, the Fock norm matches the circle supremum
//    within 2% on 20 samples of degree <= 5; boundary values never exceed the
//    Fock norm plus allowance on 50 samples split across n = 1 and n = 2; the
//    truncation deficit is monotone along N in {32, 64, 128, 256}.
Outcome criterion_max_modulus() {
  Outcome a = from_report(run_suite(pinned("max-modulus", 1, 0.5, 256, 5, 3, 25)));
  Outcome b = from_report(run_suite(pinned("max-modulus", 2, 0.5, 8, 3, 5, 25)));
  return merge({a, b});
}

// 8: the finite block dilation of the weighted shift with 4 steps is unitary
//    and compresses to its powers within 1e-12.
Outcome criterion_dilation() {
  return from_report(run_suite(pinned("dilation", 1, 0.5, 16, 4, 1, 1)));
}

// 9: the symbolic Hopf layer at n = 2: coassociativity, counit, antipode
//    convolution, the square of the antipode, star-compatibility of the
//    transpose twist, and relation preservation under the two-sided coaction.
Outcome criterion_hopf() {
  auto rs = RewriteSystem::make(Flavor::sl, 2);
  auto mat_rs = RewriteSystem::make(Flavor::mat_full, 2);
  std::vector<const RewriteSystem*> three{&rs, &rs, &rs};
  int failures = 0;
  std::string first_bad;
  auto record = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (first_bad.empty()) first_bad = what;
    }
  };

  std::vector<Poly> gens;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) gens.push_back(Poly::generator(AlgTag::sl, 2, Gen::t(i, j)));

  for (const Poly& g : gens) {
    TensorPoly d = comultiply(g, rs);
    auto expand = [&](const Word& w) { return comultiply(Poly::monomial(AlgTag::sl, 2, w), rs); };
    record(d.expand_leg(0, expand).normalize_legs(three) ==
               d.expand_leg(1, expand).normalize_legs(three),
           "coassociativity");
    auto eps = [](const Word& w) { return counit(Poly::monomial(AlgTag::sl, 2, w)); };
    record(d.collapse_leg(0, eps).to_poly() == g, "counit left");
    record(d.collapse_leg(1, eps).to_poly() == g, "counit right");
    Poly conv_l = Poly::zero(AlgTag::sl, 2);
    Poly conv_r = Poly::zero(AlgTag::sl, 2);
    for (const auto& [k, c] : d.terms()) {
      Poly w1 = Poly::monomial(AlgTag::sl, 2, k[0]);
      Poly w2 = Poly::monomial(AlgTag::sl, 2, k[1]);
      conv_l += (antipode(w1, rs) * w2).scaled(c);
      conv_r += (w1 * antipode(w2, rs)).scaled(c);
    }
    Poly want = Poly::one(AlgTag::sl, 2).scaled(counit(g));
    record(normal_form(conv_l, rs) == want, "antipode convolution left");
    record(normal_form(conv_r, rs) == want, "antipode convolution right");
  }

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Poly g = Poly::generator(AlgTag::sl, 2, Gen::t(i, j));
      record(antipode(antipode(g, rs), rs) ==
                 g.scaled(Coeff(Laurent::q_power(2 * (i - j)))),
             "antipode square");
      Poly lhs = apply_hom(HomSpec::theta(2), star_sl(g), rs);
      Poly rhs = normal_form(star_sl(apply_hom(HomSpec::theta(2), g, rs)), rs);
      record(lhs == rhs, "twist star compatibility");
    }

  for (const auto& rule : mat_rs.all_rules()) {
    Poly diff = Poly::monomial(AlgTag::mat, 2, rule.lead) - rule.repl;
    record(coaction_Dn(diff, mat_rs, rs).is_zero(),
           "coaction on " + word_str(rule.lead));
  }

  Outcome o;
  o.pass = failures == 0;
  o.detail = failures == 0 ? "all identities hold symbolically"
                           : std::to_string(failures) + " identities fail, first: " + first_bad;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "graded dimensions and confluence", 30.0, criterion_dimensions_confluence},
      {2, "generator path calculus against brute force", 60.0, criterion_fock_oracle},
      {3, "defining relations on leak-free levels", 300.0, criterion_relations},
      {4, "vacuum annihilation and monomial gram matrix", 300.0, criterion_vacuum_gram},
      {5, "characters, coherent vectors, corner split", 300.0, criterion_characters},
      {6, "boundary ideal in boundary representations", 300.0, criterion_boundary_ideal},
      {7, "max-modulus bounds and truncation deficits", 600.0, criterion_max_modulus},
      {8, "finite block dilation", 60.0, criterion_dilation},
      {9, "symbolic coalgebra identities", 60.0, criterion_hopf},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count() /
        1000.0;
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += " [over time budget " + std::to_string(c.budget_s) + "s]";
    }
    std::printf("[%s] %d %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.label, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
