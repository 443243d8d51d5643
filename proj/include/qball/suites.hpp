#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "qball/boundary.hpp"
#include "qball/characters.hpp"
#include "qball/dilation.hpp"
#include "qball/fock.hpp"
#include "qball/norms.hpp"
#include "qball/paths.hpp"
#include "qball/report.hpp"
#include "qball/rewrite.hpp"
#include "qball/sampling.hpp"

namespace qball {

inline int thread_budget() {
    if (const char* s = std::getenv("QBALL_THREADS")) {
        const int t = std::atoi(s);
        if (t >= 1) return t;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in 0..count-1 on up to thread_budget() workers; tasks must
// be read-only over shared inputs. The first exception wins and is rethrown.
template <typename F>
inline void parallel_for(int count, F&& fn) {
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            while (!failed.load(std::memory_order_relaxed)) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct SuiteConfig {
    std::string suite;
    int n = 2;
    double q = 0.5;
    int N = 8;
    int degree = 3;
    uint64_t seed = 1;
    int samples = 20;
    std::string out_path;
    std::map<std::string, double> tol;

    double tol_or(const std::string& key, double fallback) const {
        auto it = tol.find(key);
        return it == tol.end() ? fallback : it->second;
    }

    TruncationConfig truncation() const { return TruncationConfig(q, N, std::min(degree, N - 1)); }
};

// Truncation allowance for comparing boundary values against Fock norms:
// a slowly decaying polynomial floor dominates the measured norm deficit,
// the exponential term covers the largest truncated weight.
inline double eps_policy(double q, int N, int degree, double scale) {
    const double floor_poly = 4.0 * static_cast<double>(degree) * static_cast<double>(degree) / (static_cast<double>(N) * N);
    const double floor_exp = 10.0 * std::pow(q, std::max(0, N - degree));
    return (floor_exp + floor_poly) * std::max(1.0, scale);
}

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    return r;
}

// Stock reduced words for boundary sampling: the torus fiber, the staircase
// s_{n-1} ... s_1, and one reduced expression of the longest element.
inline std::vector<std::vector<int>> stock_boundary_words(int n) {
    std::vector<std::vector<int>> words;
    words.push_back({});
    std::vector<int> staircase;
    for (int i = n - 1; i >= 1; --i) staircase.push_back(i);
    words.push_back(staircase);
    std::vector<int> longest;
    for (int k = 1; k <= n - 1; ++k)
        for (int i = k; i >= 1; --i) longest.push_back(i);
    words.push_back(longest);
    return words;
}

// Largest boundary value of p over a phi-grid of the given resolution and the
// stock word set. For n = 1 the boundary family is the circle of characters.
inline double boundary_supremum(int n, const Poly& p, const TruncationConfig& cfg, int grid) {
    const double step = 2.0 * M_PI / grid;
    double best = 0.0;
    if (n == 1) {
        for (int g = 0; g < grid; ++g) best = std::max(best, std::abs(character_chi(1, cfg.q, {g * step}, p)));
        return best;
    }
    std::vector<std::vector<int>> words = stock_boundary_words(n);
    const int points = static_cast<int>(std::pow(grid, n) + 0.5);
    for (const auto& word : words) {
        std::vector<double> sups(static_cast<size_t>(points), 0.0);
        parallel_for(points, [&](int gidx) {
            std::vector<double> phis(static_cast<size_t>(n));
            int rest = gidx;
            for (int a = 0; a < n; ++a) {
                phis[static_cast<size_t>(a)] = (rest % grid) * step;
                rest /= grid;
            }
            if (word.empty()) {
                sups[static_cast<size_t>(gidx)] = std::abs(character_chi(n, cfg.q, phis, p));
            } else {
                BoundaryRep br(n, word, phis, cfg);
                sups[static_cast<size_t>(gidx)] =
                    operator_norm_estimate(br.poly_op(p), {1e-12, 1500, cfg.N - 1 - std::max(p.degree(), 0), false});
            }
        });
        for (double s : sups) best = std::max(best, s);
    }
    return best;
}

namespace suites {

inline RunReport relations(const SuiteConfig& cfg) {
    RunReport rep{"relations", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    timed_check(rep, "defining_relations_on_leak_free_basis", cfg.tol_or("relations", 1e-10), [&]() {
        FockContext ctx(cfg.n, tc);
        auto rs = RewriteSystem::make(Flavor::mat_full, cfg.n);
        const auto rules = rs.all_rules();
        const int cap = tc.N - 1 - 2;
        if (cap < 0) throw std::invalid_argument("relations: truncation too small for degree-2 relations");
        const int slots = cfg.n * cfg.n;
        std::vector<double> worst(rules.size(), 0.0);
        parallel_for(static_cast<int>(rules.size()), [&](int r) {
            const Poly diff = Poly::monomial(AlgTag::mat, cfg.n, rules[static_cast<size_t>(r)].lead) - rules[static_cast<size_t>(r)].repl;
            std::vector<int> m(static_cast<size_t>(slots), 0);
            while (true) {
                SparseVec out(slots, tc.N);
                ctx.apply_to_basis(diff, m, out);
                worst[static_cast<size_t>(r)] = std::max(worst[static_cast<size_t>(r)], out.norm());
                int s = 0;
                while (s < slots && m[static_cast<size_t>(s)] == cap) m[static_cast<size_t>(s++)] = 0;
                if (s == slots) break;
                ++m[static_cast<size_t>(s)];
            }
        });
        double w = 0.0;
        for (double x : worst) w = std::max(w, x);
        return w;
    });
    return rep;
}

inline RunReport confluence(const SuiteConfig& cfg) {
    RunReport rep{"confluence", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    for (Flavor fl : {Flavor::mat_holo, Flavor::mat_full}) {
        const char* label = fl == Flavor::mat_holo ? "overlaps_resolve_holomorphic" : "overlaps_resolve_full";
        timed_check(rep, label, 0.0, [&]() {
            auto rs = RewriteSystem::make(fl, cfg.n);
            std::string diag;
            return check_confluence(rs, cfg.degree, &diag) ? 0.0 : 1.0;
        });
    }
    return rep;
}

inline RunReport dimensions(const SuiteConfig& cfg) {
    RunReport rep{"dimensions", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    timed_check(rep, "graded_dimensions_match_free_symmetric_count", 0.0, [&]() {
        double worst = 0.0;
        for (int d = 0; d <= cfg.degree; ++d) {
            const uint64_t got = graded_dimension(Flavor::mat_holo, cfg.n, d);
            const uint64_t want = binomial(cfg.n * cfg.n + d - 1, d);
            worst = std::max(worst, std::abs(static_cast<double>(got) - static_cast<double>(want)));
        }
        return worst;
    });
    return rep;
}

inline RunReport fock_oracle(const SuiteConfig& cfg) {
    RunReport rep{"fock-oracle", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    timed_check(rep, "path_terms_equal_chain_expansion", 0.0, [&]() {
        int mismatches = 0;
        for (int j = 1; j <= cfg.n; ++j)
            for (int k = 1; k <= cfg.n; ++k) {
                const auto fast = path_generator_terms(cfg.n, j, k);
                const auto slow = brute_force_generator_terms(cfg.n, j, k);
                if (fast != slow) ++mismatches;
                const TensorOp a = canon_terms_to_op(fast, cfg.n * cfg.n, j - cfg.n, tc);
                const TensorOp b = canon_terms_to_op(slow, cfg.n * cfg.n, j - cfg.n, tc);
                if (!tensor_op_equal_exact(a, b)) ++mismatches;
            }
        return static_cast<double>(mismatches);
    });
    timed_check(rep, "path_counts_are_binomial", 0.0, [&]() {
        double worst = 0.0;
        for (int j = 1; j <= cfg.n; ++j)
            for (int k = 1; k <= cfg.n; ++k)
                worst = std::max(worst, std::abs(static_cast<double>(enumerate_paths(cfg.n, j, k).size()) -
                                                 static_cast<double>(binomial(2 * cfg.n - j - k, cfg.n - j))));
        return worst;
    });
    return rep;
}

inline RunReport vacuum(const SuiteConfig& cfg) {
    RunReport rep{"vacuum", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    timed_check(rep, "starred_generators_annihilate_vacuum", cfg.tol_or("vacuum", 0.0), [&]() {
        FockContext ctx(cfg.n, cfg.truncation());
        double worst = 0.0;
        for (int j = 1; j <= cfg.n; ++j)
            for (int k = 1; k <= cfg.n; ++k)
                worst = std::max(worst, ctx.generator_adjoint(j, k).apply(ctx.vacuum()).norm());
        return worst;
    });
    return rep;
}

inline RunReport basis(const SuiteConfig& cfg) {
    RunReport rep{"basis", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    FockContext ctx(cfg.n, tc);
    const int slots = cfg.n * cfg.n;

    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<size_t>(slots), 0);
    const int budget = cfg.degree;
    // all exponent multi-indices with |m| <= budget
    while (true) {
        int total = 0;
        for (int e : cur) total += e;
        if (total <= budget) exps.push_back(cur);
        int s = 0;
        while (s < slots && cur[static_cast<size_t>(s)] == budget) cur[static_cast<size_t>(s++)] = 0;
        if (s == slots) break;
        ++cur[static_cast<size_t>(s)];
    }

    std::vector<TensorVec> vecs;
    vecs.reserve(exps.size());
    for (const auto& e : exps) vecs.push_back(fock_basis_vector(ctx, e));

    timed_check(rep, "basis_gram_off_diagonal", cfg.tol_or("basis", 1e-12), [&]() {
        double worst = 0.0;
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = i + 1; j < vecs.size(); ++j) worst = std::max(worst, std::abs(vecs[i].inner(vecs[j])));
        return worst;
    });
    timed_check(rep, "basis_gram_diagonal_positive", 0.0, [&]() {
        for (const TensorVec& v : vecs)
            if (!(v.norm() > 0.0)) return 1.0;
        return 0.0;
    });
    return rep;
}

inline RunReport character(const SuiteConfig& cfg) {
    RunReport rep{"character", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    FockContext ctx(cfg.n, tc);

    std::mt19937_64 eng(cfg.seed);
    std::vector<Poly> polys;
    std::vector<std::vector<double>> angles;
    for (int s = 0; s < cfg.samples; ++s) {
        polys.push_back(sample_polynomial(eng, {cfg.n, cfg.degree, 2, 5, false}));
        std::vector<double> phis(static_cast<size_t>(cfg.n));
        for (double& x : phis) x = 2.0 * M_PI * static_cast<double>(eng() % 4096) / 4096.0;
        angles.push_back(std::move(phis));
    }

    timed_check(rep, "character_direct_equals_slotwise_symbol", cfg.tol_or("character", 1e-12), [&]() {
        std::vector<double> worst(polys.size(), 0.0);
        parallel_for(static_cast<int>(polys.size()), [&](int i) {
            const Cx a = character_chi(cfg.n, cfg.q, angles[static_cast<size_t>(i)], polys[static_cast<size_t>(i)]);
            const Cx b = character_via_tau(ctx, angles[static_cast<size_t>(i)], polys[static_cast<size_t>(i)]);
            worst[static_cast<size_t>(i)] = std::abs(a - b);
        });
        double w = 0.0;
        for (double x : worst) w = std::max(w, x);
        return w;
    });

    timed_check(rep, "character_bounded_by_fock_norm", 0.0, [&]() {
        std::vector<double> margin(polys.size(), -1.0);
        parallel_for(static_cast<int>(polys.size()), [&](int i) {
            const Poly& p = polys[static_cast<size_t>(i)];
            const double chi = std::abs(character_chi(cfg.n, cfg.q, angles[static_cast<size_t>(i)], p));
            const double fock = operator_norm_estimate(ctx.poly_op(p), {1e-11, 300, -1, false});
            margin[static_cast<size_t>(i)] = chi - fock - eps_policy(cfg.q, cfg.N, std::max(p.degree(), 0), chi);
        });
        double w = -1.0;
        for (double x : margin) w = std::max(w, x);
        return w;
    });
    return rep;
}

inline RunReport coherent(const SuiteConfig& cfg) {
    RunReport rep{"coherent", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    const double psi = 2.0 * M_PI * static_cast<double>(cfg.seed % 4096) / 4096.0;

    timed_check(rep, "corner_generator_acts_as_phase_on_vacuum", cfg.tol_or("coherent", 1e-14), [&]() {
        CoherentRep rep_psi(cfg.n, psi, tc);
        const TensorVec om = rep_psi.vacuum();
        const Cx want = std::polar(1.0, psi) * ((cfg.n % 2 == 0) ? -1.0 : 1.0);
        TensorVec img = rep_psi.apply(Poly::generator(AlgTag::mat, cfg.n, Gen::z(1, 1)), om);
        TensorVec expect = om;
        expect.scale(want);
        img -= expect;
        double worst = img.norm();
        TensorVec img2 = rep_psi.apply(Poly::generator(AlgTag::mat, cfg.n, Gen::z(1, 1, true)), om);
        TensorVec expect2 = om;
        expect2.scale(std::conj(want));
        img2 -= expect2;
        worst = std::max(worst, img2.norm());
        return worst;
    });

    timed_check(rep, "other_starred_generators_annihilate_vacuum", 0.0, [&]() {
        CoherentRep rep_psi(cfg.n, psi, tc);
        const TensorVec om = rep_psi.vacuum();
        double worst = 0.0;
        for (int j = 1; j <= cfg.n; ++j)
            for (int k = 1; k <= cfg.n; ++k) {
                if (j == 1 && k == 1) continue;
                worst = std::max(worst, rep_psi.apply(Poly::generator(AlgTag::mat, cfg.n, Gen::z(k, j, true)), om).norm());
            }
        return worst;
    });

    timed_check(rep, "corner_split_recomposes_generators", 0.0, [&]() {
        FockContext ctx(cfg.n, tc);
        const CornerSplit sp = split_corner(ctx);
        const int slots = cfg.n * cfg.n;
        double mismatches = 0.0;
        for (int j = 1; j <= cfg.n; ++j)
            for (int k = 1; k <= cfg.n; ++k) {
                TensorOp rebuilt(slots, tc.N);
                auto embed = [&](const TensorOp& part, const Factor& corner) {
                    for (const TensorTerm& t : part.terms()) {
                        TensorTerm u;
                        u.scalar = t.scalar;
                        for (int s = 0; s < slots; ++s) {
                            if (s == cfg.n - 1)
                                u.factors.push_back(corner);
                            else
                                u.factors.push_back(t.factors[static_cast<size_t>(s < cfg.n - 1 ? s : s - 1)]);
                        }
                        rebuilt.add_term(std::move(u));
                    }
                };
                embed(sp.A_part(j, k), Factor::identity(tc.N));
                if (j == 1 && k == 1) embed(sp.B, Factor::cq_shift(tc.q, tc.N));
                if (!tensor_op_equal_exact(rebuilt, ctx.generator(j, k))) mismatches += 1.0;
            }
        return mismatches;
    });
    return rep;
}

inline RunReport boundary_ideal(const SuiteConfig& cfg) {
    RunReport rep{"boundary-ideal", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    timed_check(rep, "ideal_generators_vanish_in_boundary_reps", cfg.tol_or("boundary", 1e-10), [&]() {
        const auto gens = boundary_ideal_generators(cfg.n);
        const auto words = stock_boundary_words(cfg.n);
        const int grid = 8;
        const int points = static_cast<int>(std::pow(grid, cfg.n) + 0.5);
        const double step = 2.0 * M_PI / grid;
        std::vector<double> worst(static_cast<size_t>(points), 0.0);
        for (const auto& word : words) {
            parallel_for(points, [&](int gidx) {
                std::vector<double> phis(static_cast<size_t>(cfg.n));
                int rest = gidx;
                for (int a = 0; a < cfg.n; ++a) {
                    phis[static_cast<size_t>(a)] = (rest % grid) * step;
                    rest /= grid;
                }
                double local = 0.0;
                if (word.empty()) {
                    for (const Poly& g : gens) local = std::max(local, std::abs(character_chi(cfg.n, cfg.q, phis, g)));
                } else {
                    BoundaryRep br(cfg.n, word, phis, tc);
                    for (const Poly& g : gens)
                        local = std::max(local, operator_norm_estimate(br.poly_op(g), {1e-12, 2000, tc.N - 3, false}));
                }
                worst[static_cast<size_t>(gidx)] = std::max(worst[static_cast<size_t>(gidx)], local);
            });
        }
        double w = 0.0;
        for (double x : worst) w = std::max(w, x);
        return w;
    });
    return rep;
}

inline RunReport dilation(const SuiteConfig& cfg) {
    RunReport rep{"dilation", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    const TruncationConfig tc = cfg.truncation();
    const int steps = std::max(2, std::min(cfg.degree, 8));
    timed_check(rep, "block_unitary_is_unitary", cfg.tol_or("dilation", 1e-12), [&]() {
        FockContext ctx(1, tc);
        return finite_dilation(tensor_op_matrix(ctx.generator(1, 1)), steps).unitarity_residual;
    });
    timed_check(rep, "compressions_reproduce_powers", cfg.tol_or("dilation", 1e-12), [&]() {
        FockContext ctx(1, tc);
        return finite_dilation(tensor_op_matrix(ctx.generator(1, 1)), steps).max_compression_residual;
    });
    return rep;
}

inline RunReport max_modulus(const SuiteConfig& cfg) {
    RunReport rep{"max-modulus", cfg.n, cfg.q, cfg.N, cfg.seed, {}};
    std::mt19937_64 eng(cfg.seed);
    std::vector<Poly> polys;
    for (int s = 0; s < cfg.samples; ++s) polys.push_back(sample_polynomial(eng, {cfg.n, cfg.degree, 2, 5, true}));

    const int grid = cfg.n == 1 ? 4096 : 8;

    if (cfg.n == 1) {
        timed_check(rep, "fock_norm_matches_circle_supremum", cfg.tol_or("relative", 0.02), [&]() {
            const TruncationConfig tc = cfg.truncation();
            FockContext ctx(1, tc);
            std::vector<double> rel(polys.size(), 0.0);
            parallel_for(static_cast<int>(polys.size()), [&](int i) {
                const double fock = operator_norm_estimate(ctx.poly_op(polys[static_cast<size_t>(i)]), {1e-13, 20000, -1, false});
                const double sup = boundary_supremum(1, polys[static_cast<size_t>(i)], tc, grid);
                rel[static_cast<size_t>(i)] = std::abs(fock - sup) / std::max(sup, 1e-12);
            });
            double w = 0.0;
            for (double x : rel) w = std::max(w, x);
            return w;
        });
        timed_check(rep, "truncation_deficit_decreases", 0.0, [&]() {
            const std::vector<int> ladder{32, 64, 128, 256};
            std::vector<std::vector<double>> deficits(polys.size());
            parallel_for(static_cast<int>(polys.size()), [&](int i) {
                for (int NN : ladder) {
                    const TruncationConfig tc(cfg.q, NN, std::min(cfg.degree, NN - 1));
                    FockContext ctx(1, tc);
                    const double fock = operator_norm_estimate(ctx.poly_op(polys[static_cast<size_t>(i)]), {1e-13, 20000, -1, false});
                    const double sup = boundary_supremum(1, polys[static_cast<size_t>(i)], tc, grid);
                    deficits[static_cast<size_t>(i)].push_back(sup - fock);
                }
            });
            double worst = -1.0;
            for (const auto& d : deficits)
                for (size_t t = 1; t < d.size(); ++t) worst = std::max(worst, d[t] - d[t - 1] - 1e-6);
            return std::max(worst, 0.0);
        });
    }

    timed_check(rep, "boundary_norms_below_fock_norm", 0.0, [&]() {
        const TruncationConfig tc = cfg.truncation();
        FockContext ctx(cfg.n, tc);
        const int sup_grid = cfg.n == 1 ? 64 : 8;
        const NormOptions fock_opt = cfg.n == 1 ? NormOptions{1e-13, 20000, -1, false} : NormOptions{1e-12, 600, -1, false};
        std::vector<double> margin(polys.size(), -1.0);
        parallel_for(static_cast<int>(polys.size()), [&](int i) {
            const Poly& p = polys[static_cast<size_t>(i)];
            const double fock = operator_norm_estimate(ctx.poly_op(p), fock_opt);
            const double bdd = boundary_supremum(cfg.n, p, tc, sup_grid);
            margin[static_cast<size_t>(i)] = bdd - fock - eps_policy(cfg.q, cfg.N, std::max(p.degree(), 0), bdd);
        });
        double w = -1.0;
        for (double x : margin) w = std::max(w, x);
        return w;
    });
    return rep;
}

}  // namespace suites

inline RunReport run_suite(const SuiteConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("run_suite: n must be >= 1");
    if (!(cfg.q > 0.0 && cfg.q < 1.0)) throw std::invalid_argument("run_suite: q must lie in (0,1)");
    if (cfg.N < 2) throw std::invalid_argument("run_suite: truncation must be >= 2");
    if (cfg.degree < 0) throw std::invalid_argument("run_suite: degree must be >= 0");
    if (cfg.samples < 1) throw std::invalid_argument("run_suite: samples must be >= 1");

    RunReport rep;
    if (cfg.suite == "relations") rep = suites::relations(cfg);
    else if (cfg.suite == "confluence") rep = suites::confluence(cfg);
    else if (cfg.suite == "dimensions") rep = suites::dimensions(cfg);
    else if (cfg.suite == "fock-oracle") rep = suites::fock_oracle(cfg);
    else if (cfg.suite == "vacuum") rep = suites::vacuum(cfg);
    else if (cfg.suite == "basis") rep = suites::basis(cfg);
    else if (cfg.suite == "character") rep = suites::character(cfg);
    else if (cfg.suite == "coherent") rep = suites::coherent(cfg);
    else if (cfg.suite == "boundary-ideal") rep = suites::boundary_ideal(cfg);
    else if (cfg.suite == "dilation") rep = suites::dilation(cfg);
    else if (cfg.suite == "max-modulus") rep = suites::max_modulus(cfg);
    else throw std::invalid_argument("run_suite: unknown suite '" + cfg.suite + "'");

    if (!cfg.out_path.empty()) rep.write(cfg.out_path);
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"relations",  "confluence", "dimensions", "fock-oracle",
                                                "vacuum",     "basis",      "character",  "coherent",
                                                "boundary-ideal", "dilation",   "max-modulus"};
    return names;
}

}  // namespace qball
