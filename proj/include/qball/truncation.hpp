#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qball/laurent.hpp"

namespace qball {

// Numerical parameters for the truncated Fock space C^N with basis e_0..e_{N-1}.
// safe_degree bounds the word length for which truncation artifacts are confined
// to the top N - safe_degree levels; callers restrict supports accordingly.
struct TruncationConfig {
    double q = 0.5;
    int N = 16;
    int safe_degree = 0;

    TruncationConfig() { safe_degree = N - 1; }
    TruncationConfig(double q_, int N_, int safe_degree_ = -1)
        : q(q_), N(N_), safe_degree(safe_degree_ < 0 ? N_ - 1 : safe_degree_) {
        if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("TruncationConfig: q must lie in (0,1)");
        if (N < 2) throw std::invalid_argument("TruncationConfig: N must be >= 2");
        if (safe_degree < 0 || safe_degree > N - 1)
            throw std::invalid_argument("TruncationConfig: safe_degree out of range");
    }
};

// One-slot operator on C^N acting as e_m -> w[m] e_{m+offset}.
// w has length N; entries that would map outside 0..N-1 are kept zero.
// Kind tags the structural operators so symbol evaluation stays exact;
// compositions degrade to General.
struct Factor {
    enum class Kind : uint8_t { I, S, Sstar, Cq, Dq, CqS, SstarCq, General };

    Kind kind = Kind::I;
    int offset = 0;
    std::vector<double> w;

    static Factor identity(int N) {
        Factor f;
        f.kind = Kind::I;
        f.offset = 0;
        f.w.assign(static_cast<size_t>(N), 1.0);
        return f;
    }

    // Truncated shift: S e_m = e_{m+1}, S e_{N-1} = 0.
    static Factor shift(int N) {
        Factor f;
        f.kind = Kind::S;
        f.offset = 1;
        f.w.assign(static_cast<size_t>(N), 1.0);
        f.w[static_cast<size_t>(N - 1)] = 0.0;
        return f;
    }

    static Factor shift_adjoint(int N) {
        Factor f = shift(N).adjoint();
        f.kind = Kind::Sstar;
        return f;
    }

    // C_q e_m = sqrt(1 - q^{2m}) e_m; C_q e_0 = 0.
    static Factor cq(double q, int N) {
        Factor f;
        f.kind = Kind::Cq;
        f.offset = 0;
        f.w.resize(static_cast<size_t>(N));
        for (int m = 0; m < N; ++m) f.w[static_cast<size_t>(m)] = std::sqrt(1.0 - std::pow(q, 2.0 * m));
        return f;
    }

    // d(q) e_m = q^m e_m.
    static Factor dq(double q, int N) {
        Factor f;
        f.kind = Kind::Dq;
        f.offset = 0;
        f.w.resize(static_cast<size_t>(N));
        for (int m = 0; m < N; ++m) f.w[static_cast<size_t>(m)] = std::pow(q, m);
        return f;
    }

    // C_q S e_m = sqrt(1 - q^{2(m+1)}) e_{m+1}, top level annihilated.
    static Factor cq_shift(double q, int N) {
        Factor f;
        f.kind = Kind::CqS;
        f.offset = 1;
        f.w.resize(static_cast<size_t>(N));
        for (int m = 0; m < N; ++m) f.w[static_cast<size_t>(m)] = std::sqrt(1.0 - std::pow(q, 2.0 * (m + 1)));
        f.w[static_cast<size_t>(N - 1)] = 0.0;
        return f;
    }

    // S^* C_q e_m = sqrt(1 - q^{2m}) e_{m-1}; kills e_0 through the C_q weight.
    // Exact adjoint of cq_shift at every truncation level.
    static Factor shift_adjoint_cq(double q, int N) {
        Factor f;
        f.kind = Kind::SstarCq;
        f.offset = -1;
        f.w.resize(static_cast<size_t>(N));
        for (int m = 0; m < N; ++m) f.w[static_cast<size_t>(m)] = std::sqrt(1.0 - std::pow(q, 2.0 * m));
        return f;
    }

    static Factor diagonal(std::vector<double> weights, Kind kind = Kind::General) {
        Factor f;
        f.kind = kind;
        f.offset = 0;
        f.w = std::move(weights);
        return f;
    }

    int dim() const { return static_cast<int>(w.size()); }

    bool is_identity() const { return kind == Kind::I; }

    // Adjoint of e_m -> w[m] e_{m+offset} is e_p -> w[p-offset] e_{p-offset}.
    Factor adjoint() const {
        Factor a;
        switch (kind) {
            case Kind::I: return *this;
            case Kind::S: a.kind = Kind::Sstar; break;
            case Kind::Sstar: a.kind = Kind::S; break;
            case Kind::Cq: return *this;
            case Kind::Dq: return *this;
            case Kind::CqS: a.kind = Kind::SstarCq; break;
            case Kind::SstarCq: a.kind = Kind::CqS; break;
            case Kind::General: a.kind = Kind::General; break;
        }
        const int N = dim();
        a.offset = -offset;
        a.w.assign(static_cast<size_t>(N), 0.0);
        for (int p = 0; p < N; ++p) {
            int m = p + a.offset;
            if (m >= 0 && m < N) a.w[static_cast<size_t>(p)] = w[static_cast<size_t>(m)];
        }
        return a;
    }

    // Composition this∘other: e_m -> w_other[m] w_this[m+offset_other] e_{m+offset_other+offset_this}.
    Factor compose(const Factor& other) const {
        if (dim() != other.dim()) throw std::invalid_argument("Factor::compose: dimension mismatch");
        const int N = dim();
        Factor r;
        r.kind = (kind == Kind::I) ? other.kind : (other.kind == Kind::I ? kind : Kind::General);
        r.offset = offset + other.offset;
        r.w.assign(static_cast<size_t>(N), 0.0);
        for (int m = 0; m < N; ++m) {
            int mid = m + other.offset;
            if (mid < 0 || mid >= N) continue;
            int out = mid + offset;
            if (out < 0 || out >= N) continue;
            r.w[static_cast<size_t>(m)] = other.w[static_cast<size_t>(m)] * w[static_cast<size_t>(mid)];
        }
        return r;
    }

    double weight(int m) const {
        int out = m + offset;
        if (m < 0 || m >= dim() || out < 0 || out >= dim()) return 0.0;
        return w[static_cast<size_t>(m)];
    }

    double sup_norm() const {
        double s = 0.0;
        for (int m = 0; m < dim(); ++m) s = std::max(s, std::abs(weight(m)));
        return s;
    }

    bool operator==(const Factor& o) const { return offset == o.offset && w == o.w; }
};

struct BasicOperators {
    Factor S;
    Factor Cq;
    Factor Dq;
};

inline BasicOperators basic_operators(const TruncationConfig& cfg) {
    return {Factor::shift(cfg.N), Factor::cq(cfg.q, cfg.N), Factor::dq(cfg.q, cfg.N)};
}

// Irreducible C[SU_2]_q representation on the truncated Fock space:
// t11 -> S^* C_q, t12 -> q d(q), t21 -> -d(q), t22 -> C_q S.
inline Factor su2_rep(int i, int j, const TruncationConfig& cfg) {
    if (i == 1 && j == 1) return Factor::shift_adjoint_cq(cfg.q, cfg.N);
    if (i == 2 && j == 2) return Factor::cq_shift(cfg.q, cfg.N);
    if (i == 1 && j == 2) {
        Factor f = Factor::dq(cfg.q, cfg.N);
        for (double& x : f.w) x *= cfg.q;
        f.kind = Factor::Kind::General;
        return f;
    }
    if (i == 2 && j == 1) {
        Factor f = Factor::dq(cfg.q, cfg.N);
        for (double& x : f.w) x = -x;
        f.kind = Factor::Kind::General;
        return f;
    }
    throw std::invalid_argument("su2_rep: index out of range");
}

struct SeriesCheckResult {
    double cq_residual = 0.0;
    double cq_bound = 0.0;
    double dq_residual = 0.0;
    double dq_bound = 0.0;
    bool pass = false;
};

// Reconstructs C_q and d(q) from partial sums over shift powers:
//   C_q = (1-q^2)^{1/2} (sum_m q^{2m} S^{m+1} S*^{m+1})^{1/2}
//   d(q) = sum_m q^m (S^m S*^m - S^{m+1} S*^{m+1})
// Partial sums with T terms approach the diagonals within q^{2 min(T,N)}/(1-q^2)
// and q^{min(T,N)} respectively; both are exact once T >= N.
inline SeriesCheckResult series_identities_check(const TruncationConfig& cfg, int terms) {
    const int N = cfg.N;
    const double q = cfg.q;
    if (terms < 1) throw std::invalid_argument("series_identities_check: terms must be >= 1");

    const Factor S = Factor::shift(N);
    const Factor Sstar = Factor::shift_adjoint(N);

    // proj[m] = diagonal of S^m S*^m, built by factor composition.
    Factor power = Factor::identity(N);
    std::vector<std::vector<double>> proj;
    proj.push_back(power.w);
    for (int m = 1; m <= terms; ++m) {
        power = S.compose(power.compose(Sstar));
        if (power.offset != 0) throw std::logic_error("series_identities_check: shift powers must be diagonal");
        proj.push_back(power.w);
    }

    std::vector<double> cq_sum(static_cast<size_t>(N), 0.0);
    std::vector<double> dq_sum(static_cast<size_t>(N), 0.0);
    for (int m = 0; m < terms; ++m) {
        const double q2m = std::pow(q, 2.0 * m);
        const double qm = std::pow(q, m);
        for (int e = 0; e < N; ++e) {
            cq_sum[static_cast<size_t>(e)] += q2m * proj[static_cast<size_t>(m + 1)][static_cast<size_t>(e)];
            dq_sum[static_cast<size_t>(e)] +=
                qm * (proj[static_cast<size_t>(m)][static_cast<size_t>(e)] - proj[static_cast<size_t>(m + 1)][static_cast<size_t>(e)]);
        }
    }

    const Factor Cq = Factor::cq(q, N);
    const Factor Dq = Factor::dq(q, N);
    SeriesCheckResult r;
    for (int e = 0; e < N; ++e) {
        double cq_rec = std::sqrt((1.0 - q * q) * std::max(0.0, cq_sum[static_cast<size_t>(e)]));
        r.cq_residual = std::max(r.cq_residual, std::abs(cq_rec - Cq.w[static_cast<size_t>(e)]));
        r.dq_residual = std::max(r.dq_residual, std::abs(dq_sum[static_cast<size_t>(e)] - Dq.w[static_cast<size_t>(e)]));
    }
    const int eff = std::min(terms, N);
    r.cq_bound = std::pow(q, 2.0 * eff) / (1.0 - q * q) + 1e-14;
    r.dq_bound = std::pow(q, eff) + 1e-14;
    r.pass = r.cq_residual <= r.cq_bound && r.dq_residual <= r.dq_bound;
    return r;
}

}  // namespace qball
