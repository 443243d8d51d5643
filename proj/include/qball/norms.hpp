#pragma once

#include <cmath>
#include <stdexcept>

#include "qball/tensor_op.hpp"

namespace qball {

struct NormOptions {
    double tol = 1e-11;
    int max_iter = 2000;
    int cap_level = -1;
    bool strict = false;
};

namespace detail {

// Zeroes amplitudes whose multi-index exceeds the level cap.
inline void project_cap(TensorVec& v, int cap) {
    if (cap < 0) return;
    for (size_t i = 0; i < v.a.size(); ++i) {
        int64_t rest = static_cast<int64_t>(i);
        for (int s = 0; s < v.slots; ++s) {
            if (static_cast<int>(rest % v.N) > cap) {
                v.a[i] = Cx(0.0, 0.0);
                break;
            }
            rest /= v.N;
        }
    }
}

}  // namespace detail

// Largest singular value of op (optionally restricted to levels <= cap_level)
// by power iteration on op^* op. The Rayleigh estimate increases toward the
// true value, so early termination under-reports, never over-reports.
inline double operator_norm_estimate(const TensorOp& op, const NormOptions& opt = {}) {
    if (op.slots() == 0) return std::abs(op.as_scalar());
    if (op.is_zero()) return 0.0;
    const TensorOp adj = op.adjoint();

    TensorVec v(op.slots(), op.N());
    for (size_t i = 0; i < v.a.size(); ++i) v.a[i] = Cx(1.0 + 0.5 * std::sin(1.7 * static_cast<double>(i)), 0.0);
    detail::project_cap(v, opt.cap_level);
    double nv = v.norm();
    if (nv == 0.0) throw std::invalid_argument("operator_norm_estimate: empty subspace");
    v.scale(Cx(1.0 / nv, 0.0));

    double lambda = 0.0;
    for (int it = 0; it < opt.max_iter; ++it) {
        TensorVec w = op.apply(v);
        TensorVec u = adj.apply(w);
        detail::project_cap(u, opt.cap_level);
        const double next = std::real(v.inner(u));
        const double nu = u.norm();
        if (nu == 0.0) return 0.0;
        u.scale(Cx(1.0 / nu, 0.0));
        v = std::move(u);
        if (it > 0 && std::abs(next - lambda) <= opt.tol * std::max(next, 1e-300)) {
            lambda = next;
            return std::sqrt(std::max(lambda, 0.0));
        }
        lambda = next;
    }
    if (opt.strict) throw std::runtime_error("operator_norm_estimate: no convergence within iteration budget");
    return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace qball
