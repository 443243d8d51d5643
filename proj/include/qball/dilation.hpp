#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "qball/tensor_op.hpp"

namespace qball {

inline Eigen::MatrixXcd tensor_op_matrix(const TensorOp& op) {
    const int64_t dim = dense_dimension(op.slots(), op.N());
    if (dim > 8192) throw std::length_error("tensor_op_matrix: space too large for dense assembly");
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
    TensorVec e(op.slots(), op.N());
    for (int64_t c = 0; c < dim; ++c) {
        std::fill(e.a.begin(), e.a.end(), Cx(0.0, 0.0));
        e.a[static_cast<size_t>(c)] = Cx(1.0, 0.0);
        TensorVec img = op.apply(e);
        for (int64_t r = 0; r < dim; ++r) M(r, c) = img.a[static_cast<size_t>(r)];
    }
    return M;
}

namespace detail {

// Positive square root of I - M^*M with negative eigenvalues clamped to zero.
inline Eigen::MatrixXcd defect_sqrt(const Eigen::MatrixXcd& gram_complement) {
    Eigen::MatrixXcd H = 0.5 * (gram_complement + gram_complement.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error("defect_sqrt: eigensolver failed");
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::sqrt(std::max(ev(i), 0.0));
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

struct DilationResult {
    Eigen::MatrixXcd U;
    double unitarity_residual = 0.0;
    std::vector<double> compression_residuals;
    double max_compression_residual = 0.0;
};

// Block unitary on (steps+1) copies of the space whose top-left compressions
// reproduce T^k for k = 1..steps:
//   column 0: T over D_T, last column: D_{T^*} over -T^*, interior columns
//   feed a delay line. Feedback reaches the corner only after steps+1 powers.
inline DilationResult finite_dilation(const Eigen::MatrixXcd& T, int steps, double contraction_tol = 1e-10) {
    if (steps < 1) throw std::invalid_argument("finite_dilation: steps must be >= 1");
    if (T.rows() != T.cols()) throw std::invalid_argument("finite_dilation: square input required");
    const Eigen::Index d = T.rows();

    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(d, d) - T.adjoint() * T;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (gram + gram.adjoint()));
    if (es.info() != Eigen::Success) throw std::runtime_error("finite_dilation: eigensolver failed");
    if (es.eigenvalues().minCoeff() < -contraction_tol)
        throw std::invalid_argument("finite_dilation: input is not a contraction");

    const Eigen::MatrixXcd DT = detail::defect_sqrt(gram);
    const Eigen::MatrixXcd DTs = detail::defect_sqrt(Eigen::MatrixXcd::Identity(d, d) - T * T.adjoint());

    const Eigen::Index blocks = steps + 1;
    DilationResult out;
    out.U = Eigen::MatrixXcd::Zero(blocks * d, blocks * d);
    out.U.block(0, 0, d, d) = T;
    out.U.block(d, 0, d, d) = DT;
    for (int j = 1; j < steps; ++j) out.U.block((j + 1) * d, j * d, d, d) = Eigen::MatrixXcd::Identity(d, d);
    out.U.block(0, steps * d, d, d) = DTs;
    out.U.block(d, steps * d, d, d) = -T.adjoint();

    out.unitarity_residual =
        (out.U.adjoint() * out.U - Eigen::MatrixXcd::Identity(blocks * d, blocks * d)).cwiseAbs().maxCoeff();

    Eigen::MatrixXcd Upow = Eigen::MatrixXcd::Identity(blocks * d, blocks * d);
    Eigen::MatrixXcd Tpow = Eigen::MatrixXcd::Identity(d, d);
    out.compression_residuals.reserve(static_cast<size_t>(steps));
    for (int k = 1; k <= steps; ++k) {
        Upow = out.U * Upow;
        Tpow = T * Tpow;
        const double r = (Upow.block(0, 0, d, d) - Tpow).cwiseAbs().maxCoeff();
        out.compression_residuals.push_back(r);
        out.max_compression_residual = std::max(out.max_compression_residual, r);
    }
    return out;
}

}  // namespace qball
