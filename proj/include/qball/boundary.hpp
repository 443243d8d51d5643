#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qball/algebra.hpp"
#include "qball/characters.hpp"
#include "qball/paths.hpp"
#include "qball/poly.hpp"
#include "qball/tensor_op.hpp"

namespace qball {

// Permutation of 1..n realized by a word in the simple reflections s_1..s_{n-1}.
inline std::vector<int> word_permutation(int n, const std::vector<int>& word) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
    for (int s : word) {
        if (s < 1 || s > n - 1) throw std::invalid_argument("word_permutation: reflection index out of range");
        std::swap(p[static_cast<size_t>(s - 1)], p[static_cast<size_t>(s)]);
    }
    return p;
}

inline bool word_is_reduced(int n, const std::vector<int>& word) {
    return detail::inversions(word_permutation(n, word)) == static_cast<int>(word.size());
}

// Tensor-product representation attached to a reduced word, twisted by torus
// angles: z with row k and column l maps to
//   e^{i phi_k} q^{k-n} pi_{s_{i_1}} (x) ... (x) pi_{s_{i_m}} (t_{k,l}).
// The empty word reproduces the torus character.
class BoundaryRep {
   public:
    BoundaryRep(int n, std::vector<int> word, std::vector<double> phis, const TruncationConfig& cfg)
        : n_(n), word_(std::move(word)), phis_(std::move(phis)), cfg_(cfg) {
        if (n < 2) throw std::invalid_argument("BoundaryRep: n must be >= 2");
        if (static_cast<int>(phis_.size()) != n) throw std::invalid_argument("BoundaryRep: need n angles");
        if (!word_is_reduced(n_, word_)) throw std::invalid_argument("BoundaryRep: word is not reduced");
        ops_.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
        adj_.reserve(ops_.capacity());
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= n; ++col) {
                TensorOp op = sl_matrix_element(row, col);
                const Cx scale = std::polar(q_half_pow(cfg_.q, 2 * (static_cast<int64_t>(row) - n)),
                                            phis_[static_cast<size_t>(row - 1)]);
                op = op.scaled(scale);
                ops_.push_back(op);
                adj_.push_back(op.adjoint());
            }
    }

    int n() const { return n_; }
    int slots() const { return static_cast<int>(word_.size()); }
    const TruncationConfig& config() const { return cfg_; }
    const std::vector<int>& word() const { return word_; }

    const TensorOp& letter_op(Gen g) const {
        if (g.tag() != AlgTag::mat) throw std::invalid_argument("BoundaryRep: matrix-algebra letters only");
        const size_t i = index(g.row(), g.col());
        return g.starred() ? adj_.at(i) : ops_.at(i);
    }

    TensorOp poly_op(const Poly& p) const {
        if (p.tag() != AlgTag::mat || p.n() != n_) throw std::invalid_argument("BoundaryRep::poly_op: wrong algebra");
        TensorOp out = TensorOp::zero(slots(), cfg_.N);
        for (const auto& [w, c] : p.terms()) {
            TensorOp cur = TensorOp::identity(slots(), cfg_.N);
            for (const Gen& g : w) cur = cur * letter_op(g);
            out += cur.scaled(c.eval(cfg_.q, 0.0));
        }
        return out;
    }

    // pi_{word}(t_{row,col}) as a chain sum over intermediate indices in 1..n.
    TensorOp sl_matrix_element(int row, int col) const {
        const int m = slots();
        TensorOp out = TensorOp::zero(m, cfg_.N);
        if (m == 0) {
            if (row == col) out += TensorOp::identity(0, cfg_.N);
            return out;
        }
        std::vector<int> chain(static_cast<size_t>(m) + 1);
        chain[0] = row;
        chain[static_cast<size_t>(m)] = col;
        std::vector<int> idx(static_cast<size_t>(std::max(m - 1, 0)), 1);
        while (true) {
            for (int t = 0; t < m - 1; ++t) chain[static_cast<size_t>(t) + 1] = idx[static_cast<size_t>(t)];
            TensorTerm term;
            term.scalar = Cx(1.0, 0.0);
            bool alive = true;
            int qpow = 0;
            int sign = 1;
            for (int h = 1; h <= m && alive; ++h) {
                PathFactor f = pi_sigma(word_[static_cast<size_t>(h - 1)], chain[static_cast<size_t>(h - 1)],
                                        chain[static_cast<size_t>(h)]);
                if (f.sign == 0) {
                    alive = false;
                    break;
                }
                qpow += f.qpow;
                sign *= f.sign;
                switch (f.kind) {
                    case Factor::Kind::I: term.factors.push_back(Factor::identity(cfg_.N)); break;
                    case Factor::Kind::Dq: term.factors.push_back(Factor::dq(cfg_.q, cfg_.N)); break;
                    case Factor::Kind::CqS: term.factors.push_back(Factor::cq_shift(cfg_.q, cfg_.N)); break;
                    case Factor::Kind::SstarCq: term.factors.push_back(Factor::shift_adjoint_cq(cfg_.q, cfg_.N)); break;
                    default: alive = false; break;
                }
            }
            if (alive) {
                term.scalar = Cx(sign * q_half_pow(cfg_.q, 2 * static_cast<int64_t>(qpow)), 0.0);
                out.add_term(std::move(term));
            }
            int t = m - 2;
            while (t >= 0 && idx[static_cast<size_t>(t)] == n_) {
                idx[static_cast<size_t>(t)] = 1;
                --t;
            }
            if (t < 0) break;
            ++idx[static_cast<size_t>(t)];
        }
        return out;
    }

   private:
    size_t index(int row, int col) const {
        if (row < 1 || row > n_ || col < 1 || col > n_) throw std::out_of_range("BoundaryRep: generator index");
        return static_cast<size_t>(row - 1) * static_cast<size_t>(n_) + static_cast<size_t>(col - 1);
    }

    int n_;
    std::vector<int> word_;
    std::vector<double> phis_;
    TruncationConfig cfg_;
    std::vector<TensorOp> ops_;
    std::vector<TensorOp> adj_;
};

}  // namespace qball
