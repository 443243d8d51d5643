#pragma once

#include <stdexcept>
#include <vector>

#include "qball/paths.hpp"
#include "qball/poly.hpp"
#include "qball/tensor_op.hpp"

namespace qball {

// Raised when an application could reach the truncation level, where the
// cutoff weights differ from the untruncated operator.
class LeakError : public std::runtime_error {
   public:
    explicit LeakError(const std::string& what) : std::runtime_error(what) {}
};

// Caches the generator images and adjoints on the truncated Fock space.
class FockContext {
   public:
    FockContext(int n, const TruncationConfig& cfg) : n_(n), cfg_(cfg) {
        if (n < 1) throw std::invalid_argument("FockContext: n must be >= 1");
        gens_.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
        adj_.reserve(gens_.capacity());
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                gens_.push_back(fock_generator(n, j, k, cfg));
                adj_.push_back(gens_.back().adjoint());
            }
    }

    int n() const { return n_; }
    int slots() const { return n_ * n_; }
    const TruncationConfig& config() const { return cfg_; }

    // Image of z with row index j (superscript) and column index k (subscript).
    const TensorOp& generator(int j, int k) const { return gens_.at(index(j, k)); }
    const TensorOp& generator_adjoint(int j, int k) const { return adj_.at(index(j, k)); }

    // Starred letters map to the adjoint of the plain image.
    const TensorOp& letter_op(Gen g) const {
        if (g.tag() != AlgTag::mat) throw std::invalid_argument("FockContext: matrix-algebra letters only");
        return g.starred() ? generator_adjoint(g.row(), g.col()) : generator(g.row(), g.col());
    }

    TensorVec vacuum() const { return TensorVec::vacuum(slots(), cfg_.N); }

    // Applies a single word, rightmost letter first.
    TensorVec apply_word(const Word& w, const TensorVec& v) const {
        TensorVec cur = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) cur = letter_op(*it).apply(cur);
        return cur;
    }

    // p acting on v. Occupied levels move by at most one per letter, so the
    // image is cutoff-free iff max level + degree stays below N; otherwise
    // the call refuses rather than silently leak.
    TensorVec apply(const Poly& p, const TensorVec& v, bool enforce_leak_free = true) const {
        if (p.tag() != AlgTag::mat || p.n() != n_) throw std::invalid_argument("FockContext::apply: wrong algebra");
        if (enforce_leak_free) {
            const int top = v.max_level();
            const int deg = p.degree();
            if (deg > 0 && top >= 0 && top + deg > cfg_.N - 1)
                throw LeakError("FockContext::apply: support level " + std::to_string(top) + " + degree " +
                                std::to_string(deg) + " exceeds truncation " + std::to_string(cfg_.N - 1));
        }
        TensorVec out(slots(), cfg_.N);
        for (const auto& [w, c] : p.terms()) {
            TensorVec img = apply_word(w, v);
            img.scale(c.eval(cfg_.q, 0.0));
            out += img;
        }
        return out;
    }

    // Full polynomial image as one operator; factor chains degrade to General
    // kinds, so use this for norms, not symbol evaluation.
    TensorOp poly_op(const Poly& p) const {
        if (p.tag() != AlgTag::mat || p.n() != n_) throw std::invalid_argument("FockContext::poly_op: wrong algebra");
        TensorOp out = TensorOp::zero(slots(), cfg_.N);
        for (const auto& [w, c] : p.terms()) {
            TensorOp cur = TensorOp::identity(slots(), cfg_.N);
            for (const Gen& g : w) cur = cur * letter_op(g);
            out += cur.scaled(c.eval(cfg_.q, 0.0));
        }
        return out;
    }

    // Image of a basis vector under p, accumulated sparsely. Each word costs
    // terms * slots; leak-freeness must be guaranteed by the caller's choice
    // of basis levels.
    void apply_to_basis(const Poly& p, const std::vector<int>& m, SparseVec& out) const {
        for (const auto& [w, c] : p.terms()) {
            SparseVec acc(slots(), cfg_.N);
            acc.add(acc.pack(m), Cx(1.0, 0.0));
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const TensorOp& op = letter_op(*it);
                SparseVec next(slots(), cfg_.N);
                for (const auto& [key, amp] : acc.a) {
                    SparseVec img(slots(), cfg_.N);
                    op.apply_to_basis(acc.unpack(key), img);
                    for (const auto& [k2, a2] : img.a) next.add(k2, amp * a2);
                }
                acc = std::move(next);
            }
            const Cx cv = c.eval(cfg_.q, 0.0);
            for (const auto& [key, amp] : acc.a) out.add(key, cv * amp);
        }
    }

   private:
    size_t index(int j, int k) const {
        if (j < 1 || j > n_ || k < 1 || k > n_) throw std::out_of_range("FockContext: generator index");
        return static_cast<size_t>(j - 1) * static_cast<size_t>(n_) + static_cast<size_t>(k - 1);
    }

    int n_;
    TruncationConfig cfg_;
    std::vector<TensorOp> gens_;
    std::vector<TensorOp> adj_;
};

// X_{m} vacuum vector: slot h of the exponent multi-index drives the
// generator whose end row k and start column j satisfy box_slot(n,k,j) == h;
// lower slots act first.
inline TensorVec fock_basis_vector(const FockContext& ctx, const std::vector<int>& exponents) {
    const int n = ctx.n();
    if (static_cast<int>(exponents.size()) != n * n) throw std::invalid_argument("fock_basis_vector: arity mismatch");
    TensorVec v = ctx.vacuum();
    for (int h = 1; h <= n * n; ++h) {
        const int j = (h - 1) / n + 1;
        const int k = n - (h - 1) % n;
        const TensorOp& X = ctx.generator(j, k);
        for (int rep = 0; rep < exponents[static_cast<size_t>(h - 1)]; ++rep) v = X.apply(v);
    }
    return v;
}

}  // namespace qball
