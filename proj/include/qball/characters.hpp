#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qball/fock.hpp"
#include "qball/paths.hpp"
#include "qball/poly.hpp"
#include "qball/tensor_op.hpp"

namespace qball {

// Boundary symbol of a structural factor: the shift becomes the unimodular
// coordinate, C_q becomes 1, d(q) becomes 0. Only structural kinds admit a
// symbol; composed (General) factors must be avoided by evaluating letterwise.
inline Cx factor_symbol(Factor::Kind kind, double theta) {
    const Cx u(std::cos(theta), std::sin(theta));
    switch (kind) {
        case Factor::Kind::I: return Cx(1.0, 0.0);
        case Factor::Kind::S: return u;
        case Factor::Kind::Sstar: return std::conj(u);
        case Factor::Kind::Cq: return Cx(1.0, 0.0);
        case Factor::Kind::Dq: return Cx(0.0, 0.0);
        case Factor::Kind::CqS: return u;
        case Factor::Kind::SstarCq: return std::conj(u);
        case Factor::Kind::General: throw std::invalid_argument("factor_symbol: composed factor has no symbol");
    }
    return Cx(0.0, 0.0);
}

// Replaces one tensor slot by its symbol at the given angle; arity drops by one.
inline TensorOp evaluate_slot(const TensorOp& op, int slot, double theta) {
    if (slot < 1 || slot > op.slots()) throw std::out_of_range("evaluate_slot: slot out of range");
    TensorOp out(op.slots() - 1, op.N());
    for (const TensorTerm& t : op.terms()) {
        const Cx s = factor_symbol(t.factors[static_cast<size_t>(slot - 1)].kind, theta);
        if (s == Cx(0.0, 0.0)) continue;
        TensorTerm u;
        u.scalar = t.scalar * s;
        u.factors.reserve(t.factors.size() - 1);
        for (int i = 0; i < op.slots(); ++i)
            if (i != slot - 1) u.factors.push_back(t.factors[static_cast<size_t>(i)]);
        out.add_term(std::move(u));
    }
    return out;
}

// Full symbol of an operator whose factors are all structural.
inline Cx evaluate_symbol(const TensorOp& op, const std::vector<double>& angles) {
    if (static_cast<int>(angles.size()) != op.slots()) throw std::invalid_argument("evaluate_symbol: angle count mismatch");
    Cx total(0.0, 0.0);
    for (const TensorTerm& t : op.terms()) {
        Cx v = t.scalar;
        for (int s = 0; s < op.slots() && v != Cx(0.0, 0.0); ++s)
            v *= factor_symbol(t.factors[static_cast<size_t>(s)].kind, angles[static_cast<size_t>(s)]);
        total += v;
    }
    return total;
}

// Torus character: z with row l and column k maps to e^{i phi_k} q^{l-n} delta_{kl},
// starred letters to the conjugate. phis is 1-based via phis[k-1], size n.
inline Cx character_chi(int n, double q, const std::vector<double>& phis, const Poly& p) {
    if (p.tag() != AlgTag::mat || p.n() != n) throw std::invalid_argument("character_chi: wrong algebra");
    if (static_cast<int>(phis.size()) != n) throw std::invalid_argument("character_chi: need n angles");
    Cx total(0.0, 0.0);
    for (const auto& [w, c] : p.terms()) {
        Cx v = c.eval(q, 0.0);
        for (const Gen& g : w) {
            if (g.row() != g.col()) {
                v = Cx(0.0, 0.0);
                break;
            }
            const double phi = phis[static_cast<size_t>(g.col() - 1)];
            Cx lv = std::polar(q_half_pow(q, 2 * (static_cast<int64_t>(g.row()) - n)), phi);
            v *= g.starred() ? std::conj(lv) : lv;
        }
        total += v;
    }
    return total;
}

// Slot angles that pull the torus character through the slotwise symbol:
// tau at the pivot slot of row block n and column k is phi_k + ... + phi_n,
// all other slots evaluate at angle zero.
inline std::vector<double> tau_solver(int n, const std::vector<double>& phis) {
    if (static_cast<int>(phis.size()) != n) throw std::invalid_argument("tau_solver: need n angles");
    std::vector<double> tau(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    double tail = 0.0;
    for (int k = n; k >= 1; --k) {
        tail += phis[static_cast<size_t>(k - 1)];
        tau[static_cast<size_t>(box_slot(n, n, k) - 1)] = tail;
    }
    return tau;
}

// Same character computed through the Fock generators: each letter image is
// structural, so its symbol is exact, and symbols multiply along words.
inline Cx character_via_tau(const FockContext& ctx, const std::vector<double>& phis, const Poly& p) {
    const int n = ctx.n();
    if (p.tag() != AlgTag::mat || p.n() != n) throw std::invalid_argument("character_via_tau: wrong algebra");
    const std::vector<double> tau = tau_solver(n, phis);
    std::vector<Cx> vals(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            vals[static_cast<size_t>(j - 1) * n + (k - 1)] = evaluate_symbol(ctx.generator(j, k), tau);
    Cx total(0.0, 0.0);
    for (const auto& [w, c] : p.terms()) {
        Cx v = c.eval(ctx.config().q, 0.0);
        for (const Gen& g : w) {
            const Cx lv = vals[static_cast<size_t>(g.row() - 1) * n + (g.col() - 1)];
            v *= g.starred() ? std::conj(lv) : lv;
        }
        total += v;
    }
    return total;
}

// Representation with the corner slot frozen at a boundary angle. Only the
// straight route of the corner generator touches the corner box, so its image
// splits off a rank-style coherent direction while all other generators act
// with identity there.
class CoherentRep {
   public:
    CoherentRep(int n, double psi, const TruncationConfig& cfg) : n_(n), psi_(psi), cfg_(cfg) {
        ops_.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
        adj_.reserve(ops_.capacity());
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                TensorOp ev = evaluate_slot(fock_generator(n, j, k, cfg), n, psi);
                ops_.push_back(ev);
                adj_.push_back(ev.adjoint());
            }
    }

    int n() const { return n_; }
    int slots() const { return n_ * n_ - 1; }
    const TruncationConfig& config() const { return cfg_; }
    double psi() const { return psi_; }

    const TensorOp& generator(int j, int k) const { return ops_.at(index(j, k)); }

    const TensorOp& letter_op(Gen g) const {
        if (g.tag() != AlgTag::mat) throw std::invalid_argument("CoherentRep: matrix-algebra letters only");
        return g.starred() ? adj_.at(index(g.row(), g.col())) : ops_.at(index(g.row(), g.col()));
    }

    TensorVec vacuum() const { return TensorVec::vacuum(slots(), cfg_.N); }

    TensorVec apply(const Poly& p, const TensorVec& v) const {
        if (p.tag() != AlgTag::mat || p.n() != n_) throw std::invalid_argument("CoherentRep::apply: wrong algebra");
        TensorVec out(slots(), cfg_.N);
        for (const auto& [w, c] : p.terms()) {
            TensorVec img = v;
            for (auto it = w.rbegin(); it != w.rend(); ++it) img = letter_op(*it).apply(img);
            img.scale(c.eval(cfg_.q, 0.0));
            out += img;
        }
        return out;
    }

   private:
    size_t index(int j, int k) const {
        if (j < 1 || j > n_ || k < 1 || k > n_) throw std::out_of_range("CoherentRep: generator index");
        return static_cast<size_t>(j - 1) * static_cast<size_t>(n_) + static_cast<size_t>(k - 1);
    }

    int n_;
    double psi_;
    TruncationConfig cfg_;
    std::vector<TensorOp> ops_;
    std::vector<TensorOp> adj_;
};

// Decomposition of the generator images by their corner-slot factor: the
// corner generator is A + B (x) shift-part, all others are pure A-parts.
struct CornerSplit {
    TensorOp B;
    std::vector<TensorOp> A;
    int n = 0;

    const TensorOp& A_part(int j, int k) const { return A.at(static_cast<size_t>(j - 1) * n + (k - 1)); }
};

inline CornerSplit split_corner(const FockContext& ctx) {
    const int n = ctx.n();
    const int sub = n * n - 1;
    CornerSplit out{TensorOp::zero(sub, ctx.config().N), {}, n};
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            TensorOp a = TensorOp::zero(sub, ctx.config().N);
            int b_terms = 0;
            for (const TensorTerm& t : ctx.generator(j, k).terms()) {
                const Factor& corner = t.factors[static_cast<size_t>(n - 1)];
                TensorTerm reduced;
                reduced.scalar = t.scalar;
                for (int s = 0; s < n * n; ++s)
                    if (s != n - 1) reduced.factors.push_back(t.factors[static_cast<size_t>(s)]);
                if (corner.kind == Factor::Kind::I) {
                    a.add_term(std::move(reduced));
                } else if (corner.kind == Factor::Kind::CqS && j == 1 && k == 1) {
                    out.B.add_term(std::move(reduced));
                    ++b_terms;
                } else {
                    throw std::logic_error("split_corner: unexpected corner factor");
                }
            }
            if (j == 1 && k == 1 && b_terms != 1) throw std::logic_error("split_corner: corner generator needs one shift term");
            out.A.push_back(std::move(a));
        }
    return out;
}

}  // namespace qball
