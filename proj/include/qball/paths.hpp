#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qball/tensor_op.hpp"
#include "qball/truncation.hpp"

namespace qball {

// Reduced expression for the longest-element factorization used by the
// representation chain: u = c_1 ... c_n with c_l = s_{l+n-1} s_{l+n-2} ... s_l.
// Slot h (1-based) of the chain carries the simple reflection u[h-1].
inline std::vector<int> reduced_word_u(int n) {
    std::vector<int> u;
    u.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int l = 1; l <= n; ++l)
        for (int s = l + n - 1; s >= l; --s) u.push_back(s);
    return u;
}

// Grid slot of box (k, l): boxes are column-major with rows counted bottom-up.
inline int box_slot(int n, int k, int l) { return n * (l - 1) + (n - k + 1); }

// Matrix element of the elementary representation attached to s_i:
//   (i,i) -> S*C_q   (i,i+1) -> q d(q)   (i+1,i) -> -d(q)   (i+1,i+1) -> C_q S
//   (a,a) -> 1 off the block, everything else -> 0.
// sign == 0 encodes the zero element; qpow counts exact powers of q.
struct PathFactor {
    Factor::Kind kind = Factor::Kind::I;
    int qpow = 0;
    int sign = 1;
};

inline PathFactor pi_sigma(int i, int a, int b) {
    if (a == i && b == i) return {Factor::Kind::SstarCq, 0, 1};
    if (a == i && b == i + 1) return {Factor::Kind::Dq, 1, 1};
    if (a == i + 1 && b == i) return {Factor::Kind::Dq, 0, -1};
    if (a == i + 1 && b == i + 1) return {Factor::Kind::CqS, 0, 1};
    if (a == b) return {Factor::Kind::I, 0, 1};
    return {Factor::Kind::I, 0, 0};
}

// One admissible term of a generator expansion: per-slot structural kinds with
// exact integer scalar data, comparable without floating point.
struct CanonTerm {
    std::vector<uint8_t> kinds;
    int qpow = 0;
    int sign = 1;

    bool operator<(const CanonTerm& o) const {
        if (kinds != o.kinds) return kinds < o.kinds;
        if (qpow != o.qpow) return qpow < o.qpow;
        return sign < o.sign;
    }
    bool operator==(const CanonTerm& o) const { return kinds == o.kinds && qpow == o.qpow && sign == o.sign; }
};

enum class BoxKind : uint8_t { Empty, Up, Right, UpHook, RightHook };

// Monotone lattice path for the generator with start column j and end row k:
// enters box (n, j) from below, leaves box (k, n) to the right; rows only
// decrease, columns only increase. Box kinds follow the (entry, exit) pair.
struct PathDiagram {
    int n = 0, j = 0, k = 0;
    std::vector<BoxKind> boxes;
    int up_count = 0;
    int right_count = 0;

    CanonTerm canon() const {
        CanonTerm t;
        t.kinds.resize(boxes.size(), static_cast<uint8_t>(Factor::Kind::I));
        int rhooks = 0;
        for (size_t h = 0; h < boxes.size(); ++h) {
            switch (boxes[h]) {
                case BoxKind::Empty: break;
                case BoxKind::Up: t.kinds[h] = static_cast<uint8_t>(Factor::Kind::Dq); break;
                case BoxKind::Right: t.kinds[h] = static_cast<uint8_t>(Factor::Kind::Dq); break;
                case BoxKind::UpHook: t.kinds[h] = static_cast<uint8_t>(Factor::Kind::SstarCq); break;
                case BoxKind::RightHook:
                    t.kinds[h] = static_cast<uint8_t>(Factor::Kind::CqS);
                    ++rhooks;
                    break;
            }
        }
        if (rhooks < 1) throw std::logic_error("PathDiagram: every admissible path carries a right hook");
        t.qpow = right_count;
        t.sign = (up_count % 2 == 0) ? 1 : -1;
        return t;
    }
};

namespace detail {

inline void walk_paths(int n, int k, int r, int c, bool entered_below, PathDiagram& cur, std::vector<PathDiagram>& out) {
    const size_t slot = static_cast<size_t>(box_slot(n, r, c) - 1);
    if (r == k && c == n) {
        cur.boxes[slot] = entered_below ? BoxKind::RightHook : BoxKind::Right;
        if (!entered_below) ++cur.right_count;
        out.push_back(cur);
        if (!entered_below) --cur.right_count;
        cur.boxes[slot] = BoxKind::Empty;
        return;
    }
    if (r > k) {
        cur.boxes[slot] = entered_below ? BoxKind::Up : BoxKind::UpHook;
        if (entered_below) ++cur.up_count;
        walk_paths(n, k, r - 1, c, true, cur, out);
        if (entered_below) --cur.up_count;
        cur.boxes[slot] = BoxKind::Empty;
    }
    if (c < n) {
        cur.boxes[slot] = entered_below ? BoxKind::RightHook : BoxKind::Right;
        if (!entered_below) ++cur.right_count;
        walk_paths(n, k, r, c + 1, false, cur, out);
        if (!entered_below) --cur.right_count;
        cur.boxes[slot] = BoxKind::Empty;
    }
}

}  // namespace detail

// All admissible paths for generator row index j (start column) and column
// index k (end row), enumerated up-first so the straight up-then-right route
// comes out first. Count is binom((n-j)+(n-k), n-j).
inline std::vector<PathDiagram> enumerate_paths(int n, int j, int k) {
    if (n < 1 || j < 1 || j > n || k < 1 || k > n) throw std::invalid_argument("enumerate_paths: bad indices");
    std::vector<PathDiagram> out;
    PathDiagram cur;
    cur.n = n;
    cur.j = j;
    cur.k = k;
    cur.boxes.assign(static_cast<size_t>(n) * static_cast<size_t>(n), BoxKind::Empty);
    detail::walk_paths(n, k, n, j, true, cur, out);
    return out;
}

inline std::vector<CanonTerm> path_generator_terms(int n, int j, int k) {
    std::vector<CanonTerm> terms;
    for (const PathDiagram& d : enumerate_paths(n, j, k)) terms.push_back(d.canon());
    std::sort(terms.begin(), terms.end());
    return terms;
}

// Direct expansion of the chain sum over all intermediate indices in 1..2n:
// term_h = pi_{u_h}(t_{c_{h-1}, c_h}) with c_0 = n + j, c_{n^2} = n + k.
// Exponentially slow; serves as the oracle for path_generator_terms.
inline std::vector<CanonTerm> brute_force_generator_terms(int n, int j, int k) {
    const std::vector<int> u = reduced_word_u(n);
    const int slots = n * n;
    std::vector<CanonTerm> terms;
    std::vector<int> chain(static_cast<size_t>(slots) + 1);
    chain[0] = n + j;
    chain[static_cast<size_t>(slots)] = n + k;

    const int interior = slots - 1;
    std::vector<int> idx(static_cast<size_t>(std::max(interior, 0)), 1);
    while (true) {
        for (int t = 0; t < interior; ++t) chain[static_cast<size_t>(t) + 1] = idx[static_cast<size_t>(t)];
        CanonTerm term;
        term.kinds.resize(static_cast<size_t>(slots), static_cast<uint8_t>(Factor::Kind::I));
        bool alive = true;
        for (int h = 1; h <= slots && alive; ++h) {
            PathFactor f = pi_sigma(u[static_cast<size_t>(h - 1)], chain[static_cast<size_t>(h - 1)], chain[static_cast<size_t>(h)]);
            if (f.sign == 0) {
                alive = false;
                break;
            }
            term.kinds[static_cast<size_t>(h - 1)] = static_cast<uint8_t>(f.kind);
            term.qpow += f.qpow;
            term.sign *= f.sign;
        }
        if (alive) terms.push_back(std::move(term));

        int t = interior - 1;
        while (t >= 0 && idx[static_cast<size_t>(t)] == 2 * n) {
            idx[static_cast<size_t>(t)] = 1;
            --t;
        }
        if (t < 0) break;
        ++idx[static_cast<size_t>(t)];
    }
    std::sort(terms.begin(), terms.end());
    return terms;
}

// Renders canonical terms as a tensor operator with overall scalar
// sign * q^{qpow + extra_q_exp} per term.
inline TensorOp canon_terms_to_op(const std::vector<CanonTerm>& terms, int slots, int extra_q_exp, const TruncationConfig& cfg) {
    TensorOp op(slots, cfg.N);
    for (const CanonTerm& t : terms) {
        if (static_cast<int>(t.kinds.size()) != slots) throw std::invalid_argument("canon_terms_to_op: arity mismatch");
        TensorTerm term;
        term.scalar = Cx(t.sign * q_half_pow(cfg.q, 2 * (static_cast<int64_t>(t.qpow) + extra_q_exp)), 0.0);
        term.factors.reserve(static_cast<size_t>(slots));
        for (uint8_t kb : t.kinds) {
            switch (static_cast<Factor::Kind>(kb)) {
                case Factor::Kind::I: term.factors.push_back(Factor::identity(cfg.N)); break;
                case Factor::Kind::Dq: term.factors.push_back(Factor::dq(cfg.q, cfg.N)); break;
                case Factor::Kind::CqS: term.factors.push_back(Factor::cq_shift(cfg.q, cfg.N)); break;
                case Factor::Kind::SstarCq: term.factors.push_back(Factor::shift_adjoint_cq(cfg.q, cfg.N)); break;
                default: throw std::invalid_argument("canon_terms_to_op: unexpected factor kind");
            }
        }
        op.add_term(std::move(term));
    }
    return op;
}

// Fock-space image of the generator with row index j, column index k:
// q^{j-n} times the sum over admissible paths.
inline TensorOp fock_generator(int n, int j, int k, const TruncationConfig& cfg) {
    return canon_terms_to_op(path_generator_terms(n, j, k), n * n, j - n, cfg);
}

}  // namespace qball
