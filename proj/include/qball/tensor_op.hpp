#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qball/truncation.hpp"

namespace qball {

using Cx = std::complex<double>;

// Multi-index into (C^N)^{tensor slots}, slot 1 fastest.
inline int64_t dense_dimension(int slots, int N) {
    int64_t d = 1;
    for (int s = 0; s < slots; ++s) {
        d *= N;
        if (d > (int64_t(1) << 31)) throw std::length_error("dense_dimension: space too large");
    }
    return d;
}

// Dense vector on (C^N)^{tensor slots}.
struct TensorVec {
    int slots = 0;
    int N = 0;
    std::vector<Cx> a;

    TensorVec() = default;
    TensorVec(int slots_, int N_) : slots(slots_), N(N_), a(static_cast<size_t>(dense_dimension(slots_, N_)), Cx(0.0, 0.0)) {}

    static TensorVec basis(int slots, int N, const std::vector<int>& m) {
        if (static_cast<int>(m.size()) != slots) throw std::invalid_argument("TensorVec::basis: arity mismatch");
        TensorVec v(slots, N);
        int64_t idx = 0;
        for (int s = slots - 1; s >= 0; --s) {
            if (m[static_cast<size_t>(s)] < 0 || m[static_cast<size_t>(s)] >= N)
                throw std::out_of_range("TensorVec::basis: level out of range");
            idx = idx * N + m[static_cast<size_t>(s)];
        }
        v.a[static_cast<size_t>(idx)] = Cx(1.0, 0.0);
        return v;
    }

    static TensorVec vacuum(int slots, int N) { return basis(slots, N, std::vector<int>(static_cast<size_t>(slots), 0)); }

    double norm() const {
        double s = 0.0;
        for (const Cx& x : a) s += std::norm(x);
        return std::sqrt(s);
    }

    Cx inner(const TensorVec& other) const {
        if (a.size() != other.a.size()) throw std::invalid_argument("TensorVec::inner: dimension mismatch");
        Cx s(0.0, 0.0);
        for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * other.a[i];
        return s;
    }

    // Largest occupied level over slots with |amplitude| > floor; -1 for the zero vector.
    int max_level(double floor = 0.0) const {
        int best = -1;
        for (size_t i = 0; i < a.size(); ++i) {
            if (std::abs(a[i]) <= floor) continue;
            int64_t rest = static_cast<int64_t>(i);
            for (int s = 0; s < slots; ++s) {
                int level = static_cast<int>(rest % N);
                if (level > best) best = level;
                rest /= N;
            }
        }
        return best;
    }

    TensorVec& operator+=(const TensorVec& o) {
        if (a.size() != o.a.size()) throw std::invalid_argument("TensorVec: dimension mismatch");
        for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }

    TensorVec& operator-=(const TensorVec& o) {
        if (a.size() != o.a.size()) throw std::invalid_argument("TensorVec: dimension mismatch");
        for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }

    TensorVec& scale(Cx c) {
        for (Cx& x : a) x *= c;
        return *this;
    }
};

// Sparse vector keyed by packed multi-index; used for basis-vector sweeps.
struct SparseVec {
    int slots = 0;
    int N = 0;
    int bits = 0;
    std::unordered_map<uint64_t, Cx> a;

    SparseVec(int slots_, int N_) : slots(slots_), N(N_) {
        bits = 1;
        while ((1 << bits) < N) ++bits;
        if (static_cast<int64_t>(bits) * slots > 63) throw std::length_error("SparseVec: index does not fit 64 bits");
    }

    uint64_t pack(const std::vector<int>& m) const {
        uint64_t key = 0;
        for (int s = slots - 1; s >= 0; --s) key = (key << bits) | static_cast<uint64_t>(m[static_cast<size_t>(s)]);
        return key;
    }

    std::vector<int> unpack(uint64_t key) const {
        std::vector<int> m(static_cast<size_t>(slots));
        const uint64_t mask = (uint64_t(1) << bits) - 1;
        for (int s = 0; s < slots; ++s) {
            m[static_cast<size_t>(s)] = static_cast<int>(key & mask);
            key >>= bits;
        }
        return m;
    }

    void add(uint64_t key, Cx c) {
        Cx& slot = a[key];
        slot += c;
        if (std::abs(slot.real()) < 1e-300 && std::abs(slot.imag()) < 1e-300) a.erase(key);
    }

    double norm() const {
        double s = 0.0;
        for (const auto& [k, v] : a) s += std::norm(v);
        return std::sqrt(s);
    }
};

// One elementary tensor: scalar * f_1 (x) ... (x) f_slots.
struct TensorTerm {
    Cx scalar{1.0, 0.0};
    std::vector<Factor> factors;
};

namespace detail {

// Bit-exact canonical key; identical construction paths yield identical keys.
inline std::string term_key(const TensorTerm& t) {
    std::string key;
    auto push_double = [&key](double x) {
        uint64_t bits;
        static_assert(sizeof(bits) == sizeof(x));
        std::memcpy(&bits, &x, sizeof(bits));
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
    };
    push_double(t.scalar.real());
    push_double(t.scalar.imag());
    for (const Factor& f : t.factors) {
        push_double(static_cast<double>(f.offset));
        for (double x : f.w) push_double(x);
    }
    return key;
}

}  // namespace detail

// Finite sum of elementary tensors on (C^N)^{tensor slots}.
// slots == 0 is the scalar algebra: terms carry empty factor lists.
class TensorOp {
   public:
    TensorOp(int slots, int N) : slots_(slots), N_(N) {
        if (slots < 0 || N < 2) throw std::invalid_argument("TensorOp: bad shape");
    }

    static TensorOp zero(int slots, int N) { return TensorOp(slots, N); }

    static TensorOp identity(int slots, int N) {
        TensorOp op(slots, N);
        TensorTerm t;
        t.scalar = Cx(1.0, 0.0);
        t.factors.assign(static_cast<size_t>(slots), Factor::identity(N));
        op.terms_.push_back(std::move(t));
        return op;
    }

    static TensorOp scalar_op(Cx c, int N) {
        TensorOp op(0, N);
        if (c != Cx(0.0, 0.0)) op.terms_.push_back(TensorTerm{c, {}});
        return op;
    }

    int slots() const { return slots_; }
    int N() const { return N_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(TensorTerm t) {
        if (static_cast<int>(t.factors.size()) != slots_) throw std::invalid_argument("TensorOp::add_term: arity mismatch");
        for (const Factor& f : t.factors)
            if (f.dim() != N_) throw std::invalid_argument("TensorOp::add_term: factor dimension mismatch");
        if (t.scalar == Cx(0.0, 0.0)) return;
        terms_.push_back(std::move(t));
    }

    TensorOp& operator+=(const TensorOp& o) {
        check_shape(o);
        for (const TensorTerm& t : o.terms_) terms_.push_back(t);
        return *this;
    }

    TensorOp operator+(const TensorOp& o) const {
        TensorOp r = *this;
        r += o;
        return r;
    }

    TensorOp scaled(Cx c) const {
        TensorOp r = *this;
        if (c == Cx(0.0, 0.0)) {
            r.terms_.clear();
            return r;
        }
        for (TensorTerm& t : r.terms_) t.scalar *= c;
        return r;
    }

    TensorOp operator-(const TensorOp& o) const { return *this + o.scaled(Cx(-1.0, 0.0)); }

    TensorOp adjoint() const {
        TensorOp r(slots_, N_);
        for (const TensorTerm& t : terms_) {
            TensorTerm u;
            u.scalar = std::conj(t.scalar);
            u.factors.reserve(t.factors.size());
            for (const Factor& f : t.factors) u.factors.push_back(f.adjoint());
            r.terms_.push_back(std::move(u));
        }
        return r;
    }

    // Operator product; factor count multiplies, so keep chains short.
    TensorOp operator*(const TensorOp& o) const {
        check_shape(o);
        TensorOp r(slots_, N_);
        for (const TensorTerm& t : terms_) {
            for (const TensorTerm& u : o.terms_) {
                TensorTerm v;
                v.scalar = t.scalar * u.scalar;
                v.factors.reserve(static_cast<size_t>(slots_));
                for (int s = 0; s < slots_; ++s)
                    v.factors.push_back(t.factors[static_cast<size_t>(s)].compose(u.factors[static_cast<size_t>(s)]));
                r.terms_.push_back(std::move(v));
            }
        }
        return r;
    }

    Cx as_scalar() const {
        if (slots_ != 0) throw std::logic_error("TensorOp::as_scalar: nonzero arity");
        Cx s(0.0, 0.0);
        for (const TensorTerm& t : terms_) s += t.scalar;
        return s;
    }

    // Dense application; cost per term is slots * dim.
    TensorVec apply(const TensorVec& v) const {
        if (v.slots != slots_ || v.N != N_) throw std::invalid_argument("TensorOp::apply: shape mismatch");
        TensorVec out(slots_, N_);
        if (slots_ == 0) {
            out.a[0] = as_scalar() * v.a[0];
            return out;
        }
        TensorVec cur(slots_, N_), next(slots_, N_);
        const int64_t dim = static_cast<int64_t>(v.a.size());
        for (const TensorTerm& t : terms_) {
            cur.a = v.a;
            int64_t stride = 1;
            for (int s = 0; s < slots_; ++s) {
                const Factor& f = t.factors[static_cast<size_t>(s)];
                if (f.is_identity()) {
                    stride *= N_;
                    continue;
                }
                std::fill(next.a.begin(), next.a.end(), Cx(0.0, 0.0));
                for (int64_t i = 0; i < dim; ++i) {
                    const Cx amp = cur.a[static_cast<size_t>(i)];
                    if (amp == Cx(0.0, 0.0)) continue;
                    const int m = static_cast<int>((i / stride) % N_);
                    const int p = m + f.offset;
                    if (p < 0 || p >= N_) continue;
                    const double wgt = f.w[static_cast<size_t>(m)];
                    if (wgt == 0.0) continue;
                    next.a[static_cast<size_t>(i + static_cast<int64_t>(f.offset) * stride)] += wgt * amp;
                }
                std::swap(cur.a, next.a);
                stride *= N_;
            }
            for (int64_t i = 0; i < dim; ++i) out.a[static_cast<size_t>(i)] += t.scalar * cur.a[static_cast<size_t>(i)];
        }
        return out;
    }

    // Image of a single basis vector; cost is terms * slots.
    void apply_to_basis(const std::vector<int>& m, SparseVec& out) const {
        if (static_cast<int>(m.size()) != slots_) throw std::invalid_argument("TensorOp::apply_to_basis: arity mismatch");
        std::vector<int> img(static_cast<size_t>(slots_));
        for (const TensorTerm& t : terms_) {
            Cx amp = t.scalar;
            bool alive = true;
            for (int s = 0; s < slots_ && alive; ++s) {
                const Factor& f = t.factors[static_cast<size_t>(s)];
                const int lvl = m[static_cast<size_t>(s)];
                const int p = lvl + f.offset;
                if (p < 0 || p >= N_ || f.w[static_cast<size_t>(lvl)] == 0.0) {
                    alive = false;
                    break;
                }
                amp *= f.w[static_cast<size_t>(lvl)];
                img[static_cast<size_t>(s)] = p;
            }
            if (alive) out.add(out.pack(img), amp);
        }
    }

    // Sup over terms of |scalar| * prod sup|factor|; an upper bound for the norm
    // of each elementary tensor, summed.
    double term_norm_bound() const {
        double s = 0.0;
        for (const TensorTerm& t : terms_) {
            double b = std::abs(t.scalar);
            for (const Factor& f : t.factors) b *= f.sup_norm();
            s += b;
        }
        return s;
    }

   private:
    void check_shape(const TensorOp& o) const {
        if (o.slots_ != slots_ || o.N_ != N_) throw std::invalid_argument("TensorOp: shape mismatch");
    }

    int slots_;
    int N_;
    std::vector<TensorTerm> terms_;
};

// Term-multiset equality with bit-exact scalars and weights. Intended for
// operators assembled through the same rendering path, where equal content
// implies equal bits.
inline bool tensor_op_equal_exact(const TensorOp& a, const TensorOp& b) {
    if (a.slots() != b.slots() || a.N() != b.N() || a.terms().size() != b.terms().size()) return false;
    std::vector<std::string> ka, kb;
    ka.reserve(a.terms().size());
    kb.reserve(b.terms().size());
    for (const TensorTerm& t : a.terms()) ka.push_back(detail::term_key(t));
    for (const TensorTerm& t : b.terms()) kb.push_back(detail::term_key(t));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

}  // namespace qball
