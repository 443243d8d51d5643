#pragma once

#include <random>
#include <stdexcept>

#include "qball/poly.hpp"

namespace qball {

struct SampleSpec {
    int n = 1;
    int max_degree = 3;
    int min_terms = 2;
    int max_terms = 5;
    bool holomorphic_only = false;
};

// Deterministic random polynomial with small integer-times-q-power
// coefficients. Uses raw engine draws with modulo so that streams are
// reproducible across platforms for a fixed seed.
inline Poly sample_polynomial(std::mt19937_64& eng, const SampleSpec& spec) {
    if (spec.n < 1 || spec.max_degree < 1 || spec.min_terms < 1 || spec.max_terms < spec.min_terms)
        throw std::invalid_argument("sample_polynomial: bad spec");
    Poly p = Poly::zero(AlgTag::mat, spec.n);
    const int terms = spec.min_terms + static_cast<int>(eng() % static_cast<uint64_t>(spec.max_terms - spec.min_terms + 1));
    for (int t = 0; t < terms; ++t) {
        const int len = 1 + static_cast<int>(eng() % static_cast<uint64_t>(spec.max_degree));
        Word w;
        w.reserve(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) {
            const int col = 1 + static_cast<int>(eng() % static_cast<uint64_t>(spec.n));
            const int row = 1 + static_cast<int>(eng() % static_cast<uint64_t>(spec.n));
            const bool starred = !spec.holomorphic_only && (eng() % 2 == 1);
            w.push_back(Gen::z(col, row, starred));
        }
        const int64_t mag = 1 + static_cast<int64_t>(eng() % 3);
        const int64_t sign = (eng() % 2 == 0) ? 1 : -1;
        const int64_t qexp = static_cast<int64_t>(eng() % 5) - 2;
        p.add_term(std::move(w), Coeff(Laurent::q_power(qexp, Rational(sign * mag))));
    }
    return p;
}

}  // namespace qball
