#pragma once

#include <random>
#include <vector>

#include "psicalc/op_matrix.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"

namespace psitest {

using psicalc::OpMatrix;
using psicalc::Poly;
using psicalc::PsiSequence;
using psicalc::Scalar;

using Rng = std::mt19937_64;

inline Scalar random_scalar(Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (;;) {
        const Scalar s(num(rng), den(rng));
        if (!nonzero || s != 0) return s;
    }
}

inline Poly random_poly(Rng& rng, int cap, int max_deg) {
    Poly p(cap);
    std::uniform_int_distribution<int> deg(0, max_deg);
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) p.set_coeff(i, random_scalar(rng));
    return p;
}

/// Random operator whose columns never raise degree by more than max_raise.
inline OpMatrix random_operator(Rng& rng, int cap, int max_raise) {
    OpMatrix m(cap);
    for (int j = 0; j <= cap; ++j)
        m.set_column(j, random_poly(rng, cap, std::min(cap, j + max_raise)));
    return m;
}

/// The acceptance presets: classical, ones, dxd, and the q-family samples.
inline std::vector<PsiSequence> standard_presets(int cap) {
    return {PsiSequence::classical(cap), PsiSequence::ones(cap), PsiSequence::dxd(cap),
            PsiSequence::q_jackson(Scalar(1, 2), cap), PsiSequence::q_jackson(Scalar(1, 3), cap),
            PsiSequence::q_jackson(Scalar(2, 3), cap)};
}

} // namespace psitest
