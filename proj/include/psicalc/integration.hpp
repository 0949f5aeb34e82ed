#pragma once

#include "psicalc/error.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"

namespace psicalc {

/// Right inverse of the deformed derivative: x^n -> x^{n+1}/(n+1)_psi,
/// extended linearly; no integration constant.
inline Poly psi_integral(const PsiSequence& psi, const Poly& p) {
    if (p.cap() != psi.cap()) throw CapMismatch("caps differ");
    if (p.degree() > psi.cap() - 1) throw CapExceeded("integral would exceed the cap");
    Poly r(psi.cap());
    for (int n = 0; n <= p.degree(); ++n)
        if (p.coeff(n) != 0) r.set_coeff(n + 1, p.coeff(n) / psi.n_psi(n + 1));
    return r;
}

/// Jackson integral in closed form via geometric summation:
/// x^n -> ((1-q)/(1-q^{n+1})) x^{n+1}.
inline Poly q_integral(const Scalar& q, const Poly& p) {
    if (p.degree() > p.cap() - 1) throw CapExceeded("integral would exceed the cap");
    Poly r(p.cap());
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n) == 0) continue;
        const Scalar den = Scalar(1) - spow(q, n + 1);
        if (den == 0) throw RootOfUnity("q^" + std::to_string(n + 1) + " = 1");
        r.set_coeff(n + 1, p.coeff(n) * (Scalar(1) - q) / den);
    }
    return r;
}

/// R-deformed integral: x^n -> x^{n+1}/R(q^{n+1}).
inline Poly r_integral(const RationalFunction& rf, const Scalar& q, const Poly& p) {
    if (p.degree() > p.cap() - 1) throw CapExceeded("integral would exceed the cap");
    Poly r(p.cap());
    for (int n = 0; n <= p.degree(); ++n) {
        if (p.coeff(n) == 0) continue;
        const Scalar v = rf.eval(spow(q, n + 1));
        if (v == 0) throw ZeroDenominator("R vanishes at q^" + std::to_string(n + 1));
        r.set_coeff(n + 1, p.coeff(n) / v);
    }
    return r;
}

/// Operator form of the Jackson integral, (1-q) x_hat (1 - q Q_hat)^{-1},
/// with the geometric resolvent evaluated exactly on the diagonal. Kept as
/// an independent oracle for the closed form.
inline OpMatrix q_integral_op_oracle(const Scalar& q, int cap) {
    return OpMatrix::from_rule(cap, cap - 1, [&](int j) {
        if (j == cap) return Poly::zero(cap);
        const Scalar den = Scalar(1) - spow(q, j + 1);
        if (den == 0) throw RootOfUnity("q^" + std::to_string(j + 1) + " = 1");
        return Poly::monomial(j + 1, cap, (Scalar(1) - q) / den);
    });
}

/// K-term partial sum of the Jackson series
/// (1-q) x sum_{k=0}^{K} q^k p(q^k x); converges to the closed form for
/// |q| < 1 as K grows.
inline Poly jackson_partial_sum(const Scalar& q, const Poly& p, int terms) {
    if (p.degree() > p.cap() - 1) throw CapExceeded("integral would exceed the cap");
    Poly acc(p.cap());
    Scalar qk(1);
    for (int k = 0; k <= terms; ++k) {
        acc = acc + qk * p.dilate(qk);
        qk *= q;
    }
    Poly shifted(p.cap());
    for (int n = 0; n <= acc.degree(); ++n)
        shifted.set_coeff(n + 1, (Scalar(1) - q) * acc.coeff(n));
    return shifted;
}

} // namespace psicalc
