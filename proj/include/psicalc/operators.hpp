#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psicalc/delta_series.hpp"
#include "psicalc/error.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"

namespace psicalc {

enum class OpKind { d_psi, x_hat_psi, x_hat, d_classical, dilation, n_hat_psi, d_zero, d_q, d_r, other };

inline std::string op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::d_psi: return "d_psi";
        case OpKind::x_hat_psi: return "x_hat_psi";
        case OpKind::x_hat: return "x_hat";
        case OpKind::d_classical: return "d_classical";
        case OpKind::dilation: return "dilation";
        case OpKind::n_hat_psi: return "n_hat_psi";
        case OpKind::d_zero: return "d_zero";
        case OpKind::d_q: return "d_q";
        case OpKind::d_r: return "d_r";
        case OpKind::other: return "other";
    }
    return "other";
}

/// Deformed derivative: x^n -> n_psi x^{n-1}.
inline OpMatrix d_psi_op(const PsiSequence& psi) {
    const int cap = psi.cap();
    return OpMatrix::from_rule(cap, cap, [&](int j) {
        return j == 0 ? Poly::zero(cap) : Poly::monomial(j - 1, cap, psi.n_psi(j));
    });
}

/// Raising operator dual to the deformed derivative:
/// x^n -> ((n+1)/(n+1)_psi) x^{n+1}. The top column is truncated away, so
/// the matrix is trusted on degrees <= cap-1 only.
inline OpMatrix x_hat_psi_op(const PsiSequence& psi) {
    const int cap = psi.cap();
    return OpMatrix::from_rule(cap, cap - 1, [&](int j) {
        return j == cap ? Poly::zero(cap)
                        : Poly::monomial(j + 1, cap, Scalar(j + 1) / psi.n_psi(j + 1));
    });
}

/// Multiplication by x.
inline OpMatrix x_hat_op(int cap) {
    return OpMatrix::from_rule(cap, cap - 1, [&](int j) {
        return j == cap ? Poly::zero(cap) : Poly::monomial(j + 1, cap);
    });
}

/// Multiplication by x^k.
inline OpMatrix x_hat_pow_op(int k, int cap) {
    return OpMatrix::from_rule(cap, cap - k, [&](int j) {
        return j + k > cap ? Poly::zero(cap) : Poly::monomial(j + k, cap);
    });
}

/// Multiplication by a fixed polynomial.
inline OpMatrix mult_op(const Poly& m) {
    const int cap = m.cap();
    OpMatrix r(cap);
    bool lost_any = false;
    for (int j = 0; j <= cap; ++j) {
        auto [col, lost] = mul_lossy(m, Poly::monomial(j, cap));
        r.set_column(j, col);
        if (lost) lost_any = true;
    }
    r.restrict_validity(lost_any ? cap - std::max(0, m.degree()) : cap);
    return r;
}

inline OpMatrix d_classical_op(int cap) {
    return OpMatrix::from_rule(cap, cap, [&](int j) {
        return j == 0 ? Poly::zero(cap) : Poly::monomial(j - 1, cap, Scalar(j));
    });
}

/// Dilation f(x) -> f(qx).
inline OpMatrix dilation_op(const Scalar& q, int cap) {
    return OpMatrix::from_rule(cap, cap, [&](int j) { return Poly::monomial(j, cap, spow(q, j)); });
}

/// Degree-graded multiplier: x^{n-1} -> n_psi x^{n-1}. The top column
/// would need the deformed integer beyond the table, so it is truncated.
inline OpMatrix n_hat_psi_op(const PsiSequence& psi) {
    const int cap = psi.cap();
    return OpMatrix::from_rule(cap, cap - 1, [&](int j) {
        return j == cap ? Poly::zero(cap) : Poly::monomial(j, cap, psi.n_psi(j + 1));
    });
}

/// Divided-difference derivative: x^n -> x^{n-1}.
inline OpMatrix d_zero_op(int cap) {
    return OpMatrix::from_rule(cap, cap, [&](int j) {
        return j == 0 ? Poly::zero(cap) : Poly::monomial(j - 1, cap);
    });
}

/// Jackson derivative, built column-wise from the deformed integers
/// (1-q^n)/(1-q); the difference-quotient form is kept as a test oracle.
inline OpMatrix d_q_op(const Scalar& q, int cap) {
    if (q == 1) throw NotAdmissible("Jackson derivative needs q != 1");
    return OpMatrix::from_rule(cap, cap, [&](int j) {
        if (j == 0) return Poly::zero(cap);
        return Poly::monomial(j - 1, cap, (Scalar(1) - spow(q, j)) / (Scalar(1) - q));
    });
}

/// R-deformed derivative R(q Q_hat) d_0: x^n -> R(q^n) x^{n-1}.
inline OpMatrix d_r_op(const RationalFunction& r, const Scalar& q, int cap) {
    return OpMatrix::from_rule(cap, cap, [&](int j) {
        return j == 0 ? Poly::zero(cap) : Poly::monomial(j - 1, cap, r.eval(spow(q, j)));
    });
}

struct NamedOp {
    OpMatrix matrix;
    OpKind kind;
    std::optional<PsiSequence> psi;
};

inline NamedOp make_named(OpKind kind, const std::optional<PsiSequence>& psi,
                          const std::optional<Scalar>& q,
                          const std::optional<RationalFunction>& r, int cap) {
    switch (kind) {
        case OpKind::d_psi:
            if (!psi) throw MissingParameter("d_psi needs a deformation sequence");
            return {d_psi_op(*psi), kind, psi};
        case OpKind::x_hat_psi:
            if (!psi) throw MissingParameter("x_hat_psi needs a deformation sequence");
            return {x_hat_psi_op(*psi), kind, psi};
        case OpKind::n_hat_psi:
            if (!psi) throw MissingParameter("n_hat_psi needs a deformation sequence");
            return {n_hat_psi_op(*psi), kind, psi};
        case OpKind::x_hat: return {x_hat_op(cap), kind, std::nullopt};
        case OpKind::d_classical: return {d_classical_op(cap), kind, std::nullopt};
        case OpKind::d_zero: return {d_zero_op(cap), kind, std::nullopt};
        case OpKind::dilation:
            if (!q) throw MissingParameter("dilation needs q");
            return {dilation_op(*q, cap), kind, std::nullopt};
        case OpKind::d_q:
            if (!q) throw MissingParameter("d_q needs q");
            return {d_q_op(*q, cap), kind, std::nullopt};
        case OpKind::d_r:
            if (!q || !r) throw MissingParameter("d_r needs q and R");
            return {d_r_op(*r, *q, cap), kind, std::nullopt};
        case OpKind::other: break;
    }
    throw MissingParameter("no constructor for this operator kind");
}

/// Realize a series in the deformed derivative as a matrix.
inline OpMatrix realize(const DeltaSeries& s) { return series_to_matrix(s, d_psi_op(s.psi())); }

/// Pincherle derivative: T -> [T, x_hat_psi]. One degree of validity is
/// spent on the raising factor.
inline OpMatrix pincherle(const OpMatrix& t, const PsiSequence& psi) {
    if (t.cap() != psi.cap()) throw CapMismatch("operator and sequence caps differ");
    return op_commutator(t, x_hat_psi_op(psi));
}

/// Sampled shift-invariance test: [T, E^alpha] == 0 for every sampled
/// alpha. The coefficient-level test ([T, d_psi] == 0, equivalent on the
/// truncated space) is evaluated alongside; the conjunction is returned.
inline bool is_shift_invariant(const OpMatrix& t, const PsiSequence& psi,
                               const std::vector<Scalar>& samples) {
    if (t.cap() != psi.cap()) throw CapMismatch("operator and sequence caps differ");
    if (samples.empty()) throw MissingParameter("need at least one translation sample");
    const OpMatrix d = d_psi_op(psi);
    bool sampled = true;
    for (const auto& alpha : samples) {
        const OpMatrix e = series_to_matrix(translation_series(psi, alpha), d);
        const OpMatrix c = op_commutator(t, e);
        if (c.validity() < 0) throw GuardBandExceeded("commutator has no trusted degrees");
        if (!op_is_zero_on(c, c.validity())) {
            sampled = false;
            break;
        }
    }
    const OpMatrix cd = op_commutator(t, d);
    if (cd.validity() < 0) throw GuardBandExceeded("commutator has no trusted degrees");
    const bool coefficient_level = op_is_zero_on(cd, cd.validity());
    return sampled && coefficient_level;
}

/// Normal-ordering rule for the deformed ladder pair: the inner
/// coefficients are ordinary binomials (not deformed), which is forced by
/// the bare [lowering, raising] = id bracket.
inline bool ghw_leibniz_check(const PsiSequence& psi, int n, int m) {
    const int cap = psi.cap();
    if (2 * (n + m) > cap) throw GuardBandExceeded("need n+m <= cap/2");
    const OpMatrix d = d_psi_op(psi);
    const OpMatrix x = x_hat_psi_op(psi);
    const OpMatrix lhs = op_compose(op_pow(d, n), op_pow(x, m));
    OpMatrix rhs = OpMatrix::zero_op(cap);
    for (int k = 0; k <= std::min(n, m); ++k) {
        const Scalar c = Scalar(int_binomial(n, k)) * Scalar(int_binomial(m, k)) * Scalar(int_factorial(k));
        rhs = rhs + c * op_compose(op_pow(x, m - k), op_pow(d, n - k));
    }
    return op_equal_within_validity(lhs, rhs);
}

/// Exponential commutation rule for the ladder pair, compared order by
/// order in a formal expansion parameter s (the exponentials carry ts and
/// as); concrete-scalar truncations of the two sides differ above order K,
/// so the graded comparison is the exact content of the rule. Compared on
/// degrees <= cap-K.
inline bool ghw_exponential_check(const PsiSequence& psi, const Scalar& t, const Scalar& a, int k_order) {
    const int cap = psi.cap();
    if (2 * k_order > cap) throw GuardBandExceeded("need 2K <= cap");
    const OpMatrix d = d_psi_op(psi);
    const OpMatrix x = x_hat_psi_op(psi);

    using Graded = std::vector<OpMatrix>;
    const auto graded_mul = [&](const Graded& u, const Graded& v) {
        Graded r(static_cast<std::size_t>(k_order) + 1, OpMatrix::zero_op(cap));
        for (int i = 0; i <= k_order; ++i)
            for (int j = 0; i + j <= k_order; ++j)
                r[static_cast<std::size_t>(i + j)] =
                    r[static_cast<std::size_t>(i + j)] +
                    op_compose(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        return r;
    };
    const auto exp_of = [&](const OpMatrix& g, const Scalar& c) {
        Graded r;
        OpMatrix p = OpMatrix::identity(cap);
        Scalar w(1);
        for (int i = 0; i <= k_order; ++i) {
            if (i > 0) {
                p = op_compose(p, g);
                w *= c / Scalar(i);
            }
            r.push_back(w * p);
        }
        return r;
    };

    const Graded exp_d = exp_of(d, t);
    const Graded exp_x = exp_of(x, a);
    Graded exp_at(static_cast<std::size_t>(k_order) + 1, OpMatrix::zero_op(cap));
    Scalar w(1);
    for (int m = 0; 2 * m <= k_order; ++m) {
        if (m > 0) w *= a * t / Scalar(m);
        exp_at[static_cast<std::size_t>(2 * m)] = w * OpMatrix::identity(cap);
    }

    const Graded lhs = graded_mul(exp_d, exp_x);
    const Graded rhs = graded_mul(exp_at, graded_mul(exp_x, exp_d));
    for (int r = 0; r <= k_order; ++r)
        if (!op_equal_on(lhs[static_cast<std::size_t>(r)], rhs[static_cast<std::size_t>(r)], cap - k_order))
            return false;
    return true;
}

/// Product rules for the deformed derivatives: the general
/// n_hat d_0 factorization rule, and the Jackson rule when the sequence
/// carries a q parameter.
inline bool leibniz_product_check(const PsiSequence& psi, const Poly& f, const Poly& g) {
    const int cap = psi.cap();
    if (f.degree() + g.degree() > cap) throw TruncationLoss("product of operands exceeds cap");
    const Poly fg = f * g;

    const OpMatrix d = d_psi_op(psi);
    const OpMatrix d0 = d_zero_op(cap);
    const OpMatrix nhat = n_hat_psi_op(psi);
    const Poly lhs = d.apply(fg);
    const Poly rhs = nhat.apply(d0.apply(f) * g + f.at_zero() * d0.apply(g));
    bool ok = lhs == rhs;

    if (psi.q() && psi.label() == "q-jackson") {
        const Scalar q = *psi.q();
        const OpMatrix dq = d_q_op(q, cap);
        const Poly lhs_q = dq.apply(fg);
        const Poly rhs_q = dq.apply(f) * g + f.dilate(q) * dq.apply(g);
        ok = ok && lhs_q == rhs_q;
    }
    return ok;
}

/// The divided-difference derivative written as an infinite-order
/// differential operator: sum_{n>=1} (-1)^{n+1} (x^{n-1}/n!) d^n/dx^n.
/// Terms up to n = m act exactly on x^m.
inline bool d_zero_series_check(int m, int cap) {
    if (m > cap) throw CapExceeded("degree beyond cap");
    const OpMatrix d = d_classical_op(cap);
    OpMatrix acc = OpMatrix::zero_op(cap);
    for (int n = 1; n <= std::max(1, m); ++n) {
        const Scalar c = Scalar((n % 2 == 1) ? 1 : -1) / Scalar(int_factorial(n));
        acc = acc + c * op_compose(x_hat_pow_op(n - 1, cap), op_pow(d, n));
    }
    const Poly got = acc.apply(Poly::monomial(m, cap));
    const Poly want = m == 0 ? Poly::zero(cap) : Poly::monomial(m - 1, cap);
    return got == want;
}

/// Classical shift by one: f(x) -> f(x+1), built directly from binomial
/// expansion (independent of the series machinery).
inline OpMatrix shift_by_one_op(int cap) {
    return OpMatrix::from_rule(cap, cap, [&](int j) {
        Poly col(cap);
        for (int i = 0; i <= j; ++i) col.set_coeff(i, Scalar(int_binomial(j, i)));
        return col;
    });
}

inline Poly falling_factorial_poly(int k, int cap) {
    Poly p = Poly::one(cap);
    for (int j = 0; j < k; ++j) {
        Poly factor(cap);
        factor.set_coeff(0, Scalar(-j));
        factor.set_coeff(1, Scalar(1));
        p = p * factor;
    }
    return p;
}

/// Bridge identities between the classical derivative and the forward
/// difference: D = sum_k (d_k/k!) Delta^k with d_k = (-1)^{k-1}(k-1)!, and
/// Delta = sum_n (delta_n/n!) D^n with delta_n = 1. A K-term truncation of
/// either lowering-operator series is exact precisely on degrees <= K, so
/// the comparison runs on degrees <= min(K, cap-K).
inline bool classical_bridge_check(int k_order, int cap) {
    if (k_order > cap) throw GuardBandExceeded("need K <= cap");
    const int guard = std::min(k_order, cap - k_order);
    const OpMatrix d = d_classical_op(cap);
    const OpMatrix delta = shift_by_one_op(cap) - OpMatrix::identity(cap);

    OpMatrix d_from_delta = OpMatrix::zero_op(cap);
    for (int k = 1; k <= k_order; ++k) {
        const Scalar d_k = Scalar((k % 2 == 1) ? 1 : -1) * Scalar(int_factorial(k - 1));
        // d_k matches the coefficient functional [D x-falling-k](0).
        if (d_k != d.apply(falling_factorial_poly(k, cap)).at_zero()) return false;
        d_from_delta = d_from_delta + (d_k / Scalar(int_factorial(k))) * op_pow(delta, k);
    }
    if (!op_equal_on(d, d_from_delta, guard)) return false;

    OpMatrix delta_from_d = OpMatrix::zero_op(cap);
    for (int n = 1; n <= k_order; ++n) {
        const Scalar delta_n = delta.apply(Poly::monomial(n, cap)).at_zero();
        if (delta_n != 1) return false;
        delta_from_d = delta_from_d + (delta_n / Scalar(int_factorial(n))) * op_pow(d, n);
    }
    return op_equal_on(delta, delta_from_d, guard);
}

} // namespace psicalc
