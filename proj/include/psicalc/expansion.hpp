#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psicalc/bi_series.hpp"
#include "psicalc/error.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/umbral.hpp"

namespace psicalc {

enum class BasisMode { x_hat, x_hat_q };

inline std::string basis_mode_name(BasisMode m) {
    return m == BasisMode::x_hat ? "x_hat" : "x_hat_q";
}

/// sum_k c_k A^k v without materializing the operator polynomial.
inline Poly apply_poly_of_op(const Poly& c, const OpMatrix& a, const Poly& v) {
    Poly acc = c.coeff(0) * v;
    Poly w = v;
    for (int k = 1; k <= c.degree(); ++k) {
        w = a.apply(w);
        if (c.coeff(k) != 0) acc = acc + c.coeff(k) * w;
    }
    return acc;
}

inline OpMatrix poly_of_op(const Poly& c, const OpMatrix& a) {
    const int cap = a.cap();
    OpMatrix acc = c.coeff(0) * OpMatrix::identity(cap);
    OpMatrix w = OpMatrix::identity(cap);
    for (int k = 1; k <= c.degree(); ++k) {
        w = op_compose(w, a);
        if (c.coeff(k) != 0) acc = acc + c.coeff(k) * w;
    }
    return acc;
}

/// The unique expansion T = sum_n q_n(basis) Q^n of an arbitrary operator
/// in powers of a degree-lowering Q, with polynomial coefficients in
/// either plain multiplication by x or the raising operator dual to Q.
/// Reconstruction reproduces T exactly on inputs of degree <= order.
struct OpExpansion {
    std::vector<Poly> q_polys;
    OpMatrix base_q;
    BasisMode mode;
    int order;
    std::optional<BasicSequence> basic;  // required for the dual-basis mode
};

/// The scaled basic chain of Q: b_0 = 1, Q b_n = b_{n-1}, b_n(0) = 0. It
/// exists and is unique for every degree-lowering Q, and doubles as the
/// coefficient stream of the eigen-series Phi(x;lambda).
inline std::vector<Poly> scaled_basic_chain(const OpMatrix& q, int m) {
    return normal_basic_general(q, PsiSequence::ones(q.cap()), m).polys;
}

inline OpExpansion expand_in_q(const OpMatrix& t, const OpMatrix& q, const PsiSequence& psi, int m,
                               BasisMode mode,
                               const std::optional<BasicSequence>& basic = std::nullopt) {
    if (t.cap() != q.cap() || t.cap() != psi.cap()) throw CapMismatch("caps differ");
    const int cap = t.cap();
    if (m > cap) throw CapExceeded("expansion order beyond cap");
    if (t.max_degree_shift() + m > cap)
        throw CapExceeded("operator raises degrees too far for this expansion order");

    std::vector<Poly> chain;
    if (basic) {
        detail::require_generated_by(q, *basic);
        if (basic->max_index() < m) throw CapExceeded("basis too short for this expansion order");
        for (int n = 0; n <= basic->max_index(); ++n)
            chain.push_back((Scalar(1) / psi.factorial(n)) * basic->polys[static_cast<std::size_t>(n)]);
    } else {
        if (mode == BasisMode::x_hat_q)
            throw MissingParameter("dual-basis expansion needs the basic sequence of Q");
        chain = scaled_basic_chain(q, m);
    }

    std::vector<Poly> q_polys;
    if (mode == BasisMode::x_hat) {
        for (int mm = 0; mm <= m; ++mm) {
            Poly r = t.apply(chain[static_cast<std::size_t>(mm)]);
            for (int n = 0; n < mm; ++n)
                r = r - q_polys[static_cast<std::size_t>(n)] * chain[static_cast<std::size_t>(mm - n)];
            q_polys.push_back(std::move(r));
        }
    } else {
        const OpMatrix xq = x_hat_q_op(q, *basic);
        // The polynomial c is recovered from c(x_hat_Q) 1 = sum c_k (k!/k_psi!) p_k.
        for (int mm = 0; mm <= m; ++mm) {
            Poly r = t.apply(chain[static_cast<std::size_t>(mm)]);
            for (int n = 0; n < mm; ++n)
                r = r - apply_poly_of_op(q_polys[static_cast<std::size_t>(n)], xq,
                                         chain[static_cast<std::size_t>(mm - n)]);
            const auto gamma = detail::expand_in_basis(r, basic->polys);
            Poly c(t.cap());
            for (int k = 0; k < static_cast<int>(gamma.size()); ++k)
                if (gamma[static_cast<std::size_t>(k)] != 0)
                    c.set_coeff(k, gamma[static_cast<std::size_t>(k)] * psi.factorial(k) /
                                       Scalar(int_factorial(k)));
            q_polys.push_back(std::move(c));
        }
    }
    return OpExpansion{std::move(q_polys), q, mode, m, basic};
}

/// sum_n q_n(basis) Q^n, trusted on degrees <= order.
inline OpMatrix reconstruct(const OpExpansion& e) {
    const int cap = e.base_q.cap();
    OpMatrix acc = OpMatrix::zero_op(cap);
    OpMatrix qn = OpMatrix::identity(cap);
    std::optional<OpMatrix> xq;
    if (e.mode == BasisMode::x_hat_q) {
        if (!e.basic) throw MissingParameter("dual-basis reconstruction needs the basic sequence");
        xq = x_hat_q_op(e.base_q, *e.basic);
    }
    for (int n = 0; n <= e.order; ++n) {
        if (n > 0) qn = op_compose(qn, e.base_q);
        const Poly& c = e.q_polys[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        const OpMatrix coeff_op = e.mode == BasisMode::x_hat ? mult_op(c) : poly_of_op(c, *xq);
        acc = acc + op_compose(coeff_op, qn);
    }
    acc.restrict_validity(e.order);
    return acc;
}

inline bool reconstruction_check(const OpExpansion& e, const OpMatrix& t) {
    return op_equal_on(reconstruct(e), t, std::min(e.order, t.validity()));
}

/// Indicator series P(x;lambda) = sum q_n(x) lambda^n. For the plain
/// multiplication mode it also satisfies the conjugation identity
/// P = Phi^{-1} (T Phi) with Phi the eigen-series of Q; that identity is
/// re-verified here before the series is returned.
inline BiSeries indicator(const OpExpansion& e, int lambda_cap) {
    if (lambda_cap > e.order) throw CapExceeded("lambda order beyond expansion order");
    std::vector<Poly> terms(e.q_polys.begin(), e.q_polys.begin() + lambda_cap + 1);
    BiSeries p(std::move(terms), lambda_cap);
    if (e.mode == BasisMode::x_hat) {
        const auto chain = scaled_basic_chain(e.base_q, lambda_cap);
        const BiSeries phi(std::vector<Poly>(chain.begin(), chain.begin() + lambda_cap + 1), lambda_cap);
        const OpMatrix t = reconstruct(e);
        BiSeries t_phi = BiSeries::zero(lambda_cap, e.base_q.cap());
        for (int n = 0; n <= lambda_cap; ++n) t_phi.set_term(n, t.apply(phi.term(n)));
        if (bi_divide(t_phi, phi) != p)
            throw SingularSystem("indicator conjugation identity failed");
    }
    return p;
}

/// Independent route to the indicator: conjugate by the eigen-series and
/// compare against the expansion coefficients.
inline bool indicator_conjugation_check(const OpMatrix& t, const OpExpansion& e, int lambda_cap) {
    if (e.mode != BasisMode::x_hat)
        throw BasisMismatch("conjugation identity is stated for the multiplication basis");
    if (lambda_cap > e.order) throw CapExceeded("lambda order beyond expansion order");
    const auto chain = scaled_basic_chain(e.base_q, lambda_cap);
    const BiSeries phi(std::vector<Poly>(chain.begin(), chain.begin() + lambda_cap + 1), lambda_cap);
    BiSeries t_phi = BiSeries::zero(lambda_cap, e.base_q.cap());
    for (int n = 0; n <= lambda_cap; ++n) t_phi.set_term(n, t.apply(phi.term(n)));
    const BiSeries via_conj = bi_divide(t_phi, phi);
    for (int n = 0; n <= lambda_cap; ++n)
        if (via_conj.term(n) != e.q_polys[static_cast<std::size_t>(n)]) return false;
    return true;
}

/// For T already given as sum q_n(x) d_psi^n, the eigen-series is the
/// deformed exponential and the conjugation identity specializes to
/// P(x;lambda) = exp_psi(lambda x)^{-1} (T exp_psi(lambda x)).
inline bool psi_exponential_indicator_check(const std::vector<Poly>& q_polys, const PsiSequence& psi,
                                            int lambda_cap) {
    const int cap = psi.cap();
    if (static_cast<int>(q_polys.size()) <= lambda_cap) throw CapExceeded("need terms up to the lambda order");
    const OpMatrix d = d_psi_op(psi);
    OpMatrix t = OpMatrix::zero_op(cap);
    OpMatrix dn = OpMatrix::identity(cap);
    for (int n = 0; n < static_cast<int>(q_polys.size()); ++n) {
        if (n > 0) dn = op_compose(dn, d);
        if (!q_polys[static_cast<std::size_t>(n)].is_zero())
            t = t + op_compose(mult_op(q_polys[static_cast<std::size_t>(n)]), dn);
    }
    // Phi = sum lambda^n x^n / n_psi!, the deformed exponential.
    BiSeries phi = BiSeries::zero(lambda_cap, cap);
    for (int n = 0; n <= lambda_cap; ++n)
        phi.set_term(n, Poly::monomial(n, cap, Scalar(1) / psi.factorial(n)));
    BiSeries t_phi = BiSeries::zero(lambda_cap, cap);
    for (int n = 0; n <= lambda_cap; ++n) t_phi.set_term(n, t.apply(phi.term(n)));
    const BiSeries via_conj = bi_divide(t_phi, phi);
    for (int n = 0; n <= lambda_cap; ++n)
        if (via_conj.term(n) != q_polys[static_cast<std::size_t>(n)]) return false;
    return true;
}

} // namespace psicalc
