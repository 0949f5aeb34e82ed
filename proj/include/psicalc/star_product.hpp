#pragma once

#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/expansion.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/operators.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"

namespace psicalc {

enum class StarBasis { x_basis, star_basis };

/// A polynomial together with the basis its coefficients refer to: plain
/// powers of x, or the star powers x^{n*} = (n!/n_psi!) x^n. Conversion is
/// a diagonal bijection and round-trips exactly.
struct StarPoly {
    Poly plain;
    StarBasis interpretation;
};

inline Poly star_to_x_basis(const StarPoly& s, const PsiSequence& psi) {
    if (s.interpretation == StarBasis::x_basis) return s.plain;
    Poly r(s.plain.cap());
    for (int k = 0; k <= s.plain.degree(); ++k)
        if (s.plain.coeff(k) != 0)
            r.set_coeff(k, s.plain.coeff(k) * Scalar(int_factorial(k)) / psi.factorial(k));
    return r;
}

inline StarPoly x_to_star_basis(const Poly& p, const PsiSequence& psi) {
    Poly r(p.cap());
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0)
            r.set_coeff(k, p.coeff(k) * psi.factorial(k) / Scalar(int_factorial(k)));
    return StarPoly{r, StarBasis::star_basis};
}

/// Noncommutative star multiplication: f * g realized as f(x_hat_psi)
/// applied to g. Bilinear, and intentionally asymmetric in its arguments.
inline Poly star(const PsiSequence& psi, const Poly& f, const Poly& g) {
    if (f.cap() != psi.cap() || g.cap() != psi.cap()) throw CapMismatch("caps differ");
    if (f.degree() + g.degree() > psi.cap())
        throw TruncationLoss("star product exceeds degree cap");
    return apply_poly_of_op(f, x_hat_psi_op(psi), g);
}

/// x^{n*} = x * x^{(n-1)*} = (n!/n_psi!) x^n.
inline StarPoly star_power(const PsiSequence& psi, int n) {
    if (n > psi.cap()) throw IndexOutOfCap("star power beyond cap");
    return StarPoly{Poly::monomial(n, psi.cap()), StarBasis::star_basis};
}

/// d_psi x^{n*} = n x^{(n-1)*}.
inline bool star_power_derivative_check(const PsiSequence& psi, int n) {
    const Poly lhs = d_psi_op(psi).apply(star_to_x_basis(star_power(psi, n), psi));
    const Poly rhs = n == 0 ? Poly::zero(psi.cap())
                            : Scalar(n) * star_to_x_basis(star_power(psi, n - 1), psi);
    return lhs == rhs;
}

/// Materializes the deformed exponential as a polynomial:
/// sum_{k<=order} scale^k x^k / k_psi!.
inline Poly exp_psi_poly(const PsiSequence& psi, const Scalar& scale, int order) {
    if (order > psi.cap()) throw CapExceeded("order beyond cap");
    Poly r(psi.cap());
    Scalar sk(1);
    for (int k = 0; k <= order; ++k) {
        r.set_coeff(k, sk / psi.factorial(k));
        sk *= scale;
    }
    return r;
}

/// Classical exponential of the raising operator applied to a polynomial,
/// summed to the given order.
inline Poly exp_of_raising_applied(const PsiSequence& psi, const Scalar& scale, int order, const Poly& v) {
    const OpMatrix x = x_hat_psi_op(psi);
    Poly acc = v;
    Poly w = v;
    Scalar c(1);
    for (int i = 1; i <= order; ++i) {
        w = x.apply(w);
        c *= scale / Scalar(i);
        acc = acc + c * w;
    }
    return acc;
}

/// The deformed exponential is the classical exponential of the raising
/// operator applied to 1; compared on degrees <= order.
inline bool star_exp_operator_form_check(const PsiSequence& psi, const Scalar& alpha, int order) {
    const Poly via_op = exp_of_raising_applied(psi, alpha, order, Poly::one(psi.cap()));
    const Poly direct = exp_psi_poly(psi, alpha, order);
    for (int n = 0; n <= order; ++n)
        if (via_op.coeff(n) != direct.coeff(n)) return false;
    return true;
}

/// Exponential shift law: exp[alpha x] * exp_psi[beta x] = exp_psi[(alpha+beta) x],
/// the classical exponential acting through the star product on a deformed
/// one. Exact on degrees <= order for every admissible deformation.
inline bool star_exp_shift_law_check(const PsiSequence& psi, const Scalar& alpha, const Scalar& beta,
                                     int order) {
    if (order > psi.cap()) throw CapExceeded("order beyond cap");
    const Poly lhs = exp_of_raising_applied(psi, alpha, order, exp_psi_poly(psi, beta, order));
    const Poly rhs = exp_psi_poly(psi, alpha + beta, order);
    for (int n = 0; n <= order; ++n)
        if (lhs.coeff(n) != rhs.coeff(n)) return false;
    return true;
}

/// The literal operator-weighted variant with deformed denominators on the
/// exponential of the raising operator. It reduces to the shift law only
/// classically; kept as a report-only probe.
inline bool star_exp_literal_variant_check(const PsiSequence& psi, const Scalar& alpha,
                                           const Scalar& beta, int order) {
    if (order > psi.cap()) throw CapExceeded("order beyond cap");
    const OpMatrix x = x_hat_psi_op(psi);
    Poly inner = Poly::one(psi.cap());
    Poly w = Poly::one(psi.cap());
    Scalar bk(1);
    for (int k = 1; k <= order; ++k) {
        w = x.apply(w);
        bk *= beta;
        inner = inner + bk / psi.factorial(k) * w;
    }
    const Poly lhs = exp_of_raising_applied(psi, alpha, order, inner);
    Poly rhs = Poly::one(psi.cap());
    Poly v = Poly::one(psi.cap());
    Scalar ck(1);
    for (int k = 1; k <= order; ++k) {
        v = x.apply(v);
        ck *= alpha + beta;
        rhs = rhs + ck / psi.factorial(k) * v;
    }
    for (int n = 0; n <= order; ++n)
        if (lhs.coeff(n) != rhs.coeff(n)) return false;
    return true;
}

/// Product rule for the star product: d_psi(f * g) = (Df) * g + f * (d_psi g),
/// with the plain derivative on the left factor. Also re-checks the
/// operator form of the deformed exponential (a cheap smoke-level probe of
/// the same bookkeeping).
inline bool star_leibniz_check(const PsiSequence& psi, const Poly& f, const StarPoly& g_star) {
    const Poly g = star_to_x_basis(g_star, psi);
    const OpMatrix d = d_psi_op(psi);
    const OpMatrix dc = d_classical_op(psi.cap());
    const Poly lhs = d.apply(star(psi, f, g));
    const Poly rhs = star(psi, dc.apply(f), g) + star(psi, f, d.apply(g));
    if (lhs != rhs) return false;
    return star_exp_operator_form_check(psi, Scalar(1), std::min(8, psi.cap()));
}

/// f(X) g(X) 1 = f * (g(X) 1): operator composition against staged star
/// application.
inline bool star_composition_check(const PsiSequence& psi, const Poly& f, const Poly& g) {
    if (f.degree() + g.degree() > psi.cap()) throw TruncationLoss("operands exceed cap");
    const OpMatrix x = x_hat_psi_op(psi);
    const Poly via_ops = apply_poly_of_op(f, x, apply_poly_of_op(g, x, Poly::one(psi.cap())));
    const Poly g_tilde = apply_poly_of_op(g, x, Poly::one(psi.cap()));
    return via_ops == star(psi, f, g_tilde);
}

/// Formal derivative of a series in the raising operator; coincides with
/// bracketing against d_psi.
inline std::vector<Scalar> psi_pincherle_derivation(const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> r;
    for (std::size_t k = 1; k < coeffs.size(); ++k) r.push_back(Scalar(static_cast<int>(k)) * coeffs[k]);
    if (r.empty()) r.push_back(Scalar(0));
    return r;
}

/// [d_psi, f(x_hat_psi)] == f'(x_hat_psi), as matrices within validity.
inline bool psi_pincherle_matrix_check(const std::vector<Scalar>& coeffs, const PsiSequence& psi) {
    const int cap = psi.cap();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (2 * deg > cap) throw GuardBandExceeded("series order too large for the cap");
    const OpMatrix x = x_hat_psi_op(psi);
    const OpMatrix d = d_psi_op(psi);
    Poly f(cap), fd(cap);
    for (int k = 0; k <= deg; ++k) f.set_coeff(k, coeffs[static_cast<std::size_t>(k)]);
    const auto dcoeffs = psi_pincherle_derivation(coeffs);
    for (int k = 0; k < static_cast<int>(dcoeffs.size()); ++k)
        fd.set_coeff(k, dcoeffs[static_cast<std::size_t>(k)]);
    const OpMatrix bracket = op_commutator(d, poly_of_op(f, x));
    const OpMatrix direct = poly_of_op(fd, x);
    return op_equal_within_validity(bracket, direct);
}

/// [f'(x_hat_psi)] 1 = d_psi applied to f read in star powers.
inline bool psi_pincherle_unit_check(const std::vector<Scalar>& coeffs, const PsiSequence& psi) {
    const int cap = psi.cap();
    const OpMatrix x = x_hat_psi_op(psi);
    Poly fd(cap);
    const auto dcoeffs = psi_pincherle_derivation(coeffs);
    for (int k = 0; k < static_cast<int>(dcoeffs.size()); ++k)
        fd.set_coeff(k, dcoeffs[static_cast<std::size_t>(k)]);
    const Poly lhs = apply_poly_of_op(fd, x, Poly::one(cap));
    Poly star_form(cap);
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        if (coeffs[static_cast<std::size_t>(k)] != 0)
            star_form.set_coeff(k, coeffs[static_cast<std::size_t>(k)] * Scalar(int_factorial(k)) /
                                       psi.factorial(k));
    return lhs == d_psi_op(psi).apply(star_form);
}

/// Poisson-type distribution components p_m = ((lambda x)^m / m!) * exp_psi[-lambda x]
/// and normalizer N = exp[lambda x] * exp_psi[-lambda x], all truncated with an
/// explicit guard band. The quotient p_m / N is deliberately never
/// materialized; it leaves the polynomial algebra.
struct PoissonModel {
    PsiSequence psi;
    Scalar lam;
    std::vector<Poly> components;
    Poly normalizer;
    int series_order;
    int guard_degree;
};

inline PoissonModel poisson_build(const PsiSequence& psi, const Scalar& lam, int m, int series_order) {
    const int cap = psi.cap();
    if (m + series_order > cap) throw GuardBandExceeded("need M + series order <= cap");
    const OpMatrix x = x_hat_psi_op(psi);
    const Poly e = exp_psi_poly(psi, -lam, series_order);

    std::vector<Poly> components;
    Poly w = e;
    Scalar c(1);
    for (int mm = 0; mm <= m; ++mm) {
        if (mm > 0) {
            w = x.apply(w);
            c *= lam / Scalar(mm);
        }
        components.push_back(c * w);
    }

    Poly normalizer = exp_of_raising_applied(psi, lam, cap - series_order, e);
    const int guard = std::min({series_order - 1, m, cap - series_order});
    return PoissonModel{psi, lam, std::move(components), std::move(normalizer), series_order, guard};
}

/// d_psi p_m + lambda p_m = lambda p_{m-1} (and = 0 for m = 0 [sic: -lambda p_0]),
/// on the guard band.
inline bool poisson_recurrence_check(const PoissonModel& model) {
    const OpMatrix d = d_psi_op(model.psi);
    for (int mm = 0; mm < static_cast<int>(model.components.size()); ++mm) {
        const Poly& p = model.components[static_cast<std::size_t>(mm)];
        Poly residual = d.apply(p) + model.lam * p;
        if (mm > 0) residual = residual - model.lam * model.components[static_cast<std::size_t>(mm - 1)];
        for (int n = 0; n <= model.guard_degree; ++n)
            if (residual.coeff(n) != 0) return false;
    }
    return true;
}

/// Partial sums of the components match the normalizer on the guard band.
inline bool poisson_partial_sum_check(const PoissonModel& model) {
    Poly sum(model.psi.cap());
    for (const Poly& p : model.components) sum = sum + p;
    for (int n = 0; n <= model.guard_degree; ++n)
        if (sum.coeff(n) != model.normalizer.coeff(n)) return false;
    return true;
}

/// The normalizer collapses to 1 on the guard band (the exponential shift
/// law at opposite arguments).
inline bool poisson_normalizer_unit_check(const PoissonModel& model) {
    for (int n = 0; n <= model.guard_degree; ++n)
        if (model.normalizer.coeff(n) != (n == 0 ? Scalar(1) : Scalar(0))) return false;
    return true;
}

/// The operator-level solution applied to 1 reproduces the components.
inline bool poisson_operator_route_check(const PoissonModel& model) {
    const PsiSequence& psi = model.psi;
    const OpMatrix x = x_hat_psi_op(psi);
    const Poly e_via_op =
        exp_of_raising_applied(psi, -model.lam, model.series_order, Poly::one(psi.cap()));
    Poly w = e_via_op;
    Scalar c(1);
    for (int mm = 0; mm < static_cast<int>(model.components.size()); ++mm) {
        if (mm > 0) {
            w = x.apply(w);
            c *= model.lam / Scalar(mm);
        }
        if (c * w != model.components[static_cast<std::size_t>(mm)]) return false;
    }
    return true;
}

} // namespace psicalc
