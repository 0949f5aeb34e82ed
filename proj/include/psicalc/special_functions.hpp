#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/poly.hpp"
#include "psicalc/psi_sequence.hpp"
#include "psicalc/rational.hpp"
#include "psicalc/umbral.hpp"

namespace psicalc {

enum class SeriesKind { exp_psi, hyperbolic, cos_psi, sin_psi, cosh_psi, sinh_psi, custom };

inline std::string series_kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::exp_psi: return "exp_psi";
        case SeriesKind::hyperbolic: return "hyperbolic";
        case SeriesKind::cos_psi: return "cos_psi";
        case SeriesKind::sin_psi: return "sin_psi";
        case SeriesKind::cosh_psi: return "cosh_psi";
        case SeriesKind::sinh_psi: return "sinh_psi";
        case SeriesKind::custom: return "custom";
    }
    return "custom";
}

/// Truncated coefficient stream of a formal series in one variable,
/// attached to a deformation sequence.
struct PsiSeries {
    PsiSequence psi;
    std::vector<Scalar> coeffs;
    SeriesKind kind;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    Scalar coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return Scalar(0);
        return coeffs[static_cast<std::size_t>(k)];
    }
};

/// Deformed exponential: coefficients 1/k_psi!.
inline PsiSeries exp_psi_series(const PsiSequence& psi, int order) {
    if (order > psi.cap()) throw CapExceeded("order beyond cap");
    std::vector<Scalar> c;
    for (int k = 0; k <= order; ++k) c.push_back(Scalar(1) / psi.factorial(k));
    return PsiSeries{psi, std::move(c), SeriesKind::exp_psi};
}

/// Residue-class sieve of the deformed exponential: the j-th hyperbolic
/// component of order m keeps indices congruent to j mod m. Equivalent to
/// the root-of-unity average of exp_psi at rotated arguments by the
/// standard sieve identity; no complex scalars are ever materialized.
inline PsiSeries hyperbolic_component(const PsiSequence& psi, int m, int j, int order) {
    if (m < 2) throw BadResidue("hyperbolic order must be at least 2");
    if (j < 0 || j >= m) throw BadResidue("residue outside Z_m");
    PsiSeries e = exp_psi_series(psi, order);
    for (int k = 0; k <= e.order(); ++k)
        if (k % m != j) e.coeffs[static_cast<std::size_t>(k)] = Scalar(0);
    e.kind = SeriesKind::hyperbolic;
    return e;
}

/// Alternating and plain parity sieves of the deformed exponential; the
/// sign convention is the standard one and lives only here.
inline PsiSeries trig_psi(const PsiSequence& psi, SeriesKind kind, int order) {
    PsiSeries e = exp_psi_series(psi, order);
    for (int k = 0; k <= e.order(); ++k) {
        auto& c = e.coeffs[static_cast<std::size_t>(k)];
        switch (kind) {
            case SeriesKind::cos_psi:
                if (k % 2 != 0) c = Scalar(0);
                else if ((k / 2) % 2 == 1) c = -c;
                break;
            case SeriesKind::sin_psi:
                if (k % 2 != 1) c = Scalar(0);
                else if ((k / 2) % 2 == 1) c = -c;
                break;
            case SeriesKind::cosh_psi:
                if (k % 2 != 0) c = Scalar(0);
                break;
            case SeriesKind::sinh_psi:
                if (k % 2 != 1) c = Scalar(0);
                break;
            default: throw ParseError("not a trig kind");
        }
    }
    e.kind = kind;
    return e;
}

inline PsiSeries psi_series_add(const PsiSeries& a, const PsiSeries& b) {
    if (!same_tables(a.psi, b.psi)) throw PsiMismatch("series deformations differ");
    std::vector<Scalar> c;
    const int top = std::max(a.order(), b.order());
    for (int k = 0; k <= top; ++k) c.push_back(a.coeff(k) + b.coeff(k));
    return PsiSeries{a.psi, std::move(c), SeriesKind::custom};
}

inline PsiSeries psi_series_mul(const PsiSeries& a, const PsiSeries& b) {
    if (!same_tables(a.psi, b.psi)) throw PsiMismatch("series deformations differ");
    const int top = std::min(a.order(), b.order());
    std::vector<Scalar> c(static_cast<std::size_t>(top) + 1, Scalar(0));
    for (int i = 0; i <= top; ++i)
        for (int j = 0; i + j <= top; ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return PsiSeries{a.psi, std::move(c), SeriesKind::custom};
}

inline Poly materialize(const PsiSeries& s, int cap) {
    Poly r(cap);
    for (int k = 0; k <= std::min(s.order(), cap); ++k) r.set_coeff(k, s.coeff(k));
    return r;
}

/// The deformed exponentials multiply through the deformed sum:
/// sum_n (x +_psi y)^n / n_psi! equals exp_psi(x) exp_psi(y) as bivariate
/// truncated polynomials. The two sides are computed through unrelated
/// code paths (binomial expansion vs factorial products).
inline bool exp_product_identity_check(const PsiSequence& psi, int order) {
    if (order > psi.cap()) throw CapExceeded("order beyond cap");
    // a[i][j]: coefficient of x^i y^j.
    std::vector<std::vector<Scalar>> lhs(static_cast<std::size_t>(order) + 1),
        rhs(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        lhs[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(order) + 1, Scalar(0));
        rhs[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(order) + 1, Scalar(0));
    }
    for (int n = 0; n <= order; ++n) {
        const Scalar inv_fact = Scalar(1) / psi.factorial(n);
        for (int k = 0; k <= n; ++k)
            lhs[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - k)] +=
                psi.binomial(n, k) * inv_fact;
    }
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Scalar(1) / (psi.factorial(i) * psi.factorial(j));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            if (lhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                rhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                return false;
    return true;
}

/// Exact values and monotonicity data for the interpolation of the
/// exponential family between its classical and geometric endpoints.
struct LimitDeformationReport {
    std::vector<Scalar> samples;                    // ascending in (0,1)
    std::vector<std::vector<Scalar>> coefficients;  // [sample][k] = 1/k_q!
    bool monotone_toward_classical = true;          // deviation from 1/k! shrinks as q -> 1
    bool monotone_toward_geometric = true;          // deviation from 1 shrinks as q -> 0
};

inline LimitDeformationReport limit_deformation_report(std::vector<Scalar> q_samples, int order) {
    for (const auto& q : q_samples)
        if (!(q > 0 && q < 1)) throw BadSample("samples must lie strictly inside (0,1)");
    std::sort(q_samples.begin(), q_samples.end());

    LimitDeformationReport rep;
    rep.samples = q_samples;
    for (const auto& q : q_samples) {
        std::vector<Scalar> row;
        Scalar fact(1), nq(0);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                nq = nq * q + 1;  // (1 - q^k)/(1 - q) built incrementally
                fact *= nq;
            }
            row.push_back(Scalar(1) / fact);
        }
        rep.coefficients.push_back(std::move(row));
    }

    const auto abs_diff = [](const Scalar& a, const Scalar& b) { return a > b ? a - b : b - a; };
    for (int k = 0; k <= order; ++k) {
        for (std::size_t s = 1; s < rep.samples.size(); ++s) {
            const Scalar classical = Scalar(1) / Scalar(int_factorial(k));
            const Scalar before = abs_diff(rep.coefficients[s - 1][static_cast<std::size_t>(k)], classical);
            const Scalar after = abs_diff(rep.coefficients[s][static_cast<std::size_t>(k)], classical);
            if (after > before) rep.monotone_toward_classical = false;
            const Scalar geo_before = abs_diff(rep.coefficients[s - 1][static_cast<std::size_t>(k)], Scalar(1));
            const Scalar geo_after = abs_diff(rep.coefficients[s][static_cast<std::size_t>(k)], Scalar(1));
            if (geo_after < geo_before) rep.monotone_toward_geometric = false;
        }
    }
    return rep;
}

} // namespace psicalc
