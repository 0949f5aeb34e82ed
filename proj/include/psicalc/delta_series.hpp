#pragma once

#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/op_matrix.hpp"
#include "psicalc/psi_sequence.hpp"

namespace psicalc {

/// A formal series sum c_k d_psi^k with exact coefficients, truncated at
/// the space cap (the deformed derivative is nilpotent there, so order cap
/// is faithful). Elements with c_0 = 0 and c_1 != 0 are delta operators:
/// they kill constants and send x to a nonzero constant.
class DeltaSeries {
public:
    DeltaSeries(PsiSequence psi, std::vector<Scalar> coeffs)
        : psi_(std::move(psi)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) > psi_.cap() + 1)
            coeffs_.resize(static_cast<std::size_t>(psi_.cap()) + 1);
    }

    const PsiSequence& psi() const { return psi_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    Scalar coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    void set_coeff(int k, const Scalar& c) {
        if (k < 0 || k > psi_.cap()) throw CapExceeded("series order beyond cap");
        if (k >= static_cast<int>(coeffs_.size()))
            coeffs_.resize(static_cast<std::size_t>(k) + 1, Scalar(0));
        coeffs_[static_cast<std::size_t>(k)] = c;
    }

    const std::vector<Scalar>& raw_coeffs() const { return coeffs_; }

    bool is_delta() const { return coeff(0) == 0 && coeff(1) != 0; }

    friend bool operator==(const DeltaSeries& a, const DeltaSeries& b) {
        if (!same_tables(a.psi_, b.psi_)) return false;
        const int top = std::max(a.order(), b.order());
        for (int k = 0; k <= top; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }

    friend bool operator!=(const DeltaSeries& a, const DeltaSeries& b) { return !(a == b); }

private:
    PsiSequence psi_;
    std::vector<Scalar> coeffs_;
};

inline void require_same_psi(const DeltaSeries& a, const DeltaSeries& b) {
    if (!same_tables(a.psi(), b.psi()))
        throw PsiMismatch("series over different deformation sequences");
}

/// The bare derivative as a series: coefficients [0, 1].
inline DeltaSeries d_psi_series(const PsiSequence& psi) {
    return DeltaSeries(psi, {Scalar(0), Scalar(1)});
}

inline DeltaSeries series_const(const PsiSequence& psi, const Scalar& c) {
    return DeltaSeries(psi, {c});
}

/// Generalized translation E^y: coefficients y^k / k_psi!.
inline DeltaSeries translation_series(const PsiSequence& psi, const Scalar& y) {
    std::vector<Scalar> c;
    Scalar yk(1);
    for (int k = 0; k <= psi.cap(); ++k) {
        c.push_back(yk / psi.factorial(k));
        yk *= y;
    }
    return DeltaSeries(psi, std::move(c));
}

/// E^1 - id, the deformed forward difference.
inline DeltaSeries forward_difference_series(const PsiSequence& psi) {
    DeltaSeries s = translation_series(psi, Scalar(1));
    s.set_coeff(0, Scalar(0));
    return s;
}

inline DeltaSeries series_add(const DeltaSeries& a, const DeltaSeries& b) {
    require_same_psi(a, b);
    std::vector<Scalar> c;
    const int top = std::max(a.order(), b.order());
    for (int k = 0; k <= top; ++k) c.push_back(a.coeff(k) + b.coeff(k));
    return DeltaSeries(a.psi(), std::move(c));
}

inline DeltaSeries series_sub(const DeltaSeries& a, const DeltaSeries& b) {
    require_same_psi(a, b);
    std::vector<Scalar> c;
    const int top = std::max(a.order(), b.order());
    for (int k = 0; k <= top; ++k) c.push_back(a.coeff(k) - b.coeff(k));
    return DeltaSeries(a.psi(), std::move(c));
}

inline DeltaSeries series_scale(const Scalar& s, const DeltaSeries& a) {
    std::vector<Scalar> c;
    for (int k = 0; k <= a.order(); ++k) c.push_back(s * a.coeff(k));
    return DeltaSeries(a.psi(), std::move(c));
}

inline DeltaSeries series_mul(const DeltaSeries& a, const DeltaSeries& b) {
    require_same_psi(a, b);
    const int top = a.psi().cap();
    std::vector<Scalar> c(static_cast<std::size_t>(top) + 1, Scalar(0));
    for (int i = 0; i <= std::min(a.order(), top); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= std::min(b.order(), top - i); ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return DeltaSeries(a.psi(), std::move(c));
}

/// Multiplicative inverse, truncated at the cap; needs c_0 != 0.
inline DeltaSeries series_reciprocal(const DeltaSeries& a) {
    if (a.coeff(0) == 0) throw NotInvertible("series with zero constant term has no reciprocal");
    const int top = a.psi().cap();
    std::vector<Scalar> r(static_cast<std::size_t>(top) + 1, Scalar(0));
    r[0] = Scalar(1) / a.coeff(0);
    for (int n = 1; n <= top; ++n) {
        Scalar acc(0);
        for (int k = 1; k <= n; ++k) acc += a.coeff(k) * r[static_cast<std::size_t>(n - k)];
        r[static_cast<std::size_t>(n)] = -acc / a.coeff(0);
    }
    return DeltaSeries(a.psi(), std::move(r));
}

/// a^n for any integer n; negative powers go through the reciprocal.
inline DeltaSeries series_power(const DeltaSeries& a, int n) {
    if (n < 0) return series_power(series_reciprocal(a), -n);
    DeltaSeries r = series_const(a.psi(), Scalar(1));
    for (int k = 0; k < n; ++k) r = series_mul(r, a);
    return r;
}

/// Formal derivative in the derivative symbol: sum c_k t^k -> sum k c_k t^{k-1}.
/// On matrix realizations this coincides with the Pincherle bracket against
/// the raising operator.
inline DeltaSeries series_formal_derivative(const DeltaSeries& a) {
    std::vector<Scalar> c;
    for (int k = 1; k <= a.order(); ++k) c.push_back(Scalar(k) * a.coeff(k));
    if (c.empty()) c.push_back(Scalar(0));
    return DeltaSeries(a.psi(), std::move(c));
}

/// a(b(t)) for b with zero constant term.
inline DeltaSeries series_compose(const DeltaSeries& a, const DeltaSeries& b) {
    require_same_psi(a, b);
    if (b.coeff(0) != 0) throw NotComposable("inner series must have zero constant term");
    DeltaSeries acc = series_const(a.psi(), a.coeff(0));
    DeltaSeries bk = series_const(a.psi(), Scalar(1));
    const int top = a.psi().cap();
    for (int k = 1; k <= std::min(a.order(), top); ++k) {
        bk = series_mul(bk, b);
        acc = series_add(acc, series_scale(a.coeff(k), bk));
    }
    return acc;
}

/// Compositional inverse g with a(g(t)) = t; needs c_0 = 0, c_1 != 0.
inline DeltaSeries series_comp_inverse(const DeltaSeries& a) {
    if (a.coeff(0) != 0 || a.coeff(1) == 0)
        throw NotComposable("compositional inverse needs c_0 = 0 and c_1 != 0");
    const int top = a.psi().cap();
    DeltaSeries g(a.psi(), {Scalar(0), Scalar(1) / a.coeff(1)});
    for (int m = 2; m <= top; ++m) {
        // a(g) is correct below order m; the next coefficient enters a(g)
        // linearly through a_1 * g_m.
        DeltaSeries comp = series_compose(a, g);
        g.set_coeff(m, -comp.coeff(m) / a.coeff(1));
    }
    return g;
}

enum class SeriesOpKind { add, mul, reciprocal, power, formal_derivative, compose, comp_inverse };

/// Realizes the series as a matrix on the truncated space. Exact at full
/// validity: the derivative is degree-lowering, so nothing is truncated.
inline OpMatrix series_to_matrix(const DeltaSeries& s, const OpMatrix& d_psi_matrix) {
    const int cap = d_psi_matrix.cap();
    OpMatrix acc = s.coeff(0) * OpMatrix::identity(cap);
    OpMatrix dk = OpMatrix::identity(cap);
    for (int k = 1; k <= std::min(s.order(), cap); ++k) {
        dk = op_compose(dk, d_psi_matrix);
        if (s.coeff(k) != 0) acc = acc + s.coeff(k) * dk;
    }
    return acc;
}

} // namespace psicalc
