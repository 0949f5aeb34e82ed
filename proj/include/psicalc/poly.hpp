#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/rational.hpp"

namespace psicalc {

/// Dense exact-rational univariate polynomial truncated at a fixed degree
/// cap (inclusive). Trailing zeros may be stored; degree() reports the last
/// nonzero index, -1 for the zero polynomial.
class Poly {
public:
    explicit Poly(int cap) : cap_(check_cap(cap)) {}

    Poly(std::vector<Scalar> coeffs, int cap) : coeffs_(std::move(coeffs)), cap_(check_cap(cap)) {
        if (static_cast<int>(coeffs_.size()) > cap_ + 1)
            throw CapExceeded("coefficient list longer than cap+1");
    }

    static Poly zero(int cap) { return Poly(cap); }

    static Poly one(int cap) { return monomial(0, cap); }

    static Poly monomial(int k, int cap, const Scalar& c = Scalar(1)) {
        if (k < 0 || k > cap) throw CapExceeded("monomial degree outside [0, cap]");
        Poly p(cap);
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Scalar(0));
        p.coeffs_[static_cast<std::size_t>(k)] = c;
        return p;
    }

    int cap() const { return cap_; }

    int degree() const {
        for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    Scalar coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    void set_coeff(int i, const Scalar& c) {
        if (i < 0 || i > cap_) throw CapExceeded("coefficient index outside [0, cap]");
        if (i >= static_cast<int>(coeffs_.size()))
            coeffs_.resize(static_cast<std::size_t>(i) + 1, Scalar(0));
        coeffs_[static_cast<std::size_t>(i)] = c;
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc(0);
        for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
            acc = acc * x + coeffs_[static_cast<std::size_t>(i)];
        return acc;
    }

    Scalar at_zero() const { return coeff(0); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.cap_ != b.cap_) return false;
        const int top = std::max(a.degree(), b.degree());
        for (int i = 0; i <= top; ++i)
            if (a.coeff(i) != b.coeff(i)) return false;
        return true;
    }

    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_cap(a, b);
        Poly r(a.cap_);
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        r.coeffs_.assign(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
            r.coeffs_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Scalar& s, const Poly& p) {
        Poly r(p);
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    /// Exact product; throws TruncationLoss if a nonzero coefficient would
    /// land above the cap.
    friend Poly operator*(const Poly& a, const Poly& b) {
        auto [r, lost] = mul_lossy(a, b);
        if (lost) throw TruncationLoss("product exceeds degree cap");
        return r;
    }

    /// Product truncated at the cap; second component reports whether any
    /// nonzero coefficient was dropped.
    friend std::pair<Poly, bool> mul_lossy(const Poly& a, const Poly& b) {
        require_same_cap(a, b);
        Poly r(a.cap_);
        const int da = a.degree(), db = b.degree();
        if (da < 0 || db < 0) return {r, false};
        r.coeffs_.assign(static_cast<std::size_t>(std::min(da + db, a.cap_)) + 1, Scalar(0));
        bool lost = false;
        for (int i = 0; i <= da; ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; j <= db; ++j) {
                if (b.coeff(j) == 0) continue;
                if (i + j > a.cap_) {
                    lost = true;
                    continue;
                }
                r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return {r, lost};
    }

    /// Substitutes x -> s*x (coefficient k picks up s^k).
    Poly dilate(const Scalar& s) const {
        Poly r(*this);
        Scalar p(1);
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
            r.coeffs_[k] *= p;
            p *= s;
        }
        return r;
    }

    const std::vector<Scalar>& raw_coeffs() const { return coeffs_; }

private:
    static int check_cap(int cap) {
        if (cap < 0) throw CapExceeded("cap must be nonnegative");
        return cap;
    }

    static void require_same_cap(const Poly& a, const Poly& b) {
        if (a.cap_ != b.cap_) throw CapMismatch("polynomial caps differ");
    }

    std::vector<Scalar> coeffs_;
    int cap_;
};

} // namespace psicalc
