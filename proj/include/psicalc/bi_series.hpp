#pragma once

#include <utility>
#include <vector>

#include "psicalc/error.hpp"
#include "psicalc/poly.hpp"

namespace psicalc {

/// A truncated formal series in a parameter lambda whose coefficients are
/// polynomials in x: terms[n] is the x-polynomial coefficient of lambda^n.
class BiSeries {
public:
    BiSeries(std::vector<Poly> terms, int lambda_cap) : terms_(std::move(terms)) {
        if (static_cast<int>(terms_.size()) != lambda_cap + 1)
            throw CapMismatch("need exactly lambda_cap+1 terms");
    }

    static BiSeries zero(int lambda_cap, int x_cap) {
        return BiSeries(std::vector<Poly>(static_cast<std::size_t>(lambda_cap) + 1, Poly(x_cap)),
                        lambda_cap);
    }

    int lambda_cap() const { return static_cast<int>(terms_.size()) - 1; }
    int x_cap() const { return terms_.empty() ? 0 : terms_[0].cap(); }

    const Poly& term(int n) const { return terms_.at(static_cast<std::size_t>(n)); }
    void set_term(int n, Poly p) { terms_.at(static_cast<std::size_t>(n)) = std::move(p); }
    const std::vector<Poly>& terms() const { return terms_; }

    friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    friend BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
        const int lc = std::min(a.lambda_cap(), b.lambda_cap());
        BiSeries r = BiSeries::zero(lc, a.x_cap());
        for (int n = 0; n <= lc; ++n) {
            Poly acc(a.x_cap());
            for (int k = 0; k <= n; ++k) acc = acc + a.term(k) * b.term(n - k);
            r.set_term(n, acc);
        }
        return r;
    }

    /// Solves a * x = g for x in the lambda-power-series sense; requires
    /// the lambda^0 coefficient of a to be an invertible constant.
    friend BiSeries bi_divide(const BiSeries& g, const BiSeries& a) {
        if (a.term(0).degree() > 0 || a.term(0).is_zero())
            throw NotInvertible("lambda-division needs a nonzero constant leading term");
        const Scalar c0 = a.term(0).at_zero();
        const int lc = std::min(g.lambda_cap(), a.lambda_cap());
        BiSeries r = BiSeries::zero(lc, g.x_cap());
        for (int n = 0; n <= lc; ++n) {
            Poly acc = g.term(n);
            for (int k = 1; k <= n; ++k) acc = acc - a.term(k) * r.term(n - k);
            r.set_term(n, Scalar(1) / c0 * acc);
        }
        return r;
    }

private:
    std::vector<Poly> terms_;
};

} // namespace psicalc
