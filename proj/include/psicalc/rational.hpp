#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "psicalc/error.hpp"

namespace psicalc {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; equality is exact.
using Scalar = boost::multiprecision::cpp_rational;

inline std::string to_fraction_string(const Scalar& s) {
    return numerator(s).str() + "/" + denominator(s).str();
}

/// Parses "num/den" or a bare integer "num".
inline Scalar parse_scalar(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Scalar(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw ZeroDenominator("zero denominator in '" + text + "'");
        return Scalar(num, den);
    } catch (const std::exception& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw ParseError("cannot parse rational '" + text + "'");
    }
}

inline bool is_integer(const Scalar& s) { return denominator(s) == 1; }

/// s^e for any integer exponent; negative exponents invert.
inline Scalar spow(const Scalar& s, long e) {
    if (e == 0) return Scalar(1);
    if (e < 0) {
        if (s == 0) throw NotInvertible("0 has no negative power");
        return Scalar(1) / spow(s, -e);
    }
    Scalar acc(1), base(s);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline Int int_factorial(int n) {
    Int acc(1);
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}

inline Int int_binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int acc(1);
    for (int j = 0; j < k; ++j) {
        acc *= (n - j);
        acc /= (j + 1);
    }
    return acc;
}

/// A rational function R(x) = num(x)/den(x) given by dense coefficient
/// lists ascending in degree. Used for the R-parameterized derivative and
/// integral families.
struct RationalFunction {
    std::vector<Scalar> num;
    std::vector<Scalar> den;

    RationalFunction() : num{Scalar(1)}, den{Scalar(1)} {}
    RationalFunction(std::vector<Scalar> n, std::vector<Scalar> d)
        : num(std::move(n)), den(std::move(d)) {
        if (num.empty() || den.empty())
            throw MissingParameter("rational function needs nonempty coefficient lists");
    }

    Scalar eval(const Scalar& x) const {
        Scalar n(0), d(0), p(1);
        for (std::size_t k = 0; k < num.size() || k < den.size(); ++k) {
            if (k < num.size()) n += num[k] * p;
            if (k < den.size()) d += den[k] * p;
            p *= x;
        }
        if (d == 0) throw ZeroDenominator("rational function denominator vanishes at " + to_fraction_string(x));
        return n / d;
    }
};

} // namespace psicalc
